#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hvhom/combination.hpp"
#include "hvhom/scalar.hpp"

namespace hvhom {

enum class GenKind : std::uint8_t { L, I, CL, CLI, CI };

/// Basis symbol of the twisted Heisenberg-Virasoro algebra. Central
/// generators always carry index 0, so the derived ordering is the
/// canonical one: L by index, I by index, then CL, CLI, CI.
struct Generator {
  GenKind kind = GenKind::L;
  Index index = 0;

  static Generator L(Index n) { return {GenKind::L, n}; }
  static Generator I(Index n) { return {GenKind::I, n}; }
  static Generator CL() { return {GenKind::CL, 0}; }
  static Generator CLI() { return {GenKind::CLI, 0}; }
  static Generator CI() { return {GenKind::CI, 0}; }

  bool is_central() const noexcept { return kind != GenKind::L && kind != GenKind::I; }
  Index degree() const noexcept { return is_central() ? 0 : index; }

  friend auto operator<=>(const Generator&, const Generator&) = default;
};

std::string format_generator(const Generator& g);

using AlgElement = Combination<Generator>;

std::string format_element(const AlgElement& x);

/// Structure constants:
///   [L_n, L_m] = (n-m) L_{n+m} + delta_{n,-m} (n^3-n)/12 C_L
///   [L_n, I_m] = -m I_{n+m} + delta_{n,-m} (n^2+n) C_LI
///   [I_n, I_m] = n delta_{n,-m} C_I
/// and every bracket with a central generator vanishes.
AlgElement bracket_basis(const Generator& g, const Generator& h);

AlgElement bracket(const AlgElement& x, const AlgElement& y);

/// Homogeneous components keyed by degree (central terms have degree 0).
std::map<Index, AlgElement> degree_decompose(const AlgElement& x);

/// L(-w..w) then I(-w..w): the non-central generators of a window.
std::vector<Generator> window_generators(Index window);

}  // namespace hvhom
