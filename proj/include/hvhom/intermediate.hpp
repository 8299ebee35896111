#pragma once

#include <map>
#include <set>
#include <string>

#include "hvhom/algebra.hpp"
#include "hvhom/combination.hpp"
#include "hvhom/grid.hpp"
#include "hvhom/report.hpp"
#include "hvhom/scalar.hpp"

namespace hvhom {

/// Vector of an intermediate-series module in the basis v_t.
using ModuleVec = Combination<Index>;

std::string format_module_vec(const ModuleVec& v);

/// The seven module families; tags as used on the command line.
enum class Family { ABF, AF, BF, U, V, Ut, Vt };

std::string family_tag(Family f);
/// Throws InvalidParameter for an unknown tag.
Family parse_family(const std::string& tag);

/// A family with its parameters. alpha and beta are ignored by families
/// that do not use them; irreducibility is never enforced.
struct FamilyParams {
  Family family = Family::ABF;
  Scalar alpha{0};
  Scalar beta{0};
  Scalar F{0};

  static FamilyParams abf(Scalar alpha, Scalar beta, Scalar F) {
    return {Family::ABF, std::move(alpha), std::move(beta), std::move(F)};
  }
  static FamilyParams af(Scalar alpha, Scalar F) { return {Family::AF, std::move(alpha), Scalar(0), std::move(F)}; }
  static FamilyParams bf(Scalar alpha, Scalar F) { return {Family::BF, std::move(alpha), Scalar(0), std::move(F)}; }
  static FamilyParams u(Scalar F) { return {Family::U, Scalar(0), Scalar(0), std::move(F)}; }
  static FamilyParams v(Scalar F) { return {Family::V, Scalar(0), Scalar(0), std::move(F)}; }
  static FamilyParams ut(Scalar F) { return {Family::Ut, Scalar(0), Scalar(0), std::move(F)}; }
  static FamilyParams vt(Scalar F) { return {Family::Vt, Scalar(0), Scalar(0), std::move(F)}; }

  bool uses_alpha() const { return family == Family::ABF || family == Family::AF || family == Family::BF; }
  bool uses_beta() const { return family == Family::ABF; }

  std::map<std::string, std::string> describe() const;
};

/// Sign applied to the printed action tables. Printed reproduces the
/// tables verbatim; Consistent negates every non-central generator, which
/// is the version that represents the bracket in algebra.hpp.
enum class Sign : int { Printed = 1, Consistent = -1 };

/// The printed action of a generator on v_t, special lines included.
ModuleVec act_printed(const FamilyParams& f, const Generator& g, Index t);

/// Bilinear extension of sign * act_printed.
ModuleVec act(const FamilyParams& f, const AlgElement& x, const ModuleVec& v,
              Sign sign = Sign::Consistent);
ModuleVec act(const FamilyParams& f, const Generator& g, Index t, Sign sign = Sign::Consistent);

/// x.(y.v_t) - y.(x.v_t) == [x,y].v_t for all generator pairs x, y and all t
/// in the window.
CheckReport check_lie_module(const FamilyParams& f, Index window, Sign sign,
                             const GridOptions& options = {});

/// Indices reachable from v_{t0} under generators with |n| <= window,
/// restricted to [-window, window]. A probe for reducibility, not a proof.
std::set<Index> orbit_window_span(const FamilyParams& f, Index t0, Index window);

}  // namespace hvhom
