#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <string>

#include "hvhom/algebra.hpp"
#include "hvhom/grid.hpp"
#include "hvhom/report.hpp"
#include "hvhom/scalar.hpp"

namespace hvhom {

/// The (k, a, b, c, d) family: on nonzero degrees
///   phi(L_n) = (1/k) a^n L_{kn} + a^n (c n + d) I_{kn},
///   phi(I_n) = a^n b I_{kn}.
struct EndoParams {
  Index k = 1;
  Scalar a{1};
  Scalar b{1};
  Scalar c{0};
  Scalar d{0};

  /// Throws InvalidParameter unless k != 0 and a != 0.
  void validate() const;
  std::map<std::string, std::string> describe() const;
};

/// The eleven degree-zero coefficients p1..p11:
///   phi(L_0)  = (1/k) L_0 + d I_0 + p1 C_L + p2 C_LI + p3 C_I
///   phi(I_0)  = b I_0 + p4 C_LI + p5 C_I
///   phi(C_L)  = p6 C_L + p7 C_LI + p8 C_I
///   phi(C_LI) = p9 C_LI + p10 C_I
///   phi(C_I)  = p11 C_I
class DeltaCorrections {
 public:
  static constexpr std::size_t kCount = 11;

  DeltaCorrections() = default;

  /// 1-based access, matching the p1..p11 names.
  const Scalar& p(std::size_t i) const { return values_.at(i - 1); }
  Scalar& p(std::size_t i) { return values_.at(i - 1); }

  static std::string name(std::size_t i) { return "p" + std::to_string(i); }

  friend bool operator==(const DeltaCorrections&, const DeltaCorrections&) = default;

 private:
  std::array<Scalar, kCount> values_{};
};

/// An algebra endomorphism from the family together with its corrections.
class Endomorphism {
 public:
  Endomorphism(EndoParams params, DeltaCorrections corrections);

  const EndoParams& params() const noexcept { return params_; }
  const DeltaCorrections& corrections() const noexcept { return corrections_; }

  AlgElement apply(const Generator& g) const;
  AlgElement apply(const AlgElement& x) const;
  AlgElement operator()(const AlgElement& x) const { return apply(x); }

 private:
  EndoParams params_;
  DeltaCorrections corrections_;
  Scalar inv_k_;
};

/// The coefficients exactly as they appear in the printed classification.
DeltaCorrections printed_corrections(const EndoParams& p);

/// Solves for the unique corrections making the family a homomorphism on
/// the window. Equations come from the pairs (L_n, L_-n), (L_n, I_-n),
/// (I_n, I_-n) for n = 1..window and the consistency pairs (L_n, L_0),
/// (L_n, I_0), (I_n, L_0). Throws CalibrationFailed on an inconsistent or
/// rank-deficient system, or when window < 3.
DeltaCorrections calibrate_corrections(const EndoParams& p, Index window);

AlgElement apply_endo(const EndoParams& p, const DeltaCorrections& dc, const AlgElement& x);

/// phi([g, h]) == [phi(g), phi(h)] for all non-central generator pairs of the
/// window. Central generators bracket to zero on both sides.
CheckReport check_homomorphism(const Endomorphism& phi, Index window,
                               const GridOptions& options = {});

/// Calibrated endomorphism with k = 1, a = 1, b = 1, c = 0.
Endomorphism lemma28_endo(const Scalar& d);

/// Calibrated vs printed corrections of lemma28_endo(d).
AuditReport audit_lemma28(const Scalar& d, Index window = 8);

/// Componentwise printed vs calibrated corrections plus the homomorphism
/// check for both. Propagates CalibrationFailed.
AuditReport audit_theorem22(const EndoParams& p, Index window = 8);

}  // namespace hvhom
