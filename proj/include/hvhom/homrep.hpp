#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hvhom/endo.hpp"
#include "hvhom/grid.hpp"
#include "hvhom/intermediate.hpp"
#include "hvhom/report.hpp"

namespace hvhom {

/// Data derived from an admissible (family, endomorphism) pair. q is the
/// index shift of the module twist; it is zero outside the ABF family.
struct Admissibility {
  Index q = 0;
};

/// Validates the family's parameter constraints in their printed order and
/// throws ConstraintViolation on the first one that fails.
///
///   abf    b = 1, c = 0, k*alpha - alpha - k*F*d integral (this is q)
///   af     alpha not a nonzero integer, k*b = 1, 1 - k - k*F*c = 0, d = 0
///   bf     alpha not a nonzero integer, k*b = 1, 1 - k + k*F*c = 0, d = 0
///   u, v, ut   k*b = 1, c = 0, d = 0
///   vt     b = 1, c = 0, d = 0
///
/// When F = 0 the af/bf equation in c cannot be solved for c and
/// degenerates to k = 1.
Admissibility admissibility(const FamilyParams& f, const EndoParams& e);

/// A Hom-type module: the intermediate-series module twisted by
/// v_t -> a^t * norm * v_{kt+q}.
struct HomModuleSpec {
  FamilyParams family;
  Endomorphism endo;
  Scalar norm{1};
  Index q = 0;

  std::map<std::string, std::string> describe() const;
};

/// Checks admissibility, rejects norm = 0 and calibrates the algebra
/// endomorphism.
HomModuleSpec make_hom_module_spec(const FamilyParams& f, const EndoParams& e,
                                   const Scalar& norm = Scalar(1));

ModuleVec twist_vec(const HomModuleSpec& s, Index t);
ModuleVec twist(const HomModuleSpec& s, const ModuleVec& v);

/// rho_phi(x) = twist o act(x), with the consistent action sign.
ModuleVec hom_act(const HomModuleSpec& s, const AlgElement& x, const ModuleVec& v);

/// The printed closed forms of the seven Hom-type families, for audits.
ModuleVec hom_act_printed(const HomModuleSpec& s, const Generator& g, Index t);

/// act(phi(g)) o twist == twist o act(g) on generators g and v_t.
CheckReport check_compat_27(const HomModuleSpec& s, Index window, const GridOptions& options = {});

/// rho([x,y]_phi) twist(v) == rho(phi x) rho(y) v - rho(phi y) rho(x) v.
CheckReport check_homrep_26(const HomModuleSpec& s, Index window, const GridOptions& options = {});

/// Coefficients a_{t,j} of a module twist v_t -> sum_j a_{t,j} v_j.
using TwistMatrix = std::map<std::pair<Index, Index>, Scalar>;

std::string format_twist_matrix(const TwistMatrix& m);

struct TwistSolution {
  Index window = 0;
  Index interior = 0;   // rows |t| <= interior are reported
  Index column_bound = 0;  // unknowns use |j| <= column_bound
  std::size_t equations = 0;
  std::vector<TwistMatrix> basis;  // restricted to interior rows

  std::size_t dimension() const noexcept { return basis.size(); }
  /// Whether m (restricted to interior rows) lies in the span of basis.
  bool contains(const TwistMatrix& m) const;
};

/// Exact solution space of the compatibility condition for module twists,
/// truncated to |t| <= window and |j| <= |k|*window + |q| + |k|. Only
/// equations whose unknowns all fall in that range are imposed, and only
/// rows with |t| <= window - |k| are reported. Throws WindowTooSmall when
/// there are none.
TwistSolution solve_twist_window(const FamilyParams& f, const EndoParams& e, Index window);

/// Printed closed forms vs twist o act_printed at every generator and v_t
/// in the window, plus compatibility and Hom-representation checks of the
/// composed module.
AuditReport audit_section3(const HomModuleSpec& s, Index window = 6);

/// Whether the module is a weight module: k = 1 and, for abf, q = 0.
bool is_weight_module(const HomModuleSpec& s);

/// hom_act(L_0) sends every v_t (|t| <= window) to a multiple of v_t.
bool l0_acts_diagonally(const HomModuleSpec& s, Index window);

}  // namespace hvhom
