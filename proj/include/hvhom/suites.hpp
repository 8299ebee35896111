#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hvhom/endo.hpp"
#include "hvhom/grid.hpp"
#include "hvhom/intermediate.hpp"
#include "hvhom/report.hpp"

namespace hvhom {

using ParamMap = std::map<std::string, std::string>;

struct SuiteConfig {
  std::string suite;
  std::optional<Index> window;  // per-suite default when empty
  ParamMap params;
  GridOptions grid;
};

/// jacobi, antisym, endo-hom, hom-jacobi, multiplicative, lie-module,
/// compat-27, homrep-26.
const std::vector<std::string>& registered_suites();

/// 6 for identities over triples, 8 for pairwise ones. Throws UnknownSuite.
Index default_window(const std::string& suite);

/// Runs a registered suite. Throws UnknownSuite, InvalidParameter, and the
/// validation errors of the underlying constructors.
CheckReport run_suite(const SuiteConfig& config);

CheckReport check_antisymmetry(Index window, const GridOptions& options = {});
CheckReport check_jacobi(Index window, const GridOptions& options = {});

// Parameter decoding shared with the command line. Missing keys take the
// identity endomorphism (k=1, a=1, b=1, c=0, d=0) and zero module
// parameters.
EndoParams endo_params_from(const ParamMap& params);
FamilyParams family_params_from(const ParamMap& params);
Sign sign_from(const ParamMap& params);

}  // namespace hvhom
