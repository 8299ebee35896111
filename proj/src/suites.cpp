#include "hvhom/suites.hpp"

#include <array>
#include <set>

#include "hvhom/errors.hpp"
#include "hvhom/homlie.hpp"
#include "hvhom/homrep.hpp"

namespace hvhom {

const std::vector<std::string>& registered_suites() {
  static const std::vector<std::string> names{"jacobi",         "antisym",    "endo-hom",
                                              "hom-jacobi",     "multiplicative", "lie-module",
                                              "compat-27",      "homrep-26"};
  return names;
}

Index default_window(const std::string& suite) {
  if (suite == "jacobi" || suite == "hom-jacobi" || suite == "homrep-26" || suite == "lie-module") {
    return 6;
  }
  if (suite == "antisym" || suite == "endo-hom" || suite == "multiplicative" || suite == "compat-27") {
    return 8;
  }
  throw UnknownSuite(suite);
}

CheckReport check_antisymmetry(Index window, const GridOptions& options) {
  CheckReport report;
  report.suite = "antisym";
  report.window = {{"n", {-window, window}}, {"m", {-window, window}}};
  const std::vector<Generator> gens = window_generators(window);
  std::vector<std::pair<Generator, Generator>> points;
  for (const auto& g : gens) {
    for (const auto& h : gens) points.emplace_back(g, h);
  }
  run_grid(report, points,
           [](const std::pair<Generator, Generator>& gh) -> std::optional<Counterexample> {
             AlgElement lhs = bracket_basis(gh.first, gh.second);
             AlgElement rhs = -bracket_basis(gh.second, gh.first);
             if (lhs == rhs) return std::nullopt;
             Point pt;
             pt.generator("x", "n", gh.first).generator("y", "m", gh.second);
             return Counterexample{pt, format_element(lhs), format_element(rhs)};
           },
           options);
  return report;
}

CheckReport check_jacobi(Index window, const GridOptions& options) {
  CheckReport report;
  report.suite = "jacobi";
  report.window = {{"n", {-window, window}}, {"m", {-window, window}}, {"p", {-window, window}}};
  const std::vector<Generator> gens = window_generators(window);
  using Triple = std::array<Generator, 3>;
  std::vector<Triple> points;
  points.reserve(gens.size() * gens.size() * gens.size());
  for (const auto& x : gens) {
    for (const auto& y : gens) {
      for (const auto& z : gens) points.push_back({x, y, z});
    }
  }
  run_grid(report, points,
           [](const Triple& t) -> std::optional<Counterexample> {
             const auto term = [](const Generator& x, const Generator& y, const Generator& z) {
               return bracket(AlgElement(x), bracket_basis(y, z));
             };
             AlgElement sum = term(t[0], t[1], t[2]) + term(t[1], t[2], t[0]) + term(t[2], t[0], t[1]);
             if (sum.is_zero()) return std::nullopt;
             Point pt;
             pt.generator("x", "n", t[0]).generator("y", "m", t[1]).generator("z", "p", t[2]);
             return Counterexample{pt, format_element(sum), "0"};
           },
           options);
  return report;
}

namespace {

Scalar scalar_param(const ParamMap& params, const std::string& key, const Scalar& fallback) {
  auto it = params.find(key);
  if (it == params.end()) return fallback;
  return parse_scalar(it->second);
}

void reject_unknown(const ParamMap& params, const std::set<std::string>& allowed,
                    const std::string& suite) {
  for (const auto& entry : params) {
    if (allowed.count(entry.first) == 0) {
      throw InvalidParameter("suite " + suite + " does not take parameter '" + entry.first + "'");
    }
  }
}

Endomorphism endo_from(const ParamMap& params) {
  const EndoParams p = endo_params_from(params);
  auto it = params.find("corrections");
  const std::string which = it == params.end() ? "calibrated" : it->second;
  if (which == "calibrated") return Endomorphism(p, calibrate_corrections(p, 8));
  if (which == "printed") return Endomorphism(p, printed_corrections(p));
  throw InvalidParameter("corrections must be 'calibrated' or 'printed', got '" + which + "'");
}

}  // namespace

EndoParams endo_params_from(const ParamMap& params) {
  EndoParams p;
  const Scalar k = scalar_param(params, "k", Scalar(1));
  const auto ki = k.to_index();
  if (!ki) throw InvalidParameter("k must be an integer, got " + k.str());
  p.k = *ki;
  p.a = scalar_param(params, "a", Scalar(1));
  p.b = scalar_param(params, "b", Scalar(1));
  p.c = scalar_param(params, "c", Scalar(0));
  p.d = scalar_param(params, "d", Scalar(0));
  p.validate();
  return p;
}

FamilyParams family_params_from(const ParamMap& params) {
  auto it = params.find("family");
  if (it == params.end()) throw InvalidParameter("missing family");
  FamilyParams f;
  f.family = parse_family(it->second);
  f.alpha = scalar_param(params, "alpha", Scalar(0));
  f.beta = scalar_param(params, "beta", Scalar(0));
  f.F = scalar_param(params, "F", Scalar(0));
  return f;
}

Sign sign_from(const ParamMap& params) {
  auto it = params.find("sign");
  if (it == params.end() || it->second == "-1") return Sign::Consistent;
  if (it->second == "+1" || it->second == "1") return Sign::Printed;
  throw InvalidParameter("sign must be +1 or -1, got '" + it->second + "'");
}

CheckReport run_suite(const SuiteConfig& config) {
  const std::string& suite = config.suite;
  const Index window = config.window.value_or(default_window(suite));
  if (window < 0) throw InvalidParameter("window must be nonnegative");
  const ParamMap& params = config.params;
  const std::set<std::string> endo_keys{"k", "a", "b", "c", "d", "corrections"};
  const std::set<std::string> module_keys{"family", "alpha", "beta", "F"};

  if (suite == "jacobi" || suite == "antisym") {
    reject_unknown(params, {}, suite);
    return suite == "jacobi" ? check_jacobi(window, config.grid)
                             : check_antisymmetry(window, config.grid);
  }
  if (suite == "endo-hom" || suite == "hom-jacobi" || suite == "multiplicative") {
    reject_unknown(params, endo_keys, suite);
    const Endomorphism phi = endo_from(params);
    if (suite == "endo-hom") return check_homomorphism(phi, window, config.grid);
    if (suite == "hom-jacobi") return check_hom_jacobi(phi, window, config.grid);
    return check_multiplicative(phi, window, config.grid);
  }
  if (suite == "lie-module") {
    std::set<std::string> allowed = module_keys;
    allowed.insert("sign");
    reject_unknown(params, allowed, suite);
    return check_lie_module(family_params_from(params), window, sign_from(params), config.grid);
  }
  if (suite == "compat-27" || suite == "homrep-26") {
    std::set<std::string> allowed = module_keys;
    allowed.insert({"k", "a", "b", "c", "d", "norm"});
    reject_unknown(params, allowed, suite);
    const HomModuleSpec spec = make_hom_module_spec(
        family_params_from(params), endo_params_from(params), scalar_param(params, "norm", Scalar(1)));
    return suite == "compat-27" ? check_compat_27(spec, window, config.grid)
                                : check_homrep_26(spec, window, config.grid);
  }
  throw UnknownSuite(suite);
}

}  // namespace hvhom
