// Command-line front end for the hvhom library.
//
// Exit codes: 0 success or passing check, 1 failing check, 2 usage, parse
// or constraint error. Results go to stdout, diagnostics to stderr.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "hvhom/endo.hpp"
#include "hvhom/errors.hpp"
#include "hvhom/expr.hpp"
#include "hvhom/homlie.hpp"
#include "hvhom/homrep.hpp"
#include "hvhom/intermediate.hpp"
#include "hvhom/suites.hpp"

namespace {

using namespace hvhom;

struct Flags {
  std::string k, a, b, c, d;
  std::string alpha, beta, F, norm, family;
  std::string sign;
  bool printed_actions = false;
  std::string corrections;
  std::optional<Index> window;
  std::string out;
  std::size_t max_counterexamples = 5;
  unsigned threads = 1;
};

void add_endo_flags(CLI::App* cmd, Flags& f) {
  cmd->add_option("--k", f.k, "index scale k (nonzero integer)");
  cmd->add_option("--a", f.a, "endomorphism parameter a (nonzero)");
  cmd->add_option("--b", f.b, "endomorphism parameter b");
  cmd->add_option("--c", f.c, "endomorphism parameter c");
  cmd->add_option("--d", f.d, "endomorphism parameter d");
}

void add_family_flags(CLI::App* cmd, Flags& f) {
  cmd->add_option("--family", f.family, "abf, af, bf, u, v, ut or vt");
  cmd->add_option("--alpha", f.alpha, "module parameter alpha");
  cmd->add_option("--beta", f.beta, "module parameter beta");
  cmd->add_option("--F", f.F, "module parameter F");
}

void add_sign_flags(CLI::App* cmd, Flags& f) {
  cmd->add_option("--sign", f.sign, "action sign: -1 (default) or +1");
  cmd->add_flag("--printed-actions", f.printed_actions, "use the printed action tables (sign +1)");
}

void add_corrections_flag(CLI::App* cmd, Flags& f) {
  cmd->add_option("--corrections", f.corrections, "calibrated (default) or printed");
}

void add_report_flags(CLI::App* cmd, Flags& f) {
  cmd->add_option("--out", f.out, "write the JSON report here");
}

void add_window_flag(CLI::App* cmd, Flags& f) {
  cmd->add_option("--window", f.window, "window bound (overrides HVHOM_WINDOW)");
}

// Only flags given on the command line end up in the map.
ParamMap collect(const Flags& f) {
  ParamMap p;
  const auto put = [&p](const char* key, const std::string& value) {
    if (!value.empty()) p[key] = value;
  };
  put("k", f.k);
  put("a", f.a);
  put("b", f.b);
  put("c", f.c);
  put("d", f.d);
  put("family", f.family);
  put("alpha", f.alpha);
  put("beta", f.beta);
  put("F", f.F);
  put("norm", f.norm);
  put("corrections", f.corrections);
  if (f.printed_actions) {
    if (!f.sign.empty() && f.sign != "+1" && f.sign != "1") {
      throw InvalidParameter("--printed-actions conflicts with --sign " + f.sign);
    }
    p["sign"] = "+1";
  } else {
    put("sign", f.sign);
  }
  return p;
}

std::optional<Index> env_window() {
  const char* raw = std::getenv("HVHOM_WINDOW");
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  const Scalar w = parse_scalar(raw);
  const auto n = w.to_index();
  if (!n || *n < 0) throw InvalidParameter(std::string("HVHOM_WINDOW must be a nonnegative integer, got ") + raw);
  return n;
}

Index window_or(const Flags& f, Index fallback) {
  if (f.window) return *f.window;
  return env_window().value_or(fallback);
}

Endomorphism endomorphism(const Flags& f) {
  const EndoParams p = endo_params_from(collect(f));
  if (f.corrections.empty() || f.corrections == "calibrated") return Endomorphism(p, calibrate_corrections(p, 8));
  if (f.corrections == "printed") return Endomorphism(p, printed_corrections(p));
  throw InvalidParameter("corrections must be 'calibrated' or 'printed', got '" + f.corrections + "'");
}

Scalar norm_of(const Flags& f) { return f.norm.empty() ? Scalar(1) : parse_scalar(f.norm); }

HomModuleSpec hom_spec(const Flags& f) {
  const ParamMap p = collect(f);
  return make_hom_module_spec(family_params_from(p), endo_params_from(p), norm_of(f));
}

GridOptions grid(const Flags& f) { return GridOptions{f.max_counterexamples, f.threads}; }

void print_check(const CheckReport& r) {
  std::cout << r.suite << ": " << r.status() << " (checked " << r.checked << ", failures " << r.failures
            << ")\n";
  for (const auto& cex : r.counterexamples) {
    std::cout << "  at";
    for (const auto& [name, value] : cex.point.fields()) {
      std::cout << ' ' << name << '=';
      if (const auto* i = std::get_if<Index>(&value)) {
        std::cout << *i;
      } else {
        std::cout << std::get<std::string>(value);
      }
    }
    std::cout << ": " << cex.lhs << " != " << cex.rhs << '\n';
  }
}

void print_audit(const AuditReport& r) {
  std::cout << r.subject << '\n';
  for (const auto& e : r.entries) {
    std::cout << "  " << e.component << ": " << e.verdict() << "  printed " << e.printed << "  derived "
              << e.derived << '\n';
  }
  for (const auto& c : r.checks) std::cout << "  check " << c.suite << ": " << c.status() << '\n';
  const auto bad = r.mismatched_components();
  std::cout << "mismatches: " << bad.size();
  for (const auto& name : bad) std::cout << ' ' << name;
  std::cout << '\n';
}

int run(int argc, char** argv) {
  CLI::App app{"Exact computations in the twisted Heisenberg-Virasoro algebra and its Hom-type modules"};
  app.require_subcommand(1);
  Flags f;

  std::string x_text, y_text, v_text;

  auto* eval = app.add_subcommand("eval", "evaluate an expression and print it canonically");
  eval->add_option("expr", x_text)->required();

  auto* br = app.add_subcommand("bracket", "[x, y]");
  br->add_option("x", x_text)->required();
  br->add_option("y", y_text)->required();

  auto* hbr = app.add_subcommand("hombracket", "[x, y]_phi = phi([x, y])");
  hbr->add_option("x", x_text)->required();
  hbr->add_option("y", y_text)->required();
  add_endo_flags(hbr, f);
  add_corrections_flag(hbr, f);

  auto* endo = app.add_subcommand("endo", "endomorphisms");
  endo->require_subcommand(1);
  auto* endo_apply = endo->add_subcommand("apply", "phi(x)");
  endo_apply->add_option("x", x_text)->required();
  add_endo_flags(endo_apply, f);
  add_corrections_flag(endo_apply, f);
  auto* endo_cal = endo->add_subcommand("calibrate", "solve the degree-zero corrections");
  add_endo_flags(endo_cal, f);
  add_window_flag(endo_cal, f);

  auto* act_cmd = app.add_subcommand("act", "x.v in an intermediate-series module");
  act_cmd->add_option("x", x_text)->required();
  act_cmd->add_option("v", v_text)->required();
  add_family_flags(act_cmd, f);
  add_sign_flags(act_cmd, f);

  auto* homact = app.add_subcommand("homact", "Hom-type module action");
  homact->add_option("x", x_text)->required();
  homact->add_option("v", v_text)->required();
  add_family_flags(homact, f);
  add_endo_flags(homact, f);
  homact->add_option("--norm", f.norm, "twist normalisation");

  auto* adm = app.add_subcommand("admissible", "check the admissibility constraints and print q");
  add_family_flags(adm, f);
  add_endo_flags(adm, f);

  auto* solve = app.add_subcommand("solve-twist", "solution space of module twists on a window");
  add_family_flags(solve, f);
  add_endo_flags(solve, f);
  add_window_flag(solve, f);

  std::string suite;
  auto* check = app.add_subcommand("check", "run an identity suite");
  check->add_option("suite", suite, "jacobi, antisym, endo-hom, hom-jacobi, multiplicative, lie-module, compat-27, homrep-26")
      ->required();
  add_family_flags(check, f);
  add_endo_flags(check, f);
  add_sign_flags(check, f);
  add_corrections_flag(check, f);
  add_window_flag(check, f);
  add_report_flags(check, f);
  check->add_option("--norm", f.norm, "twist normalisation");
  check->add_option("--max-counterexamples", f.max_counterexamples, "counterexamples kept in the report");
  check->add_option("--threads", f.threads, "worker threads (0 = all cores)");

  std::string subject;
  auto* audit = app.add_subcommand("audit", "compare printed formulas with derived ones");
  audit->add_option("subject", subject, "thm22, lemma28 or section3")
      ->required()
      ->check(CLI::IsMember({"thm22", "lemma28", "section3"}));
  add_family_flags(audit, f);
  add_endo_flags(audit, f);
  add_window_flag(audit, f);
  add_report_flags(audit, f);
  audit->add_option("--norm", f.norm, "twist normalisation");

  auto* weight = app.add_subcommand("weight", "weight-module criterion");
  add_family_flags(weight, f);
  add_endo_flags(weight, f);
  add_window_flag(weight, f);
  weight->add_option("--norm", f.norm, "twist normalisation");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (*eval) {
    std::cout << format_value(eval_expr(parse_expr(x_text))) << '\n';
  } else if (*br) {
    std::cout << format_element(bracket(parse_element(x_text), parse_element(y_text))) << '\n';
  } else if (*hbr) {
    const Endomorphism phi = endomorphism(f);
    std::cout << format_element(hom_bracket(phi, parse_element(x_text), parse_element(y_text))) << '\n';
  } else if (*endo_apply) {
    std::cout << format_element(endomorphism(f).apply(parse_element(x_text))) << '\n';
  } else if (*endo_cal) {
    const EndoParams p = endo_params_from(collect(f));
    const DeltaCorrections dc = calibrate_corrections(p, window_or(f, 8));
    for (std::size_t i = 1; i <= DeltaCorrections::kCount; ++i) {
      std::cout << DeltaCorrections::name(i) << " = " << format_scalar(dc.p(i)) << '\n';
    }
  } else if (*act_cmd) {
    const ParamMap p = collect(f);
    std::cout << format_module_vec(act(family_params_from(p), parse_element(x_text), parse_module_vec(v_text),
                                       sign_from(p)))
              << '\n';
  } else if (*homact) {
    const HomModuleSpec s = hom_spec(f);
    std::cout << format_module_vec(hom_act(s, parse_element(x_text), parse_module_vec(v_text))) << '\n';
  } else if (*adm) {
    const ParamMap p = collect(f);
    const Admissibility a = admissibility(family_params_from(p), endo_params_from(p));
    std::cout << "q = " << a.q << '\n';
  } else if (*solve) {
    const ParamMap p = collect(f);
    const TwistSolution sol = solve_twist_window(family_params_from(p), endo_params_from(p), window_or(f, 8));
    std::cout << "dimension = " << sol.dimension() << " (rows |t| <= " << sol.interior << ", columns |j| <= "
              << sol.column_bound << ", " << sol.equations << " equations)\n";
    for (std::size_t i = 0; i < sol.basis.size(); ++i) {
      std::cout << "basis " << i << ": " << format_twist_matrix(sol.basis[i]) << '\n';
    }
  } else if (*check) {
    SuiteConfig config;
    config.suite = suite;
    config.params = collect(f);
    config.window = f.window ? f.window : env_window();
    config.grid = grid(f);
    const CheckReport r = run_suite(config);
    if (!f.out.empty()) emit_report(r, f.out);
    print_check(r);
    return r.passed() ? 0 : 1;
  } else if (*audit) {
    AuditReport r;
    if (subject == "thm22") {
      r = audit_theorem22(endo_params_from(collect(f)), window_or(f, 8));
    } else if (subject == "lemma28") {
      r = audit_lemma28(f.d.empty() ? Scalar(0) : parse_scalar(f.d), window_or(f, 8));
    } else {
      r = audit_section3(hom_spec(f), window_or(f, 6));
    }
    if (!f.out.empty()) emit_report(r, f.out);
    print_audit(r);
  } else if (*weight) {
    const HomModuleSpec s = hom_spec(f);
    const Index w = window_or(f, 8);
    std::cout << "weight module: " << (is_weight_module(s) ? "yes" : "no") << '\n';
    std::cout << "L0 diagonal on window " << w << ": " << (l0_acts_diagonally(s, w) ? "yes" : "no") << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const hvhom::Error& e) {
    std::cerr << "hvhom: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "hvhom: " << e.what() << '\n';
    return 2;
  }
}
