#include "hvhom/intermediate.hpp"

#include <deque>
#include <tuple>
#include <vector>

#include "hvhom/errors.hpp"

namespace hvhom {

std::string format_module_vec(const ModuleVec& v) {
  return format_combination(v, [](Index t) { return "v" + std::to_string(t); });
}

std::string family_tag(Family f) {
  switch (f) {
    case Family::ABF: return "abf";
    case Family::AF: return "af";
    case Family::BF: return "bf";
    case Family::U: return "u";
    case Family::V: return "v";
    case Family::Ut: return "ut";
    case Family::Vt: return "vt";
  }
  return "?";
}

Family parse_family(const std::string& tag) {
  for (Family f : {Family::ABF, Family::AF, Family::BF, Family::U, Family::V, Family::Ut, Family::Vt}) {
    if (family_tag(f) == tag) return f;
  }
  throw InvalidParameter("unknown family '" + tag + "' (expected abf, af, bf, u, v, ut, vt)");
}

std::map<std::string, std::string> FamilyParams::describe() const {
  std::map<std::string, std::string> out{{"family", family_tag(family)}, {"F", F.str()}};
  if (uses_alpha()) out["alpha"] = alpha.str();
  if (uses_beta()) out["beta"] = beta.str();
  return out;
}

namespace {

ModuleVec single(Index t, const Scalar& c) { return ModuleVec(t, c); }

ModuleVec act_L(const FamilyParams& f, Index n, Index t) {
  const Scalar sn(n);
  const Scalar st(t);
  switch (f.family) {
    case Family::ABF:
      return single(n + t, f.alpha + st + f.beta * sn);
    case Family::AF:
      if (t == 0) return single(n, sn * (sn + f.alpha));
      return single(n + t, st + sn);
    case Family::BF:
      if (t == -n) return single(0, -(sn * (sn + f.alpha)));
      return single(n + t, st);
    case Family::U:
      return single(n + t, st);
    case Family::V:
      return single(n + t, st + sn);
    case Family::Ut:
    case Family::Vt:
      if (t == -n) return {};
      return single(n + t, st);
  }
  return {};
}

ModuleVec act_I(const FamilyParams& f, Index n, Index t) {
  const Scalar sn(n);
  switch (f.family) {
    case Family::ABF:
      return single(n + t, f.F);
    case Family::AF:
    case Family::V:
      if (t == 0) return single(n, sn * f.F);
      return {};
    case Family::BF:
    case Family::U:
    case Family::Ut:
      if (t == -n) return single(0, sn * f.F);
      return {};
    case Family::Vt:
      if (t == 0 && n != 0) return single(n, f.F);
      return {};
  }
  return {};
}

}  // namespace

ModuleVec act_printed(const FamilyParams& f, const Generator& g, Index t) {
  switch (g.kind) {
    case GenKind::L: return act_L(f, g.index, t);
    case GenKind::I: return act_I(f, g.index, t);
    default: return {};  // central generators act trivially
  }
}

ModuleVec act(const FamilyParams& f, const Generator& g, Index t, Sign sign) {
  ModuleVec out = act_printed(f, g, t);
  if (sign == Sign::Consistent) out *= Scalar(-1);
  return out;
}

ModuleVec act(const FamilyParams& f, const AlgElement& x, const ModuleVec& v, Sign sign) {
  ModuleVec out;
  for (const auto& [g, cg] : x.terms()) {
    if (g.is_central()) continue;
    for (const auto& [t, ct] : v.terms()) out.add_scaled(act(f, g, t, sign), cg * ct);
  }
  return out;
}

CheckReport check_lie_module(const FamilyParams& f, Index window, Sign sign,
                             const GridOptions& options) {
  CheckReport report;
  report.suite = "lie-module";
  report.window = {{"n", {-window, window}}, {"m", {-window, window}}, {"t", {-window, window}}};
  report.params = f.describe();
  report.params["sign"] = sign == Sign::Printed ? "+1" : "-1";

  using Triple = std::tuple<Generator, Generator, Index>;
  std::vector<Triple> points;
  const std::vector<Generator> gens = window_generators(window);
  for (const auto& x : gens) {
    for (const auto& y : gens) {
      for (Index t = -window; t <= window; ++t) points.emplace_back(x, y, t);
    }
  }
  run_grid(report, points,
           [&](const Triple& p) -> std::optional<Counterexample> {
             const auto& [x, y, t] = p;
             const ModuleVec vt(t);
             ModuleVec lhs = act(f, bracket_basis(x, y), vt, sign);
             ModuleVec rhs = act(f, AlgElement(x), act(f, AlgElement(y), vt, sign), sign) -
                             act(f, AlgElement(y), act(f, AlgElement(x), vt, sign), sign);
             if (lhs == rhs) return std::nullopt;
             Point pt;
             pt.generator("x", "n", x).generator("y", "m", y).index("t", t);
             return Counterexample{pt, format_module_vec(lhs), format_module_vec(rhs)};
           },
           options);
  return report;
}

std::set<Index> orbit_window_span(const FamilyParams& f, Index t0, Index window) {
  if (t0 < -window || t0 > window) throw InvalidParameter("|t0| must not exceed the window");
  const std::vector<Generator> gens = window_generators(window);
  std::set<Index> seen{t0};
  std::deque<Index> queue{t0};
  while (!queue.empty()) {
    const Index t = queue.front();
    queue.pop_front();
    for (const auto& g : gens) {
      const ModuleVec moved = act_printed(f, g, t);
      for (const auto& term : moved.terms()) {
        const Index s = term.first;
        if (s < -window || s > window) continue;
        if (seen.insert(s).second) queue.push_back(s);
      }
    }
  }
  return seen;
}

}  // namespace hvhom
