#include "hvhom/homrep.hpp"

#include <cstdlib>
#include <tuple>

#include "hvhom/errors.hpp"
#include "hvhom/homlie.hpp"
#include "hvhom/linalg.hpp"

namespace hvhom {

namespace {

void require(bool ok, const std::string& name, const std::string& expected, const Scalar& actual) {
  if (!ok) throw ConstraintViolation(name, expected, actual.str());
}

void require_kb_one(const EndoParams& e) {
  const Scalar kb = Scalar(e.k) * e.b;
  require(kb == Scalar(1), "k*b=1", "1", kb);
}

void require_alpha_not_nonzero_integer(const FamilyParams& f) {
  const bool bad = f.alpha.is_integer() && !f.alpha.is_zero();
  if (bad) throw ConstraintViolation("alpha not in Z\\{0}", "alpha outside Z\\{0}", f.alpha.str());
}

// 1 - k -+ k*F*c = 0, or k = 1 when F = 0.
void require_c_equation(const FamilyParams& f, const EndoParams& e, int sign) {
  const Scalar k(e.k);
  if (f.F.is_zero()) {
    require(e.k == 1, "k=1", "1", k);
    return;
  }
  const Scalar lhs = Scalar(1) - k + Scalar(sign) * k * f.F * e.c;
  require(lhs.is_zero(), sign < 0 ? "1-k-k*F*c=0" : "1-k+k*F*c=0", "0", lhs);
}

}  // namespace

Admissibility admissibility(const FamilyParams& f, const EndoParams& e) {
  e.validate();
  switch (f.family) {
    case Family::ABF: {
      require(e.b == Scalar(1), "b=1", "1", e.b);
      require(e.c.is_zero(), "c=0", "0", e.c);
      const Scalar k(e.k);
      const Scalar q = k * f.alpha - f.alpha - k * f.F * e.d;
      const auto qi = q.to_index();
      if (!qi) throw ConstraintViolation("k*alpha-alpha-k*F*d in Z", "an integer", q.str());
      return {*qi};
    }
    case Family::AF:
    case Family::BF:
      require_alpha_not_nonzero_integer(f);
      require_kb_one(e);
      require_c_equation(f, e, f.family == Family::AF ? -1 : 1);
      require(e.d.is_zero(), "d=0", "0", e.d);
      return {};
    case Family::U:
    case Family::V:
    case Family::Ut:
      require_kb_one(e);
      require(e.c.is_zero(), "c=0", "0", e.c);
      require(e.d.is_zero(), "d=0", "0", e.d);
      return {};
    case Family::Vt:
      require(e.b == Scalar(1), "b=1", "1", e.b);
      require(e.c.is_zero(), "c=0", "0", e.c);
      require(e.d.is_zero(), "d=0", "0", e.d);
      return {};
  }
  return {};
}

std::map<std::string, std::string> HomModuleSpec::describe() const {
  auto out = family.describe();
  for (const auto& [key, value] : endo.params().describe()) out[key] = value;
  out["norm"] = norm.str();
  out["q"] = std::to_string(q);
  return out;
}

HomModuleSpec make_hom_module_spec(const FamilyParams& f, const EndoParams& e, const Scalar& norm) {
  const Admissibility adm = admissibility(f, e);
  if (norm.is_zero()) throw ConstraintViolation("norm!=0", "nonzero", norm.str());
  return HomModuleSpec{f, Endomorphism(e, calibrate_corrections(e, 8)), norm, adm.q};
}

ModuleVec twist_vec(const HomModuleSpec& s, Index t) {
  const EndoParams& e = s.endo.params();
  return ModuleVec(e.k * t + s.q, pow_int(e.a, t) * s.norm);
}

ModuleVec twist(const HomModuleSpec& s, const ModuleVec& v) {
  ModuleVec out;
  for (const auto& [t, c] : v.terms()) out.add_scaled(twist_vec(s, t), c);
  return out;
}

ModuleVec hom_act(const HomModuleSpec& s, const AlgElement& x, const ModuleVec& v) {
  return twist(s, act(s.family, x, v));
}

ModuleVec hom_act_printed(const HomModuleSpec& s, const Generator& g, Index t) {
  if (g.is_central()) return {};
  const FamilyParams& f = s.family;
  const EndoParams& e = s.endo.params();
  const Index n = g.index;
  const Index k = e.k;
  const Scalar sn(n);
  const Scalar st(t);
  const Scalar& m = s.norm;
  const Scalar an = pow_int(e.a, n);
  const Scalar ant = pow_int(e.a, n + t);
  const Index target = k * (n + t);
  const bool is_L = g.kind == GenKind::L;

  switch (f.family) {
    case Family::ABF:
      if (is_L) return ModuleVec(target + s.q, (f.alpha + st + f.beta * sn) * ant * m);
      return ModuleVec(target + s.q, f.F * ant * m);
    case Family::AF:
      if (is_L) {
        if (t != 0) return ModuleVec(target, (st + sn) * Scalar(k) * ant * m);
        return ModuleVec(k * n, sn * (sn + f.alpha) * an * m);
      }
      if (t != 0) return {};
      return ModuleVec(k * n, sn * f.F * an * m);
    case Family::BF:
      if (is_L) {
        if (t != -n) return ModuleVec(target, st * ant * m);
        return ModuleVec(0, -(sn * (sn + f.alpha)) * an * m);
      }
      if (t != -n) return {};
      return ModuleVec(0, sn * f.F * m);
    case Family::U:
      if (is_L) return ModuleVec(target, st * ant * m);
      if (t != -n) return {};
      return ModuleVec(0, sn * f.F * m);
    case Family::V:
      if (is_L) return ModuleVec(target, (st + sn) * ant * m);
      if (t != 0) return {};
      return ModuleVec(k * n, sn * f.F * an * m);
    case Family::Ut:
      if (is_L) {
        if (t == -n) return {};
        return ModuleVec(target, (st + sn) * ant * m);
      }
      if (t != -n) return {};
      return ModuleVec(0, sn * f.F * m);
    case Family::Vt:
      if (is_L) {
        if (t == -n) return {};
        return ModuleVec(target, st * ant * m);
      }
      if (t != 0) return {};
      return ModuleVec(k * n, f.F * an * m);
  }
  return {};
}

CheckReport check_compat_27(const HomModuleSpec& s, Index window, const GridOptions& options) {
  CheckReport report;
  report.suite = "compat-27";
  report.window = {{"n", {-window, window}}, {"t", {-window, window}}};
  report.params = s.describe();

  using Pt = std::pair<Generator, Index>;
  std::vector<Pt> points;
  for (const auto& g : window_generators(window)) {
    for (Index t = -window; t <= window; ++t) points.emplace_back(g, t);
  }
  run_grid(report, points,
           [&](const Pt& p) -> std::optional<Counterexample> {
             const auto& [g, t] = p;
             ModuleVec lhs = act(s.family, s.endo.apply(g), twist_vec(s, t));
             ModuleVec rhs = twist(s, act(s.family, g, t));
             if (lhs == rhs) return std::nullopt;
             Point pt;
             pt.generator("x", "n", g).index("t", t);
             return Counterexample{pt, format_module_vec(lhs), format_module_vec(rhs)};
           },
           options);
  return report;
}

CheckReport check_homrep_26(const HomModuleSpec& s, Index window, const GridOptions& options) {
  CheckReport report;
  report.suite = "homrep-26";
  report.window = {{"n", {-window, window}}, {"m", {-window, window}}, {"t", {-window, window}}};
  report.params = s.describe();

  const std::vector<Generator> gens = window_generators(window);
  std::map<Generator, AlgElement> images;
  for (const auto& g : gens) images.emplace(g, s.endo.apply(g));

  using Triple = std::tuple<Generator, Generator, Index>;
  std::vector<Triple> points;
  for (const auto& x : gens) {
    for (const auto& y : gens) {
      for (Index t = -window; t <= window; ++t) points.emplace_back(x, y, t);
    }
  }
  run_grid(report, points,
           [&](const Triple& p) -> std::optional<Counterexample> {
             const auto& [x, y, t] = p;
             const ModuleVec vt(t);
             const AlgElement hb = hom_bracket(s.endo, AlgElement(x), AlgElement(y));
             ModuleVec lhs = hom_act(s, hb, twist_vec(s, t));
             ModuleVec rhs = hom_act(s, images.at(x), hom_act(s, AlgElement(y), vt)) -
                             hom_act(s, images.at(y), hom_act(s, AlgElement(x), vt));
             if (lhs == rhs) return std::nullopt;
             Point pt;
             pt.generator("x", "n", x).generator("y", "m", y).index("t", t);
             return Counterexample{pt, format_module_vec(lhs), format_module_vec(rhs)};
           },
           options);
  return report;
}

std::string format_twist_matrix(const TwistMatrix& m) {
  if (m.empty()) return "0";
  std::string out;
  for (const auto& [tj, c] : m) {
    if (!out.empty()) out += ", ";
    out += "a(" + std::to_string(tj.first) + "," + std::to_string(tj.second) + ")=" + c.str();
  }
  return out;
}

bool TwistSolution::contains(const TwistMatrix& m) const {
  std::map<std::pair<Index, Index>, std::size_t> columns;
  const auto column = [&](const std::pair<Index, Index>& key) {
    return columns.try_emplace(key, columns.size()).first->second;
  };
  std::vector<SparseRow> rows;
  for (const auto& b : basis) {
    SparseRow r;
    for (const auto& [key, c] : b) r.emplace(column(key), c);
    rows.push_back(std::move(r));
  }
  SparseRow target;
  for (const auto& [key, c] : m) {
    if (std::abs(key.first) > interior || c.is_zero()) continue;
    target.emplace(column(key), c);
  }
  SparseEchelon echelon(columns.size());
  for (auto& r : rows) echelon.add_row(std::move(r));
  return !echelon.add_row(std::move(target));
}

TwistSolution solve_twist_window(const FamilyParams& f, const EndoParams& e, Index window) {
  e.validate();
  const Index absk = std::abs(e.k);
  TwistSolution sol;
  sol.window = window;
  sol.interior = window - absk;
  if (window < 0 || sol.interior < 0) {
    throw WindowTooSmall("no rows with |t| <= window - |k| = " + std::to_string(sol.interior));
  }

  Index q = 0;
  if (f.family == Family::ABF) {
    const Scalar k(e.k);
    if (auto qi = (k * f.alpha - f.alpha - k * f.F * e.d).to_index()) q = *qi;
  }
  const Index K = absk * window + std::abs(q) + absk;
  sol.column_bound = K;
  const Index width = 2 * K + 1;
  const auto column = [&](Index t, Index j) {
    return static_cast<std::size_t>((t + window) * width + (j + K));
  };
  const std::size_t unknowns = static_cast<std::size_t>((2 * window + 1) * width);

  // Only the non-central part of phi(g) matters: centrals act trivially.
  const Endomorphism phi(e, DeltaCorrections{});
  SparseEchelon echelon(unknowns);

  for (Index n = -2 * window; n <= 2 * window; ++n) {
    for (const Generator& g : {Generator::L(n), Generator::I(n)}) {
      std::vector<std::pair<Generator, Scalar>> image;
      const AlgElement phig = phi.apply(g);
      for (const auto& [h, c] : phig.terms()) {
        if (!h.is_central()) image.emplace_back(h, c);
      }
      for (Index t = -window; t <= window; ++t) {
        // phi_V(g.v_t) = sum_i r * a_{s,i} v_i with g.v_t = r v_s
        const ModuleVec moved = act(f, g, t);
        if (moved.size() > 1) throw InvalidParameter("action is not a single weight shift");
        Index s = 0;
        Scalar r;
        if (!moved.is_zero()) {
          std::tie(s, r) = *moved.terms().begin();
          if (s < -window || s > window) continue;
        }
        for (Index i = -K; i <= K; ++i) {
          SparseRow row;
          bool inside = true;
          // (phi g).phi_V(v_t) at v_i: sum over j with j + deg h = i
          for (const auto& [h, ch] : image) {
            const Index j = i - h.degree();
            const Scalar val = act(f, h, j).coeff(i);
            if (val.is_zero()) continue;
            if (j < -K || j > K) {
              inside = false;
              break;
            }
            const Scalar coeff = ch * val;
            auto [it, fresh] = row.try_emplace(column(t, j), coeff);
            if (!fresh) it->second += coeff;
          }
          if (!inside) continue;
          if (!r.is_zero()) {
            auto [it, fresh] = row.try_emplace(column(s, i), -r);
            if (!fresh) it->second -= r;
          }
          std::erase_if(row, [](const auto& entry) { return entry.second.is_zero(); });
          if (row.empty()) continue;
          ++sol.equations;
          echelon.add_row(std::move(row));
        }
      }
    }
  }

  std::vector<SparseRow> projected;
  for (const SparseRow& v : echelon.nullspace()) {
    SparseRow p;
    for (const auto& [col, c] : v) {
      const Index t = static_cast<Index>(col) / width - window;
      if (std::abs(t) <= sol.interior) p.emplace(col, c);
    }
    if (!p.empty()) projected.push_back(std::move(p));
  }
  for (const SparseRow& b : span_basis(projected, unknowns)) {
    TwistMatrix m;
    for (const auto& [col, c] : b) {
      const Index t = static_cast<Index>(col) / width - window;
      const Index j = static_cast<Index>(col) % width - K;
      m.emplace(std::make_pair(t, j), c);
    }
    sol.basis.push_back(std::move(m));
  }
  return sol;
}

AuditReport audit_section3(const HomModuleSpec& s, Index window) {
  AuditReport report;
  report.subject = "section3";
  report.params = s.describe();
  report.params["window"] = std::to_string(window);
  for (const auto& g : window_generators(window)) {
    for (Index t = -window; t <= window; ++t) {
      const ModuleVec printed = hom_act_printed(s, g, t);
      const ModuleVec derived = twist(s, act_printed(s.family, g, t));
      report.entries.push_back(AuditEntry{format_generator(g) + "(v" + std::to_string(t) + ")",
                                          format_module_vec(printed), format_module_vec(derived),
                                          printed == derived});
    }
  }
  report.checks.push_back(check_compat_27(s, window));
  report.checks.push_back(check_homrep_26(s, window));
  return report;
}

bool is_weight_module(const HomModuleSpec& s) {
  if (s.endo.params().k != 1) return false;
  return s.family.family != Family::ABF || s.q == 0;
}

bool l0_acts_diagonally(const HomModuleSpec& s, Index window) {
  for (Index t = -window; t <= window; ++t) {
    const ModuleVec image = hom_act(s, AlgElement(Generator::L(0)), ModuleVec(t));
    for (const auto& term : image.terms()) {
      if (term.first != t) return false;
    }
  }
  return true;
}

}  // namespace hvhom
