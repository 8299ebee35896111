#include "hvhom/endo.hpp"

#include <set>
#include <utility>
#include <vector>

#include "hvhom/errors.hpp"
#include "hvhom/linalg.hpp"

namespace hvhom {

void EndoParams::validate() const {
  if (k == 0) throw InvalidParameter("k must be a nonzero integer");
  if (a.is_zero()) throw InvalidParameter("a must be nonzero");
}

std::map<std::string, std::string> EndoParams::describe() const {
  return {{"k", std::to_string(k)}, {"a", a.str()}, {"b", b.str()}, {"c", c.str()}, {"d", d.str()}};
}

Endomorphism::Endomorphism(EndoParams params, DeltaCorrections corrections)
    : params_(std::move(params)), corrections_(std::move(corrections)) {
  params_.validate();
  inv_k_ = Scalar(1, params_.k);
}

AlgElement Endomorphism::apply(const Generator& g) const {
  const EndoParams& p = params_;
  const DeltaCorrections& dc = corrections_;
  AlgElement out;
  switch (g.kind) {
    case GenKind::L: {
      const Index n = g.index;
      if (n == 0) {
        out.add_term(Generator::L(0), inv_k_);
        out.add_term(Generator::I(0), p.d);
        out.add_term(Generator::CL(), dc.p(1));
        out.add_term(Generator::CLI(), dc.p(2));
        out.add_term(Generator::CI(), dc.p(3));
      } else {
        const Scalar an = pow_int(p.a, n);
        out.add_term(Generator::L(p.k * n), an * inv_k_);
        out.add_term(Generator::I(p.k * n), an * (p.c * Scalar(n) + p.d));
      }
      break;
    }
    case GenKind::I: {
      const Index n = g.index;
      if (n == 0) {
        out.add_term(Generator::I(0), p.b);
        out.add_term(Generator::CLI(), dc.p(4));
        out.add_term(Generator::CI(), dc.p(5));
      } else {
        out.add_term(Generator::I(p.k * n), pow_int(p.a, n) * p.b);
      }
      break;
    }
    case GenKind::CL:
      out.add_term(Generator::CL(), dc.p(6));
      out.add_term(Generator::CLI(), dc.p(7));
      out.add_term(Generator::CI(), dc.p(8));
      break;
    case GenKind::CLI:
      out.add_term(Generator::CLI(), dc.p(9));
      out.add_term(Generator::CI(), dc.p(10));
      break;
    case GenKind::CI:
      out.add_term(Generator::CI(), dc.p(11));
      break;
  }
  return out;
}

AlgElement Endomorphism::apply(const AlgElement& x) const {
  AlgElement out;
  for (const auto& [g, c] : x.terms()) out.add_scaled(apply(g), c);
  return out;
}

AlgElement apply_endo(const EndoParams& p, const DeltaCorrections& dc, const AlgElement& x) {
  return Endomorphism(p, dc).apply(x);
}

DeltaCorrections printed_corrections(const EndoParams& p) {
  p.validate();
  const Scalar k(p.k);
  const Scalar& b = p.b;
  const Scalar& c = p.c;
  const Scalar& d = p.d;
  DeltaCorrections dc;
  dc.p(1) = Scalar(1 - p.k * p.k) / Scalar(24 * p.k);
  dc.p(2) = c * k + d;
  dc.p(3) = k / Scalar(2) * (c * c - d * d);
  dc.p(4) = b * (Scalar(1) - k);
  dc.p(5) = -(b * (k * c + k * d));
  dc.p(6) = k;
  dc.p(7) = Scalar(-24) * k * c;
  dc.p(8) = Scalar(-12) * k * c * c;
  dc.p(9) = k * b;
  dc.p(10) = k * b * c;
  dc.p(11) = k * b * b;
  return dc;
}

DeltaCorrections calibrate_corrections(const EndoParams& p, Index window) {
  p.validate();
  if (window < 3) throw CalibrationFailed("window must be at least 3");

  // phi is affine in the corrections and brackets kill central terms, so
  //   phi_dc([g,h]) - [phi g, phi h] = base + sum_i dc_i * column_i
  // with base and columns computed from unit correction vectors.
  const Endomorphism zero(p, DeltaCorrections{});
  std::vector<Endomorphism> unit;
  unit.reserve(DeltaCorrections::kCount);
  for (std::size_t i = 1; i <= DeltaCorrections::kCount; ++i) {
    DeltaCorrections e;
    e.p(i) = Scalar(1);
    unit.emplace_back(p, e);
  }

  std::vector<std::pair<Generator, Generator>> pairs;
  for (Index n = 1; n <= window; ++n) {
    pairs.emplace_back(Generator::L(n), Generator::L(-n));
    pairs.emplace_back(Generator::L(n), Generator::I(-n));
    pairs.emplace_back(Generator::I(n), Generator::I(-n));
    pairs.emplace_back(Generator::L(n), Generator::L(0));
    pairs.emplace_back(Generator::L(n), Generator::I(0));
    pairs.emplace_back(Generator::I(n), Generator::L(0));
  }

  std::vector<std::pair<SparseRow, Scalar>> equations;
  for (const auto& [g, h] : pairs) {
    const AlgElement br = bracket_basis(g, h);
    const AlgElement base = zero.apply(br) - bracket(zero.apply(g), zero.apply(h));
    std::vector<AlgElement> columns;
    columns.reserve(DeltaCorrections::kCount);
    for (const auto& u : unit) columns.push_back(u.apply(br) - zero.apply(br));

    // one equation per basis component touched by the residual
    std::set<Generator> components;
    for (const auto& term : base.terms()) components.insert(term.first);
    for (const auto& col : columns) {
      for (const auto& term : col.terms()) components.insert(term.first);
    }
    for (const auto& gen : components) {
      SparseRow row;
      for (std::size_t i = 0; i < columns.size(); ++i) {
        Scalar coeff = columns[i].coeff(gen);
        if (!coeff.is_zero()) row.emplace(i, std::move(coeff));
      }
      equations.emplace_back(std::move(row), -base.coeff(gen));
    }
  }

  const std::vector<Scalar> solution = solve_unique(equations, DeltaCorrections::kCount);
  DeltaCorrections dc;
  for (std::size_t i = 1; i <= DeltaCorrections::kCount; ++i) dc.p(i) = solution[i - 1];
  return dc;
}

CheckReport check_homomorphism(const Endomorphism& phi, Index window, const GridOptions& options) {
  CheckReport report;
  report.suite = "endo-hom";
  report.window = {{"n", {-window, window}}, {"m", {-window, window}}};
  report.params = phi.params().describe();
  for (std::size_t i = 1; i <= DeltaCorrections::kCount; ++i) {
    report.params[DeltaCorrections::name(i)] = phi.corrections().p(i).str();
  }

  const std::vector<Generator> gens = window_generators(window);
  std::map<Generator, AlgElement> images;
  for (const auto& g : gens) images.emplace(g, phi.apply(g));

  std::vector<std::pair<Generator, Generator>> points;
  for (const auto& g : gens) {
    for (const auto& h : gens) points.emplace_back(g, h);
  }
  run_grid(report, points,
           [&](const std::pair<Generator, Generator>& gh) -> std::optional<Counterexample> {
             const auto& [g, h] = gh;
             AlgElement lhs = phi.apply(bracket_basis(g, h));
             AlgElement rhs = bracket(images.at(g), images.at(h));
             if (lhs == rhs) return std::nullopt;
             Point pt;
             pt.generator("x", "n", g).generator("y", "m", h);
             return Counterexample{pt, format_element(lhs), format_element(rhs)};
           },
           options);
  return report;
}

Endomorphism lemma28_endo(const Scalar& d) {
  EndoParams p{1, Scalar(1), Scalar(1), Scalar(0), d};
  return Endomorphism(p, calibrate_corrections(p, 8));
}

namespace {

AuditReport compare_corrections(std::string subject, const EndoParams& p,
                                const DeltaCorrections& printed, const DeltaCorrections& derived,
                                Index window) {
  AuditReport report;
  report.subject = std::move(subject);
  report.params = p.describe();
  report.params["window"] = std::to_string(window);
  for (std::size_t i = 1; i <= DeltaCorrections::kCount; ++i) {
    report.entries.push_back(AuditEntry{DeltaCorrections::name(i), printed.p(i).str(),
                                        derived.p(i).str(), printed.p(i) == derived.p(i)});
  }
  CheckReport printed_check = check_homomorphism(Endomorphism(p, printed), window);
  printed_check.suite = "endo-hom:printed";
  CheckReport derived_check = check_homomorphism(Endomorphism(p, derived), window);
  derived_check.suite = "endo-hom:calibrated";
  report.checks.push_back(std::move(printed_check));
  report.checks.push_back(std::move(derived_check));
  return report;
}

}  // namespace

AuditReport audit_theorem22(const EndoParams& p, Index window) {
  return compare_corrections("thm22", p, printed_corrections(p), calibrate_corrections(p, window),
                             window);
}

AuditReport audit_lemma28(const Scalar& d, Index window) {
  EndoParams p{1, Scalar(1), Scalar(1), Scalar(0), d};
  // Printed Hom structure: phi(L_0) = L_0 + d I_0 + d C_LI - (d^2/2) C_I,
  // phi(I_0) = I_0 - d C_I, identity on the centre.
  DeltaCorrections printed;
  printed.p(2) = d;
  printed.p(3) = -(d * d) / Scalar(2);
  printed.p(5) = -d;
  printed.p(6) = Scalar(1);
  printed.p(9) = Scalar(1);
  printed.p(11) = Scalar(1);
  return compare_corrections("lemma28", p, printed, calibrate_corrections(p, window), window);
}

}  // namespace hvhom
