#include "hvhom/homlie.hpp"

#include <array>
#include <map>
#include <tuple>
#include <vector>

#include "hvhom/errors.hpp"
#include "hvhom/linalg.hpp"

namespace hvhom {

AlgElement hom_bracket(const Endomorphism& phi, const AlgElement& x, const AlgElement& y) {
  return phi.apply(bracket(x, y));
}

namespace {

std::map<std::string, std::string> describe(const Endomorphism& phi) {
  auto params = phi.params().describe();
  for (std::size_t i = 1; i <= DeltaCorrections::kCount; ++i) {
    params[DeltaCorrections::name(i)] = phi.corrections().p(i).str();
  }
  return params;
}

}  // namespace

CheckReport check_hom_jacobi(const Endomorphism& phi, Index window, const GridOptions& options) {
  CheckReport report;
  report.suite = "hom-jacobi";
  report.window = {{"n", {-window, window}}, {"m", {-window, window}}, {"p", {-window, window}}};
  report.params = describe(phi);

  const std::vector<Generator> gens = window_generators(window);
  std::map<Generator, AlgElement> images;
  for (const auto& g : gens) images.emplace(g, phi.apply(g));

  using Triple = std::array<Generator, 3>;
  std::vector<Triple> points;
  points.reserve(gens.size() * gens.size() * gens.size());
  for (const auto& x : gens) {
    for (const auto& y : gens) {
      for (const auto& z : gens) points.push_back({x, y, z});
    }
  }
  run_grid(report, points,
           [&](const Triple& t) -> std::optional<Counterexample> {
             const auto term = [&](const Generator& x, const Generator& y, const Generator& z) {
               return phi.apply(bracket(images.at(x), phi.apply(bracket_basis(y, z))));
             };
             AlgElement sum = term(t[0], t[1], t[2]);
             sum += term(t[1], t[2], t[0]);
             sum += term(t[2], t[0], t[1]);
             if (sum.is_zero()) return std::nullopt;
             Point pt;
             pt.generator("x", "n", t[0]).generator("y", "m", t[1]).generator("z", "p", t[2]);
             return Counterexample{pt, format_element(sum), "0"};
           },
           options);
  return report;
}

CheckReport check_multiplicative(const Endomorphism& phi, Index window,
                                 const GridOptions& options) {
  CheckReport report;
  report.suite = "multiplicative";
  report.window = {{"n", {-window, window}}, {"m", {-window, window}}};
  report.params = describe(phi);

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
             AlgElement lhs = phi.apply(hom_bracket(phi, AlgElement(g), AlgElement(h)));
             AlgElement rhs = hom_bracket(phi, images.at(g), images.at(h));
             if (lhs == rhs) return std::nullopt;
             Point pt;
             pt.generator("x", "n", g).generator("y", "m", h);
             return Counterexample{pt, format_element(lhs), format_element(rhs)};
           },
           options);
  return report;
}

AlgElement invert_endo(const Endomorphism& phi, const AlgElement& y) {
  const EndoParams& p = phi.params();
  if (p.k != 1 && p.k != -1) {
    throw InducedAlgebraUnavailable("index map n -> " + std::to_string(p.k) +
                                    "n is not invertible over the integers");
  }
  // phi maps degree n onto degree kn; solve each target degree separately.
  AlgElement out;
  for (const auto& [degree, part] : degree_decompose(y)) {
    std::vector<Generator> sources;
    if (degree == 0) {
      sources = {Generator::L(0), Generator::I(0), Generator::CL(), Generator::CLI(),
                 Generator::CI()};
    } else {
      const Index n = p.k * degree;  // k = +-1 is its own inverse
      sources = {Generator::L(n), Generator::I(n)};
    }
    std::vector<AlgElement> images;
    std::map<Generator, std::size_t> targets;
    for (const auto& s : sources) {
      images.push_back(phi.apply(s));
      for (const auto& term : images.back().terms()) targets.try_emplace(term.first, 0);
    }
    for (const auto& term : part.terms()) targets.try_emplace(term.first, 0);

    std::vector<std::pair<SparseRow, Scalar>> equations;
    for (const auto& entry : targets) {
      SparseRow row;
      for (std::size_t i = 0; i < images.size(); ++i) {
        Scalar c = images[i].coeff(entry.first);
        if (!c.is_zero()) row.emplace(i, std::move(c));
      }
      equations.emplace_back(std::move(row), part.coeff(entry.first));
    }
    std::vector<Scalar> x;
    try {
      x = solve_unique(equations, sources.size());
    } catch (const CalibrationFailed&) {
      throw InducedAlgebraUnavailable("endomorphism is singular in degree " + std::to_string(degree));
    }
    for (std::size_t i = 0; i < sources.size(); ++i) out.add_term(sources[i], x[i]);
  }
  return out;
}

AlgElement induced_bracket(const Endomorphism& phi, const AlgElement& x, const AlgElement& y) {
  return invert_endo(phi, hom_bracket(phi, x, y));
}

}  // namespace hvhom
