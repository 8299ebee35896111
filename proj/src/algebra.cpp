#include "hvhom/algebra.hpp"

namespace hvhom {

std::string format_generator(const Generator& g) {
  switch (g.kind) {
    case GenKind::L: return "L" + std::to_string(g.index);
    case GenKind::I: return "I" + std::to_string(g.index);
    case GenKind::CL: return "CL";
    case GenKind::CLI: return "CLI";
    case GenKind::CI: return "CI";
  }
  return "?";
}

std::string format_element(const AlgElement& x) { return format_combination(x, format_generator); }

namespace {

AlgElement bracket_L_I(Index n, Index m) {
  AlgElement out;
  out.add_term(Generator::I(n + m), Scalar(-m));
  if (n == -m) out.add_term(Generator::CLI(), Scalar(n * n + n));
  return out;
}

}  // namespace

AlgElement bracket_basis(const Generator& g, const Generator& h) {
  if (g.is_central() || h.is_central()) return {};
  const Index n = g.index;
  const Index m = h.index;
  AlgElement out;
  if (g.kind == GenKind::L && h.kind == GenKind::L) {
    out.add_term(Generator::L(n + m), Scalar(n - m));
    if (n == -m) out.add_term(Generator::CL(), Scalar(n * n * n - n, 12));
  } else if (g.kind == GenKind::L) {
    out = bracket_L_I(n, m);
  } else if (h.kind == GenKind::L) {
    out = -bracket_L_I(m, n);
  } else if (n == -m) {
    out.add_term(Generator::CI(), Scalar(n));
  }
  return out;
}

AlgElement bracket(const AlgElement& x, const AlgElement& y) {
  AlgElement out;
  for (const auto& [g, cg] : x.terms()) {
    if (g.is_central()) continue;
    for (const auto& [h, ch] : y.terms()) {
      if (h.is_central()) continue;
      out.add_scaled(bracket_basis(g, h), cg * ch);
    }
  }
  return out;
}

std::map<Index, AlgElement> degree_decompose(const AlgElement& x) {
  std::map<Index, AlgElement> parts;
  for (const auto& [g, c] : x.terms()) parts[g.degree()].add_term(g, c);
  return parts;
}

std::vector<Generator> window_generators(Index window) {
  std::vector<Generator> gens;
  gens.reserve(static_cast<std::size_t>(4 * window + 2));
  for (Index n = -window; n <= window; ++n) gens.push_back(Generator::L(n));
  for (Index n = -window; n <= window; ++n) gens.push_back(Generator::I(n));
  return gens;
}

}  // namespace hvhom
