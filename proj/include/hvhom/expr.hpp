#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hvhom/algebra.hpp"
#include "hvhom/intermediate.hpp"
#include "hvhom/scalar.hpp"

namespace hvhom {

// Expression grammar (whitespace between tokens is ignored):
//   expr := term {("+"|"-") term}
//   term := [scalar "*"] atom | scalar
//   atom := GEN | VEC | "[" expr "," expr "]" | "(" expr ")"
// GEN is L<int>, I<int>, CL, CLI or CI with the sign glued to the index
// (L-3); VEC is v<int>. A leading "-" before an atom negates it.

enum class Sort { Algebra, Module };

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct GenAtom {
  Generator gen;
};
struct VecAtom {
  Index t = 0;
};
struct BracketAtom {
  ExprPtr lhs;
  ExprPtr rhs;
};
struct GroupAtom {
  ExprPtr inner;
};
using Atom = std::variant<GenAtom, VecAtom, BracketAtom, GroupAtom>;

struct Term {
  Scalar coeff{1};
  std::optional<Atom> atom;  // empty for a bare scalar
  std::size_t position = 0;
};

struct Expr {
  std::vector<Term> terms;
  std::size_t position = 0;
};

/// Throws ParseError(position, expected).
Expr parse_expr(std::string_view text);

using ExprValue = std::variant<AlgElement, ModuleVec>;

/// Evaluates brackets with the algebra bracket. A zero-valued expression
/// with no sorted atoms (e.g. "0") takes `zero_sort`. Throws SortError when
/// algebra and module atoms are mixed, a bracket holds module vectors, or a
/// bare nonzero scalar appears.
ExprValue eval_expr(const Expr& expr, Sort zero_sort = Sort::Algebra);

/// Parse + evaluate, insisting on the given sort.
AlgElement parse_element(std::string_view text);
ModuleVec parse_module_vec(std::string_view text);

std::string format_value(const ExprValue& value);

}  // namespace hvhom
