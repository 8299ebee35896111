#include "hvhom/expr.hpp"

#include <cctype>
#include <limits>

#include "hvhom/errors.hpp"

namespace hvhom {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Expr parse() {
    Expr e = expr();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError(pos_, "'+', '-' or end of input");
    return e;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])) != 0) ++pos_;
  }
  bool at(char c) const { return pos_ < text_.size() && text_[pos_] == c; }
  void expect(char c) {
    skip_ws();
    if (!at(c)) throw ParseError(pos_, std::string("'") + c + "'");
    ++pos_;
  }

  Expr expr() {
    skip_ws();
    Expr e;
    e.position = pos_;
    e.terms.push_back(term(true));
    for (;;) {
      skip_ws();
      if (!at('+') && !at('-')) break;
      const bool minus = at('-');
      ++pos_;
      skip_ws();
      Term t = term(true);
      if (minus) t.coeff = -t.coeff;
      e.terms.push_back(std::move(t));
    }
    return e;
  }

  Term term(bool allow_sign) {
    skip_ws();
    Term t;
    t.position = pos_;
    if (auto s = lex_scalar(text_, pos_, allow_sign)) {
      t.coeff = *s;
      skip_ws();
      if (at('*')) {
        ++pos_;
        skip_ws();
        t.atom = atom();
      }
      return t;
    }
    if (allow_sign && at('-')) {
      ++pos_;
      skip_ws();
      t.coeff = Scalar(-1);
    }
    t.atom = atom();
    return t;
  }

  Index index_after_letter() {
    const std::size_t start = pos_;
    bool negative = false;
    if (at('-')) {
      negative = true;
      ++pos_;
    }
    const std::size_t digits = pos_;
    Index value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])) != 0) {
      const Index d = text_[pos_] - '0';
      if (value > (std::numeric_limits<Index>::max() - d) / 10) throw ParseError(start, "index within 64-bit range");
      value = value * 10 + d;
      ++pos_;
    }
    if (pos_ == digits) throw ParseError(digits, "integer index");
    return negative ? -value : value;
  }

  bool consume_word(std::string_view word) {
    if (text_.substr(pos_, word.size()) != word) return false;
    pos_ += word.size();
    return true;
  }

  Atom atom() {
    skip_ws();
    const std::size_t start = pos_;
    if (consume_word("CLI")) return GenAtom{Generator::CLI()};
    if (consume_word("CL")) return GenAtom{Generator::CL()};
    if (consume_word("CI")) return GenAtom{Generator::CI()};
    if (at('L') || at('I') || at('v')) {
      const char letter = text_[pos_++];
      const Index n = index_after_letter();
      if (letter == 'v') return VecAtom{n};
      return GenAtom{letter == 'L' ? Generator::L(n) : Generator::I(n)};
    }
    if (at('[')) {
      ++pos_;
      auto lhs = std::make_shared<const Expr>(expr());
      expect(',');
      auto rhs = std::make_shared<const Expr>(expr());
      expect(']');
      return BracketAtom{std::move(lhs), std::move(rhs)};
    }
    if (at('(')) {
      ++pos_;
      auto inner = std::make_shared<const Expr>(expr());
      expect(')');
      return GroupAtom{std::move(inner)};
    }
    throw ParseError(start, "generator, vector, '[' or '('");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

// Value with an optional sort; an unsorted value is zero.
struct Partial {
  std::optional<Sort> sort;
  AlgElement alg;
  ModuleVec vec;

  void absorb(const Partial& other, const Scalar& factor) {
    if (!other.sort) return;
    if (sort && *sort != *other.sort) throw SortError("algebra and module terms mixed");
    sort = other.sort;
    alg.add_scaled(other.alg, factor);
    vec.add_scaled(other.vec, factor);
  }
};

Partial eval_partial(const Expr& e);

Partial eval_atom(const Atom& a) {
  Partial p;
  if (const auto* g = std::get_if<GenAtom>(&a)) {
    p.sort = Sort::Algebra;
    p.alg = AlgElement(g->gen);
  } else if (const auto* v = std::get_if<VecAtom>(&a)) {
    p.sort = Sort::Module;
    p.vec = ModuleVec(v->t);
  } else if (const auto* b = std::get_if<BracketAtom>(&a)) {
    const Partial lhs = eval_partial(*b->lhs);
    const Partial rhs = eval_partial(*b->rhs);
    if (lhs.sort == Sort::Module || rhs.sort == Sort::Module) {
      throw SortError("bracket arguments must be algebra elements");
    }
    p.sort = Sort::Algebra;
    p.alg = bracket(lhs.alg, rhs.alg);
  } else {
    p = eval_partial(*std::get<GroupAtom>(a).inner);
  }
  return p;
}

Partial eval_partial(const Expr& e) {
  Partial out;
  for (const Term& t : e.terms) {
    if (!t.atom) {
      if (!t.coeff.is_zero()) {
        throw SortError("bare scalar " + t.coeff.str() + " at position " + std::to_string(t.position));
      }
      continue;
    }
    out.absorb(eval_atom(*t.atom), t.coeff);
  }
  return out;
}

}  // namespace

Expr parse_expr(std::string_view text) { return Parser(text).parse(); }

ExprValue eval_expr(const Expr& expr, Sort zero_sort) {
  const Partial p = eval_partial(expr);
  if (p.sort.value_or(zero_sort) == Sort::Module) return p.vec;
  return p.alg;
}

AlgElement parse_element(std::string_view text) {
  ExprValue v = eval_expr(parse_expr(text), Sort::Algebra);
  if (!std::holds_alternative<AlgElement>(v)) throw SortError("expected an algebra element");
  return std::get<AlgElement>(std::move(v));
}

ModuleVec parse_module_vec(std::string_view text) {
  ExprValue v = eval_expr(parse_expr(text), Sort::Module);
  if (!std::holds_alternative<ModuleVec>(v)) throw SortError("expected a module vector");
  return std::get<ModuleVec>(std::move(v));
}

std::string format_value(const ExprValue& value) {
  if (const auto* a = std::get_if<AlgElement>(&value)) return format_element(*a);
  return format_module_vec(std::get<ModuleVec>(value));
}

}  // namespace hvhom
