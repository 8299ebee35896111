#pragma once

#include <map>
#include <string>
#include <utility>

#include "hvhom/scalar.hpp"

namespace hvhom {

/// Finite linear combination of basis symbols with exact coefficients.
///
/// Zero coefficients are never stored, so equality of two combinations is
/// structural equality of the underlying maps. Iteration follows Key's
/// ordering, which is the canonical print order.
template <class Key>
class Combination {
 public:
  using Terms = std::map<Key, Scalar>;

  Combination() = default;
  Combination(const Key& key, Scalar coeff = Scalar(1)) { add_term(key, std::move(coeff)); }  // NOLINT

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  Scalar coeff(const Key& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Scalar() : it->second;
  }

  void add_term(const Key& key, const Scalar& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(key, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  /// this += factor * other
  void add_scaled(const Combination& other, const Scalar& factor) {
    if (factor.is_zero()) return;
    for (const auto& [key, c] : other.terms_) add_term(key, factor * c);
  }

  Combination& operator+=(const Combination& o) {
    for (const auto& [key, c] : o.terms_) add_term(key, c);
    return *this;
  }
  Combination& operator-=(const Combination& o) {
    for (const auto& [key, c] : o.terms_) add_term(key, -c);
    return *this;
  }
  Combination& operator*=(const Scalar& s) {
    if (s.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& entry : terms_) entry.second *= s;
    return *this;
  }

  friend Combination operator+(Combination x, const Combination& y) { return x += y; }
  friend Combination operator-(Combination x, const Combination& y) { return x -= y; }
  friend Combination operator-(Combination x) { return x *= Scalar(-1); }
  friend Combination operator*(const Scalar& s, Combination x) { return x *= s; }
  friend bool operator==(const Combination& x, const Combination& y) { return x.terms_ == y.terms_; }

 private:
  Terms terms_;
};

/// Canonical text: `c*label` terms joined by " + " / " - "; unit
/// coefficients are omitted and the zero combination prints `0`.
template <class Key, class Label>
std::string format_combination(const Combination<Key>& x, Label label) {
  if (x.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [key, c] : x.terms()) {
    Scalar shown = c;
    if (first) {
      first = false;
    } else {
      const bool negative = sgn(c.re()) < 0 || (sgn(c.re()) == 0 && sgn(c.im()) < 0);
      out += negative ? " - " : " + ";
      if (negative) shown = -c;
    }
    if (shown == Scalar(1)) {
      out += label(key);
    } else if (shown == Scalar(-1)) {
      out += "-" + label(key);
    } else {
      out += format_scalar(shown) + "*" + label(key);
    }
  }
  return out;
}

}  // namespace hvhom
