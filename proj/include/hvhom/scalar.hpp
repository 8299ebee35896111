#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace hvhom {

using Index = std::int64_t;

/// Exact Gaussian rational re + im*i with both parts in lowest terms.
///
/// Every coefficient of the library lives here: the structure constants,
/// the endomorphism parameters a, b, c, d and the module parameters.
/// mpq_class keeps each part canonical (positive denominator, gcd 1), so
/// structural equality is field equality.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long value) : re_(value) {}  // NOLINT(google-explicit-constructor)
  Scalar(long num, long den);
  explicit Scalar(mpq_class re, mpq_class im = 0);

  static Scalar imaginary_unit() { return Scalar(mpq_class(0), mpq_class(1)); }

  const mpq_class& re() const noexcept { return re_; }
  const mpq_class& im() const noexcept { return im_; }

  bool is_zero() const noexcept { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const noexcept { return sgn(im_) == 0; }
  bool is_integer() const noexcept { return is_real() && re_.get_den() == 1; }
  /// The value as a machine integer; only meaningful when is_integer().
  std::optional<Index> to_index() const;

  Scalar operator-() const { return Scalar(-re_, -im_); }
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar x, const Scalar& y) { return x += y; }
  friend Scalar operator-(Scalar x, const Scalar& y) { return x -= y; }
  friend Scalar operator*(Scalar x, const Scalar& y) { return x *= y; }
  friend Scalar operator/(Scalar x, const Scalar& y) { return x /= y; }

  friend bool operator==(const Scalar& x, const Scalar& y) {
    return x.re_ == y.re_ && x.im_ == y.im_;
  }

  /// Throws DivisionByZero on 0.
  Scalar inv() const;
  Scalar conj() const { return Scalar(re_, -im_); }

  std::string str() const;

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

/// x^n for any integer n; x must be nonzero when n < 0.
Scalar pow_int(const Scalar& x, Index n);

/// Parses the scalar grammar: `int`, `int/int`, an optional `+-int/int i`
/// suffix, or a bare imaginary `int/int i`. A missing magnitude before `i`
/// means 1. No whitespace inside a literal.
Scalar parse_scalar(std::string_view text);

/// Lexes one scalar literal starting at `pos` (which is advanced past it).
/// Returns nullopt without consuming input when no literal starts there.
/// A leading '-' is consumed only when `allow_sign` is set.
std::optional<Scalar> lex_scalar(std::string_view text, std::size_t& pos, bool allow_sign);

std::string format_scalar(const Scalar& x);

std::ostream& operator<<(std::ostream& os, const Scalar& x);

}  // namespace hvhom
