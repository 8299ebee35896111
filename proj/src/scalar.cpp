#include "hvhom/scalar.hpp"

#include <cctype>
#include <limits>
#include <ostream>

#include "hvhom/errors.hpp"

namespace hvhom {

Scalar::Scalar(long num, long den) {
  if (den == 0) throw DivisionByZero();
  re_ = mpq_class(num, den);
  re_.canonicalize();
}

Scalar::Scalar(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

std::optional<Index> Scalar::to_index() const {
  if (!is_integer()) return std::nullopt;
  const mpz_class& n = re_.get_num();
  if (!n.fits_slong_p()) return std::nullopt;
  return static_cast<Index>(n.get_si());
}

Scalar& Scalar::operator+=(const Scalar& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (is_real() && o.is_real()) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inv(); }

Scalar Scalar::inv() const {
  if (is_zero()) throw DivisionByZero();
  if (is_real()) return Scalar(1 / re_);
  mpq_class norm = re_ * re_ + im_ * im_;
  return Scalar(mpq_class(re_ / norm), mpq_class(-im_ / norm));
}

Scalar pow_int(const Scalar& x, Index n) {
  if (n < 0) {
    // guard against -INT64_MIN overflow
    if (n == std::numeric_limits<Index>::min()) throw InvalidParameter("exponent out of range");
    return pow_int(x.inv(), -n);
  }
  Scalar result(1);
  Scalar base = x;
  auto e = static_cast<std::uint64_t>(n);
  while (e != 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e != 0) base *= base;
  }
  return result;
}

namespace {

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

// Unsigned `int` or `int/int` at pos; nullopt (pos untouched) if no digit.
std::optional<mpq_class> lex_magnitude(std::string_view text, std::size_t& pos) {
  std::size_t p = pos;
  while (p < text.size() && is_digit(text[p])) ++p;
  if (p == pos) return std::nullopt;
  mpz_class num(std::string(text.substr(pos, p - pos)));
  mpz_class den(1);
  if (p + 1 < text.size() && text[p] == '/' && is_digit(text[p + 1])) {
    std::size_t q = p + 1;
    while (q < text.size() && is_digit(text[q])) ++q;
    den = mpz_class(std::string(text.substr(p + 1, q - p - 1)));
    if (den == 0) throw ParseError(p + 1, "nonzero denominator");
    p = q;
  } else if (p < text.size() && text[p] == '/') {
    throw ParseError(p + 1, "denominator digits");
  }
  pos = p;
  mpq_class value(num, den);
  value.canonicalize();
  return value;
}

// Imaginary part `[int[/int]]i` at pos, unsigned.
std::optional<mpq_class> lex_imaginary(std::string_view text, std::size_t& pos) {
  std::size_t p = pos;
  mpq_class magnitude(1);
  if (auto m = lex_magnitude(text, p)) magnitude = *m;
  if (p < text.size() && text[p] == 'i') {
    pos = p + 1;
    return magnitude;
  }
  return std::nullopt;
}

}  // namespace

std::optional<Scalar> lex_scalar(std::string_view text, std::size_t& pos, bool allow_sign) {
  std::size_t p = pos;
  bool negative = false;
  if (allow_sign && p < text.size() && text[p] == '-') {
    negative = true;
    ++p;
  }
  // bare imaginary literal
  {
    std::size_t q = p;
    if (auto im = lex_imaginary(text, q)) {
      pos = q;
      return Scalar(mpq_class(0), negative ? mpq_class(-*im) : *im);
    }
  }
  auto re = lex_magnitude(text, p);
  if (!re) return std::nullopt;
  if (negative) *re = -*re;
  mpq_class im(0);
  if (p < text.size() && (text[p] == '+' || text[p] == '-')) {
    std::size_t q = p + 1;
    if (auto m = lex_imaginary(text, q)) {
      im = text[p] == '-' ? mpq_class(-*m) : *m;
      p = q;
    }
  }
  pos = p;
  return Scalar(*re, im);
}

Scalar parse_scalar(std::string_view text) {
  std::size_t pos = 0;
  auto value = lex_scalar(text, pos, true);
  if (!value) throw ParseError(0, "scalar literal");
  if (pos != text.size()) throw ParseError(pos, "end of scalar literal");
  return *value;
}

std::string format_scalar(const Scalar& x) {
  const auto imag_text = [](const mpq_class& m) {
    return m == 1 ? std::string("i") : m.get_str() + "i";
  };
  if (x.is_real()) return x.re().get_str();
  if (sgn(x.re()) == 0) {
    if (sgn(x.im()) < 0) return "-" + imag_text(-x.im());
    return imag_text(x.im());
  }
  std::string out = x.re().get_str();
  if (sgn(x.im()) < 0) return out + "-" + imag_text(-x.im());
  return out + "+" + imag_text(x.im());
}

std::string Scalar::str() const { return format_scalar(*this); }

std::ostream& operator<<(std::ostream& os, const Scalar& x) { return os << format_scalar(x); }

}  // namespace hvhom
