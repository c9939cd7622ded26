#pragma once

#include <gmpxx.h>

#include <cctype>
#include <concepts>
#include <cstddef>
#include <mutex>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "bochner/errors.hpp"

namespace bochner {

using Integer = mpz_class;
using Rational = mpq_class;

/// num/den in lowest terms with a positive denominator.
inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw DomainError("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

/*
 * Gaussian rational re + im*i. Both parts are canonical GMP rationals, so
 * equality is plain componentwise comparison and nothing is ever rounded.
 *
 * Text form: "p/q" for reals, "p/q+r/s*i" for complex values, "r/s*i" for
 * pure imaginaries. Integers drop the "/1".
 */
class Scalar {
 public:
  Scalar() = default;

  template <std::integral I>
  Scalar(I value) : re_(static_cast<long>(value)) {}  // NOLINT(implicit)

  Scalar(Rational re) : re_(std::move(re)) {}  // NOLINT(implicit)
  Scalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static Scalar imaginary_unit() { return Scalar(Rational(0), Rational(1)); }

  const Rational& real() const noexcept { return re_; }
  const Rational& imag() const noexcept { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  Scalar conj() const { return Scalar(re_, -im_); }
  /// |z|^2, exact.
  Rational norm() const { return re_ * re_ + im_ * im_; }

  Scalar operator-() const { return Scalar(-re_, -im_); }

  Scalar& operator+=(const Scalar& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  Scalar& operator-=(const Scalar& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  Scalar& operator*=(const Scalar& o) {
    if (sgn(im_) == 0 && sgn(o.im_) == 0) {
      re_ *= o.re_;
      return *this;
    }
    Rational re = re_ * o.re_ - im_ * o.im_;
    Rational im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
  }
  Scalar& operator/=(const Scalar& o) {
    if (o.is_zero()) throw DomainError("division by zero");
    if (sgn(o.im_) == 0) {
      re_ /= o.re_;
      im_ /= o.re_;
      return *this;
    }
    Rational d = o.norm();
    Rational re = (re_ * o.re_ + im_ * o.im_) / d;
    Rational im = (im_ * o.re_ - re_ * o.im_) / d;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
  }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  std::string str() const {
    if (sgn(im_) == 0) return re_.get_str();
    std::string im = Rational(abs(im_)).get_str() + "*i";
    if (sgn(re_) == 0) return sgn(im_) < 0 ? "-" + im : im;
    return re_.get_str() + (sgn(im_) < 0 ? "-" : "+") + im;
  }

  static Scalar parse(std::string_view text);

  friend std::ostream& operator<<(std::ostream& os, const Scalar& s) {
    return os << s.str();
  }

 private:
  Rational re_;
  Rational im_;
};

namespace detail {

inline bool parse_unsigned(std::string_view text, std::size_t& pos,
                           Integer& out) {
  std::size_t start = pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
    ++pos;
  if (pos == start) return false;
  out.set_str(std::string(text.substr(start, pos - start)), 10);
  return true;
}

}  // namespace detail

inline Scalar Scalar::parse(std::string_view text) {
  std::string compact;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
  if (compact.empty()) throw ParseError("empty scalar");

  std::string_view s = compact;
  std::size_t pos = 0;
  Rational re, im;
  bool seen_re = false, seen_im = false;
  bool first = true;
  auto fail = [&](const char* why) {
    return ParseError("bad scalar '" + std::string(text) + "': " + why);
  };

  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (!first) {
      throw fail("expected '+' or '-' between terms");
    }
    first = false;

    Rational value(1);
    bool imaginary = false;
    Integer num;
    if (detail::parse_unsigned(s, pos, num)) {
      Integer den(1);
      if (pos < s.size() && s[pos] == '/') {
        ++pos;
        if (!detail::parse_unsigned(s, pos, den)) throw fail("missing denominator");
        if (den == 0) throw fail("zero denominator");
      }
      value = make_rational(num, den);
      if (pos < s.size() && s[pos] == '*') {
        ++pos;
        if (pos >= s.size() || s[pos] != 'i') throw fail("expected 'i' after '*'");
      }
      if (pos < s.size() && s[pos] == 'i') {
        ++pos;
        imaginary = true;
      }
    } else if (pos < s.size() && s[pos] == 'i') {
      ++pos;
      imaginary = true;
    } else {
      throw fail("expected a number or 'i'");
    }
    if (sign < 0) value = -value;

    if (imaginary) {
      if (seen_im) throw fail("two imaginary parts");
      seen_im = true;
      im = value;
    } else {
      if (seen_re) throw fail("two real parts");
      seen_re = true;
      re = value;
    }
  }
  return Scalar(re, im);
}

/// n! from a process-wide memo table; safe to call concurrently.
inline Integer factorial(int n) {
  if (n < 0) throw DomainError("factorial of negative integer");
  static std::mutex mutex;
  static std::vector<Integer> table{Integer(1)};
  std::lock_guard lock(mutex);
  while (table.size() <= static_cast<std::size_t>(n))
    table.push_back(table.back() * static_cast<unsigned long>(table.size()));
  return table[static_cast<std::size_t>(n)];
}

/// C(r, s) as an integer; zero when s < 0 or s > r.
inline Integer binomial(int r, int s) {
  if (r < 0) throw DomainError("binomial with negative upper index");
  if (s < 0 || s > r) return Integer(0);
  return factorial(r) / (factorial(s) * factorial(r - s));
}

inline Rational binom(int r, int s) { return Rational(binomial(r, s)); }

/// (-1)^n
inline int parity_sign(int n) { return n % 2 == 0 ? 1 : -1; }

/// Decimal rendering of q rounded half away from zero to `digits` places.
inline std::string to_decimal(const Rational& q, int digits) {
  if (digits < 0) throw DomainError("negative digit count");
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  Integer num = abs(q.get_num()) * scale;
  const Integer& den = q.get_den();
  Integer rounded = (2 * num + den) / (2 * den);
  std::string body = rounded.get_str();
  if (digits > 0) {
    if (body.size() <= static_cast<std::size_t>(digits))
      body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
    body.insert(body.size() - static_cast<std::size_t>(digits), ".");
  }
  bool negative = sgn(q) < 0 && rounded != 0;
  return negative ? "-" + body : body;
}

inline std::string to_decimal(const Scalar& z, int digits) {
  if (z.is_real()) return to_decimal(z.real(), digits);
  std::string im = to_decimal(Rational(abs(z.imag())), digits) + "i";
  return to_decimal(z.real(), digits) + (sgn(z.imag()) < 0 ? "-" : "+") + im;
}

}  // namespace bochner
