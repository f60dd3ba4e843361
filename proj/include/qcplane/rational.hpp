#pragma once

// Exact scalars: arbitrary-precision rationals (GMP) and Gaussian rationals
// (complex numbers with rational real and imaginary parts).

#include <complex>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace qcplane {

using Rational = mpq_class;
using Complex = std::complex<double>;

/// Raised when an argument lies outside the domain an operation accepts.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised for malformed textual input (rationals, expressions, configs).
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Parses "p", "-p" or "p/r" with decimal integers; result is canonicalized.
Rational parse_rational(std::string_view text);

/// Canonical "p/r" form, always with an explicit denominator ("0/1", "3/1").
std::string to_string(const Rational& r);

Rational pow(const Rational& base, long exponent);

inline double to_double(const Rational& r) { return r.get_d(); }

class GaussRational {
 public:
  GaussRational() = default;
  GaussRational(Rational re) : re_(std::move(re)) {}  // NOLINT: implicit by design of the field embedding
  GaussRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}
  GaussRational(long v) : re_(v) {}  // NOLINT

  static GaussRational i() { return {Rational(0), Rational(1)}; }

  const Rational& real() const { return re_; }
  const Rational& imag() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  GaussRational conj() const { return {re_, -im_}; }
  Rational norm_squared() const { return Rational(re_ * re_ + im_ * im_); }
  /// max(|Re|, |Im|); zero iff the value is zero.
  Rational max_component() const;

  std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

  GaussRational& operator+=(const GaussRational& o);
  GaussRational& operator-=(const GaussRational& o);
  GaussRational& operator*=(const GaussRational& o);
  GaussRational& operator/=(const GaussRational& o);

  friend GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
  friend GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
  friend GaussRational operator*(GaussRational a, const GaussRational& b) { return a *= b; }
  friend GaussRational operator/(GaussRational a, const GaussRational& b) { return a /= b; }
  friend GaussRational operator-(const GaussRational& a) { return {Rational(-a.re_), Rational(-a.im_)}; }

  friend bool operator==(const GaussRational& a, const GaussRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

 private:
  Rational re_{0};
  Rational im_{0};
};

GaussRational pow(const GaussRational& base, long exponent);

/// "p/r" for real values, "p/r+p/ri" style otherwise.
std::string to_string(const GaussRational& z);

}  // namespace qcplane
