#pragma once

#include <string>
#include <vector>

#include "qcplane/rational.hpp"

namespace qcplane {

/// Polynomial in t with Gaussian-rational coefficients, lowest degree first.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<GaussRational> coeffs);
  Polynomial(GaussRational constant);  // NOLINT

  static Polynomial monomial(GaussRational c, std::size_t degree);
  static Polynomial t() { return monomial(GaussRational(1), 1); }

  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<GaussRational>& coefficients() const { return coeffs_; }
  GaussRational coefficient(std::size_t k) const;
  GaussRational leading() const;

  GaussRational operator()(const GaussRational& t) const;
  Complex operator()(Complex t) const;

  Polynomial conj() const;
  /// p(s t).
  Polynomial rescaled(const Rational& s) const;
  Polynomial pow(unsigned exponent) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const GaussRational& s);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) { return a *= GaussRational(-1); }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const GaussRational& s) { return a *= s; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

  /// Euclidean division; divisor must be nonzero.
  static void divmod(const Polynomial& a, const Polynomial& b, Polynomial& quotient, Polynomial& remainder);
  /// Monic greatest common divisor (zero if both are zero).
  static Polynomial gcd(Polynomial a, Polynomial b);

  /// Expression text in the element grammar, e.g. "1+4*t^2".
  std::string to_string() const;

 private:
  void trim();
  std::vector<GaussRational> coeffs_;
};

/// Behaviour of a rational function as t -> +inf.
enum class LimitAtInfinity { Zero, Finite, Unbounded };

/// Quotient of polynomials, kept reduced with the lowest nonzero denominator
/// coefficient equal to one.
class RationalFunction {
 public:
  RationalFunction() : den_(GaussRational(1)) {}
  RationalFunction(Polynomial numerator, Polynomial denominator);
  RationalFunction(Polynomial numerator) : RationalFunction(std::move(numerator), Polynomial(GaussRational(1))) {}  // NOLINT

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }

  /// Throws DomainError where the denominator vanishes.
  GaussRational operator()(const GaussRational& t) const;
  Complex operator()(Complex t) const;

  LimitAtInfinity limit_kind() const;
  /// Limit at +inf; requires limit_kind() != Unbounded.
  GaussRational limit_at_infinity() const;

  RationalFunction conj() const { return {num_.conj(), den_.conj()}; }
  RationalFunction rescaled(const Rational& s) const { return {num_.rescaled(s), den_.rescaled(s)}; }
  RationalFunction reciprocal() const;

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) { return a * b.reciprocal(); }
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::string to_string() const;

 private:
  void normalize();
  Polynomial num_;
  Polynomial den_;
};

}  // namespace qcplane
