#pragma once

// Finite Laurent elements sum_k f_k U^k of the crossed product C0(X) x| Z,
// with the twisted product f U^n g U^m = f alpha^n(g) U^{n+m}, alpha(f)(t) = f(q t),
// and involution (f U^n)* = alpha^{-n}(conj f) U^{-n}.

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qcplane/coefficient.hpp"
#include "qcplane/qnormal.hpp"
#include "qcplane/qspace.hpp"

namespace qcplane {

/// FULL: a general element of C0(X) x| Z. VANISHING: f_k(0) = 0 for every
/// k != 0, the elements of the algebra generated by zeta.
enum class ElementClass { Full, Vanishing };

class AlgebraElement {
 public:
  explicit AlgebraElement(DeformationParameter q) : q_(std::move(q)) {}

  static AlgebraElement monomial(DeformationParameter q, long mode, CoefficientFunction f);

  const DeformationParameter& q() const { return q_; }
  const std::map<long, CoefficientFunction>& coefficients() const { return coeffs_; }
  /// f_k, or the zero function outside the support.
  CoefficientFunction coefficient(long mode) const;
  std::vector<long> support() const;
  bool is_zero() const { return coeffs_.empty(); }
  /// max |k| over the support (0 for the zero element).
  long mode_span() const;

  /// Set when the element has been restricted to a spectral set.
  const std::optional<SpectralSet>& domain() const { return domain_; }

  /// f_k(t), exact; t must lie in the domain when one is set.
  GaussRational exact_at(long mode, const Rational& t) const;

  void set(long mode, CoefficientFunction f);
  void set_domain(std::optional<SpectralSet> domain) { domain_ = std::move(domain); }

 private:
  DeformationParameter q_;
  std::map<long, CoefficientFunction> coeffs_;
  std::optional<SpectralSet> domain_;
};

/// t -> f(q^n t).
CoefficientFunction alpha(const CoefficientFunction& f, long n, const DeformationParameter& q);

AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement adjoint(const AlgebraElement& a);
AlgebraElement add(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement subtract(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement scale(const AlgebraElement& a, const GaussRational& lambda);

ElementClass classify(const AlgebraElement& a);

/// Narrows the evaluation domain of every coefficient to X.
AlgebraElement restrict(const AlgebraElement& a, const SpectralSet& x);

/// sum_k f_k(r) e^{i k theta}; multiplicative only when q = 1.
Complex classical_eval(const AlgebraElement& a, double r, double theta);

/// Rational sample set q^n x for generators x and window levels, plus 0.
std::vector<Rational> sample_points(const SpectralSet& x, const TruncationWindow& window);

/// Largest max(|Re|, |Im|) over every mode and sample point.
Rational max_exact_residue(const AlgebraElement& a, const std::vector<Rational>& samples);
bool equal_on(const AlgebraElement& a, const AlgebraElement& b, const std::vector<Rational>& samples);

/// Throws DomainError if some coefficient's denominator vanishes at a sample.
void check_denominators(const AlgebraElement& a, const std::vector<Rational>& samples);

/// Spot check of the declared decay at t = q^{-64} max(X): returns |f(t)|.
double vanishing_spot_value(const CoefficientFunction& f, const SpectralSet& x);

/// body + lambda * 1 in the unitization C0 (+) C. The body must be VANISHING.
class UnitizedElement {
 public:
  UnitizedElement(AlgebraElement body, GaussRational unit_scalar);

  const AlgebraElement& body() const { return body_; }
  const GaussRational& unit_scalar() const { return unit_; }
  const DeformationParameter& q() const { return body_.q(); }

 private:
  AlgebraElement body_;
  GaussRational unit_;
};

UnitizedElement unitize(const AlgebraElement& a, const GaussRational& lambda);
UnitizedElement multiply(const UnitizedElement& a, const UnitizedElement& b);
UnitizedElement adjoint(const UnitizedElement& a);
UnitizedElement add(const UnitizedElement& a, const UnitizedElement& b);
UnitizedElement subtract(const UnitizedElement& a, const UnitizedElement& b);
UnitizedElement scale(const UnitizedElement& a, const GaussRational& lambda);
/// Largest residue over the body (as max_exact_residue) and the unit scalar.
Rational max_exact_residue(const UnitizedElement& a, const std::vector<Rational>& samples);

// Literals. Expression grammar: integers, t, i, + - * / ^ and parentheses,
// e.g. "t^2/(1+4*t^2)". Elements are written term-wise as "expr@k".

RationalFunction parse_expression(std::string_view text);
std::pair<long, CoefficientFunction> parse_term(std::string_view text);
/// Terms separated by ';' ("t@1; 1/(1+t^2)@0"); repeated modes are summed.
AlgebraElement parse_element(const DeformationParameter& q, std::string_view text);
AlgebraElement parse_element(const DeformationParameter& q, const std::vector<std::string>& terms);
/// One "expr@k" string per mode; non-rational coefficients are named but not re-parseable.
std::vector<std::string> serialize_element(const AlgebraElement& a);

}  // namespace qcplane
