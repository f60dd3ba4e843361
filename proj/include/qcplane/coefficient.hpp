#pragma once

// Coefficient functions f : [0, inf) -> C for crossed-product elements.
//
// A function is an immutable expression graph. Leaves are rational
// functions (exactly evaluable at rational points), tabulated samples, or
// arbitrary closures; interior nodes are sums, products, scalar multiples,
// argument rescalings t -> s t, and complex conjugation. Every node records
// its exact value at 0.

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qcplane/polynomial.hpp"
#include "qcplane/rational.hpp"

namespace qcplane {

enum class Flavor { Rational, Sampled, Closure };

/// Raised when a coefficient function cannot be evaluated at a point.
class EvaluationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {
struct FunctionNode;
}

class CoefficientFunction {
 public:
  /// The zero function.
  CoefficientFunction();

  static CoefficientFunction constant(GaussRational c);
  /// t -> t.
  static CoefficientFunction identity();
  static CoefficientFunction rational(RationalFunction f);
  /// Piecewise-linear interpolation of (grid, values); grid sorted, nonnegative.
  /// Outside the grid the end values are held, except past the last node of a
  /// function declared vanishing at infinity, where the value is 0.
  static CoefficientFunction sampled(std::vector<double> grid, std::vector<Complex> values, bool vanishes_at_infinity);
  /// Arbitrary rule; value at 0 and decay at infinity are declared.
  static CoefficientFunction closure(std::function<Complex(double)> rule, GaussRational value_at_zero,
                                     bool vanishes_at_infinity, std::string name);
  /// Closure that also has an exact rule at rational points (e.g. indicators
  /// with rational end points).
  static CoefficientFunction closure(std::function<Complex(double)> rule,
                                     std::function<GaussRational(const Rational&)> exact_rule,
                                     GaussRational value_at_zero, bool vanishes_at_infinity, std::string name);

  Flavor flavor() const;
  bool is_rational() const { return flavor() == Flavor::Rational; }
  /// Rational flavor, or built only from leaves with exact rules.
  bool exactly_evaluable() const;
  bool is_literal_zero() const;

  const GaussRational& value_at_zero() const;
  /// Declared or structurally derived decay at infinity (conservative).
  bool vanishes_at_infinity() const;
  bool bounded_at_infinity() const;

  Complex operator()(double t) const;
  /// Exact value; throws EvaluationError unless exactly_evaluable().
  GaussRational exact(const Rational& t) const;

  /// The reduced rational function, for Rational flavor.
  std::optional<RationalFunction> as_rational() const;

  /// t -> f(s t).
  CoefficientFunction rescaled(const Rational& s) const;
  CoefficientFunction conj() const;

  /// Expression text (grammar of element literals) for Rational flavor,
  /// a descriptive name otherwise.
  std::string expression() const;

  friend CoefficientFunction operator+(const CoefficientFunction& a, const CoefficientFunction& b);
  friend CoefficientFunction operator-(const CoefficientFunction& a, const CoefficientFunction& b);
  friend CoefficientFunction operator*(const CoefficientFunction& a, const CoefficientFunction& b);
  friend CoefficientFunction operator*(const GaussRational& s, const CoefficientFunction& f);

 private:
  explicit CoefficientFunction(std::shared_ptr<const detail::FunctionNode> node) : node_(std::move(node)) {}
  std::shared_ptr<const detail::FunctionNode> node_;
};

}  // namespace qcplane
