#include <cmath>

#include <gtest/gtest.h>

#include "qcplane/coefficient.hpp"

using namespace qcplane;

namespace {

Rational R(long p, long r = 1) { return Rational(p, r); }

Polynomial P(std::initializer_list<long> c) {
  std::vector<GaussRational> v;
  for (long x : c) v.emplace_back(x);
  return Polynomial(v);
}

}  // namespace

TEST(Polynomial, ArithmeticAndEvaluation) {
  Polynomial p = P({1, 0, 4});  // 1 + 4t^2
  Polynomial r = P({-1, 1});    // t - 1
  EXPECT_EQ(p.degree(), 2);
  EXPECT_EQ(Polynomial().degree(), -1);
  EXPECT_EQ(p * r, P({-1, 1, -4, 4}));
  EXPECT_EQ(p - p, Polynomial());
  EXPECT_EQ(p(GaussRational(R(1, 2))), GaussRational(2));
  EXPECT_EQ(p.rescaled(R(1, 2)), P({1, 0, 1}));
  EXPECT_EQ(r.pow(3), P({-1, 3, -3, 1}));
  EXPECT_EQ(p(Complex(0.0, 1.0)), Complex(-3.0, 0.0));
}

TEST(Polynomial, DivisionAndGcd) {
  Polynomial a = P({-1, 0, 1});  // (t-1)(t+1)
  Polynomial b = P({-2, 1, 1});  // (t-1)(t+2)
  Polynomial q;
  Polynomial rem;
  Polynomial::divmod(a, b, q, rem);
  EXPECT_EQ(q * b + rem, a);
  EXPECT_LT(rem.degree(), b.degree());
  EXPECT_EQ(Polynomial::gcd(a, b), P({-1, 1}));
  EXPECT_THROW(Polynomial::divmod(a, Polynomial(), q, rem), DomainError);
}

TEST(Polynomial, TextForm) {
  EXPECT_EQ(P({1, 0, 4}).to_string(), "1+4*t^2");
  EXPECT_EQ((Polynomial::monomial(GaussRational(R(-3, 4)), 2)).to_string(), "-3/4*t^2");
  EXPECT_EQ(Polynomial().to_string(), "0");
  EXPECT_EQ((Polynomial::monomial(GaussRational(R(1, 2), R(3)), 1)).to_string(), "(1/2+3*i)*t");
}

TEST(RationalFunction, ReducedForm) {
  // (t^2 - 1) / (2t - 2) = (t + 1) / 2
  RationalFunction f(P({-1, 0, 1}), P({-2, 2}));
  EXPECT_EQ(f, RationalFunction(Polynomial(std::vector<GaussRational>{R(1, 2), R(1, 2)})));
  EXPECT_EQ(f.limit_kind(), LimitAtInfinity::Unbounded);
  RationalFunction g(P({0, 3}), P({1, 0, 1}));
  EXPECT_EQ(g.limit_kind(), LimitAtInfinity::Zero);
  RationalFunction h(P({1, 0, 5}), P({2, 0, 1}));
  EXPECT_EQ(h.limit_kind(), LimitAtInfinity::Finite);
  EXPECT_EQ(h.limit_at_infinity(), GaussRational(5));
  EXPECT_THROW(RationalFunction(P({1}), Polynomial()), DomainError);
  EXPECT_THROW(RationalFunction(P({1}), P({0, 1}))(GaussRational(0)), DomainError);
  EXPECT_EQ((g + g - g * RationalFunction(P({2}))), RationalFunction());
  EXPECT_EQ(g / g, RationalFunction(P({1})));
  EXPECT_EQ(h.to_string(), "(1/2+5/2*t^2)/(1+1/2*t^2)");
}

TEST(CoefficientFunction, RationalFlavor) {
  CoefficientFunction f = CoefficientFunction::rational(RationalFunction(P({0, 1}), P({1, 0, 1})));
  EXPECT_TRUE(f.is_rational());
  EXPECT_TRUE(f.exactly_evaluable());
  EXPECT_TRUE(f.vanishes_at_infinity());
  EXPECT_EQ(f.value_at_zero(), GaussRational(0));
  EXPECT_EQ(f.exact(R(2)), GaussRational(R(2, 5)));
  EXPECT_DOUBLE_EQ(f(2.0).real(), 0.4);
  EXPECT_EQ(f.rescaled(R(1, 2)).exact(R(4)), GaussRational(R(2, 5)));
  EXPECT_THROW(CoefficientFunction::rational(RationalFunction(P({1}), P({0, 1}))), DomainError);
  EXPECT_THROW(f(-1.0), EvaluationError);
  EXPECT_TRUE(CoefficientFunction().is_literal_zero());
  EXPECT_TRUE((f - f).is_literal_zero());
}

TEST(CoefficientFunction, ConjugationAndScaling) {
  GaussRational i = GaussRational::i();
  CoefficientFunction f = i * CoefficientFunction::identity();
  EXPECT_EQ(f.conj().exact(R(3)), GaussRational(R(0), R(-3)));
  EXPECT_EQ(f.conj().conj().exact(R(3)), f.exact(R(3)));
  EXPECT_EQ(f.expression(), "i*t");
}

TEST(CoefficientFunction, SampledFlavor) {
  CoefficientFunction s = CoefficientFunction::sampled({0.0, 1.0, 2.0}, {1.0, 3.0, 2.0}, true);
  EXPECT_EQ(s.flavor(), Flavor::Sampled);
  EXPECT_FALSE(s.exactly_evaluable());
  EXPECT_DOUBLE_EQ(s(0.5).real(), 2.0);
  EXPECT_DOUBLE_EQ(s(2.0).real(), 2.0);
  EXPECT_DOUBLE_EQ(s(2.5).real(), 0.0);
  EXPECT_EQ(s.value_at_zero(), GaussRational(1));
  EXPECT_THROW(s.exact(R(1, 2)), EvaluationError);
  EXPECT_THROW(CoefficientFunction::sampled({1.0, 0.5}, {1.0, 2.0}, false), DomainError);
  CoefficientFunction held = CoefficientFunction::sampled({1.0, 2.0}, {4.0, 5.0}, false);
  EXPECT_DOUBLE_EQ(held(7.0).real(), 5.0);
}

TEST(CoefficientFunction, ClosureFlavor) {
  CoefficientFunction e = CoefficientFunction::closure([](double t) { return Complex(std::exp(-t)); },
                                                       GaussRational(1), true, "exp(-t)");
  EXPECT_EQ(e.flavor(), Flavor::Closure);
  EXPECT_DOUBLE_EQ(e(1.0).real(), std::exp(-1.0));
  EXPECT_EQ(e.exact(R(0)), GaussRational(1));
  EXPECT_THROW(e.exact(R(1)), EvaluationError);
  CoefficientFunction prod = CoefficientFunction::identity() * e;
  EXPECT_EQ(prod.flavor(), Flavor::Closure);
  EXPECT_EQ(prod.value_at_zero(), GaussRational(0));
  EXPECT_DOUBLE_EQ(prod.rescaled(R(1, 2))(2.0).real(), std::exp(-1.0));
  EXPECT_FALSE(prod.as_rational().has_value());
  CoefficientFunction bad = CoefficientFunction::closure([](double) { return Complex(NAN); }, GaussRational(0), true, "nan");
  EXPECT_THROW(bad(1.0), EvaluationError);
}

TEST(CoefficientFunction, LargeProductsStayExact) {
  // Degree above the fold limit becomes a lazy node but keeps exact values.
  CoefficientFunction f = CoefficientFunction::rational(RationalFunction(P({1}), P({1, 0, 0, 0, 0, 0, 1})));
  CoefficientFunction acc = CoefficientFunction::constant(GaussRational(1));
  for (int k = 0; k < 5; ++k) acc = acc * f;
  Rational t(3, 2);
  Rational base = Rational(1) / (1 + pow(t, 6));
  EXPECT_EQ(acc.exact(t), GaussRational(pow(base, 5)));
  EXPECT_TRUE(acc.as_rational().has_value());
  EXPECT_NEAR(acc(1.5).real(), pow(base, 5).get_d(), 1e-15);
  EXPECT_TRUE(acc.vanishes_at_infinity());
}
