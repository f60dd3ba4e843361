#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "qcplane/algebra.hpp"

using namespace qcplane;

namespace {

Rational R(long p, long r = 1) { return Rational(p, r); }

CoefficientFunction rf(std::initializer_list<long> num, std::initializer_list<long> den) {
  std::vector<GaussRational> n(num.begin(), num.end());
  std::vector<GaussRational> d(den.begin(), den.end());
  return CoefficientFunction::rational(RationalFunction(Polynomial(n), Polynomial(d)));
}

// Up to five modes in [-2, 2]; coefficients (a + b t + c i t) / (1 + d t^2).
AlgebraElement random_element(const DeformationParameter& q, std::mt19937_64& rng, bool vanishing) {
  std::uniform_int_distribution<int> count(1, 5);
  std::uniform_int_distribution<long> mode(-2, 2);
  std::uniform_int_distribution<long> c(-4, 4);
  std::uniform_int_distribution<long> d(1, 4);
  AlgebraElement a(q);
  for (int i = 0, n = count(rng); i < n; ++i) {
    long k = mode(rng);
    long a0 = (vanishing && k != 0) ? 0 : c(rng);
    Polynomial num(std::vector<GaussRational>{GaussRational(a0), GaussRational(Rational(c(rng)), Rational(c(rng)))});
    Polynomial den(std::vector<GaussRational>{GaussRational(1), GaussRational(0), GaussRational(d(rng))});
    a.set(k, a.coefficient(k) + CoefficientFunction::rational(RationalFunction(num, den)));
  }
  return a;
}

std::vector<Rational> samples_for(const DeformationParameter& q) {
  return sample_points(make_spectral_set(q, {R(1), Rational((1 + q.value()) / 2)}), {-4, 4});
}

}  // namespace

TEST(Product, TwistedMonomialRule) {
  DeformationParameter q(R(1, 2));
  AlgebraElement tu = AlgebraElement::monomial(q, 1, CoefficientFunction::identity());
  AlgebraElement sq = multiply(tu, tu);
  // t U t U = t alpha(t) U^2 = q t^2 U^2
  EXPECT_EQ(sq.support(), (std::vector<long>{2}));
  EXPECT_EQ(sq.exact_at(2, R(3)), GaussRational(R(9, 2)));
  // U f = alpha(f) U: U * (1/(1+t)) has coefficient 1/(1+q t) at mode 1.
  AlgebraElement u = AlgebraElement::monomial(q, 1, CoefficientFunction::constant(1));
  AlgebraElement f = AlgebraElement::monomial(q, 0, rf({1}, {1, 1}));
  EXPECT_EQ(multiply(u, f).exact_at(1, R(2)), GaussRational(R(1, 2)));
  EXPECT_EQ(multiply(f, u).exact_at(1, R(2)), GaussRational(R(1, 3)));
}

TEST(Involution, SingleModeRule) {
  DeformationParameter q(R(1, 3));
  AlgebraElement a = AlgebraElement::monomial(q, 2, GaussRational::i() * CoefficientFunction::identity());
  AlgebraElement s = adjoint(a);
  // (f U^2)* = alpha^{-2}(conj f) U^{-2}: -i q^{-2} t
  EXPECT_EQ(s.support(), (std::vector<long>{-2}));
  EXPECT_EQ(s.exact_at(-2, R(1)), GaussRational(R(0), R(-9)));
}

TEST(Axioms, RandomElementsExact) {
  for (const Rational& qv : {R(1, 2), R(2, 3)}) {
    DeformationParameter q(qv);
    std::mt19937_64 rng(42);
    const auto samples = samples_for(q);
    for (int i = 0; i < 15; ++i) {
      AlgebraElement a = random_element(q, rng, false);
      AlgebraElement b = random_element(q, rng, false);
      AlgebraElement c = random_element(q, rng, false);
      EXPECT_TRUE(equal_on(multiply(multiply(a, b), c), multiply(a, multiply(b, c)), samples));
      EXPECT_TRUE(equal_on(adjoint(multiply(a, b)), multiply(adjoint(b), adjoint(a)), samples));
      EXPECT_TRUE(equal_on(adjoint(adjoint(a)), a, samples));
      EXPECT_TRUE(equal_on(adjoint(add(a, b)), add(adjoint(a), adjoint(b)), samples));
      GaussRational lambda(R(2, 3), R(-1));
      EXPECT_TRUE(equal_on(adjoint(scale(a, lambda)), scale(adjoint(a), lambda.conj()), samples));
      EXPECT_TRUE(equal_on(multiply(a, add(b, c)), add(multiply(a, b), multiply(a, c)), samples));
    }
  }
}

TEST(Axioms, DetectsWrongTwist) {
  // Negative control: for q != 1, U and t do not commute.
  DeformationParameter q(R(1, 2));
  AlgebraElement u = AlgebraElement::monomial(q, 1, CoefficientFunction::constant(1));
  AlgebraElement t = AlgebraElement::monomial(q, 0, CoefficientFunction::identity());
  EXPECT_FALSE(equal_on(multiply(u, t), multiply(t, u), samples_for(q)));
}

TEST(VanishingClass, Closure) {
  DeformationParameter q(R(1, 2));
  std::mt19937_64 rng(9);
  for (int i = 0; i < 20; ++i) {
    AlgebraElement a = random_element(q, rng, true);
    AlgebraElement b = random_element(q, rng, true);
    ASSERT_EQ(classify(a), ElementClass::Vanishing);
    EXPECT_EQ(classify(multiply(a, b)), ElementClass::Vanishing);
    EXPECT_EQ(classify(adjoint(a)), ElementClass::Vanishing);
    EXPECT_EQ(classify(add(a, b)), ElementClass::Vanishing);
  }
  AlgebraElement full = AlgebraElement::monomial(q, 1, CoefficientFunction::constant(1));
  EXPECT_EQ(classify(full), ElementClass::Full);
}

TEST(ClassicalLimit, CommutativeAndMultiplicative) {
  DeformationParameter q(R(1));
  std::mt19937_64 rng(1);
  std::vector<Rational> samples{R(0), R(1, 4), R(1), R(3)};
  for (int i = 0; i < 10; ++i) {
    AlgebraElement a = random_element(q, rng, false);
    AlgebraElement b = random_element(q, rng, false);
    EXPECT_TRUE(equal_on(multiply(a, b), multiply(b, a), samples));
    AlgebraElement ab = multiply(a, b);
    for (double r : {0.0, 0.3, 1.7}) {
      for (double th : {0.0, 1.0, 2.5}) {
        EXPECT_LE(std::abs(classical_eval(ab, r, th) - classical_eval(a, r, th) * classical_eval(b, r, th)), 1e-12);
      }
    }
  }
  // f(r) e^{i theta}: the monomial t U evaluates to r e^{i theta}
  AlgebraElement z = AlgebraElement::monomial(q, 1, CoefficientFunction::identity());
  Complex v = classical_eval(z, 2.0, std::numbers::pi / 2);
  EXPECT_NEAR(v.real(), 0.0, 1e-15);
  EXPECT_NEAR(v.imag(), 2.0, 1e-15);
}

TEST(Domain, RestrictionAndSamples) {
  DeformationParameter q(R(1, 2));
  SpectralSet x = make_spectral_set(q, {R(1)});
  AlgebraElement a = restrict(AlgebraElement::monomial(q, 0, CoefficientFunction::identity()), x);
  EXPECT_EQ(a.exact_at(0, R(1, 4)), GaussRational(R(1, 4)));
  EXPECT_THROW(a.exact_at(0, R(3, 4)), DomainError);
  EXPECT_THROW(add(a, restrict(a, make_spectral_set(q, {R(3, 4)}))), DomainError);
  EXPECT_THROW(restrict(a, make_spectral_set(DeformationParameter(R(1, 3)), {R(1)})), DomainError);
  auto s = sample_points(make_spectral_set(q, {R(1), R(3, 4)}), {-2, 2});
  EXPECT_EQ(s.size(), 11u);
  EXPECT_EQ(s.front(), R(0));
  EXPECT_EQ(sample_points(make_classical_spectral_set({R(1, 2)}), {-2, 2}).size(), 2u);
}

TEST(Domain, DenominatorsAndDecay) {
  DeformationParameter q(R(1, 2));
  // 1/(1 - t) has a pole at t = 1.
  AlgebraElement a = AlgebraElement::monomial(q, 0, rf({1}, {1, -1}));
  EXPECT_THROW(check_denominators(a, {R(1, 2), R(1)}), DomainError);
  EXPECT_NO_THROW(check_denominators(a, {R(1, 2), R(2)}));
  SpectralSet x = make_spectral_set(q, {R(1)});
  EXPECT_LT(vanishing_spot_value(rf({0, 1}, {1, 0, 1}), x), 1e-18);
  EXPECT_GT(vanishing_spot_value(rf({1, 1}, {1, 3}), x), 0.3);
}

TEST(Unitization, ArithmeticAndClassRequirement) {
  DeformationParameter q(R(1, 2));
  AlgebraElement z = AlgebraElement::monomial(q, 1, CoefficientFunction::identity());
  EXPECT_THROW(unitize(AlgebraElement::monomial(q, 1, CoefficientFunction::constant(1)), 0), DomainError);
  UnitizedElement a = unitize(z, GaussRational(2));
  UnitizedElement b = unitize(adjoint(z), GaussRational(R(0), R(1)));
  UnitizedElement ab = multiply(a, b);
  EXPECT_EQ(ab.unit_scalar(), GaussRational(R(0), R(2)));
  // (z + 2)(z* + i) = z z* + i z + 2 z* + 2i; for z = t U, z z* = t^2 at mode 0
  std::vector<Rational> samples = samples_for(q);
  AlgebraElement expected = add(add(multiply(z, adjoint(z)), scale(z, GaussRational::i())), scale(adjoint(z), 2));
  EXPECT_TRUE(equal_on(ab.body(), expected, samples));
  EXPECT_EQ(multiply(z, adjoint(z)).exact_at(0, R(2)), GaussRational(4));
  EXPECT_EQ(adjoint(b).unit_scalar(), GaussRational(R(0), R(-1)));
  EXPECT_EQ(sgn(max_exact_residue(subtract(a, a), samples)), 0);
  EXPECT_EQ(max_exact_residue(scale(unitize(AlgebraElement(q), 1), 3), samples), R(3));
}
