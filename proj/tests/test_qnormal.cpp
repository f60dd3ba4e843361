#include <cmath>
#include <sstream>

#include <gtest/gtest.h>

#include "qcplane/qnormal.hpp"

using namespace qcplane;

namespace {

Rational R(long p, long r = 1) { return Rational(p, r); }

TruncatedQNormal single_orbit(const Rational& q, TruncationWindow w, Rational zero_mass = Rational(0)) {
  DeformationParameter dq(q);
  QInvariantMeasure mu(dq, {{R(1), R(1)}}, std::move(zero_mass));
  return build(mu, mu.support(), w);
}

CoefficientFunction rational_fn(const std::vector<long>& num, const std::vector<long>& den) {
  std::vector<GaussRational> n(num.begin(), num.end());
  std::vector<GaussRational> d(den.begin(), den.end());
  return CoefficientFunction::rational(RationalFunction(Polynomial(n), Polynomial(d)));
}

}  // namespace

TEST(Build, WeightedShiftEntries) {
  TruncatedQNormal t = single_orbit(R(1, 2), {-3, 3});
  ASSERT_EQ(t.dimension(), 7);
  const ExactMatrix& z = t.zeta_exact();
  // zeta e_n = q^n e_{n-1}
  for (long n = -2; n <= 3; ++n) {
    EXPECT_EQ(z(t.index_of(0, n - 1), t.index_of(0, n)), GaussRational(pow(R(1, 2), n)));
  }
  // The lowest level is annihilated (zero padding).
  Index low = t.index_of(0, -3);
  for (Index r = 0; r < t.dimension(); ++r) EXPECT_TRUE(z(r, low).is_zero());
  EXPECT_EQ(t.modulus_exact()(t.index_of(0, 2), t.index_of(0, 2)), GaussRational(R(1, 4)));
  EXPECT_EQ(t.index_of(0, 4), -1);
}

TEST(Build, KernelBlockFollowsZeroMass) {
  TruncatedQNormal with = single_orbit(R(1, 2), {-3, 3}, R(1));
  EXPECT_EQ(with.kernel_dim(), 1);
  EXPECT_EQ(with.dimension(), 8);
  EXPECT_EQ(with.kernel_index().value(), 7);
  EXPECT_FALSE(single_orbit(R(1, 2), {-3, 3}).kernel_index().has_value());

  DeformationParameter q(R(1, 2));
  QInvariantMeasure point = QInvariantMeasure::point_at_zero(q);
  TruncatedQNormal zero = build(point, point.support(), {-3, 3});
  EXPECT_EQ(zero.dimension(), 1);
  EXPECT_EQ(operator_norm(zero.zeta()), 0.0);
}

TEST(Build, Validation) {
  DeformationParameter q(R(1, 2));
  QInvariantMeasure mu(q, {{R(1), R(1)}}, R(0));
  EXPECT_THROW(build(mu, mu.support(), {0, 1}), ConfigurationError);
  EXPECT_THROW(build(mu, mu.support(), {2, 1}), ConfigurationError);
  EXPECT_THROW(build(mu, make_spectral_set(q, {R(1), R(3, 4)}), {-3, 3}), DomainError);
}

TEST(Relation, ExactOnInteriorForSeveralMeasures) {
  for (const Rational& qv : {R(1, 2), R(3, 4), R(2, 3)}) {
    DeformationParameter q(qv);
    QInvariantMeasure mu(q, {{R(1), R(1)}, {R(9, 10), R(2)}}, R(1));
    TruncatedQNormal t = build(mu, mu.support(), {-5, 5});
    EXPECT_EQ(sgn(verify_relation_exact(t)), 0);
    RelationDefect d = verify_relation(t);
    EXPECT_LE(d.interior, 1e-12);
    // Truncation error sits on the boundary levels.
    EXPECT_GT(d.boundary, 1e-3);
  }
}

TEST(Relation, PerturbedOperatorIsDetected) {
  TruncatedQNormal t = single_orbit(R(1, 2), {-4, 4});
  TruncatedQNormal::Parts p;
  p.q = t.q();
  p.window = t.window();
  p.positions = t.positions();
  p.weights = t.weights();
  p.grid = t.grid();
  p.zeta = t.zeta();
  p.u = t.u();
  p.modulus = t.modulus();
  p.zeta(t.index_of(0, 0), t.index_of(0, 1)) *= 1.01;
  TruncatedQNormal bad(std::move(p));
  EXPECT_GT(verify_relation(bad).interior, 1e-4);
  EXPECT_FALSE(bad.has_exact());
  EXPECT_THROW(verify_relation_exact(bad), EvaluationError);
}

TEST(Covariance, SpectralFunctionsAreShifted) {
  DeformationParameter q(R(3, 4));
  QInvariantMeasure mu(q, {{R(1), R(1)}, {R(9, 10), R(1)}}, R(0));
  TruncatedQNormal t = build(mu, mu.support(), {-6, 6});
  std::vector<CoefficientFunction> fs{CoefficientFunction::identity(), rational_fn({0, 0, 1}, {1}),
                                      rational_fn({1}, {1, 0, 1}), level_indicator(q, 0), level_indicator(q, -2)};
  for (const auto& f : fs) {
    EXPECT_LE(verify_covariance(t, f), 1e-12);
    EXPECT_EQ(sgn(verify_covariance_exact(t, f)), 0);
  }
  // A function that is not a spectral function of |zeta| breaks covariance
  // when paired with the wrong scaling: check against u f u* - f itself.
  CoefficientFunction f = CoefficientFunction::identity();
  CMatrix unshifted = t.u() * spectral_function(t, f) * t.u().adjoint() - spectral_function(t, f);
  EXPECT_GT(operator_norm(compress(unshifted, t.interior_indices(1))), 0.1);
}

TEST(LevelIndicator, BandMembership) {
  DeformationParameter q(R(1, 2));
  CoefficientFunction chi = level_indicator(q, 0);
  EXPECT_EQ(chi.exact(R(1)), GaussRational(1));
  EXPECT_EQ(chi.exact(R(1, 2)), GaussRational(0));
  EXPECT_EQ(chi.exact(R(3, 4)), GaussRational(1));
  EXPECT_EQ(chi(0.75), Complex(1.0));
  EXPECT_EQ(chi(0.0), Complex(0.0));
}

TEST(Polar, DecompositionAndKernel) {
  TruncatedQNormal t = single_orbit(R(1, 2), {-4, 4}, R(1));
  PolarReport p = polar_check(t);
  EXPECT_EQ(p.polar_defect, 0.0);
  EXPECT_EQ(p.kernel_leak, 0.0);
  // |zeta|^2 = zeta* zeta away from the lowest level.
  CMatrix diff = t.zeta().adjoint() * t.zeta() - t.modulus() * t.modulus();
  EXPECT_LE(operator_norm(compress(diff, t.interior_indices(1))), 1e-15);
}

TEST(ShiftPower, MovesLevels) {
  TruncatedQNormal t = single_orbit(R(1, 2), {-3, 3});
  ExactMatrix s2 = t.shift_power_exact(2);
  EXPECT_EQ(s2(t.index_of(0, -1), t.index_of(0, 1)), GaussRational(1));
  EXPECT_EQ(s2, t.u_exact() * t.u_exact());
  ExactMatrix sm1 = t.shift_power_exact(-1);
  EXPECT_EQ(sm1, t.u_exact().adjoint());
  EXPECT_EQ(t.shift_power_exact(0), ExactMatrix::identity(t.dimension()));
}

TEST(Quadrature, MidpointAtoms) {
  DeformationParameter q(R(1, 2));
  std::vector<Atom> atoms = quadrature_atoms(q, [](double x) { return 2.0 * x; }, 10);
  ASSERT_EQ(atoms.size(), 10u);
  double mass = 0.0;
  for (const auto& a : atoms) {
    EXPECT_GT(a.position, R(1, 2));
    EXPECT_LE(a.position, R(1));
    mass += a.weight.get_d();
  }
  EXPECT_NEAR(mass, 0.75, 1e-12);  // int_{1/2}^1 2x dx, exact for linear densities
  EXPECT_EQ(atoms.front().position, R(21, 40));
  EXPECT_THROW(quadrature_atoms(q, [](double) { return 1.0; }, 0), ConfigurationError);
  QInvariantMeasure mu(q, atoms, R(0));
  TruncatedQNormal t = build(mu, mu.support(), {-2, 2});
  EXPECT_EQ(t.dimension(), 50);
  EXPECT_EQ(sgn(verify_relation_exact(t)), 0);
}

TEST(Spectrum, CsvLayout) {
  TruncatedQNormal t = single_orbit(R(1, 2), {-1, 1});
  std::ostringstream out;
  write_spectrum_csv(out, t);
  EXPECT_EQ(out.str(), "level,generator,value\n-1,1/1,2/1\n0,1/1,1/1\n1,1/1,1/2\n");
}

TEST(Classical, ConstantModulus) {
  SpectralSet x = make_classical_spectral_set({R(1, 2), R(1)});
  TruncatedQNormal t = build_classical(x, {-2, 2});
  EXPECT_EQ(t.dimension(), 10);
  // At q = 1, zeta is normal on the interior.
  EXPECT_EQ(sgn(verify_relation_exact(t)), 0);
  EXPECT_EQ(t.modulus_exact()(t.index_of(0, 2), t.index_of(0, 2)), GaussRational(R(1, 2)));
}
