#include <random>

#include <gtest/gtest.h>

#include "qcplane/qspace.hpp"

using namespace qcplane;

namespace {

Rational R(long p, long r = 1) { return Rational(p, r); }

// Brute-force count: sum of weights over (atom, k) with q^k x in M, k in [-K, K].
Rational brute_measure(const DeformationParameter& q, const std::vector<Atom>& atoms, const Interval& m, long K = 120) {
  Rational total(0);
  for (const auto& a : atoms) {
    for (long k = -K; k <= K; ++k) {
      if (m.contains(Rational(q.power(k) * a.position))) total += a.weight;
    }
  }
  return total;
}

Interval random_interval(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(1, 4000);
  std::uniform_int_distribution<int> kind(0, 3);
  Rational a(num(rng), 1000);
  Rational b(num(rng), 1000);
  if (b < a) std::swap(a, b);
  switch (kind(rng)) {
    case 0: return Interval::closed(a, b);
    case 1: return Interval::left_open(a, b);
    case 2: return Interval::open(a, b);
    default: return {Bound::closed_at(a), Bound::open_at(b)};
  }
}

}  // namespace

TEST(Rational, ParseAndCanonicalForm) {
  EXPECT_EQ(to_string(parse_rational("6/4")), "3/2");
  EXPECT_EQ(to_string(parse_rational("0")), "0/1");
  EXPECT_EQ(to_string(parse_rational("-3")), "-3/1");
  EXPECT_EQ(to_string(parse_rational("-6/4")), "-3/2");
  EXPECT_THROW(parse_rational("1/0"), ParseError);
  EXPECT_THROW(parse_rational("abc"), ParseError);
  EXPECT_THROW(parse_rational("1.5"), ParseError);
  EXPECT_THROW(parse_rational(""), ParseError);
}

TEST(Rational, IntegerPowers) {
  EXPECT_EQ(pow(R(2, 3), 3), R(8, 27));
  EXPECT_EQ(pow(R(2, 3), -2), R(9, 4));
  EXPECT_EQ(pow(R(5, 7), 0), R(1));
  EXPECT_THROW(pow(R(0), -1), DomainError);
}

TEST(GaussRational, FieldOperations) {
  GaussRational z(R(1, 2), R(3));
  GaussRational w(R(-2), R(1, 4));
  EXPECT_EQ(z * w, GaussRational(R(-1) - R(3, 4), R(1, 8) - R(6)));
  EXPECT_EQ((z / w) * w, z);
  EXPECT_EQ(z.conj().imag(), R(-3));
  EXPECT_EQ(z.max_component(), R(3));
  EXPECT_EQ(GaussRational::i() * GaussRational::i(), GaussRational(-1));
  EXPECT_THROW(z / GaussRational(0), DomainError);
}

TEST(DeformationParameter, RangeChecks) {
  EXPECT_THROW(DeformationParameter(R(0)), DomainError);
  EXPECT_THROW(DeformationParameter(R(-1, 2)), DomainError);
  EXPECT_THROW(DeformationParameter(R(3, 2)), DomainError);
  DeformationParameter one(R(1));
  EXPECT_TRUE(one.classical());
  EXPECT_THROW(one.require_deformed(), DomainError);
  EXPECT_EQ(DeformationParameter(R(1, 2)).power(-3), R(8));
}

TEST(LevelOf, MatchesBruteForce) {
  for (const Rational& qv : {R(1, 2), R(3, 4), R(9, 10)}) {
    DeformationParameter q(qv);
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> num(1, 100000);
    for (int i = 0; i < 200; ++i) {
      Rational t(num(rng), 997);
      long n = level_of(q, t);
      EXPECT_LT(q.power(n + 1), t);
      EXPECT_LE(t, q.power(n));
    }
  }
  DeformationParameter q(R(1, 2));
  EXPECT_EQ(level_of(q, R(1)), 0);
  EXPECT_EQ(level_of(q, R(1, 2)), 1);
  EXPECT_EQ(level_of(q, R(3, 4)), 0);
  EXPECT_EQ(level_of(q, R(3)), -2);
  EXPECT_THROW(level_of(q, R(0)), DomainError);
}

TEST(SpectralSet, MembershipIsOrbitClosure) {
  DeformationParameter q(R(1, 2));
  SpectralSet x = make_spectral_set(q, {R(1), R(3, 4)});
  EXPECT_TRUE(contains(x, R(0)));
  EXPECT_TRUE(contains(x, R(1, 8)));
  EXPECT_TRUE(contains(x, R(3, 16)));
  EXPECT_TRUE(contains(x, R(6)));
  EXPECT_FALSE(contains(x, R(5, 8)));
  EXPECT_EQ(x.orbit_of(R(3, 2)).value(), 0u);  // generators are sorted: 3/4 first
  EXPECT_EQ(x.orbit_of(R(4)).value(), 1u);
  EXPECT_FALSE(x.orbit_of(R(5, 8)).has_value());
  EXPECT_THROW(contains(x, R(-1)), DomainError);
}

TEST(SpectralSet, ScalingInvariance) {
  DeformationParameter q(R(3, 4));
  SpectralSet x = make_spectral_set(q, {R(1), R(9, 10)});
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> num(1, 5000);
  for (int i = 0; i < 200; ++i) {
    Rational t(num(rng), 1000);
    EXPECT_EQ(contains(x, t), contains(x, Rational(q.value() * t)));
  }
}

TEST(SpectralSet, GeneratorValidation) {
  DeformationParameter q(R(1, 2));
  EXPECT_THROW(make_spectral_set(q, {R(1, 2)}), DomainError);  // q itself is excluded
  EXPECT_THROW(make_spectral_set(q, {R(3, 2)}), DomainError);
  EXPECT_THROW(make_spectral_set(q, {R(1), R(1)}), DomainError);
  EXPECT_THROW(make_spectral_set(DeformationParameter(R(1)), {R(1)}), DomainError);
  EXPECT_TRUE(make_spectral_set(q, {}).is_zero_set());
  SpectralSet c = make_classical_spectral_set({R(1, 3), R(1)});
  EXPECT_TRUE(contains(c, R(1, 3)));
  EXPECT_FALSE(contains(c, R(1, 6)));
}

TEST(Interval, ScalingAndMembership) {
  Interval m = Interval::left_open(R(1, 2), R(1));
  Interval s = m.scaled(R(1, 2));
  EXPECT_FALSE(s.contains(R(1, 4)));
  EXPECT_TRUE(s.contains(R(1, 2)));
  EXPECT_TRUE(Interval::empty().is_empty());
  EXPECT_TRUE(Interval::open(R(1), R(1)).is_empty());
  EXPECT_FALSE(Interval::point(R(1)).is_empty());
  EXPECT_THROW(Interval::closed(R(2), R(1)), DomainError);
}

TEST(Measure, FundamentalDomainMass) {
  DeformationParameter q(R(1, 2));
  QInvariantMeasure mu(q, {{R(1), R(2)}, {R(3, 4), R(1, 3)}}, R(0));
  // (q^{n+1}, q^n] holds exactly one copy of each base atom.
  for (long n = -5; n <= 5; ++n) {
    Interval band = Interval::left_open(q.power(n + 1), q.power(n));
    EXPECT_EQ(measure_of(mu, band), (ExtendedRational{false, R(7, 3)}));
  }
  // Anything reaching 0 or infinity has infinite mass.
  EXPECT_TRUE(measure_of(mu, Interval::open(R(0), R(1))).infinite);
  EXPECT_TRUE(measure_of(mu, Interval(Bound::closed_at(R(1)), Bound::infinity())).infinite);
  QInvariantMeasure point = QInvariantMeasure::point_at_zero(q);
  EXPECT_EQ(measure_of(point, Interval::closed(R(0), R(5))), (ExtendedRational{false, R(1)}));
  EXPECT_EQ(measure_of(point, Interval::open(R(0), R(5))), (ExtendedRational{false, R(0)}));
}

TEST(Measure, AgreesWithBruteForceCount) {
  DeformationParameter q(R(3, 4));
  std::vector<Atom> atoms{{R(1), R(1)}, {R(9, 10), R(5, 2)}, {R(4, 5), R(1, 7)}};
  QInvariantMeasure mu(q, atoms, R(1));
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    Interval m = random_interval(rng);
    ExtendedRational v = measure_of(mu, m);
    ASSERT_FALSE(v.infinite);
    EXPECT_EQ(v.value, brute_measure(q, atoms, m));
  }
}

TEST(Measure, QInvarianceOnRandomIntervals) {
  DeformationParameter q(R(1, 2));
  std::vector<QInvariantMeasure> fixtures{
      QInvariantMeasure(q, {{R(1), R(1)}}, R(0)),
      QInvariantMeasure(q, {{R(1), R(3)}, {R(3, 5), R(1, 2)}}, R(2)),
      QInvariantMeasure(q, mu0_from_nu(q, {{R(1, 2), R(2, 5)}, {R(5, 7), R(1)}, {R(1), R(1, 5)}}), R(0)),
  };
  std::mt19937_64 rng(5);
  for (const auto& mu : fixtures) {
    for (int i = 0; i < 100; ++i) {
      Interval m = random_interval(rng);
      EXPECT_TRUE(verify_q_invariance(mu, m));
      EXPECT_EQ(measure_of(mu, m.scaled(q.value())), measure_of(mu, m));
    }
  }
}

TEST(Measure, NuEndpointConstruction) {
  DeformationParameter q(R(1, 2));
  // nu = 2/5 delta_q + delta_{5/7} + 1/5 delta_1.
  std::vector<Atom> mu0 = mu0_from_nu(q, {{R(1, 2), R(2, 5)}, {R(5, 7), R(1)}, {R(1), R(1, 5)}});
  ASSERT_EQ(mu0.size(), 2u);
  EXPECT_EQ(mu0[0].position, R(5, 7));
  EXPECT_EQ(mu0[0].weight, R(1));
  EXPECT_EQ(mu0[1].position, R(1));
  EXPECT_EQ(mu0[1].weight, R(3, 5));
  EXPECT_THROW(mu0_from_nu(q, {{R(2), R(1)}}), DomainError);
}

TEST(Measure, SupportAndValidation) {
  DeformationParameter q(R(1, 2));
  QInvariantMeasure mu(q, {{R(1), R(1)}, {R(1), R(2)}, {R(3, 4), R(1)}}, R(0));
  EXPECT_EQ(mu.support().generators(), (std::vector<Rational>{R(3, 4), R(1)}));
  EXPECT_THROW(QInvariantMeasure(q, {{R(1, 4), R(1)}}, R(0)), DomainError);
  EXPECT_THROW(QInvariantMeasure(q, {{R(1), R(0)}}, R(0)), DomainError);
  EXPECT_THROW(QInvariantMeasure(q, {{R(1), R(1)}}, R(-1)), DomainError);
}
