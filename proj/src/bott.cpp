#include "qcplane/bott.hpp"

#include "qcplane/represent.hpp"

namespace qcplane {

namespace {

UnitizedElement zero_entry(const DeformationParameter& q) { return {AlgebraElement(q), GaussRational(0)}; }

// 1 / (1 + c t^{2n}).
CoefficientFunction damping(long n, const Rational& c) {
  Polynomial den = Polynomial(GaussRational(1)) + Polynomial::monomial(GaussRational(c), static_cast<std::size_t>(2 * n));
  return CoefficientFunction::rational(RationalFunction(Polynomial(GaussRational(1)), den));
}

UnitizedElement body(AlgebraElement a) { return {std::move(a), GaussRational(0)}; }

}  // namespace

std::pair<long, CoefficientFunction> canonical_power(long n, const DeformationParameter& q) {
  if (n == 0) throw DomainError("canonical power needs n != 0; the identity lives in the unitization");
  const long m = std::labs(n);
  const Rational c = n > 0 ? q.power(m * (m + 1) / 2) : q.power(-(m * (m - 1) / 2));
  auto f = CoefficientFunction::rational(RationalFunction(Polynomial::monomial(GaussRational(c), static_cast<std::size_t>(m))));
  return {n > 0 ? m : -m, f};
}

AlgebraElement canonical_power_element(long n, const DeformationParameter& q) {
  auto [mode, f] = canonical_power(n, q);
  return AlgebraElement::monomial(q, mode, f);
}

ProjectionCandidate bott_projection(long n, BottSign sign, const DeformationParameter& q) {
  if (n < 1) throw DomainError("Bott projections are indexed by n >= 1");
  const CoefficientFunction g = damping(n, q.power(n * (n + 1)));
  const CoefficientFunction h = damping(n, q.power(-n * (n - 1)));
  const AlgebraElement g0 = AlgebraElement::monomial(q, 0, g);
  const AlgebraElement h0 = AlgebraElement::monomial(q, 0, h);
  const AlgebraElement zn = canonical_power_element(n, q);
  const AlgebraElement zsn = canonical_power_element(-n, q);

  const bool plus = sign == BottSign::Plus;
  const AlgebraElement& top = plus ? g0 : h0;
  const AlgebraElement& bottom = plus ? h0 : g0;
  UnitizedMatrix e{{{body(top), body(multiply(top, plus ? zn : zsn))},
                    {body(multiply(bottom, plus ? zsn : zn)), UnitizedElement(scale(bottom, GaussRational(-1)), 1)}}};
  return {n, sign, q, std::move(e)};
}

ProjectionCandidate trivial_projection(long n, BottSign sign, const DeformationParameter& q) {
  UnitizedMatrix e{{{UnitizedElement(AlgebraElement(q), 1), zero_entry(q)}, {zero_entry(q), zero_entry(q)}}};
  return {n, sign, q, std::move(e)};
}

ProjectionCandidate scaled(const ProjectionCandidate& p, const GaussRational& s) {
  ProjectionCandidate out = p;
  for (auto& row : out.entries) {
    for (auto& x : row) x = scale(x, s);
  }
  return out;
}

UnitizedMatrix matrix_product(const UnitizedMatrix& a, const UnitizedMatrix& b) {
  auto entry = [&](int i, int j) { return add(multiply(a[i][0], b[0][j]), multiply(a[i][1], b[1][j])); };
  return {{{entry(0, 0), entry(0, 1)}, {entry(1, 0), entry(1, 1)}}};
}

UnitizedMatrix matrix_adjoint(const UnitizedMatrix& a) {
  return {{{adjoint(a[0][0]), adjoint(a[1][0])}, {adjoint(a[0][1]), adjoint(a[1][1])}}};
}

UnitizedMatrix matrix_difference(const UnitizedMatrix& a, const UnitizedMatrix& b) {
  auto entry = [&](int i, int j) { return subtract(a[i][j], b[i][j]); };
  return {{{entry(0, 0), entry(0, 1)}, {entry(1, 0), entry(1, 1)}}};
}

ExactProjectionReport verify_projection_exact(const ProjectionCandidate& p, const std::vector<Rational>& samples) {
  for (const auto& t : samples) {
    if (sgn(t) < 0) throw DomainError("sample points must be nonnegative");
  }
  auto worst = [&](const UnitizedMatrix& m) {
    Rational w(0);
    for (const auto& row : m) {
      for (const auto& x : row) {
        Rational r = max_exact_residue(x, samples);
        if (r > w) w = r;
      }
    }
    return w;
  };
  ExactProjectionReport r;
  r.idempotent_residue = worst(matrix_difference(matrix_product(p.entries, p.entries), p.entries));
  r.selfadjoint_residue = worst(matrix_difference(matrix_adjoint(p.entries), p.entries));
  r.max_residue = r.idempotent_residue > r.selfadjoint_residue ? r.idempotent_residue : r.selfadjoint_residue;
  r.points_checked = samples.size();
  return r;
}

std::vector<Rational> bott_sample_points(const DeformationParameter& q) {
  q.require_deformed();
  SpectralSet x = make_spectral_set(q, {Rational(1), Rational((1 + q.value()) / 2)});
  return sample_points(x, {-12, 12});
}

NumericProjectionReport verify_projection_numeric(const ProjectionCandidate& p, const TruncatedQNormal& t) {
  const long margin = 2 * p.n;
  if (t.window().level_count() <= 2 * margin) {
    throw ConfigurationError("window needs more than " + std::to_string(2 * margin) + " levels for n = " +
                             std::to_string(p.n));
  }
  const Index d = t.dimension();
  CMatrix b(2 * d, 2 * d);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) b.block(i * d, j * d, d, d) = represent(p.entries[i][j], t);
  }
  std::vector<Index> keep = t.interior_indices(margin);
  const std::size_t half = keep.size();
  for (std::size_t i = 0; i < half; ++i) keep.push_back(keep[i] + d);
  NumericProjectionReport r;
  r.interior_margin = margin;
  r.idempotent_defect = operator_norm(compress(b * b - b, keep));
  r.selfadjoint_defect = operator_norm(compress(b.adjoint() - b, keep));
  return r;
}

bool entry_structure_ok(const ProjectionCandidate& p) {
  auto rational_c0 = [](const CoefficientFunction& f, bool zero_at_origin) {
    auto r = f.as_rational();
    if (!r || r->limit_kind() != LimitAtInfinity::Zero) return false;
    return !zero_at_origin || f.value_at_zero().is_zero();
  };
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      const UnitizedElement& x = p.entries[i][j];
      const auto support = x.body().support();
      if (i == j) {
        if (!(support.size() == 1 && support[0] == 0)) return false;
        if (!rational_c0(x.body().coefficient(0), false)) return false;
        GaussRational at0 = x.body().coefficient(0).value_at_zero() + x.unit_scalar();
        if (!(at0 == GaussRational(0) || at0 == GaussRational(1))) return false;
      } else {
        if (!x.unit_scalar().is_zero() || support.size() != 1 || std::labs(support[0]) != p.n) return false;
        if (!rational_c0(x.body().coefficient(support[0]), true)) return false;
      }
    }
  }
  return true;
}

double winding_diagnostic(const ProjectionCandidate& p, const TruncatedQNormal& t) {
  const ProjectionCandidate base = trivial_projection(p.n, p.sign, p.q);
  Complex total(0.0);
  for (int i = 0; i < 2; ++i) {
    total += represent(p.entries[i][i], t).trace() - represent(base.entries[i][i], t).trace();
  }
  return total.real();
}

}  // namespace qcplane
