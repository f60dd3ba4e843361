#include "qcplane/algebra.hpp"

#include <cmath>

namespace qcplane {

namespace {

std::optional<SpectralSet> merged_domain(const AlgebraElement& a, const AlgebraElement& b) {
  if (a.domain() && b.domain() && !(*a.domain() == *b.domain())) {
    throw DomainError("elements restricted to different spectral sets");
  }
  return a.domain() ? a.domain() : b.domain();
}

void require_same_q(const AlgebraElement& a, const AlgebraElement& b) {
  if (!(a.q() == b.q())) throw DomainError("elements over different deformation parameters");
}

}  // namespace

AlgebraElement AlgebraElement::monomial(DeformationParameter q, long mode, CoefficientFunction f) {
  AlgebraElement a(std::move(q));
  a.set(mode, std::move(f));
  return a;
}

CoefficientFunction AlgebraElement::coefficient(long mode) const {
  auto it = coeffs_.find(mode);
  return it == coeffs_.end() ? CoefficientFunction() : it->second;
}

std::vector<long> AlgebraElement::support() const {
  std::vector<long> out;
  for (const auto& [k, f] : coeffs_) out.push_back(k);
  return out;
}

long AlgebraElement::mode_span() const {
  long span = 0;
  for (const auto& [k, f] : coeffs_) span = std::max(span, std::labs(k));
  return span;
}

GaussRational AlgebraElement::exact_at(long mode, const Rational& t) const {
  if (domain_ && !contains(*domain_, t)) {
    throw DomainError("t = " + to_string(t) + " lies outside the element's spectral set");
  }
  auto it = coeffs_.find(mode);
  if (it == coeffs_.end()) return {};
  return it->second.exact(t);
}

void AlgebraElement::set(long mode, CoefficientFunction f) {
  if (f.is_literal_zero()) {
    coeffs_.erase(mode);
  } else {
    coeffs_.insert_or_assign(mode, std::move(f));
  }
}

CoefficientFunction alpha(const CoefficientFunction& f, long n, const DeformationParameter& q) {
  if (n == 0) return f;
  return f.rescaled(q.power(n));
}

AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) {
  require_same_q(a, b);
  AlgebraElement out(a.q());
  out.set_domain(merged_domain(a, b));
  std::map<long, CoefficientFunction> acc;
  for (const auto& [n, f] : a.coefficients()) {
    for (const auto& [m, g] : b.coefficients()) {
      CoefficientFunction term = f * alpha(g, n, a.q());
      auto [it, inserted] = acc.try_emplace(n + m, term);
      if (!inserted) it->second = it->second + term;
    }
  }
  for (auto& [k, f] : acc) out.set(k, std::move(f));
  return out;
}

AlgebraElement adjoint(const AlgebraElement& a) {
  AlgebraElement out(a.q());
  out.set_domain(a.domain());
  for (const auto& [n, f] : a.coefficients()) out.set(-n, alpha(f.conj(), -n, a.q()));
  return out;
}

AlgebraElement add(const AlgebraElement& a, const AlgebraElement& b) {
  require_same_q(a, b);
  AlgebraElement out = a;
  out.set_domain(merged_domain(a, b));
  for (const auto& [k, g] : b.coefficients()) out.set(k, a.coefficient(k) + g);
  return out;
}

AlgebraElement subtract(const AlgebraElement& a, const AlgebraElement& b) { return add(a, scale(b, GaussRational(-1))); }

AlgebraElement scale(const AlgebraElement& a, const GaussRational& lambda) {
  AlgebraElement out(a.q());
  out.set_domain(a.domain());
  for (const auto& [k, f] : a.coefficients()) out.set(k, lambda * f);
  return out;
}

ElementClass classify(const AlgebraElement& a) {
  for (const auto& [k, f] : a.coefficients()) {
    if (k != 0 && !f.value_at_zero().is_zero()) return ElementClass::Full;
  }
  return ElementClass::Vanishing;
}

AlgebraElement restrict(const AlgebraElement& a, const SpectralSet& x) {
  if (!(a.q() == x.q())) throw DomainError("spectral set over a different deformation parameter");
  AlgebraElement out = a;
  out.set_domain(x);
  return out;
}

Complex classical_eval(const AlgebraElement& a, double r, double theta) {
  Complex total(0.0, 0.0);
  for (const auto& [k, f] : a.coefficients()) total += f(r) * std::polar(1.0, static_cast<double>(k) * theta);
  return total;
}

std::vector<Rational> sample_points(const SpectralSet& x, const TruncationWindow& window) {
  std::vector<Rational> out{Rational(0)};
  if (x.q().classical()) {
    out.insert(out.end(), x.generators().begin(), x.generators().end());
    return out;
  }
  for (long n = window.n_min; n <= window.n_max; ++n) {
    Rational s = x.q().power(n);
    for (const auto& g : x.generators()) out.emplace_back(s * g);
  }
  return out;
}

Rational max_exact_residue(const AlgebraElement& a, const std::vector<Rational>& samples) {
  Rational worst(0);
  for (const auto& [k, f] : a.coefficients()) {
    for (const auto& t : samples) {
      Rational m = a.exact_at(k, t).max_component();
      if (m > worst) worst = m;
    }
  }
  return worst;
}

bool equal_on(const AlgebraElement& a, const AlgebraElement& b, const std::vector<Rational>& samples) {
  return sgn(max_exact_residue(subtract(a, b), samples)) == 0;
}

void check_denominators(const AlgebraElement& a, const std::vector<Rational>& samples) {
  for (const auto& [k, f] : a.coefficients()) {
    if (!f.exactly_evaluable()) continue;
    for (const auto& t : samples) {
      try {
        (void)f.exact(t);
      } catch (const EvaluationError& e) {
        throw DomainError("coefficient of mode " + std::to_string(k) + " undefined: " + e.what());
      }
    }
  }
}

double vanishing_spot_value(const CoefficientFunction& f, const SpectralSet& x) {
  Rational top = x.generators().empty() ? Rational(1) : x.generators().back();
  Rational far = x.q().classical() ? Rational(top * pow(Rational(2), 64)) : Rational(x.q().power(-64) * top);
  return std::abs(f(far.get_d()));
}

UnitizedElement::UnitizedElement(AlgebraElement body, GaussRational unit_scalar)
    : body_(std::move(body)), unit_(std::move(unit_scalar)) {
  if (classify(body_) != ElementClass::Vanishing) {
    throw DomainError("unitization requires a body with f_k(0) = 0 for all k != 0");
  }
}

UnitizedElement unitize(const AlgebraElement& a, const GaussRational& lambda) { return {a, lambda}; }

UnitizedElement multiply(const UnitizedElement& a, const UnitizedElement& b) {
  AlgebraElement body = multiply(a.body(), b.body());
  body = add(body, scale(b.body(), a.unit_scalar()));
  body = add(body, scale(a.body(), b.unit_scalar()));
  return {std::move(body), a.unit_scalar() * b.unit_scalar()};
}

UnitizedElement adjoint(const UnitizedElement& a) { return {adjoint(a.body()), a.unit_scalar().conj()}; }

UnitizedElement add(const UnitizedElement& a, const UnitizedElement& b) {
  return {add(a.body(), b.body()), a.unit_scalar() + b.unit_scalar()};
}

UnitizedElement subtract(const UnitizedElement& a, const UnitizedElement& b) {
  return {subtract(a.body(), b.body()), a.unit_scalar() - b.unit_scalar()};
}

UnitizedElement scale(const UnitizedElement& a, const GaussRational& lambda) {
  return {scale(a.body(), lambda), a.unit_scalar() * lambda};
}

Rational max_exact_residue(const UnitizedElement& a, const std::vector<Rational>& samples) {
  Rational worst = max_exact_residue(a.body(), samples);
  Rational unit = a.unit_scalar().max_component();
  return unit > worst ? unit : worst;
}

}  // namespace qcplane
