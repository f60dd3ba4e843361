#include "qcplane/qspace.hpp"

#include <algorithm>
#include <cmath>

namespace qcplane {

namespace {

double log_abs(const mpz_class& z) {
  long exp = 0;
  double mant = mpz_get_d_2exp(&exp, z.get_mpz_t());
  return std::log(std::fabs(mant)) + static_cast<double>(exp) * std::log(2.0);
}

double log_rational(const Rational& t) { return log_abs(t.get_num()) - log_abs(t.get_den()); }

void sort_unique_or_throw(std::vector<Rational>& gens) {
  std::sort(gens.begin(), gens.end());
  if (std::adjacent_find(gens.begin(), gens.end()) != gens.end()) {
    throw DomainError("duplicate generator in spectral set");
  }
}

bool satisfies_lower(const Rational& v, const Bound& lower) {
  return lower.closed ? v >= *lower.value : v > *lower.value;
}

bool satisfies_upper(const Rational& v, const Bound& upper) {
  if (upper.is_infinite()) return true;
  return upper.closed ? v <= *upper.value : v < *upper.value;
}

// Values q^k p decrease in k, so the upper condition holds on [k_min, inf)
// and the lower condition on (-inf, k_max].
long smallest_k_below_upper(const DeformationParameter& q, const Rational& p, const Bound& upper) {
  long k = level_of(q, Rational(*upper.value / p));
  while (!satisfies_upper(q.power(k) * p, upper)) ++k;
  while (satisfies_upper(q.power(k - 1) * p, upper)) --k;
  return k;
}

long largest_k_above_lower(const DeformationParameter& q, const Rational& p, const Bound& lower) {
  long k = level_of(q, Rational(*lower.value / p));
  while (!satisfies_lower(q.power(k) * p, lower)) --k;
  while (satisfies_lower(q.power(k + 1) * p, lower)) ++k;
  return k;
}

}  // namespace

DeformationParameter::DeformationParameter(Rational q) : q_(std::move(q)) {
  q_.canonicalize();
  if (sgn(q_) <= 0 || q_ > 1) throw DomainError("deformation parameter must satisfy 0 < q <= 1, got " + to_string(q_));
}

void DeformationParameter::require_deformed() const {
  if (classical()) throw DomainError("q = 1 is only admitted in classical-limit mode");
}

long level_of(const DeformationParameter& q, const Rational& t) {
  q.require_deformed();
  if (sgn(t) <= 0) throw DomainError("level_of requires t > 0");
  double estimate = log_rational(t) / log_rational(q.value());
  long n = static_cast<long>(std::floor(estimate));
  // t <= q^n and t > q^{n+1}
  while (t > q.power(n)) --n;
  while (t <= q.power(n + 1)) ++n;
  return n;
}

SpectralSet::SpectralSet(DeformationParameter q, std::vector<Rational> generators, bool includes_zero)
    : q_(std::move(q)), generators_(std::move(generators)), includes_zero_(includes_zero) {}

std::optional<std::size_t> SpectralSet::orbit_of(const Rational& t) const {
  if (sgn(t) <= 0) return std::nullopt;
  Rational reduced = t;
  if (!q_.classical()) {
    long n = level_of(q_, t);
    reduced = t / q_.power(n);
  }
  auto it = std::lower_bound(generators_.begin(), generators_.end(), reduced);
  if (it == generators_.end() || *it != reduced) return std::nullopt;
  return static_cast<std::size_t>(it - generators_.begin());
}

SpectralSet make_spectral_set(const DeformationParameter& q, std::vector<Rational> generators) {
  q.require_deformed();
  for (auto& g : generators) {
    g.canonicalize();
    if (g <= q.value() || g > 1) throw DomainError("generator " + to_string(g) + " outside (q, 1]");
  }
  sort_unique_or_throw(generators);
  return SpectralSet(q, std::move(generators), true);
}

SpectralSet make_classical_spectral_set(std::vector<Rational> generators, bool includes_zero) {
  for (auto& g : generators) {
    g.canonicalize();
    if (sgn(g) <= 0 || g > 1) throw DomainError("classical generator " + to_string(g) + " outside (0, 1]");
  }
  sort_unique_or_throw(generators);
  if (generators.empty()) includes_zero = true;
  return SpectralSet(DeformationParameter(Rational(1)), std::move(generators), includes_zero);
}

bool contains(const SpectralSet& x, const Rational& t) {
  if (sgn(t) < 0) throw DomainError("contains: t must be nonnegative");
  if (sgn(t) == 0) return x.includes_zero();
  return x.orbit_of(t).has_value();
}

Interval::Interval(Bound lower, Bound upper) : lower_(std::move(lower)), upper_(std::move(upper)) {
  if (lower_.is_infinite()) throw DomainError("interval lower end must be finite");
  if (sgn(*lower_.value) < 0) throw DomainError("interval must lie in [0, inf)");
  if (upper_.is_infinite()) {
    upper_.closed = false;
  } else if (*upper_.value < *lower_.value) {
    throw DomainError("interval lower end exceeds upper end");
  }
}

bool Interval::is_empty() const {
  if (upper_.is_infinite()) return false;
  if (*lower_.value < *upper_.value) return false;
  return !(lower_.closed && upper_.closed);
}

bool Interval::contains(const Rational& t) const { return satisfies_lower(t, lower_) && satisfies_upper(t, upper_); }

Interval Interval::scaled(const Rational& s) const {
  if (sgn(s) <= 0) throw DomainError("interval scale factor must be positive");
  Bound lo{Rational(*lower_.value * s), lower_.closed};
  Bound hi = upper_;
  if (!hi.is_infinite()) hi.value = Rational(*hi.value * s);
  return {lo, hi};
}

std::string to_string(const ExtendedRational& v) { return v.infinite ? std::string("inf") : to_string(v.value); }

QInvariantMeasure::QInvariantMeasure(DeformationParameter q, std::vector<Atom> base_atoms, Rational zero_mass)
    : q_(std::move(q)), atoms_(std::move(base_atoms)), zero_mass_(std::move(zero_mass)) {
  q_.require_deformed();
  for (auto& a : atoms_) {
    a.position.canonicalize();
    a.weight.canonicalize();
    if (a.position <= q_.value() || a.position > 1) {
      throw DomainError("atom position " + to_string(a.position) + " outside (q, 1]");
    }
    if (sgn(a.weight) <= 0) throw DomainError("atom weight must be positive");
  }
  if (sgn(zero_mass_) < 0) throw DomainError("mass at 0 must be nonnegative");
}

QInvariantMeasure QInvariantMeasure::point_at_zero(DeformationParameter q) {
  return QInvariantMeasure(std::move(q), {}, Rational(1));
}

SpectralSet QInvariantMeasure::support() const {
  if (atoms_.empty() && sgn(zero_mass_) == 0) throw DomainError("the zero measure has empty support");
  std::vector<Rational> positions;
  for (const auto& a : atoms_) positions.push_back(a.position);
  std::sort(positions.begin(), positions.end());
  positions.erase(std::unique(positions.begin(), positions.end()), positions.end());
  return make_spectral_set(q_, std::move(positions));
}

std::vector<Atom> mu0_from_nu(const DeformationParameter& q, const std::vector<Atom>& nu_atoms) {
  q.require_deformed();
  Rational mass_at_q(0);
  std::vector<Atom> out;
  auto add = [&out](const Rational& pos, const Rational& w) {
    for (auto& a : out) {
      if (a.position == pos) {
        a.weight += w;
        return;
      }
    }
    out.push_back({pos, w});
  };
  for (const auto& a : nu_atoms) {
    if (a.position < q.value() || a.position > 1) {
      throw DomainError("nu atom " + to_string(a.position) + " outside [q, 1]");
    }
    if (sgn(a.weight) <= 0) throw DomainError("nu atom weight must be positive");
    if (a.position == q.value()) {
      mass_at_q += a.weight;
    } else {
      add(a.position, a.weight);
    }
  }
  // nu({1}) delta_q sits at q and is cut by the restriction to (q, 1].
  if (sgn(mass_at_q) > 0) add(Rational(1), mass_at_q);
  std::sort(out.begin(), out.end(), [](const Atom& a, const Atom& b) { return a.position < b.position; });
  return out;
}

ExtendedRational measure_of(const QInvariantMeasure& mu, const Interval& m) {
  ExtendedRational total;
  if (m.contains(Rational(0))) total.value += mu.zero_mass();
  if (m.is_empty() || mu.base_atoms().empty()) return total;

  bool meets_positive = m.upper().is_infinite() || sgn(*m.upper().value) > 0;
  if (!meets_positive) return total;
  if (m.upper().is_infinite() || sgn(*m.lower().value) == 0) return ExtendedRational::inf();

  const auto& q = mu.q();
  for (const auto& atom : mu.base_atoms()) {
    long k_min = smallest_k_below_upper(q, atom.position, m.upper());
    long k_max = largest_k_above_lower(q, atom.position, m.lower());
    if (k_max >= k_min) total.value += atom.weight * (k_max - k_min + 1);
  }
  return total;
}

bool verify_q_invariance(const QInvariantMeasure& mu, const Interval& m) {
  return measure_of(mu, m.scaled(mu.q().value())) == measure_of(mu, m);
}

}  // namespace qcplane
