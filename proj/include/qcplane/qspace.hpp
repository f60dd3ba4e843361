#pragma once

// q-invariant measures on [0, inf) and the closed q-invariant sets that
// support them. Everything here is exact; no floating point.

#include <optional>
#include <vector>

#include "qcplane/rational.hpp"

namespace qcplane {

/// The deformation parameter 0 < q <= 1. The value 1 is only meaningful for
/// the classical limit; constructors that need a genuine deformation call
/// require_deformed().
class DeformationParameter {
 public:
  explicit DeformationParameter(Rational q);

  const Rational& value() const { return q_; }
  double as_double() const { return q_.get_d(); }
  bool classical() const { return q_ == 1; }
  void require_deformed() const;

  /// q^n, exact.
  Rational power(long n) const { return pow(q_, n); }

  friend bool operator==(const DeformationParameter& a, const DeformationParameter& b) {
    return a.q_ == b.q_;
  }

 private:
  Rational q_;
};

/// The unique level n with q^{n+1} < t <= q^n, for t > 0 and q < 1.
long level_of(const DeformationParameter& q, const Rational& t);

/// Closed q-invariant set X = {q^n x : n in Z, x generator} U {0}.
/// At q = 1 (classical mode) each orbit collapses to the single point x.
class SpectralSet {
 public:
  const DeformationParameter& q() const { return q_; }
  const std::vector<Rational>& generators() const { return generators_; }
  bool includes_zero() const { return includes_zero_; }
  bool is_zero_set() const { return generators_.empty(); }

  /// Index of the generator whose orbit contains t, if any (t > 0).
  std::optional<std::size_t> orbit_of(const Rational& t) const;

  friend bool operator==(const SpectralSet& a, const SpectralSet& b) {
    return a.q_ == b.q_ && a.generators_ == b.generators_ && a.includes_zero_ == b.includes_zero_;
  }

 private:
  SpectralSet(DeformationParameter q, std::vector<Rational> generators, bool includes_zero);

  friend SpectralSet make_spectral_set(const DeformationParameter&, std::vector<Rational>);
  friend SpectralSet make_classical_spectral_set(std::vector<Rational>, bool);

  DeformationParameter q_;
  std::vector<Rational> generators_;
  bool includes_zero_;
};

/// Requires q < 1 and generators pairwise distinct in (q, 1]. Empty generators
/// give X = {0}.
SpectralSet make_spectral_set(const DeformationParameter& q, std::vector<Rational> generators);

/// q = 1 variant: generators pairwise distinct in (0, 1], each its own orbit.
SpectralSet make_classical_spectral_set(std::vector<Rational> generators, bool includes_zero = true);

bool contains(const SpectralSet& x, const Rational& t);

/// Endpoint of an interval: a nonnegative rational or +inf.
struct Bound {
  std::optional<Rational> value;  // nullopt = +inf
  bool closed{false};

  static Bound infinity() { return {}; }
  static Bound closed_at(Rational v) { return {std::move(v), true}; }
  static Bound open_at(Rational v) { return {std::move(v), false}; }
  bool is_infinite() const { return !value.has_value(); }
};

/// Interval in [0, inf) with independently open/closed ends. An infinite
/// upper end is always open.
class Interval {
 public:
  Interval(Bound lower, Bound upper);

  static Interval closed(Rational a, Rational b) { return {Bound::closed_at(std::move(a)), Bound::closed_at(std::move(b))}; }
  static Interval left_open(Rational a, Rational b) { return {Bound::open_at(std::move(a)), Bound::closed_at(std::move(b))}; }
  static Interval open(Rational a, Rational b) { return {Bound::open_at(std::move(a)), Bound::open_at(std::move(b))}; }
  static Interval point(const Rational& a) { return closed(a, a); }
  static Interval empty() { return open(Rational(0), Rational(0)); }

  const Bound& lower() const { return lower_; }
  const Bound& upper() const { return upper_; }

  bool is_empty() const;
  bool contains(const Rational& t) const;
  /// The image {s * t : t in M} for s > 0.
  Interval scaled(const Rational& s) const;

 private:
  Bound lower_;
  Bound upper_;
};

struct Atom {
  Rational position;
  Rational weight;
};

/// Nonnegative rational or +inf.
struct ExtendedRational {
  bool infinite{false};
  Rational value{0};

  static ExtendedRational inf() { return {true, Rational(0)}; }
  friend bool operator==(const ExtendedRational& a, const ExtendedRational& b) {
    return a.infinite == b.infinite && (a.infinite || a.value == b.value);
  }
};

std::string to_string(const ExtendedRational& v);

/// Atomic q-invariant measure: base atoms on (q, 1] replicated on every
/// level with the same weight, plus a point mass at 0. Repeated positions
/// are kept as separate atoms (multiplicity of the level space).
class QInvariantMeasure {
 public:
  QInvariantMeasure(DeformationParameter q, std::vector<Atom> base_atoms, Rational zero_mass);

  /// The measure for X = {0}: no atoms, unit mass at 0.
  static QInvariantMeasure point_at_zero(DeformationParameter q);

  const DeformationParameter& q() const { return q_; }
  const std::vector<Atom>& base_atoms() const { return atoms_; }
  const Rational& zero_mass() const { return zero_mass_; }

  /// Closed support: orbit closure of the atom positions, plus 0.
  SpectralSet support() const;

 private:
  DeformationParameter q_;
  std::vector<Atom> atoms_;
  Rational zero_mass_;
};

/// Restriction of nu + nu({q}) delta_1 + nu({1}) delta_q to (q, 1].
std::vector<Atom> mu0_from_nu(const DeformationParameter& q, const std::vector<Atom>& nu_atoms);

ExtendedRational measure_of(const QInvariantMeasure& mu, const Interval& m);

/// mu(qM) == mu(M) for an interval in (0, inf).
bool verify_q_invariance(const QInvariantMeasure& mu, const Interval& m);

}  // namespace qcplane
