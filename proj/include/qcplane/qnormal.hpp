#pragma once

// Finite truncations of q-normal operators zeta = u|zeta| on L2(mu) for an
// atomic q-invariant measure mu. The basis is indexed by (atom j, level n)
// with |zeta| e_{j,n} = q^n x_j e_{j,n} and u e_{j,n} = e_{j,n-1}; levels are
// cut to a window [n_min, n_max] and u is zero-padded at the lower edge.
// An optional one-dimensional block carries ker(zeta) when mu({0}) > 0.

#include <functional>
#include <iosfwd>
#include <optional>
#include <vector>

#include "qcplane/coefficient.hpp"
#include "qcplane/matrix.hpp"
#include "qcplane/qspace.hpp"

namespace qcplane {

/// Raised for unusable truncation or run configurations.
class ConfigurationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct TruncationWindow {
  long n_min{0};
  long n_max{0};

  long level_count() const { return n_max - n_min + 1; }
  /// Whether level n keeps distance >= margin from both edges.
  bool is_interior(long n, long margin) const { return n >= n_min + margin && n <= n_max - margin; }
};

struct GridPoint {
  std::size_t atom;  // index into the measure's base atoms
  long level;
  Rational value;  // q^level * x_atom
};

class TruncatedQNormal {
 public:
  struct Parts {
    DeformationParameter q{Rational(1, 2)};
    TruncationWindow window;
    std::vector<Rational> positions;  // x_j, one per atom
    std::vector<Rational> weights;
    std::vector<GridPoint> grid;
    int kernel_dim{0};
    CMatrix zeta;
    CMatrix u;
    CMatrix modulus;
    std::optional<ExactMatrix> zeta_exact;
    std::optional<ExactMatrix> u_exact;
    std::optional<ExactMatrix> modulus_exact;
  };

  /// Assembles an operator from raw parts without checking the structural
  /// invariants; build() is the checked path.
  explicit TruncatedQNormal(Parts parts);

  const DeformationParameter& q() const { return p_.q; }
  const TruncationWindow& window() const { return p_.window; }
  const std::vector<Rational>& positions() const { return p_.positions; }
  const std::vector<Rational>& weights() const { return p_.weights; }
  const std::vector<GridPoint>& grid() const { return p_.grid; }
  int kernel_dim() const { return p_.kernel_dim; }
  Index dimension() const { return p_.zeta.rows(); }
  /// Index of the kernel basis vector, if there is one.
  std::optional<Index> kernel_index() const;

  const CMatrix& zeta() const { return p_.zeta; }
  const CMatrix& u() const { return p_.u; }
  const CMatrix& modulus() const { return p_.modulus; }

  bool has_exact() const { return p_.zeta_exact.has_value(); }
  const ExactMatrix& zeta_exact() const;
  const ExactMatrix& u_exact() const;
  const ExactMatrix& modulus_exact() const;

  /// Position of basis vector e_{atom, level} in the matrices (-1 if outside the window).
  Index index_of(std::size_t atom, long level) const;
  /// Grid indices whose level is at distance >= margin from the window edges.
  std::vector<Index> interior_indices(long margin) const;
  /// All grid indices (kernel block excluded).
  std::vector<Index> grid_indices() const { return interior_indices(0); }

  /// Truncated u^k (k < 0 means (u*)^{-k}); exact 0/1 entries.
  CMatrix shift_power(long k) const;
  ExactMatrix shift_power_exact(long k) const;

 private:
  Parts p_;
};

/// Checked construction. X must be the support of mu; the window needs at
/// least three levels.
TruncatedQNormal build(const QInvariantMeasure& mu, const SpectralSet& x, const TruncationWindow& window);

/// Classical (q = 1) model: each generator x gives a constant-weight shift.
TruncatedQNormal build_classical(const SpectralSet& x, const TruncationWindow& window, bool with_kernel = false);

/// Midpoint rule on (q, 1] for a continuous density on the base interval;
/// nodes and weights are rational.
std::vector<Atom> quadrature_atoms(const DeformationParameter& q, const std::function<double(double)>& density,
                                   int nodes);

struct RelationDefect {
  double interior{0.0};
  double boundary{0.0};
};

/// Norms of zeta zeta* - q^2 zeta* zeta on the interior (margin 1) and on the full window.
RelationDefect verify_relation(const TruncatedQNormal& t);
/// Largest entry of the interior compression of the same residue, exact.
Rational verify_relation_exact(const TruncatedQNormal& t);

/// f(|zeta|): diagonal f(t_{j,n}) on the grid and f(0) on the kernel block.
CMatrix spectral_function(const TruncatedQNormal& t, const CoefficientFunction& f);
ExactMatrix spectral_function_exact(const TruncatedQNormal& t, const CoefficientFunction& f);

/// Interior norm of u f(|zeta|) u* - f(q|zeta|).
double verify_covariance(const TruncatedQNormal& t, const CoefficientFunction& f);
Rational verify_covariance_exact(const TruncatedQNormal& t, const CoefficientFunction& f);

/// Indicator of the level band (q^{n+1}, q^n], exact on the grid.
CoefficientFunction level_indicator(const DeformationParameter& q, long level);

struct PolarReport {
  double polar_defect{0.0};  // ||zeta - u |zeta|||
  double kernel_leak{0.0};   // ||u restricted to ker |zeta|||
};

PolarReport polar_check(const TruncatedQNormal& t);

/// "level,generator,value" lines for every grid point, after a header.
void write_spectrum_csv(std::ostream& out, const TruncatedQNormal& t);

}  // namespace qcplane
