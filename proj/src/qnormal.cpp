#include "qcplane/qnormal.hpp"

#include <algorithm>
#include <ostream>

namespace qcplane {

namespace {

struct GridLayout {
  std::vector<Rational> positions;
  std::vector<Rational> weights;
};

// Grid positions are level-major: index = (n - n_min) * atoms + j. The
// kernel vector, when present, comes last.
TruncatedQNormal assemble(const DeformationParameter& q, const GridLayout& layout, const TruncationWindow& window,
                          int kernel_dim) {
  TruncatedQNormal::Parts parts;
  parts.q = q;
  parts.window = window;
  parts.positions = layout.positions;
  parts.weights = layout.weights;
  parts.kernel_dim = kernel_dim;

  const std::size_t atoms = layout.positions.size();
  for (long n = window.n_min; n <= window.n_max && atoms > 0; ++n) {
    Rational scale = q.power(n);
    for (std::size_t j = 0; j < atoms; ++j) {
      parts.grid.push_back({j, n, Rational(scale * layout.positions[j])});
    }
  }
  const auto dim = static_cast<Index>(parts.grid.size()) + kernel_dim;
  ExactMatrix modulus(dim, dim);
  ExactMatrix u(dim, dim);
  for (std::size_t i = 0; i < parts.grid.size(); ++i) {
    const auto idx = static_cast<Index>(i);
    modulus(idx, idx) = GaussRational(parts.grid[i].value);
    if (parts.grid[i].level - 1 >= window.n_min) u(idx - static_cast<Index>(atoms), idx) = GaussRational(1);
  }
  ExactMatrix zeta = u * modulus;
  parts.zeta = zeta.to_complex();
  parts.u = u.to_complex();
  parts.modulus = modulus.to_complex();
  parts.zeta_exact = std::move(zeta);
  parts.u_exact = std::move(u);
  parts.modulus_exact = std::move(modulus);
  return TruncatedQNormal(std::move(parts));
}

void require_window(const TruncationWindow& window) {
  if (window.n_max < window.n_min) throw ConfigurationError("truncation window has n_min > n_max");
  if (window.level_count() < 3) throw ConfigurationError("truncation window needs at least 3 levels");
}

// f(s t) on the grid, 0 on the kernel block; s t is formed exactly.
CMatrix grid_diagonal(const TruncatedQNormal& t, const CoefficientFunction& f, const Rational& scale) {
  CMatrix d = CMatrix::Zero(t.dimension(), t.dimension());
  for (std::size_t i = 0; i < t.grid().size(); ++i) {
    const auto idx = static_cast<Index>(i);
    d(idx, idx) = f(Rational(scale * t.grid()[i].value).get_d());
  }
  return d;
}

}  // namespace

TruncatedQNormal::TruncatedQNormal(Parts parts) : p_(std::move(parts)) {
  const Index dim = p_.zeta.rows();
  if (p_.zeta.cols() != dim || p_.u.rows() != dim || p_.u.cols() != dim || p_.modulus.rows() != dim ||
      p_.modulus.cols() != dim) {
    throw ConfigurationError("operator parts must be square matrices of one dimension");
  }
  if (static_cast<Index>(p_.grid.size()) + p_.kernel_dim != dim) {
    throw ConfigurationError("grid size plus kernel dimension must equal the matrix dimension");
  }
}

std::optional<Index> TruncatedQNormal::kernel_index() const {
  if (p_.kernel_dim == 0) return std::nullopt;
  return static_cast<Index>(p_.grid.size());
}

const ExactMatrix& TruncatedQNormal::zeta_exact() const {
  if (!p_.zeta_exact) throw EvaluationError("operator carries no exact matrices");
  return *p_.zeta_exact;
}

const ExactMatrix& TruncatedQNormal::u_exact() const {
  if (!p_.u_exact) throw EvaluationError("operator carries no exact matrices");
  return *p_.u_exact;
}

const ExactMatrix& TruncatedQNormal::modulus_exact() const {
  if (!p_.modulus_exact) throw EvaluationError("operator carries no exact matrices");
  return *p_.modulus_exact;
}

Index TruncatedQNormal::index_of(std::size_t atom, long level) const {
  if (level < p_.window.n_min || level > p_.window.n_max || atom >= p_.positions.size()) return -1;
  return static_cast<Index>(static_cast<std::size_t>(level - p_.window.n_min) * p_.positions.size() + atom);
}

std::vector<Index> TruncatedQNormal::interior_indices(long margin) const {
  std::vector<Index> out;
  for (std::size_t i = 0; i < p_.grid.size(); ++i) {
    if (p_.window.is_interior(p_.grid[i].level, margin)) out.push_back(static_cast<Index>(i));
  }
  return out;
}

CMatrix TruncatedQNormal::shift_power(long k) const { return shift_power_exact(k).to_complex(); }

ExactMatrix TruncatedQNormal::shift_power_exact(long k) const {
  const Index dim = dimension();
  ExactMatrix out(dim, dim);
  for (std::size_t i = 0; i < p_.grid.size(); ++i) {
    Index target = index_of(p_.grid[i].atom, p_.grid[i].level - k);
    if (target >= 0) out(target, static_cast<Index>(i)) = GaussRational(1);
  }
  if (k == 0 && p_.kernel_dim > 0) out(dim - 1, dim - 1) = GaussRational(1);
  return out;
}

TruncatedQNormal build(const QInvariantMeasure& mu, const SpectralSet& x, const TruncationWindow& window) {
  if (!(mu.support() == x)) throw DomainError("spectral set is not the support of the measure");
  const int kernel_dim = sgn(mu.zero_mass()) > 0 ? 1 : 0;
  GridLayout layout;
  for (const auto& a : mu.base_atoms()) {
    layout.positions.push_back(a.position);
    layout.weights.push_back(a.weight);
  }
  if (layout.positions.empty()) {
    // X = {0}: the zero operator on the kernel.
    return assemble(mu.q(), layout, window, std::max(kernel_dim, 1));
  }
  require_window(window);
  return assemble(mu.q(), layout, window, kernel_dim);
}

TruncatedQNormal build_classical(const SpectralSet& x, const TruncationWindow& window, bool with_kernel) {
  if (!x.q().classical()) throw DomainError("build_classical requires q = 1");
  GridLayout layout;
  for (const auto& g : x.generators()) {
    layout.positions.push_back(g);
    layout.weights.emplace_back(1);
  }
  if (layout.positions.empty()) return assemble(x.q(), layout, window, 1);
  require_window(window);
  return assemble(x.q(), layout, window, with_kernel ? 1 : 0);
}

std::vector<Atom> quadrature_atoms(const DeformationParameter& q, const std::function<double(double)>& density,
                                   int nodes) {
  q.require_deformed();
  if (nodes < 1) throw ConfigurationError("quadrature needs at least one node");
  std::vector<Atom> atoms;
  const Rational width = (1 - q.value()) / nodes;
  for (int i = 0; i < nodes; ++i) {
    Rational node = q.value() + width * Rational(2 * i + 1, 2);
    double w = density(node.get_d()) * width.get_d();
    if (!(w > 0.0)) continue;
    atoms.push_back({node, Rational(w)});
  }
  return atoms;
}

RelationDefect verify_relation(const TruncatedQNormal& t) {
  const CMatrix& z = t.zeta();
  const double q2 = t.q().as_double() * t.q().as_double();
  CMatrix residue = z * z.adjoint() - q2 * (z.adjoint() * z);
  RelationDefect d;
  d.boundary = operator_norm(residue);
  d.interior = operator_norm(compress(residue, t.interior_indices(1)));
  return d;
}

Rational verify_relation_exact(const TruncatedQNormal& t) {
  const ExactMatrix& z = t.zeta_exact();
  ExactMatrix zs = z.adjoint();
  ExactMatrix residue = z * zs - GaussRational(Rational(t.q().value() * t.q().value())) * (zs * z);
  return residue.compressed(t.interior_indices(1)).max_abs_entry();
}

CMatrix spectral_function(const TruncatedQNormal& t, const CoefficientFunction& f) {
  CMatrix d = grid_diagonal(t, f, Rational(1));
  if (auto k = t.kernel_index()) d(*k, *k) = f(0.0);
  return d;
}

ExactMatrix spectral_function_exact(const TruncatedQNormal& t, const CoefficientFunction& f) {
  ExactMatrix d(t.dimension(), t.dimension());
  for (std::size_t i = 0; i < t.grid().size(); ++i) {
    const auto idx = static_cast<Index>(i);
    d(idx, idx) = f.exact(t.grid()[i].value);
  }
  if (auto k = t.kernel_index()) d(*k, *k) = f.value_at_zero();
  return d;
}

double verify_covariance(const TruncatedQNormal& t, const CoefficientFunction& f) {
  const CMatrix& u = t.u();
  CMatrix residue = u * spectral_function(t, f) * u.adjoint() - grid_diagonal(t, f, t.q().value());
  return operator_norm(compress(residue, t.interior_indices(1)));
}

Rational verify_covariance_exact(const TruncatedQNormal& t, const CoefficientFunction& f) {
  const ExactMatrix& u = t.u_exact();
  ExactMatrix shifted(t.dimension(), t.dimension());
  for (std::size_t i = 0; i < t.grid().size(); ++i) {
    const auto idx = static_cast<Index>(i);
    shifted(idx, idx) = f.exact(Rational(t.q().value() * t.grid()[i].value));
  }
  ExactMatrix residue = u * spectral_function_exact(t, f) * u.adjoint() - shifted;
  return residue.compressed(t.interior_indices(1)).max_abs_entry();
}

CoefficientFunction level_indicator(const DeformationParameter& q, long level) {
  const Rational hi = q.power(level);
  const Rational lo = q.power(level + 1);
  const double hi_d = hi.get_d();
  const double lo_d = lo.get_d();
  return CoefficientFunction::closure(
      [lo_d, hi_d](double t) { return Complex(t > lo_d && t <= hi_d ? 1.0 : 0.0, 0.0); },
      [lo, hi](const Rational& t) { return GaussRational(t > lo && t <= hi ? 1 : 0); }, GaussRational(0), true,
      "chi(" + to_string(lo) + "," + to_string(hi) + "]");
}

PolarReport polar_check(const TruncatedQNormal& t) {
  PolarReport r;
  r.polar_defect = operator_norm(t.zeta() - t.u() * t.modulus());
  if (auto k = t.kernel_index()) r.kernel_leak = t.u().col(*k).norm();
  return r;
}

void write_spectrum_csv(std::ostream& out, const TruncatedQNormal& t) {
  out << "level,generator,value\n";
  for (const auto& g : t.grid()) {
    out << g.level << ',' << to_string(t.positions()[g.atom]) << ',' << to_string(g.value) << '\n';
  }
}

}  // namespace qcplane
