#include "qcplane/represent.hpp"

#include <cmath>
#include <future>

#include <Eigen/Eigenvalues>

namespace qcplane {

namespace {

constexpr double kEigenClamp = 1e-14;
constexpr double kSingularMargin = 1e-10;

// Column e_{j,n} goes to row e_{j,n-k} with weight f_k(t_{j,n-k}).
template <typename Matrix, typename Eval>
void add_modes(Matrix& out, const AlgebraElement& a, const TruncatedQNormal& t, Eval eval) {
  const auto& grid = t.grid();
  for (const auto& [k, f] : a.coefficients()) {
    for (std::size_t i = 0; i < grid.size(); ++i) {
      Index row = t.index_of(grid[i].atom, grid[i].level - k);
      if (row < 0) continue;
      out(row, static_cast<Index>(i)) += eval(f, grid[static_cast<std::size_t>(row)].value);
    }
  }
}

void require_finite(const CMatrix& m, const char* what) {
  if (!m.allFinite()) throw EvaluationError(std::string(what) + ": matrix has non-finite entries");
}

// (shift * I + sign * M*M)^{-1/2} through the Hermitian eigendecomposition.
CMatrix inverse_sqrt(const CMatrix& m, double sign) {
  CMatrix h = m.adjoint() * m;
  h = (sign * h).eval();
  h.diagonal().array() += 1.0;
  Eigen::SelfAdjointEigenSolver<CMatrix> eig(h);
  if (eig.info() != Eigen::Success) throw EvaluationError("eigendecomposition failed");
  Eigen::VectorXd d = eig.eigenvalues().cwiseMax(kEigenClamp).cwiseSqrt().cwiseInverse();
  return eig.eigenvectors() * d.asDiagonal() * eig.eigenvectors().adjoint();
}

CMatrix product_diagonal(const TruncatedQNormal& t, long k) {
  CMatrix d = CMatrix::Zero(t.dimension(), t.dimension());
  const double q = t.q().as_double();
  for (std::size_t i = 0; i < t.grid().size(); ++i) {
    const double v = t.grid()[i].value.get_d();
    double p = 1.0;
    if (k > 0) {
      for (long j = 1; j <= k; ++j) p /= z_scalar(std::pow(q, j) * v);
    } else {
      for (long j = 0; j < -k; ++j) p /= z_scalar(std::pow(q, -j) * v);
    }
    d(static_cast<Index>(i), static_cast<Index>(i)) = p;
  }
  return d;
}

}  // namespace

CMatrix represent(const AlgebraElement& a, const TruncatedQNormal& t) {
  CMatrix out = CMatrix::Zero(t.dimension(), t.dimension());
  add_modes(out, a, t, [](const CoefficientFunction& f, const Rational& v) { return f(v.get_d()); });
  return out;
}

ExactMatrix represent_exact(const AlgebraElement& a, const TruncatedQNormal& t) {
  ExactMatrix out(t.dimension(), t.dimension());
  add_modes(out, a, t, [](const CoefficientFunction& f, const Rational& v) { return f.exact(v); });
  return out;
}

CMatrix represent_with_kernel(const AlgebraElement& a, const TruncatedQNormal& t) {
  if (classify(a) != ElementClass::Vanishing) {
    throw DomainError("kernel extension needs f_k(0) = 0 for every k != 0");
  }
  CMatrix out = represent(a, t);
  if (auto k = t.kernel_index()) out(*k, *k) = a.coefficient(0).value_at_zero().to_complex();
  return out;
}

CMatrix represent(const UnitizedElement& a, const TruncatedQNormal& t) {
  CMatrix out = represent(a.body(), t);
  out.diagonal().array() += a.unit_scalar().to_complex();
  return out;
}

ExactMatrix represent_exact(const UnitizedElement& a, const TruncatedQNormal& t) {
  return represent_exact(a.body(), t) + a.unit_scalar() * ExactMatrix::identity(t.dimension());
}

double psi_check(const AlgebraElement& a, const TruncatedQNormal& t) {
  if (t.kernel_dim() != 1) throw ConfigurationError("psi check needs an operator with a kernel block");
  return std::abs(operator_norm(represent_with_kernel(a, t)) - operator_norm(represent(a, t)));
}

NormReport norm_estimate(const AlgebraElement& a, const QInvariantMeasure& mu, const SpectralSet& x,
                         const std::vector<TruncationWindow>& windows, double rel_tol) {
  if (windows.empty()) throw ConfigurationError("norm estimate needs at least one window");
  for (std::size_t i = 1; i < windows.size(); ++i) {
    if (windows[i].n_min > windows[i - 1].n_min || windows[i].n_max < windows[i - 1].n_max) {
      throw ConfigurationError("norm estimate windows must be nested and increasing");
    }
  }
  std::vector<std::future<double>> tasks;
  tasks.reserve(windows.size());
  for (const auto& w : windows) {
    tasks.push_back(std::async(std::launch::async, [&a, &mu, &x, w] {
      return operator_norm(represent(a, build(mu, x, w)));
    }));
  }
  NormReport r;
  r.windows = windows;
  for (std::size_t i = 0; i < windows.size(); ++i) {
    r.window_sizes.push_back(windows[i].level_count());
    r.estimates.push_back(tasks[i].get());
  }
  r.final_estimate = r.estimates.back();
  if (r.estimates.size() >= 2) {
    const double prev = r.estimates[r.estimates.size() - 2];
    const double scale = std::max(std::abs(r.final_estimate), 1e-300);
    r.converged = std::abs(r.final_estimate - prev) <= rel_tol * scale;
  }
  return r;
}

ZTransformPair z_transform(const CMatrix& m) {
  if (m.rows() != m.cols()) throw DomainError("z-transform needs a square matrix");
  require_finite(m, "z-transform");
  return {m, m * inverse_sqrt(m, 1.0)};
}

CMatrix pi_image(const CMatrix& z) {
  if (z.rows() != z.cols()) throw DomainError("pi-image needs a square matrix");
  require_finite(z, "pi-image");
  const double norm = operator_norm(z);
  if (norm >= 1.0 - kSingularMargin) {
    throw SingularityError("pi-image is unbounded: ||z|| = " + std::to_string(norm));
  }
  return z * inverse_sqrt(z, -1.0);
}

double z_scalar(double tau) { return tau / std::sqrt(1.0 + tau * tau); }

double tau_scalar(double z) {
  if (!(std::abs(z) < 1.0)) throw SingularityError("tau(z) needs |z| < 1");
  return z / std::sqrt(1.0 - z * z);
}

CoefficientFunction rapid_decay_family(long n, const DeformationParameter& q) {
  if (n < 1) throw DomainError("rapid-decay family is indexed by n >= 1");
  const double qn = std::pow(q.as_double(), static_cast<double>(n));
  return CoefficientFunction::closure(
      [qn](double t) { return t <= 0.0 ? Complex(0.0) : Complex(std::exp(-qn * (t + 1.0 / t))); }, GaussRational(0),
      true, "phi_" + std::to_string(n));
}

double verify_z_factorization(const TruncatedQNormal& t, const CoefficientFunction& f, long k, long n) {
  if (k == 0) throw DomainError("factorization identity needs k != 0");
  if (!f.value_at_zero().is_zero()) throw DomainError("factorization identity needs f(0) = 0");
  const CMatrix phi = spectral_function(t, rapid_decay_family(n, t.q()));
  const CMatrix fm = spectral_function(t, f);
  const CMatrix zz = z_transform(t.zeta()).z;
  CMatrix zpow = CMatrix::Identity(t.dimension(), t.dimension());
  const CMatrix step = k > 0 ? zz : CMatrix(zz.adjoint());
  for (long i = 0; i < std::labs(k); ++i) zpow = zpow * step;
  CMatrix lhs = phi * fm * t.shift_power(k);
  CMatrix rhs = phi * product_diagonal(t, k) * fm * zpow;
  return operator_norm(compress(lhs - rhs, t.interior_indices(std::labs(k))));
}

}  // namespace qcplane
