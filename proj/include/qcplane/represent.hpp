#pragma once

// Covariant representations pi(f U^k) = f(|zeta|) u^k of crossed-product
// elements on a truncated q-normal operator, norm estimates over growing
// windows, z-transforms and the factorization identities behind them.
//
// represent() acts on ker(|zeta|)^perp: the kernel block, when present, is
// left zero. represent_with_kernel() fills it with f_0(0).

#include <stdexcept>
#include <vector>

#include "qcplane/algebra.hpp"
#include "qcplane/matrix.hpp"
#include "qcplane/qnormal.hpp"

namespace qcplane {

/// Raised when a bounded transform meets a numerically singular operator.
class SingularityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

CMatrix represent(const AlgebraElement& a, const TruncatedQNormal& t);
/// Exact entries; every coefficient must be exactly evaluable.
ExactMatrix represent_exact(const AlgebraElement& a, const TruncatedQNormal& t);

/// As represent, plus f_0(0) on the kernel block. a must be VANISHING.
CMatrix represent_with_kernel(const AlgebraElement& a, const TruncatedQNormal& t);

/// body + lambda * identity (the identity covers the kernel block too).
CMatrix represent(const UnitizedElement& a, const TruncatedQNormal& t);
ExactMatrix represent_exact(const UnitizedElement& a, const TruncatedQNormal& t);

/// | ||represent_with_kernel(a)|| - ||represent(a)|| |; needs kernel_dim = 1.
double psi_check(const AlgebraElement& a, const TruncatedQNormal& t);

struct NormReport {
  std::vector<TruncationWindow> windows;
  std::vector<long> window_sizes;  // level counts
  std::vector<double> estimates;
  bool converged{false};
  double final_estimate{0.0};
};

/// Largest singular value of represent(a) on build(mu, x, w) for each window.
/// Windows are evaluated concurrently; results keep the input order.
/// Converged when the last two estimates agree to relative tolerance rel_tol.
NormReport norm_estimate(const AlgebraElement& a, const QInvariantMeasure& mu, const SpectralSet& x,
                         const std::vector<TruncationWindow>& windows, double rel_tol = 1e-8);

struct ZTransformPair {
  CMatrix original;
  CMatrix z;
};

/// z = M (1 + M*M)^{-1/2}.
ZTransformPair z_transform(const CMatrix& m);
/// z (1 - z*z)^{-1/2}; throws SingularityError when ||z|| >= 1 - 1e-10.
CMatrix pi_image(const CMatrix& z);

/// tau / sqrt(1 + tau^2).
double z_scalar(double tau);
/// z / sqrt(1 - z^2), for |z| < 1.
double tau_scalar(double z);

/// phi_n(t) = exp(-q^n (t + 1/t)), phi_n(0) = 0.
CoefficientFunction rapid_decay_family(long n, const DeformationParameter& q);

/// Interior (margin |k|) norm of
///   phi_n f u^k - phi_n prod_{j=1}^{k} z(q^j |zeta|)^{-1} f z_zeta^k          (k > 0)
///   phi_n f u*^{|k|} - phi_n prod_{j=0}^{|k|-1} z(q^{-j}|zeta|)^{-1} f z_zeta*^{|k|}  (k < 0)
/// with z_zeta = z_transform(zeta).
double verify_z_factorization(const TruncatedQNormal& t, const CoefficientFunction& f, long k, long n);

}  // namespace qcplane
