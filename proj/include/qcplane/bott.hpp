#pragma once

// Bott projections P_{+n}, P_{-n} as 2x2 matrices over the unitization
// C0 (+) C, written in canonical crossed-product form through
//   zeta^n  = q^{n(n+1)/2} t^n U^n,   zeta*^n = q^{-n(n-1)/2} t^n U^{-n}.

#include <array>
#include <utility>
#include <vector>

#include "qcplane/algebra.hpp"
#include "qcplane/qnormal.hpp"

namespace qcplane {

/// (mode, coefficient) of zeta^n for n > 0 and of zeta*^{|n|} for n < 0.
std::pair<long, CoefficientFunction> canonical_power(long n, const DeformationParameter& q);
/// The same as a single-mode algebra element.
AlgebraElement canonical_power_element(long n, const DeformationParameter& q);

enum class BottSign { Plus, Minus };

using UnitizedMatrix = std::array<std::array<UnitizedElement, 2>, 2>;

struct ProjectionCandidate {
  long n;
  BottSign sign;
  DeformationParameter q;
  UnitizedMatrix entries;
};

ProjectionCandidate bott_projection(long n, BottSign sign, const DeformationParameter& q);

/// diag(1, 0) with unit-scalar entries.
ProjectionCandidate trivial_projection(long n, BottSign sign, const DeformationParameter& q);
/// Every entry multiplied by s (s = 2 is the negative control).
ProjectionCandidate scaled(const ProjectionCandidate& p, const GaussRational& s);

UnitizedMatrix matrix_product(const UnitizedMatrix& a, const UnitizedMatrix& b);
UnitizedMatrix matrix_adjoint(const UnitizedMatrix& a);
UnitizedMatrix matrix_difference(const UnitizedMatrix& a, const UnitizedMatrix& b);

struct ExactProjectionReport {
  Rational idempotent_residue{0};    // P P - P
  Rational selfadjoint_residue{0};   // P* - P
  Rational max_residue{0};
  std::size_t points_checked{0};
};

/// Exact evaluation of every coefficient of P P - P and P* - P at the samples.
ExactProjectionReport verify_projection_exact(const ProjectionCandidate& p, const std::vector<Rational>& samples);

/// Generators {1, (1+q)/2} at levels m in [-12, 12], plus 0.
std::vector<Rational> bott_sample_points(const DeformationParameter& q);

struct NumericProjectionReport {
  double idempotent_defect{0.0};
  double selfadjoint_defect{0.0};
  long interior_margin{0};
};

/// Block matrix B over represent(., T); interior norms (margin 2n) of B B - B
/// and B* - B. The window must have more than 4n levels.
NumericProjectionReport verify_projection_numeric(const ProjectionCandidate& p, const TruncatedQNormal& t);

/// Off-diagonal entries: modes +-n only, rational coefficients vanishing at
/// 0 and at infinity. Diagonal entries: mode 0 only, RATIONAL bodies vanishing
/// at infinity, values at 0 in {0, 1}.
bool entry_structure_ok(const ProjectionCandidate& p);

/// trace(represent(P)) - trace(represent(diag(1, 0))). Exploratory only.
double winding_diagnostic(const ProjectionCandidate& p, const TruncatedQNormal& t);

}  // namespace qcplane
