#include "qcplane/coefficient.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace qcplane {

namespace detail {

enum class NodeKind { RationalLeaf, SampledLeaf, ClosureLeaf, Sum, Product, Scale, Rescale, Conj };

struct FunctionNode {
  NodeKind kind{NodeKind::RationalLeaf};
  Flavor flavor{Flavor::Rational};
  GaussRational value_at_zero;
  bool vanishes{true};
  bool bounded{true};
  bool exact{true};

  // RationalLeaf
  RationalFunction rf;
  std::vector<Complex> num_d;
  std::vector<Complex> den_d;
  // SampledLeaf
  std::vector<double> grid;
  std::vector<Complex> values;
  // ClosureLeaf
  std::function<Complex(double)> rule;
  std::function<GaussRational(const Rational&)> exact_rule;
  std::string name;
  // interior nodes
  std::shared_ptr<const FunctionNode> lhs;
  std::shared_ptr<const FunctionNode> rhs;
  GaussRational scalar;
  Complex scalar_d;
  Rational factor;
  double factor_d{1.0};
};

}  // namespace detail

namespace {

using detail::FunctionNode;
using detail::NodeKind;
using NodePtr = std::shared_ptr<const FunctionNode>;

// Rational leaves are merged eagerly while the result stays small; larger
// combinations stay lazy and are only ever evaluated pointwise.
constexpr long kFoldDegreeLimit = 16;

Flavor combine_flavor(Flavor a, Flavor b) {
  if (a == Flavor::Rational) return b;
  if (b == Flavor::Rational) return a;
  return a == b ? a : Flavor::Closure;
}

std::vector<Complex> to_complex_coeffs(const Polynomial& p) {
  std::vector<Complex> out;
  out.reserve(p.coefficients().size());
  for (const auto& c : p.coefficients()) out.push_back(c.to_complex());
  return out;
}

Complex horner(const std::vector<Complex>& coeffs, double t) {
  Complex acc(0.0, 0.0);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * t + *it;
  return acc;
}

NodePtr make_rational_leaf(RationalFunction rf) {
  auto node = std::make_shared<FunctionNode>();
  node->kind = NodeKind::RationalLeaf;
  node->flavor = Flavor::Rational;
  if (rf.denominator()(GaussRational(0)).is_zero()) {
    throw DomainError("coefficient function undefined at t = 0: " + rf.to_string());
  }
  node->value_at_zero = rf(GaussRational(0));
  auto kind = rf.limit_kind();
  node->vanishes = kind == LimitAtInfinity::Zero;
  node->bounded = kind != LimitAtInfinity::Unbounded;
  node->num_d = to_complex_coeffs(rf.numerator());
  node->den_d = to_complex_coeffs(rf.denominator());
  node->rf = std::move(rf);
  return node;
}

bool is_zero_node(const FunctionNode& n) { return n.kind == NodeKind::RationalLeaf && n.rf.numerator().is_zero(); }

const NodePtr& zero_node() {
  static const NodePtr zero = make_rational_leaf(RationalFunction());
  return zero;
}

Complex evaluate(const FunctionNode& n, double t) {
  switch (n.kind) {
    case NodeKind::RationalLeaf: {
      Complex d = horner(n.den_d, t);
      if (d == Complex(0.0, 0.0)) throw EvaluationError("denominator vanishes at t = " + std::to_string(t));
      return horner(n.num_d, t) / d;
    }
    case NodeKind::SampledLeaf: {
      const auto& g = n.grid;
      if (t <= g.front()) return n.values.front();
      if (t >= g.back()) return (n.vanishes && t > g.back()) ? Complex(0.0, 0.0) : n.values.back();
      auto hi = static_cast<std::size_t>(std::upper_bound(g.begin(), g.end(), t) - g.begin());
      std::size_t lo = hi - 1;
      double w = (t - g[lo]) / (g[hi] - g[lo]);
      return (1.0 - w) * n.values[lo] + w * n.values[hi];
    }
    case NodeKind::ClosureLeaf: {
      if (t == 0.0) return n.value_at_zero.to_complex();
      Complex v = n.rule(t);
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
        throw EvaluationError(n.name + " is not finite at t = " + std::to_string(t));
      }
      return v;
    }
    case NodeKind::Sum:
      return evaluate(*n.lhs, t) + evaluate(*n.rhs, t);
    case NodeKind::Product:
      return evaluate(*n.lhs, t) * evaluate(*n.rhs, t);
    case NodeKind::Scale:
      return n.scalar_d * evaluate(*n.lhs, t);
    case NodeKind::Rescale:
      return evaluate(*n.lhs, n.factor_d * t);
    case NodeKind::Conj:
      return std::conj(evaluate(*n.lhs, t));
  }
  return {};
}

GaussRational evaluate_exact(const FunctionNode& n, const Rational& t) {
  switch (n.kind) {
    case NodeKind::RationalLeaf:
      try {
        return n.rf(GaussRational(t));
      } catch (const DomainError& e) {
        throw EvaluationError(e.what());
      }
    case NodeKind::SampledLeaf:
    case NodeKind::ClosureLeaf:
      if (sgn(t) == 0) return n.value_at_zero;
      if (n.exact_rule) return n.exact_rule(t);
      throw EvaluationError("exact evaluation requires a rational coefficient function");
    case NodeKind::Sum:
      return evaluate_exact(*n.lhs, t) + evaluate_exact(*n.rhs, t);
    case NodeKind::Product: {
      GaussRational a = evaluate_exact(*n.lhs, t);
      if (a.is_zero()) return a;
      return a * evaluate_exact(*n.rhs, t);
    }
    case NodeKind::Scale:
      return n.scalar * evaluate_exact(*n.lhs, t);
    case NodeKind::Rescale:
      return evaluate_exact(*n.lhs, Rational(n.factor * t));
    case NodeKind::Conj:
      return evaluate_exact(*n.lhs, t).conj();
  }
  return {};
}

RationalFunction compose_rational(const FunctionNode& n) {
  switch (n.kind) {
    case NodeKind::RationalLeaf:
      return n.rf;
    case NodeKind::Sum:
      return compose_rational(*n.lhs) + compose_rational(*n.rhs);
    case NodeKind::Product:
      return compose_rational(*n.lhs) * compose_rational(*n.rhs);
    case NodeKind::Scale:
      return RationalFunction(Polynomial(n.scalar)) * compose_rational(*n.lhs);
    case NodeKind::Rescale:
      return compose_rational(*n.lhs).rescaled(n.factor);
    case NodeKind::Conj:
      return compose_rational(*n.lhs).conj();
    default:
      break;
  }
  throw EvaluationError("not a rational coefficient function");
}

long leaf_degree(const FunctionNode& n) {
  return std::max(n.rf.numerator().degree(), n.rf.denominator().degree());
}

NodePtr make_binary(NodeKind kind, NodePtr a, NodePtr b) {
  auto node = std::make_shared<FunctionNode>();
  node->kind = kind;
  node->flavor = combine_flavor(a->flavor, b->flavor);
  if (kind == NodeKind::Sum) {
    node->value_at_zero = a->value_at_zero + b->value_at_zero;
    node->vanishes = a->vanishes && b->vanishes;
  } else {
    node->value_at_zero = a->value_at_zero * b->value_at_zero;
    node->vanishes = (a->vanishes && b->bounded) || (b->vanishes && a->bounded);
  }
  node->bounded = a->bounded && b->bounded;
  node->exact = a->exact && b->exact;
  node->lhs = std::move(a);
  node->rhs = std::move(b);
  return node;
}

std::shared_ptr<FunctionNode> make_unary(NodeKind kind, NodePtr a) {
  auto node = std::make_shared<FunctionNode>();
  node->kind = kind;
  node->flavor = a->flavor;
  node->vanishes = a->vanishes;
  node->bounded = a->bounded;
  node->exact = a->exact;
  node->value_at_zero = kind == NodeKind::Conj ? a->value_at_zero.conj() : a->value_at_zero;
  node->lhs = std::move(a);
  return node;
}

}  // namespace

CoefficientFunction::CoefficientFunction() : node_(zero_node()) {}

CoefficientFunction CoefficientFunction::constant(GaussRational c) {
  return CoefficientFunction(make_rational_leaf(RationalFunction(Polynomial(std::move(c)))));
}

CoefficientFunction CoefficientFunction::identity() {
  return CoefficientFunction(make_rational_leaf(RationalFunction(Polynomial::t())));
}

CoefficientFunction CoefficientFunction::rational(RationalFunction f) {
  return CoefficientFunction(make_rational_leaf(std::move(f)));
}

CoefficientFunction CoefficientFunction::sampled(std::vector<double> grid, std::vector<Complex> values,
                                                 bool vanishes_at_infinity) {
  if (grid.empty() || grid.size() != values.size()) throw DomainError("sampled function needs matching nonempty grid and values");
  if (!std::is_sorted(grid.begin(), grid.end()) || grid.front() < 0.0 ||
      std::adjacent_find(grid.begin(), grid.end()) != grid.end()) {
    throw DomainError("sample grid must be strictly increasing in [0, inf)");
  }
  auto node = std::make_shared<FunctionNode>();
  node->kind = NodeKind::SampledLeaf;
  node->flavor = Flavor::Sampled;
  const Complex v0 = values.front();
  node->value_at_zero = GaussRational(Rational(v0.real()), Rational(v0.imag()));
  node->vanishes = vanishes_at_infinity;
  node->bounded = true;
  node->exact = false;
  node->grid = std::move(grid);
  node->values = std::move(values);
  return CoefficientFunction(std::move(node));
}

CoefficientFunction CoefficientFunction::closure(std::function<Complex(double)> rule, GaussRational value_at_zero,
                                                 bool vanishes_at_infinity, std::string name) {
  auto node = std::make_shared<FunctionNode>();
  node->kind = NodeKind::ClosureLeaf;
  node->flavor = Flavor::Closure;
  node->value_at_zero = std::move(value_at_zero);
  node->vanishes = vanishes_at_infinity;
  node->bounded = vanishes_at_infinity;
  node->exact = false;
  node->rule = std::move(rule);
  node->name = std::move(name);
  return CoefficientFunction(std::move(node));
}

CoefficientFunction CoefficientFunction::closure(std::function<Complex(double)> rule,
                                                 std::function<GaussRational(const Rational&)> exact_rule,
                                                 GaussRational value_at_zero, bool vanishes_at_infinity,
                                                 std::string name) {
  CoefficientFunction f = closure(std::move(rule), std::move(value_at_zero), vanishes_at_infinity, std::move(name));
  auto node = std::make_shared<FunctionNode>(*f.node_);
  node->exact = static_cast<bool>(exact_rule);
  node->exact_rule = std::move(exact_rule);
  return CoefficientFunction(std::move(node));
}

bool CoefficientFunction::exactly_evaluable() const { return node_->exact; }

Flavor CoefficientFunction::flavor() const { return node_->flavor; }
bool CoefficientFunction::is_literal_zero() const { return is_zero_node(*node_); }
const GaussRational& CoefficientFunction::value_at_zero() const { return node_->value_at_zero; }
bool CoefficientFunction::vanishes_at_infinity() const { return node_->vanishes; }
bool CoefficientFunction::bounded_at_infinity() const { return node_->bounded; }

Complex CoefficientFunction::operator()(double t) const {
  if (t < 0.0) throw EvaluationError("coefficient functions live on [0, inf)");
  return evaluate(*node_, t);
}

GaussRational CoefficientFunction::exact(const Rational& t) const {
  if (sgn(t) < 0) throw EvaluationError("coefficient functions live on [0, inf)");
  if (sgn(t) == 0) return node_->value_at_zero;
  return evaluate_exact(*node_, t);
}

std::optional<RationalFunction> CoefficientFunction::as_rational() const {
  if (!is_rational()) return std::nullopt;
  return compose_rational(*node_);
}

CoefficientFunction CoefficientFunction::rescaled(const Rational& s) const {
  if (sgn(s) <= 0) throw DomainError("argument rescaling factor must be positive");
  if (s == 1 || is_literal_zero()) return *this;
  if (node_->kind == NodeKind::RationalLeaf) return rational(node_->rf.rescaled(s));
  if (node_->kind == NodeKind::Rescale) return CoefficientFunction(node_->lhs).rescaled(Rational(s * node_->factor));
  auto node = make_unary(NodeKind::Rescale, node_);
  node->factor = s;
  node->factor_d = s.get_d();
  return CoefficientFunction(std::move(node));
}

CoefficientFunction CoefficientFunction::conj() const {
  if (node_->kind == NodeKind::RationalLeaf) return rational(node_->rf.conj());
  if (node_->kind == NodeKind::Conj) return CoefficientFunction(node_->lhs);
  return CoefficientFunction(make_unary(NodeKind::Conj, node_));
}

std::string CoefficientFunction::expression() const {
  if (is_rational()) return compose_rational(*node_).to_string();
  switch (node_->kind) {
    case NodeKind::SampledLeaf:
      return "sampled[" + std::to_string(node_->grid.size()) + "]";
    case NodeKind::ClosureLeaf:
      return node_->name;
    case NodeKind::Sum:
      return "(" + CoefficientFunction(node_->lhs).expression() + ")+(" + CoefficientFunction(node_->rhs).expression() + ")";
    case NodeKind::Product:
      return "(" + CoefficientFunction(node_->lhs).expression() + ")*(" + CoefficientFunction(node_->rhs).expression() + ")";
    case NodeKind::Scale:
      return "(" + to_string(node_->scalar) + ")*(" + CoefficientFunction(node_->lhs).expression() + ")";
    case NodeKind::Rescale:
      return "[" + CoefficientFunction(node_->lhs).expression() + "](" + to_string(node_->factor) + "*t)";
    case NodeKind::Conj:
      return "conj(" + CoefficientFunction(node_->lhs).expression() + ")";
    default:
      break;
  }
  return "?";
}

CoefficientFunction operator+(const CoefficientFunction& a, const CoefficientFunction& b) {
  if (a.is_literal_zero()) return b;
  if (b.is_literal_zero()) return a;
  const auto& na = *a.node_;
  const auto& nb = *b.node_;
  if (na.kind == NodeKind::RationalLeaf && nb.kind == NodeKind::RationalLeaf &&
      leaf_degree(na) + leaf_degree(nb) <= kFoldDegreeLimit) {
    return CoefficientFunction::rational(na.rf + nb.rf);
  }
  return CoefficientFunction(make_binary(NodeKind::Sum, a.node_, b.node_));
}

CoefficientFunction operator-(const CoefficientFunction& a, const CoefficientFunction& b) {
  return a + GaussRational(-1) * b;
}

CoefficientFunction operator*(const CoefficientFunction& a, const CoefficientFunction& b) {
  if (a.is_literal_zero() || b.is_literal_zero()) return {};
  const auto& na = *a.node_;
  const auto& nb = *b.node_;
  if (na.kind == NodeKind::RationalLeaf && nb.kind == NodeKind::RationalLeaf &&
      leaf_degree(na) + leaf_degree(nb) <= kFoldDegreeLimit) {
    return CoefficientFunction::rational(na.rf * nb.rf);
  }
  return CoefficientFunction(make_binary(NodeKind::Product, a.node_, b.node_));
}

CoefficientFunction operator*(const GaussRational& s, const CoefficientFunction& f) {
  if (s.is_zero() || f.is_literal_zero()) return {};
  if (s == GaussRational(1)) return f;
  if (f.node_->kind == NodeKind::RationalLeaf) {
    return CoefficientFunction::rational(RationalFunction(Polynomial(s)) * f.node_->rf);
  }
  auto node = make_unary(NodeKind::Scale, f.node_);
  node->scalar = s;
  node->scalar_d = s.to_complex();
  node->value_at_zero = s * f.node_->value_at_zero;
  return CoefficientFunction(std::move(node));
}

}  // namespace qcplane
