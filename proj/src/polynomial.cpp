#include "qcplane/polynomial.hpp"

#include <sstream>

namespace qcplane {

namespace {

std::string coefficient_text(const GaussRational& c) {
  auto rational_text = [](const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
  };
  if (c.is_real()) return rational_text(c.real());
  if (sgn(c.real()) == 0 && c.imag() == 1) return "i";
  std::string out = "(";
  if (sgn(c.real()) != 0) out += rational_text(c.real()) + (sgn(c.imag()) > 0 ? "+" : "");
  out += rational_text(c.imag()) + "*i)";
  return out;
}

}  // namespace

Polynomial::Polynomial(std::vector<GaussRational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial::Polynomial(GaussRational constant) : coeffs_{std::move(constant)} { trim(); }

Polynomial Polynomial::monomial(GaussRational c, std::size_t degree) {
  std::vector<GaussRational> coeffs(degree + 1);
  coeffs[degree] = std::move(c);
  return Polynomial(std::move(coeffs));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

GaussRational Polynomial::coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : GaussRational(); }

GaussRational Polynomial::leading() const { return coeffs_.empty() ? GaussRational() : coeffs_.back(); }

GaussRational Polynomial::operator()(const GaussRational& t) const {
  GaussRational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= t;
    acc += *it;
  }
  return acc;
}

Complex Polynomial::operator()(Complex t) const {
  Complex acc(0.0, 0.0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + it->to_complex();
  return acc;
}

Polynomial Polynomial::conj() const {
  std::vector<GaussRational> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c.conj());
  return Polynomial(std::move(out));
}

Polynomial Polynomial::rescaled(const Rational& s) const {
  std::vector<GaussRational> out;
  out.reserve(coeffs_.size());
  Rational factor(1);
  for (const auto& c : coeffs_) {
    out.push_back(c * GaussRational(factor));
    factor *= s;
  }
  return Polynomial(std::move(out));
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial result(GaussRational(1));
  for (unsigned i = 0; i < exponent; ++i) result = result * *this;
  return result;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const GaussRational& s) {
  for (auto& c : coeffs_) c *= s;
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<GaussRational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(out));
}

void Polynomial::divmod(const Polynomial& a, const Polynomial& b, Polynomial& quotient, Polynomial& remainder) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  remainder = a;
  std::vector<GaussRational> q(a.coeffs_.size() >= b.coeffs_.size() ? a.coeffs_.size() - b.coeffs_.size() + 1 : 0);
  const GaussRational lead = b.leading();
  while (!remainder.is_zero() && remainder.degree() >= b.degree()) {
    auto shift = static_cast<std::size_t>(remainder.degree() - b.degree());
    GaussRational factor = remainder.leading() / lead;
    q[shift] += factor;
    remainder -= monomial(factor, shift) * b;
  }
  quotient = Polynomial(std::move(q));
}

Polynomial Polynomial::gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial quot;
    Polynomial rem;
    divmod(a, b, quot, rem);
    a = std::move(b);
    b = std::move(rem);
  }
  if (a.is_zero()) return a;
  return a * (GaussRational(1) / a.leading());
}

std::string Polynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const auto& c = coeffs_[k];
    if (c.is_zero()) continue;
    bool negative = c.is_real() && sgn(c.real()) < 0;
    GaussRational magnitude = negative ? -c : c;
    if (negative) {
      out << "-";
    } else if (!first) {
      out << "+";
    }
    bool unit = magnitude == GaussRational(1);
    if (k == 0) {
      out << coefficient_text(magnitude);
    } else {
      if (!unit) out << coefficient_text(magnitude) << "*";
      out << "t";
      if (k > 1) out << "^" << k;
    }
    first = false;
  }
  return out.str();
}

RationalFunction::RationalFunction(Polynomial numerator, Polynomial denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_.is_zero()) throw DomainError("rational function with zero denominator");
  normalize();
}

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = Polynomial(GaussRational(1));
    return;
  }
  if (den_.degree() > 0 && num_.degree() > 0) {
    Polynomial g = Polynomial::gcd(num_, den_);
    if (g.degree() > 0) {
      Polynomial q;
      Polynomial r;
      Polynomial::divmod(num_, g, q, r);
      num_ = q;
      Polynomial::divmod(den_, g, q, r);
      den_ = q;
    }
  }
  const auto& dc = den_.coefficients();
  std::size_t low = 0;
  while (dc[low].is_zero()) ++low;
  GaussRational scale = GaussRational(1) / dc[low];
  num_ *= scale;
  den_ *= scale;
}

GaussRational RationalFunction::operator()(const GaussRational& t) const {
  GaussRational d = den_(t);
  if (d.is_zero()) throw DomainError("rational function undefined at t = " + qcplane::to_string(t));
  return num_(t) / d;
}

Complex RationalFunction::operator()(Complex t) const {
  Complex d = den_(t);
  if (d == Complex(0.0, 0.0)) throw DomainError("rational function undefined at a sample point");
  return num_(t) / d;
}

LimitAtInfinity RationalFunction::limit_kind() const {
  if (num_.degree() < den_.degree()) return LimitAtInfinity::Zero;
  if (num_.degree() == den_.degree()) return LimitAtInfinity::Finite;
  return LimitAtInfinity::Unbounded;
}

GaussRational RationalFunction::limit_at_infinity() const {
  switch (limit_kind()) {
    case LimitAtInfinity::Zero:
      return {};
    case LimitAtInfinity::Finite:
      return num_.leading() / den_.leading();
    case LimitAtInfinity::Unbounded:
      break;
  }
  throw DomainError("rational function is unbounded at infinity");
}

RationalFunction RationalFunction::reciprocal() const {
  if (num_.is_zero()) throw DomainError("reciprocal of the zero function");
  return {den_, num_};
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.den_ == b.den_) return {a.num_ + b.num_, a.den_};
  return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
  if (a.den_ == b.den_) return {a.num_ - b.num_, a.den_};
  return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return {a.num_ * b.num_, a.den_ * b.den_};
}

std::string RationalFunction::to_string() const {
  if (den_ == Polynomial(GaussRational(1))) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace qcplane
