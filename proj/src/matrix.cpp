#include "qcplane/matrix.hpp"

#include <iomanip>
#include <ostream>
#include <string>

namespace qcplane {

double operator_norm(const CMatrix& m) {
  if (m.size() == 0) return 0.0;
  Eigen::BDCSVD<CMatrix> svd(m);
  return svd.singularValues().size() > 0 ? svd.singularValues()(0) : 0.0;
}

CMatrix compress(const CMatrix& m, const std::vector<Index>& indices) {
  auto n = static_cast<Index>(indices.size());
  CMatrix out(n, n);
  for (Index r = 0; r < n; ++r) {
    for (Index c = 0; c < n; ++c) out(r, c) = m(indices[static_cast<std::size_t>(r)], indices[static_cast<std::size_t>(c)]);
  }
  return out;
}

ExactMatrix ExactMatrix::identity(Index n) {
  ExactMatrix m(n, n);
  for (Index i = 0; i < n; ++i) m(i, i) = GaussRational(1);
  return m;
}

ExactMatrix ExactMatrix::adjoint() const {
  ExactMatrix out(cols_, rows_);
  for (Index r = 0; r < rows_; ++r) {
    for (Index c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c).conj();
  }
  return out;
}

ExactMatrix ExactMatrix::compressed(const std::vector<Index>& indices) const {
  auto n = static_cast<Index>(indices.size());
  ExactMatrix out(n, n);
  for (Index r = 0; r < n; ++r) {
    for (Index c = 0; c < n; ++c) out(r, c) = (*this)(indices[static_cast<std::size_t>(r)], indices[static_cast<std::size_t>(c)]);
  }
  return out;
}

CMatrix ExactMatrix::to_complex() const {
  CMatrix out(rows_, cols_);
  for (Index r = 0; r < rows_; ++r) {
    for (Index c = 0; c < cols_; ++c) out(r, c) = (*this)(r, c).to_complex();
  }
  return out;
}

bool ExactMatrix::is_zero() const {
  for (const auto& v : data_) {
    if (!v.is_zero()) return false;
  }
  return true;
}

Rational ExactMatrix::max_abs_entry() const {
  Rational best(0);
  for (const auto& v : data_) {
    Rational m = v.max_component();
    if (m > best) best = m;
  }
  return best;
}

void ExactMatrix::require_same_shape(const ExactMatrix& o, const char* op) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument(std::string("shape mismatch in exact matrix ") + op);
}

ExactMatrix& ExactMatrix::operator+=(const ExactMatrix& o) {
  require_same_shape(o, "sum");
  for (std::size_t i = 0; i < data_.size(); ++i) {
    if (!o.data_[i].is_zero()) data_[i] += o.data_[i];
  }
  return *this;
}

ExactMatrix& ExactMatrix::operator-=(const ExactMatrix& o) {
  require_same_shape(o, "difference");
  for (std::size_t i = 0; i < data_.size(); ++i) {
    if (!o.data_[i].is_zero()) data_[i] -= o.data_[i];
  }
  return *this;
}

ExactMatrix& ExactMatrix::operator*=(const GaussRational& s) {
  for (auto& v : data_) {
    if (!v.is_zero()) v *= s;
  }
  return *this;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("shape mismatch in exact matrix product");
  ExactMatrix out(a.rows_, b.cols_);
  for (Index r = 0; r < a.rows_; ++r) {
    for (Index k = 0; k < a.cols_; ++k) {
      const auto& lhs = a(r, k);
      if (lhs.is_zero()) continue;
      for (Index c = 0; c < b.cols_; ++c) {
        const auto& rhs = b(k, c);
        if (!rhs.is_zero()) out(r, c) += lhs * rhs;
      }
    }
  }
  return out;
}

bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

void write_matrix_csv(std::ostream& out, const CMatrix& m) {
  out << "row,col,re,im\n";
  out << std::setprecision(17);
  for (Index r = 0; r < m.rows(); ++r) {
    for (Index c = 0; c < m.cols(); ++c) {
      const Complex v = m(r, c);
      if (v == Complex(0.0, 0.0)) continue;
      out << r << ',' << c << ',' << v.real() << ',' << v.imag() << '\n';
    }
  }
}

}  // namespace qcplane
