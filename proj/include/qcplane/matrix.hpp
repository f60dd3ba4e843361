#pragma once

#include <complex>
#include <iosfwd>
#include <vector>

#include <Eigen/Dense>

#include "qcplane/rational.hpp"

namespace qcplane {

using CMatrix = Eigen::MatrixXcd;
using Index = Eigen::Index;

/// Largest singular value.
double operator_norm(const CMatrix& m);

/// Principal submatrix on the given (row = column) indices.
CMatrix compress(const CMatrix& m, const std::vector<Index>& indices);

/// Dense matrix over Gaussian rationals. Dimensions here stay in the tens,
/// so the product skips zero entries instead of using a sparse layout.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(Index rows, Index cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows * cols)) {}

  static ExactMatrix identity(Index n);

  Index rows() const { return rows_; }
  Index cols() const { return cols_; }

  GaussRational& operator()(Index r, Index c) { return data_[static_cast<std::size_t>(r * cols_ + c)]; }
  const GaussRational& operator()(Index r, Index c) const { return data_[static_cast<std::size_t>(r * cols_ + c)]; }

  ExactMatrix adjoint() const;
  ExactMatrix compressed(const std::vector<Index>& indices) const;
  CMatrix to_complex() const;

  bool is_zero() const;
  Rational max_abs_entry() const;  // max over entries of max(|Re|, |Im|)

  ExactMatrix& operator+=(const ExactMatrix& o);
  ExactMatrix& operator-=(const ExactMatrix& o);
  ExactMatrix& operator*=(const GaussRational& s);

  friend ExactMatrix operator+(ExactMatrix a, const ExactMatrix& b) { return a += b; }
  friend ExactMatrix operator-(ExactMatrix a, const ExactMatrix& b) { return a -= b; }
  friend ExactMatrix operator*(ExactMatrix a, const GaussRational& s) { return a *= s; }
  friend ExactMatrix operator*(const GaussRational& s, ExactMatrix a) { return a *= s; }
  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b);

 private:
  void require_same_shape(const ExactMatrix& o, const char* op) const;

  Index rows_{0};
  Index cols_{0};
  std::vector<GaussRational> data_;
};

/// Writes "row,col,re,im" lines for every nonzero entry, after a header.
void write_matrix_csv(std::ostream& out, const CMatrix& m);

}  // namespace qcplane
