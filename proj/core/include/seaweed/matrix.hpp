#pragma once

#include "seaweed/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace seaweed {

// Dense row-major matrix over the rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::initializer_list<std::initializer_list<Scalar>> rows);

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
  // Reshape a length rows*cols vector (row-major) into a matrix.
  static Matrix from_flat(const Vector& flat, std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vector row(std::size_t i) const;
  Vector column(std::size_t j) const;
  // Row-major flattening, the coordinate vector of the matrix in gl(N).
  const Vector& flat() const { return data_; }

  Matrix transpose() const;
  bool is_zero() const;
  bool is_skew_symmetric() const;

  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Vector data_;
};

Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator*(const Scalar& c, const Matrix& m);
Vector operator*(const Matrix& m, const Vector& v);

// AB - BA
Matrix commutator(const Matrix& a, const Matrix& b);

// Reduced row echelon form. `reduced` keeps only the nonzero rows, so
// reduced.rows() == pivots.size() == rank.
struct EchelonForm {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

EchelonForm rref(const Matrix& m);

// Rank by fraction-free (Bareiss) elimination over the integers after
// clearing row denominators.
std::size_t rank(const Matrix& m);

// Throws PreconditionError when m is singular or not square.
Matrix inverse(const Matrix& m);

}  // namespace seaweed
