#include "seaweed/matrix.hpp"

#include "seaweed/errors.hpp"

#include <algorithm>
#include <utility>

namespace seaweed {

namespace {

using IntRow = std::vector<mpz_class>;

// Scales each row by the lcm of its denominators so every entry is integral.
std::vector<IntRow> integral_rows(const Matrix& m) {
  std::vector<IntRow> rows(m.rows(), IntRow(m.cols()));
  mpz_class lcm;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    lcm = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const auto& den = m(i, j).get_den();
      if (den != 1) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
    }
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Scalar& x = m(i, j);
      if (x == 0) continue;
      if (lcm == 1) {
        rows[i][j] = x.get_num();
      } else {
        mpz_divexact(rows[i][j].get_mpz_t(), lcm.get_mpz_t(), x.get_den().get_mpz_t());
        rows[i][j] *= x.get_num();
      }
    }
  }
  return rows;
}

void divide_by_content(IntRow& row, std::size_t from) {
  mpz_class g = 0;
  for (std::size_t j = from; j < row.size(); ++j) {
    if (row[j] != 0) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), row[j].get_mpz_t());
      if (g == 1) return;
    }
  }
  if (g == 0 || g == 1) return;
  for (std::size_t j = from; j < row.size(); ++j) {
    if (row[j] != 0) mpz_divexact(row[j].get_mpz_t(), row[j].get_mpz_t(), g.get_mpz_t());
  }
}

// Picks the candidate pivot with the smallest bit length to limit growth.
std::size_t choose_pivot(const std::vector<IntRow>& rows, std::size_t start, std::size_t col) {
  std::size_t best = rows.size();
  std::size_t best_bits = 0;
  for (std::size_t i = start; i < rows.size(); ++i) {
    if (rows[i][col] == 0) continue;
    const std::size_t bits = mpz_sizeinbase(rows[i][col].get_mpz_t(), 2);
    if (best == rows.size() || bits < best_bits) {
      best = i;
      best_bits = bits;
      if (bits == 1) break;
    }
  }
  return best;
}

}  // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Scalar(0)) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<Scalar>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionError("Matrix: ragged initializer");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw DimensionError("Matrix::from_rows: row length mismatch");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Matrix Matrix::from_flat(const Vector& flat, std::size_t rows, std::size_t cols) {
  if (flat.size() != rows * cols) throw DimensionError("Matrix::from_flat: size mismatch");
  Matrix m(rows, cols);
  m.data_ = flat;
  return m;
}

Vector Matrix::row(std::size_t i) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Vector Matrix::column(std::size_t j) const {
  Vector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool Matrix::is_zero() const { return seaweed::is_zero(data_); }

bool Matrix::is_skew_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i; j < cols_; ++j)
      if ((*this)(i, j) != -(*this)(j, i)) return false;
  return true;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionError("matrix sum: shape mismatch");
  Matrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) += b(i, j);
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionError("matrix difference: shape mismatch");
  Matrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) -= b(i, j);
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw DimensionError("matrix product: shape mismatch");
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Scalar& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (b(k, j) != 0) out(i, j) += aik * b(k, j);
      }
    }
  }
  return out;
}

Matrix operator*(const Scalar& c, const Matrix& m) {
  Matrix out = m;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) *= c;
  return out;
}

Vector operator*(const Matrix& m, const Vector& v) {
  if (m.cols() != v.size()) throw DimensionError("matrix-vector product: shape mismatch");
  Vector out(m.rows(), Scalar(0));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j) != 0 && v[j] != 0) out[i] += m(i, j) * v[j];
    }
  }
  return out;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

EchelonForm rref(const Matrix& m) {
  auto rows = integral_rows(m);
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  mpz_class g, f_pivot, f_row;
  for (std::size_t c = 0; c < m.cols() && lead < rows.size(); ++c) {
    const std::size_t p = choose_pivot(rows, lead, c);
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[lead]);
    divide_by_content(rows[lead], c);
    const IntRow& prow = rows[lead];
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == lead || rows[i][c] == 0) continue;
      IntRow& row = rows[i];
      mpz_gcd(g.get_mpz_t(), prow[c].get_mpz_t(), row[c].get_mpz_t());
      mpz_divexact(f_pivot.get_mpz_t(), prow[c].get_mpz_t(), g.get_mpz_t());
      mpz_divexact(f_row.get_mpz_t(), row[c].get_mpz_t(), g.get_mpz_t());
      // row <- f_pivot * row - f_row * prow. Columns before c are already zero
      // in prow; rows above keep their earlier pivots, scaled.
      for (std::size_t j = 0; j < row.size(); ++j) {
        if (j < c && row[j] == 0) continue;
        if (f_pivot != 1) row[j] *= f_pivot;
        if (j >= c && prow[j] != 0) mpz_submul(row[j].get_mpz_t(), f_row.get_mpz_t(), prow[j].get_mpz_t());
      }
      divide_by_content(row, 0);
    }
    pivots.push_back(c);
    ++lead;
  }

  EchelonForm out{Matrix(pivots.size(), m.cols()), pivots};
  for (std::size_t k = 0; k < pivots.size(); ++k) {
    const mpz_class& piv = rows[k][pivots[k]];
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (rows[k][j] == 0) continue;
      Scalar x(rows[k][j], piv);
      x.canonicalize();
      out.reduced(k, j) = std::move(x);
    }
  }
  return out;
}

std::size_t rank(const Matrix& m) {
  auto a = integral_rows(m);
  const std::size_t n_rows = a.size();
  const std::size_t n_cols = m.cols();
  mpz_class prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n_cols && r < n_rows; ++c) {
    const std::size_t p = choose_pivot(a, r, c);
    if (p == n_rows) continue;
    std::swap(a[p], a[r]);
    const mpz_class& piv = a[r][c];
    for (std::size_t i = r + 1; i < n_rows; ++i) {
      IntRow& row = a[i];
      const mpz_class lead = row[c];
      for (std::size_t j = c + 1; j < n_cols; ++j) {
        // row[j] = (piv * row[j] - lead * a[r][j]) / prev, exact.
        mpz_mul(row[j].get_mpz_t(), row[j].get_mpz_t(), piv.get_mpz_t());
        if (lead != 0 && a[r][j] != 0) mpz_submul(row[j].get_mpz_t(), lead.get_mpz_t(), a[r][j].get_mpz_t());
        if (prev != 1) mpz_divexact(row[j].get_mpz_t(), row[j].get_mpz_t(), prev.get_mpz_t());
      }
      row[c] = 0;
    }
    prev = piv;
    ++r;
  }
  return r;
}

Matrix inverse(const Matrix& m) {
  if (!m.is_square()) throw PreconditionError("inverse: matrix is not square");
  const std::size_t n = m.rows();
  if (n == 0) return m;
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  const EchelonForm ef = rref(aug);
  if (ef.pivots.size() < n || ef.pivots[n - 1] != n - 1) {
    throw PreconditionError("inverse: matrix is singular");
  }
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = ef.reduced(i, n + j);
  return inv;
}

}  // namespace seaweed
