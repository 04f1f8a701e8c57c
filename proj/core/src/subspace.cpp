#include "seaweed/subspace.hpp"

#include "seaweed/errors.hpp"

namespace seaweed {

Subspace::Subspace(std::size_t ambient_dim) : ambient_dim_(ambient_dim) {}

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<Vector>& vectors) {
  Subspace out(ambient_dim);
  if (vectors.empty()) return out;
  const EchelonForm ef = rref(Matrix::from_rows(vectors, ambient_dim));
  out.pivots_ = ef.pivots;
  out.basis_.reserve(ef.pivots.size());
  for (std::size_t k = 0; k < ef.pivots.size(); ++k) out.basis_.push_back(ef.reduced.row(k));
  return out;
}

Subspace Subspace::full(std::size_t ambient_dim) {
  Subspace out(ambient_dim);
  for (std::size_t i = 0; i < ambient_dim; ++i) {
    out.basis_.push_back(unit_vector(ambient_dim, i));
    out.pivots_.push_back(i);
  }
  return out;
}

Matrix Subspace::basis_matrix() const { return Matrix::from_rows(basis_, ambient_dim_); }

std::optional<Vector> Subspace::coordinates(const Vector& v) const {
  if (v.size() != ambient_dim_) throw DimensionError("Subspace: vector length does not match ambient dimension");
  // In reduced echelon form the coefficient of basis_[k] is v[pivots_[k]].
  Vector coeffs(basis_.size());
  Vector residual = v;
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    coeffs[k] = v[pivots_[k]];
    if (coeffs[k] != 0) residual = axpy(residual, -coeffs[k], basis_[k]);
  }
  if (!seaweed::is_zero(residual)) return std::nullopt;
  return coeffs;
}

bool Subspace::contains(const Vector& v) const { return coordinates(v).has_value(); }

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_dim_ != ambient_dim_) throw DimensionError("Subspace::contains: ambient dimension mismatch");
  for (const auto& b : other.basis_) {
    if (!contains(b)) return false;
  }
  return true;
}

Subspace nullspace(const Matrix& m) {
  const std::size_t n = m.cols();
  const EchelonForm ef = rref(m);
  std::vector<bool> is_pivot(n, false);
  for (auto p : ef.pivots) is_pivot[p] = true;
  std::vector<Vector> vectors;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vector v(n, Scalar(0));
    v[f] = 1;
    for (std::size_t k = 0; k < ef.pivots.size(); ++k) v[ef.pivots[k]] = -ef.reduced(k, f);
    vectors.push_back(std::move(v));
  }
  return Subspace::span(n, vectors);
}

Subspace annihilator(const Subspace& u) {
  if (u.is_zero()) return Subspace::full(u.ambient_dim());
  return nullspace(u.basis_matrix());
}

Subspace sum(const Subspace& u, const Subspace& v) {
  if (u.ambient_dim() != v.ambient_dim()) throw DimensionError("sum: ambient dimension mismatch");
  std::vector<Vector> all = u.basis();
  all.insert(all.end(), v.basis().begin(), v.basis().end());
  return Subspace::span(u.ambient_dim(), all);
}

Subspace intersect(const Subspace& u, const Subspace& v) {
  if (u.ambient_dim() != v.ambient_dim()) throw DimensionError("intersect: ambient dimension mismatch");
  if (u.is_zero() || v.is_zero()) return Subspace(u.ambient_dim());
  const Subspace constraints = sum(annihilator(u), annihilator(v));
  if (constraints.is_zero()) return Subspace::full(u.ambient_dim());
  return nullspace(constraints.basis_matrix());
}

}  // namespace seaweed
