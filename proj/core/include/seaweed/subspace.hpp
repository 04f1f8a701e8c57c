#pragma once

#include "seaweed/matrix.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace seaweed {

// A linear subspace of Q^n stored by its reduced row echelon basis. Two
// subspaces are equal exactly when their stored bases are equal.
class Subspace {
 public:
  // The zero subspace of Q^ambient_dim.
  explicit Subspace(std::size_t ambient_dim = 0);

  static Subspace span(std::size_t ambient_dim, const std::vector<Vector>& vectors);
  static Subspace full(std::size_t ambient_dim);

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dim() const { return basis_.size(); }
  bool is_zero() const { return basis_.empty(); }

  const std::vector<Vector>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  // Basis vectors as the rows of a dim() x ambient_dim() matrix.
  Matrix basis_matrix() const;

  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;
  // Coefficients of v in basis(); empty when v is not in the subspace.
  std::optional<Vector> coordinates(const Vector& v) const;

  friend bool operator==(const Subspace& a, const Subspace& b) = default;

 private:
  std::size_t ambient_dim_;
  std::vector<Vector> basis_;
  std::vector<std::size_t> pivots_;
};

// {v : M v = 0}, of dimension cols(M) - rank(M).
Subspace nullspace(const Matrix& m);

// {f : f(u) = 0 for all u in U}, identifying Q^n with its dual by coordinates.
Subspace annihilator(const Subspace& u);

// U ∩ V = ann(ann U + ann V). Throws DimensionError on mismatched ambients.
Subspace intersect(const Subspace& u, const Subspace& v);

Subspace sum(const Subspace& u, const Subspace& v);

}  // namespace seaweed
