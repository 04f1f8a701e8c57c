#pragma once

#include "seaweed/matrix.hpp"
#include "seaweed/subspace.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace seaweed {

struct Term {
  std::size_t index;
  Scalar coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

// Sorted by index, no zero coefficients.
using SparseVector = std::vector<Term>;

// c_{ij}^r: [x_i, x_j] = sum_r c_{ij}^r x_r.
struct StructureConstant {
  std::size_t i;
  std::size_t j;
  std::size_t r;
  Scalar value;
};

// Element of a Lie algebra in its basis coordinates.
struct Element {
  Vector coords;

  std::size_t size() const { return coords.size(); }
  friend bool operator==(const Element&, const Element&) = default;
};

// Linear functional in the dual basis coordinates.
struct OneForm {
  Vector coords;

  std::size_t size() const { return coords.size(); }
  Scalar operator()(const Element& x) const;
  friend bool operator==(const OneForm&, const OneForm&) = default;
};

// A finite-dimensional Lie algebra given by structure constants, optionally
// realized by matrices. Construction enforces antisymmetry and the Jacobi
// identity, and that the realization (if any) brackets like the constants.
class LieAlgebra {
 public:
  // Constants may be listed for (i, j) or (j, i); the other is implied by
  // antisymmetry. Conflicting or diagonal entries raise ConstructionError.
  LieAlgebra(std::size_t dim, const std::vector<StructureConstant>& constants, std::string label = {},
             std::optional<std::vector<Matrix>> realization = std::nullopt);

  // The subalgebra of gl(N) spanned by `span` (coordinates are row-major
  // N x N entries); basis is the span's reduced echelon basis. Throws
  // ConstructionError if the span is not closed under commutator.
  static LieAlgebra from_subspace(const Subspace& span, std::size_t matrix_size, std::string label);

  std::size_t dim() const { return dim_; }
  const std::string& label() const { return label_; }
  const std::optional<std::vector<Matrix>>& realization() const { return realization_; }

  // [x_i, x_j] as a sparse vector.
  const SparseVector& structure(std::size_t i, std::size_t j) const { return table_[i * dim_ + j]; }
  Scalar constant(std::size_t i, std::size_t j, std::size_t r) const;
  // Nonzero constants with i < j, ordered by (i, j, r).
  std::vector<StructureConstant> constants() const;

  Element basis_element(std::size_t i) const;
  Element zero_element() const { return Element{Vector(dim_, Scalar(0))}; }

 private:
  void check_jacobi() const;
  void check_realization() const;

  std::size_t dim_;
  std::vector<SparseVector> table_;
  std::string label_;
  std::optional<std::vector<Matrix>> realization_;
};

// Throws DimensionError when x or y does not belong to g.
Element bracket(const LieAlgebra& g, const Element& x, const Element& y);

// Image of x under the matrix realization; PreconditionError without one.
Matrix realize(const LieAlgebra& g, const Element& x);

// Standard small algebras.
LieAlgebra heisenberg(std::size_t k);  // dim 2k+1, [x_i, y_i] = z
LieAlgebra abelian(std::size_t n);

}  // namespace seaweed
