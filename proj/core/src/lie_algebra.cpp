#include "seaweed/lie_algebra.hpp"

#include "seaweed/errors.hpp"

#include <algorithm>
#include <map>
#include <tuple>
#include <utility>

namespace seaweed {

namespace {

// Dense accumulator that remembers which slots it touched.
class Accumulator {
 public:
  explicit Accumulator(std::size_t n) : values_(n, Scalar(0)), touched_(n, false) {}

  void add(std::size_t r, const Scalar& c) {
    if (!touched_[r]) {
      touched_[r] = true;
      used_.push_back(r);
    }
    values_[r] += c;
  }

  bool all_zero() const {
    return std::all_of(used_.begin(), used_.end(), [&](std::size_t r) { return values_[r] == 0; });
  }

  void clear() {
    for (auto r : used_) {
      values_[r] = 0;
      touched_[r] = false;
    }
    used_.clear();
  }

 private:
  Vector values_;
  std::vector<bool> touched_;
  std::vector<std::size_t> used_;
};

}  // namespace

Scalar OneForm::operator()(const Element& x) const {
  if (x.size() != coords.size()) throw DimensionError("one-form and element have different dimensions");
  return dot(coords, x.coords);
}

LieAlgebra::LieAlgebra(std::size_t dim, const std::vector<StructureConstant>& constants, std::string label,
                       std::optional<std::vector<Matrix>> realization)
    : dim_(dim), table_(dim * dim), label_(std::move(label)), realization_(std::move(realization)) {
  // Normalize everything to i < j, rejecting conflicts.
  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, Scalar> upper;
  for (const auto& c : constants) {
    if (c.i >= dim || c.j >= dim || c.r >= dim) {
      throw ConstructionError("structure constant index out of range");
    }
    if (c.value == 0) continue;
    if (c.i == c.j) throw ConstructionError("antisymmetry violated: nonzero [x_i, x_i]");
    const bool swapped = c.i > c.j;
    const auto key = swapped ? std::make_tuple(c.j, c.i, c.r) : std::make_tuple(c.i, c.j, c.r);
    const Scalar value = swapped ? Scalar(-c.value) : c.value;
    auto [it, inserted] = upper.emplace(key, value);
    if (!inserted && it->second != value) {
      throw ConstructionError("antisymmetry violated: conflicting values for a bracket and its reverse");
    }
  }
  for (const auto& [key, value] : upper) {
    const auto [i, j, r] = key;
    table_[i * dim_ + j].push_back(Term{r, value});
    table_[j * dim_ + i].push_back(Term{r, -value});
  }
  check_jacobi();
  if (realization_) check_realization();
}

LieAlgebra LieAlgebra::from_subspace(const Subspace& span, std::size_t matrix_size, std::string label) {
  if (span.ambient_dim() != matrix_size * matrix_size) {
    throw DimensionError("from_subspace: ambient dimension is not matrix_size^2");
  }
  std::vector<Matrix> basis;
  basis.reserve(span.dim());
  for (const auto& v : span.basis()) basis.push_back(Matrix::from_flat(v, matrix_size, matrix_size));
  std::vector<StructureConstant> constants;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      const Matrix c = commutator(basis[i], basis[j]);
      if (c.is_zero()) continue;
      const auto coords = span.coordinates(c.flat());
      if (!coords) throw ConstructionError("from_subspace: span is not closed under the commutator");
      for (std::size_t r = 0; r < coords->size(); ++r) {
        if ((*coords)[r] != 0) constants.push_back({i, j, r, (*coords)[r]});
      }
    }
  }
  return LieAlgebra(span.dim(), constants, std::move(label), std::move(basis));
}

Scalar LieAlgebra::constant(std::size_t i, std::size_t j, std::size_t r) const {
  for (const auto& t : structure(i, j)) {
    if (t.index == r) return t.coeff;
  }
  return 0;
}

std::vector<StructureConstant> LieAlgebra::constants() const {
  std::vector<StructureConstant> out;
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i + 1; j < dim_; ++j)
      for (const auto& t : structure(i, j)) out.push_back({i, j, t.index, t.coeff});
  return out;
}

Element LieAlgebra::basis_element(std::size_t i) const {
  if (i >= dim_) throw DimensionError("basis index out of range");
  return Element{unit_vector(dim_, i)};
}

void LieAlgebra::check_jacobi() const {
  Accumulator acc(dim_);
  // sum over cyclic (a, b, c) of [[x_a, x_b], x_c] = sum_s c_ab^s [x_s, x_c]
  auto add_term = [&](std::size_t a, std::size_t b, std::size_t c) {
    for (const auto& s : structure(a, b)) {
      for (const auto& r : structure(s.index, c)) acc.add(r.index, s.coeff * r.coeff);
    }
  };
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = i + 1; j < dim_; ++j) {
      for (std::size_t k = j + 1; k < dim_; ++k) {
        add_term(i, j, k);
        add_term(j, k, i);
        add_term(k, i, j);
        if (!acc.all_zero()) {
          throw ConstructionError("Jacobi identity fails for basis triple (" + std::to_string(i) + ", " +
                                  std::to_string(j) + ", " + std::to_string(k) + ")");
        }
        acc.clear();
      }
    }
  }
}

void LieAlgebra::check_realization() const {
  const auto& mats = *realization_;
  if (mats.size() != dim_) throw ConstructionError("realization has the wrong number of matrices");
  if (dim_ == 0) return;
  const std::size_t n = mats.front().rows();
  for (const auto& m : mats) {
    if (m.rows() != n || m.cols() != n) throw ConstructionError("realization matrices must share one square shape");
  }
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = i + 1; j < dim_; ++j) {
      Matrix expected(n, n);
      for (const auto& t : structure(i, j)) expected = expected + t.coeff * mats[t.index];
      if (commutator(mats[i], mats[j]) != expected) {
        throw ConstructionError("realization does not match structure constants for basis pair (" +
                                std::to_string(i) + ", " + std::to_string(j) + ")");
      }
    }
  }
}

Element bracket(const LieAlgebra& g, const Element& x, const Element& y) {
  if (x.size() != g.dim() || y.size() != g.dim()) throw DimensionError("bracket: element from a different algebra");
  Element out = g.zero_element();
  for (std::size_t i = 0; i < g.dim(); ++i) {
    if (x.coords[i] == 0) continue;
    for (std::size_t j = 0; j < g.dim(); ++j) {
      if (y.coords[j] == 0 || i == j) continue;
      const Scalar xy = x.coords[i] * y.coords[j];
      for (const auto& t : g.structure(i, j)) out.coords[t.index] += xy * t.coeff;
    }
  }
  return out;
}

Matrix realize(const LieAlgebra& g, const Element& x) {
  if (!g.realization()) throw PreconditionError("algebra '" + g.label() + "' has no matrix realization");
  if (x.size() != g.dim()) throw DimensionError("realize: element from a different algebra");
  const auto& mats = *g.realization();
  Matrix out(mats.empty() ? 0 : mats.front().rows(), mats.empty() ? 0 : mats.front().cols());
  for (std::size_t i = 0; i < g.dim(); ++i) {
    if (x.coords[i] != 0) out = out + x.coords[i] * mats[i];
  }
  return out;
}

LieAlgebra heisenberg(std::size_t k) {
  // Basis x_1, y_1, ..., x_k, y_k, z realized in (k+2) x (k+2) matrices.
  const std::size_t dim = 2 * k + 1;
  const std::size_t n = k + 2;
  const std::size_t z = 2 * k;
  std::vector<StructureConstant> constants;
  std::vector<Matrix> mats(dim, Matrix(n, n));
  for (std::size_t i = 0; i < k; ++i) {
    constants.push_back({2 * i, 2 * i + 1, z, Scalar(1)});
    mats[2 * i](0, i + 1) = 1;
    mats[2 * i + 1](i + 1, n - 1) = 1;
  }
  mats[z](0, n - 1) = 1;
  return LieAlgebra(dim, constants, "heisenberg(" + std::to_string(k) + ")", std::move(mats));
}

LieAlgebra abelian(std::size_t n) {
  std::vector<Matrix> mats(n, Matrix(n, n));
  for (std::size_t i = 0; i < n; ++i) mats[i](i, i) = 1;
  return LieAlgebra(n, {}, "abelian(" + std::to_string(n) + ")", std::move(mats));
}

}  // namespace seaweed
