#include "seaweed/seaweed.hpp"

#include "seaweed/errors.hpp"

#include <algorithm>
#include <cctype>
#include <string>

namespace seaweed {

namespace {

std::string seaweed_label(Family family, std::size_t n, const Composition& a, const Composition& b) {
  return std::string(to_string(family)) + "(" + std::to_string(n) + ")[" + a.to_string() + "|" + b.to_string() + "]";
}

Matrix antidiagonal_form(std::size_t size, bool symplectic) {
  Matrix s(size, size);
  for (std::size_t i = 0; i < size; ++i) {
    s(i, size - 1 - i) = (symplectic && i >= size / 2) ? -1 : 1;
  }
  return s;
}

Subspace trace_zero(std::size_t n) {
  Matrix trace(1, n * n);
  for (std::size_t i = 0; i < n; ++i) trace(0, i * n + i) = 1;
  return nullspace(trace);
}

// Row-major positions (r, c) that the double flag forces to vanish.
std::vector<bool> killed_positions(std::size_t size, const Composition& a, const Composition& b) {
  std::vector<bool> killed(size * size, false);
  for (auto p : a.prefix_sums()) {
    for (std::size_t r = p; r < size; ++r)
      for (std::size_t c = 0; c < p; ++c) killed[r * size + c] = true;
  }
  for (auto q : b.suffix_sums()) {
    const std::size_t start = size - q;
    for (std::size_t r = 0; r < start; ++r)
      for (std::size_t c = start; c < size; ++c) killed[r * size + c] = true;
  }
  return killed;
}

}  // namespace

std::string_view to_string(Family family) {
  switch (family) {
    case Family::GL: return "GL";
    case Family::SL: return "SL";
    case Family::SP: return "SP";
    case Family::SO: return "SO";
  }
  return "?";
}

Family parse_family(std::string_view text) {
  std::string upper(text);
  std::transform(upper.begin(), upper.end(), upper.begin(), [](unsigned char c) { return std::toupper(c); });
  if (upper == "GL") return Family::GL;
  if (upper == "SL") return Family::SL;
  if (upper == "SP") return Family::SP;
  if (upper == "SO") return Family::SO;
  throw InputError("unknown family '" + std::string(text) + "' (expected GL, SL, SP or SO)");
}

AmbientAlgebra::AmbientAlgebra(Family family, std::size_t n)
    : family_(family), n_(n), matrix_size_(family == Family::SP ? 2 * n : n) {
  if (n == 0) throw InputError("ambient algebra needs n >= 1");
  const std::size_t size = matrix_size_;
  switch (family) {
    case Family::GL:
      basis_ = Subspace::full(size * size);
      break;
    case Family::SL:
      basis_ = trace_zero(size);
      break;
    case Family::SP:
    case Family::SO: {
      form_ = antidiagonal_form(size, family == Family::SP);
      // Column (r, c) is the image of E_rc under X -> X^T S + S X.
      Matrix membership(size * size, size * size);
      for (std::size_t r = 0; r < size; ++r) {
        for (std::size_t c = 0; c < size; ++c) {
          Matrix e(size, size);
          e(r, c) = 1;
          const Matrix image = e.transpose() * *form_ + *form_ * e;
          for (std::size_t k = 0; k < size * size; ++k) membership(k, r * size + c) = image.flat()[k];
        }
      }
      basis_ = nullspace(membership);
      break;
    }
  }
}

std::size_t AmbientAlgebra::max_flag_dim() const {
  return (family_ == Family::GL || family_ == Family::SL) ? matrix_size_ : matrix_size_ / 2;
}

bool AmbientAlgebra::contains(const Matrix& x) const {
  if (x.rows() != matrix_size_ || x.cols() != matrix_size_) return false;
  return basis_.contains(x.flat());
}

LieAlgebra gln_seaweed(const Composition& a, const Composition& b) {
  if (a.total() != b.total()) throw InputError("gln_seaweed: compositions have different totals");
  if (a.total() == 0) throw InputError("gln_seaweed: compositions must be nonempty");
  const std::size_t n = a.total();
  std::vector<Vector> units;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (a.block_of(i) <= a.block_of(j) && b.block_of(i) >= b.block_of(j)) {
        units.push_back(unit_vector(n * n, i * n + j));
      }
    }
  }
  return LieAlgebra::from_subspace(Subspace::span(n * n, units), n, seaweed_label(Family::GL, n, a, b));
}

LieAlgebra sln_seaweed(const Composition& a, const Composition& b) {
  const LieAlgebra gl = gln_seaweed(a, b);
  const std::size_t n = a.total();
  return LieAlgebra::from_subspace(intersect(realization_span(gl), trace_zero(n)), n,
                                   seaweed_label(Family::SL, n, a, b));
}

LieAlgebra flag_seaweed(const AmbientAlgebra& ambient, const Composition& a, const Composition& b) {
  const std::size_t size = ambient.matrix_size();
  const Family family = ambient.family();
  if (family == Family::GL || family == Family::SL) {
    if (a.total() != size || b.total() != size) {
      throw InputError("flag_seaweed: type A compositions must sum to " + std::to_string(size));
    }
  } else if (a.total() > ambient.max_flag_dim() || b.total() > ambient.max_flag_dim()) {
    throw InputError("flag_seaweed: flag dimensions exceed " + std::to_string(ambient.max_flag_dim()) +
                     ", flags would not be isotropic");
  }

  // Unknowns are coefficients over the ambient basis; each killed matrix
  // position contributes one linear constraint.
  const auto& amb = ambient.basis().basis();
  const auto killed = killed_positions(size, a, b);
  std::vector<Vector> rows;
  for (std::size_t pos = 0; pos < killed.size(); ++pos) {
    if (!killed[pos]) continue;
    Vector row(amb.size());
    bool nonzero = false;
    for (std::size_t k = 0; k < amb.size(); ++k) {
      row[k] = amb[k][pos];
      nonzero = nonzero || row[k] != 0;
    }
    if (nonzero) rows.push_back(std::move(row));
  }
  const Subspace coeffs =
      rows.empty() ? Subspace::full(amb.size()) : nullspace(Matrix::from_rows(rows, amb.size()));

  std::vector<Vector> matrices;
  for (const auto& c : coeffs.basis()) {
    Vector flat(size * size, Scalar(0));
    for (std::size_t k = 0; k < amb.size(); ++k) {
      if (c[k] != 0) flat = axpy(flat, c[k], amb[k]);
    }
    matrices.push_back(std::move(flat));
  }
  return LieAlgebra::from_subspace(Subspace::span(size * size, matrices), size,
                                   seaweed_label(family, ambient.n(), a, b));
}

LieAlgebra make_seaweed(Family family, std::size_t n, const Composition& a, const Composition& b) {
  switch (family) {
    case Family::GL: return gln_seaweed(a, b);
    case Family::SL: return sln_seaweed(a, b);
    case Family::SP:
    case Family::SO: return flag_seaweed(AmbientAlgebra(family, n), a, b);
  }
  throw InputError("unknown family");
}

std::vector<std::pair<Composition, Composition>> enumerate_pairs(Family family, std::size_t n) {
  std::vector<Composition> comps;
  if (family == Family::GL || family == Family::SL) {
    comps = enumerate_compositions(n);
  } else {
    comps = enumerate_partial_compositions(AmbientAlgebra(family, n).max_flag_dim());
  }
  std::vector<std::pair<Composition, Composition>> out;
  out.reserve(comps.size() * comps.size());
  for (const auto& a : comps)
    for (const auto& b : comps) out.emplace_back(a, b);
  return out;
}

Subspace realization_span(const LieAlgebra& g) {
  if (!g.realization()) throw PreconditionError("algebra '" + g.label() + "' has no matrix realization");
  const auto& mats = *g.realization();
  if (mats.empty()) return Subspace(0);
  const std::size_t n = mats.front().rows();
  std::vector<Vector> flats;
  for (const auto& m : mats) flats.push_back(m.flat());
  return Subspace::span(n * n, flats);
}

}  // namespace seaweed
