#include "seaweed/kirillov.hpp"

#include "seaweed/errors.hpp"
#include "seaweed/random.hpp"

#include <algorithm>

namespace seaweed {

Matrix kirillov_matrix(const LieAlgebra& g, const OneForm& phi) {
  if (phi.size() != g.dim()) throw DimensionError("kirillov_matrix: one-form from a different algebra");
  const std::size_t n = g.dim();
  Matrix b(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      Scalar v = 0;
      for (const auto& t : g.structure(i, j)) {
        if (phi.coords[t.index] != 0) v += t.coeff * phi.coords[t.index];
      }
      if (v != 0) {
        b(j, i) = -v;
        b(i, j) = std::move(v);
      }
    }
  }
  return b;
}

Subspace kirillov_kernel(const LieAlgebra& g, const OneForm& phi) { return nullspace(kirillov_matrix(g, phi)); }

std::size_t kernel_dim(const LieAlgebra& g, const OneForm& phi) { return g.dim() - rank(kirillov_matrix(g, phi)); }

OneForm sample_form(const LieAlgebra& g, std::uint64_t seed, std::uint64_t bound) {
  if (bound < 1) throw PreconditionError("sample_form: bound must be at least 1");
  std::mt19937_64 gen(seed);
  OneForm phi{Vector(g.dim())};
  for (auto& c : phi.coords) c = Scalar(static_cast<long>(uniform_symmetric(gen, bound)));
  return phi;
}

IndexReport index(const LieAlgebra& g, std::uint64_t seed, std::size_t trials, std::uint64_t bound) {
  if (trials < 1) throw PreconditionError("index: trials must be at least 1");
  if (bound < 1) throw PreconditionError("index: bound must be at least 1");
  IndexReport report;
  report.label = g.label();
  report.seed = seed;
  report.bound = bound;
  std::size_t best = g.dim() + 1;
  std::size_t worst = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    OneForm phi = sample_form(g, derive_seed(seed, t), bound);
    const std::size_t k = kernel_dim(g, phi);
    worst = std::max(worst, k);
    if (k < best) {
      best = k;
      report.witness_form = std::move(phi);
    }
    ++report.samples_used;
  }
  report.index = best;
  report.trials_agreed = best == worst;
  return report;
}

IndexReport robust_index(const LieAlgebra& g, std::uint64_t seed, std::size_t trials, std::uint64_t bound) {
  IndexReport first = index(g, seed, trials, bound);
  if (first.trials_agreed) return first;
  IndexReport retry = index(g, derive_seed(seed, 0x5eed), trials, bound * 100);
  retry.samples_used += first.samples_used;
  if (first.index < retry.index) {
    retry.index = first.index;
    retry.witness_form = first.witness_form;
    retry.trials_agreed = false;
  }
  return retry;
}

bool is_regular(const LieAlgebra& g, const OneForm& phi, std::size_t known_index) {
  return kernel_dim(g, phi) == known_index;
}

Subspace center(const LieAlgebra& g) {
  // Row (j, r), column i holds c_{ij}^r: x is central iff every row vanishes.
  const std::size_t n = g.dim();
  Matrix stacked(n * n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& t : g.structure(i, j)) stacked(j * n + t.index, i) = t.coeff;
  return nullspace(stacked);
}

}  // namespace seaweed
