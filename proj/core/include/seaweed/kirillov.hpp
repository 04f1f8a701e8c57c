#pragma once

#include "seaweed/lie_algebra.hpp"

#include <cstdint>
#include <string>

namespace seaweed {

// B_phi(x_i, x_j) = phi([x_i, x_j]) = sum_r c_{ij}^r phi_r.
Matrix kirillov_matrix(const LieAlgebra& g, const OneForm& phi);

// ker B_phi as a subspace of g (basis coordinates).
Subspace kirillov_kernel(const LieAlgebra& g, const OneForm& phi);
std::size_t kernel_dim(const LieAlgebra& g, const OneForm& phi);

// Coordinates drawn uniformly from the integers in [-bound, bound];
// deterministic in the seed.
OneForm sample_form(const LieAlgebra& g, std::uint64_t seed, std::uint64_t bound);

struct IndexReport {
  std::string label;
  std::size_t index = 0;
  OneForm witness_form;
  std::size_t samples_used = 0;
  std::uint64_t seed = 0;
  std::uint64_t bound = 0;
  // False when the sampled kernel dimensions disagreed.
  bool trials_agreed = true;
};

// Minimum of dim ker B_phi over `trials` sampled forms. The result is an
// upper bound for the index, exact with probability at least
// 1 - dim/(2*bound+1) per trial (Schwartz-Zippel on a Pfaffian minor).
IndexReport index(const LieAlgebra& g, std::uint64_t seed, std::size_t trials, std::uint64_t bound);

// index() that, when trials disagree, reruns once with bound * 100 and
// keeps the smaller estimate. trials_agreed reports the rerun's agreement.
IndexReport robust_index(const LieAlgebra& g, std::uint64_t seed, std::size_t trials, std::uint64_t bound);

bool is_regular(const LieAlgebra& g, const OneForm& phi, std::size_t known_index);

// {x : [x, y] = 0 for all y}.
Subspace center(const LieAlgebra& g);

}  // namespace seaweed
