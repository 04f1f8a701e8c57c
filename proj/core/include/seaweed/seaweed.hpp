#pragma once

#include "seaweed/composition.hpp"
#include "seaweed/lie_algebra.hpp"

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

namespace seaweed {

enum class Family { GL, SL, SP, SO };

std::string_view to_string(Family family);
// Case-insensitive "GL", "SL", "SP", "SO"; InputError otherwise.
Family parse_family(std::string_view text);

// The reductive algebra a seaweed lives in, realized inside gl(N):
//   GL, SL: N = n;  SP: N = 2n;  SO: N = n.
// SP and SO are the matrices X with X^T S + S X = 0 for an antidiagonal S,
// which makes every coordinate flag e_1 ⊂ ... of dimension <= N/2 isotropic.
class AmbientAlgebra {
 public:
  AmbientAlgebra(Family family, std::size_t n);

  Family family() const { return family_; }
  std::size_t n() const { return n_; }
  std::size_t matrix_size() const { return matrix_size_; }
  const std::optional<Matrix>& bilinear_form() const { return form_; }
  // Span of the algebra in gl(N) row-major coordinates.
  const Subspace& basis() const { return basis_; }
  // Largest admissible partial sum of a flag composition.
  std::size_t max_flag_dim() const;
  // True iff X^T S + S X = 0 (GL: always; SL: trace zero).
  bool contains(const Matrix& x) const;

 private:
  Family family_;
  std::size_t n_;
  std::size_t matrix_size_;
  std::optional<Matrix> form_;
  Subspace basis_;
};

// Seaweed of gl(n) spanned by e_ij with blockA(i) <= blockA(j) and
// blockB(i) >= blockB(j). InputError unless a.total() == b.total() >= 1.
LieAlgebra gln_seaweed(const Composition& a, const Composition& b);

// gln_seaweed(a, b) intersected with the trace-zero matrices.
LieAlgebra sln_seaweed(const Composition& a, const Composition& b);

// Stabilizer in `ambient` of the flags V_p = span(e_1..e_p), p a prefix sum
// of a, and W_q = span(e_{N-q+1}..e_N), q a suffix sum of b. For GL/SL, a and
// b must be compositions of N; for SP/SO their totals must not exceed N/2.
LieAlgebra flag_seaweed(const AmbientAlgebra& ambient, const Composition& a, const Composition& b);

// GL -> gln_seaweed, SL -> sln_seaweed, SP/SO -> flag_seaweed.
LieAlgebra make_seaweed(Family family, std::size_t n, const Composition& a, const Composition& b);

// Every composition pair the classifier sweeps for (family, n), in order:
// outer loop over top, inner over bottom.
std::vector<std::pair<Composition, Composition>> enumerate_pairs(Family family, std::size_t n);

// Span of the realization matrices in gl(N) coordinates.
Subspace realization_span(const LieAlgebra& g);

}  // namespace seaweed
