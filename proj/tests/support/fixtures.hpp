#pragma once

#include "seaweed/kirillov.hpp"
#include "seaweed/lie_algebra.hpp"
#include "seaweed/seaweed.hpp"

#include <vector>

namespace fixtures {

using namespace seaweed;

inline LieAlgebra gl(std::size_t n) { return gln_seaweed(Composition({n}), Composition({n})); }

inline Composition comp(std::initializer_list<std::size_t> parts) { return Composition(std::vector<std::size_t>(parts)); }

// B_phi assembled from matrix commutators of the realization rather than the
// structure table: B(i, j) = phi(coordinates of [X_i, X_j]).
inline Matrix kirillov_from_realization(const LieAlgebra& g, const OneForm& phi) {
  const auto& mats = *g.realization();
  std::vector<Vector> flats;
  for (const auto& m : mats) flats.push_back(m.flat());
  const Subspace span = Subspace::span(mats.front().rows() * mats.front().cols(), flats);
  // Coordinates in span's canonical basis, then change to the algebra basis.
  Matrix to_basis(g.dim(), g.dim());
  for (std::size_t k = 0; k < g.dim(); ++k) {
    const auto c = span.coordinates(flats[k]);
    for (std::size_t r = 0; r < g.dim(); ++r) to_basis(r, k) = (*c)[r];
  }
  const Matrix from_canonical = inverse(to_basis);
  Matrix b(g.dim(), g.dim());
  for (std::size_t i = 0; i < g.dim(); ++i) {
    for (std::size_t j = 0; j < g.dim(); ++j) {
      const auto c = span.coordinates(commutator(mats[i], mats[j]).flat());
      const Vector coords = from_canonical * *c;
      b(i, j) = dot(phi.coords, coords);
    }
  }
  return b;
}

inline OneForm form(std::initializer_list<long> values) {
  OneForm phi;
  for (long v : values) phi.coords.emplace_back(v);
  return phi;
}

inline Element element(std::initializer_list<long> values) {
  Element x;
  for (long v : values) x.coords.emplace_back(v);
  return x;
}

}  // namespace fixtures
