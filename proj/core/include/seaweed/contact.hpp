#pragma once

#include "seaweed/kirillov.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace seaweed {

// Evidence that `form` is a contact form: ker B_form = span(reeb) and
// form(reeb) = 1.
struct ContactCertificate {
  OneForm form;
  Element reeb;
  std::size_t kernel_dim = 1;
  Scalar pairing = 1;
};

// Evidence that `form` is stable: [ker B, g] ∩ ker B = 0.
struct StabilityCertificate {
  OneForm form;
  Subspace kernel;
  Subspace bracket_span;
  std::size_t intersection_dim = 0;
};

// E_1 = Reeb vector, then symplectic pairs (E_2, E_3), (E_4, E_5), ... with
// B(E_2l, E_2l+1) = 1. form_matrix[i][j] = B(E_i, E_j).
struct ContactBasis {
  std::vector<Element> elements;
  Matrix form_matrix;
};

// Certificate iff ker B_phi is one-dimensional, spanned by x, with
// phi(x) != 0. PreconditionError on even-dimensional g.
std::optional<ContactCertificate> is_contact_form(const LieAlgebra& g, const OneForm& phi);

// phi ∧ (dphi)^k != 0, tested as nonsingularity of B_phi bordered by phi.
// Independent of is_contact_form. PreconditionError on even-dimensional g.
bool contact_volume_nonzero(const LieAlgebra& g, const OneForm& phi);

std::optional<StabilityCertificate> is_stable_form(const LieAlgebra& g, const OneForm& phi);

// Randomized searches over `attempts` sampled forms; attempt t uses seed
// derive_seed(seed, t). The first success (lowest t) is returned.
// `attempts_used`, when given, receives the number of forms tried.
std::optional<ContactCertificate> find_contact_form(const LieAlgebra& g, std::uint64_t seed, std::size_t attempts,
                                                    std::uint64_t bound, std::size_t* attempts_used = nullptr);
std::optional<StabilityCertificate> find_stable_form(const LieAlgebra& g, std::uint64_t seed, std::size_t attempts,
                                                     std::uint64_t bound, std::size_t* attempts_used = nullptr);

// Minimal polynomial of the realization of x is squarefree.
// PreconditionError without a realization.
bool is_semisimple_element(const LieAlgebra& g, const Element& x);

// For odd-dimensional, centerless g and phi with one-dimensional kernel:
// whether the kernel generator is semisimple. PreconditionError otherwise.
bool reductive_type_witness(const LieAlgebra& g, const OneForm& phi);

// Symplectic Gram-Schmidt on ker(phi). PreconditionError when the
// certificate does not hold for g.
ContactBasis contact_basis(const LieAlgebra& g, const ContactCertificate& cert);

// The canonical block matrix of size 2k+1.
Matrix canonical_contact_matrix(std::size_t dim);

// The functional h* dual to h in the basis (h, basis of [h, g], completion
// from the standard basis); the [h, g] block is dropped when it contains h.
OneForm dual_functional(const LieAlgebra& g, const Element& h);

// For regular phi with ker B_phi = span(h) and phi(h) = 0: tries
// psi = phi + eps * h* for eps = 1, 1/2, ..., 2^-19 and returns a
// certificate for the first psi with ker B_psi = span(h), psi(h) != 0.
// PreconditionError if phi does not meet the precondition.
std::optional<ContactCertificate> contactify(const LieAlgebra& g, const OneForm& phi);

inline constexpr std::size_t kContactifySteps = 20;

}  // namespace seaweed
