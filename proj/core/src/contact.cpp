#include "seaweed/contact.hpp"

#include "seaweed/errors.hpp"
#include "seaweed/polynomial.hpp"
#include "seaweed/random.hpp"

namespace seaweed {

namespace {

void require_odd(const LieAlgebra& g, const char* op) {
  if (g.dim() % 2 == 0) {
    throw PreconditionError(std::string(op) + ": algebra '" + g.label() + "' has even dimension " +
                            std::to_string(g.dim()));
  }
}

// u^T B v
Scalar pair(const Matrix& b, const Vector& u, const Vector& v) { return dot(u, b * v); }

// span{[k, x_j] : k in basis(kernel), j}
Subspace bracket_with_algebra(const LieAlgebra& g, const Subspace& kernel) {
  std::vector<Vector> images;
  for (const auto& k : kernel.basis()) {
    for (std::size_t j = 0; j < g.dim(); ++j) {
      Vector v(g.dim(), Scalar(0));
      for (std::size_t i = 0; i < g.dim(); ++i) {
        if (k[i] == 0) continue;
        for (const auto& t : g.structure(i, j)) v[t.index] += k[i] * t.coeff;
      }
      if (!is_zero(v)) images.push_back(std::move(v));
    }
  }
  return Subspace::span(g.dim(), images);
}

bool certificate_holds(const LieAlgebra& g, const ContactCertificate& cert) {
  if (cert.form.size() != g.dim() || cert.reeb.size() != g.dim()) return false;
  if (cert.form(cert.reeb) != 1 || cert.pairing != 1 || cert.kernel_dim != 1) return false;
  const Matrix b = kirillov_matrix(g, cert.form);
  if (!is_zero(b * cert.reeb.coords)) return false;
  return g.dim() - rank(b) == 1;
}

}  // namespace

std::optional<ContactCertificate> is_contact_form(const LieAlgebra& g, const OneForm& phi) {
  require_odd(g, "is_contact_form");
  const Subspace kernel = kirillov_kernel(g, phi);
  if (kernel.dim() != 1) return std::nullopt;
  const Element x{kernel.basis().front()};
  const Scalar value = phi(x);
  if (value == 0) return std::nullopt;
  return ContactCertificate{phi, Element{scaled(x.coords, 1 / value)}, 1, Scalar(1)};
}

bool contact_volume_nonzero(const LieAlgebra& g, const OneForm& phi) {
  require_odd(g, "contact_volume_nonzero");
  const std::size_t n = g.dim();
  const Matrix b = kirillov_matrix(g, phi);
  Matrix bordered(n + 1, n + 1);
  for (std::size_t j = 0; j < n; ++j) {
    bordered(0, j + 1) = phi.coords[j];
    bordered(j + 1, 0) = -phi.coords[j];
    for (std::size_t i = 0; i < n; ++i) bordered(i + 1, j + 1) = b(i, j);
  }
  return rank(bordered) == n + 1;
}

std::optional<StabilityCertificate> is_stable_form(const LieAlgebra& g, const OneForm& phi) {
  Subspace kernel = kirillov_kernel(g, phi);
  Subspace brackets = bracket_with_algebra(g, kernel);
  const std::size_t overlap = intersect(kernel, brackets).dim();
  if (overlap != 0) return std::nullopt;
  return StabilityCertificate{phi, std::move(kernel), std::move(brackets), 0};
}

std::optional<ContactCertificate> find_contact_form(const LieAlgebra& g, std::uint64_t seed, std::size_t attempts,
                                                    std::uint64_t bound, std::size_t* attempts_used) {
  require_odd(g, "find_contact_form");
  for (std::size_t t = 0; t < attempts; ++t) {
    if (auto cert = is_contact_form(g, sample_form(g, derive_seed(seed, t), bound))) {
      if (attempts_used) *attempts_used = t + 1;
      return cert;
    }
  }
  if (attempts_used) *attempts_used = attempts;
  return std::nullopt;
}

std::optional<StabilityCertificate> find_stable_form(const LieAlgebra& g, std::uint64_t seed, std::size_t attempts,
                                                     std::uint64_t bound, std::size_t* attempts_used) {
  for (std::size_t t = 0; t < attempts; ++t) {
    if (auto cert = is_stable_form(g, sample_form(g, derive_seed(seed, t), bound))) {
      if (attempts_used) *attempts_used = t + 1;
      return cert;
    }
  }
  if (attempts_used) *attempts_used = attempts;
  return std::nullopt;
}

bool is_semisimple_element(const LieAlgebra& g, const Element& x) {
  return is_squarefree(minimal_polynomial(realize(g, x)));
}

bool reductive_type_witness(const LieAlgebra& g, const OneForm& phi) {
  require_odd(g, "reductive_type_witness");
  if (!center(g).is_zero()) {
    throw PreconditionError("reductive_type_witness: algebra '" + g.label() + "' has nonzero center");
  }
  const Subspace kernel = kirillov_kernel(g, phi);
  if (kernel.dim() != 1) {
    throw PreconditionError("reductive_type_witness: kernel of B_phi has dimension " + std::to_string(kernel.dim()));
  }
  return is_semisimple_element(g, Element{kernel.basis().front()});
}

Matrix canonical_contact_matrix(std::size_t dim) {
  Matrix m(dim, dim);
  for (std::size_t i = 1; i + 1 < dim; i += 2) {
    m(i, i + 1) = 1;
    m(i + 1, i) = -1;
  }
  return m;
}

ContactBasis contact_basis(const LieAlgebra& g, const ContactCertificate& cert) {
  if (!certificate_holds(g, cert)) throw PreconditionError("contact_basis: certificate does not hold");
  const std::size_t n = g.dim();
  const Matrix b = kirillov_matrix(g, cert.form);

  Matrix phi_row(1, n);
  for (std::size_t j = 0; j < n; ++j) phi_row(0, j) = cert.form.coords[j];
  std::vector<Vector> pool = nullspace(phi_row).basis();

  ContactBasis out;
  out.elements.push_back(cert.reeb);
  while (!pool.empty()) {
    const Vector u = pool.front();
    std::size_t partner = 0;
    Scalar w = 0;
    for (std::size_t j = 1; j < pool.size(); ++j) {
      w = pair(b, u, pool[j]);
      if (w != 0) {
        partner = j;
        break;
      }
    }
    if (partner == 0) throw ConstructionError("contact_basis: B_phi is degenerate on ker(phi)");
    const Vector v = scaled(pool[partner], 1 / w);
    std::vector<Vector> rest;
    for (std::size_t j = 1; j < pool.size(); ++j) {
      if (j == partner) continue;
      // Project onto the B-orthogonal complement of span(u, v).
      const Scalar with_v = pair(b, pool[j], v);
      const Scalar with_u = pair(b, pool[j], u);
      rest.push_back(axpy(axpy(pool[j], -with_v, u), with_u, v));
    }
    out.elements.push_back(Element{u});
    out.elements.push_back(Element{v});
    pool = std::move(rest);
  }

  out.form_matrix = Matrix(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      out.form_matrix(i, j) = pair(b, out.elements[i].coords, out.elements[j].coords);
  if (out.form_matrix != canonical_contact_matrix(n)) {
    throw ConstructionError("contact_basis: normal form check failed");
  }
  return out;
}

OneForm dual_functional(const LieAlgebra& g, const Element& h) {
  const std::size_t n = g.dim();
  if (h.size() != n) throw DimensionError("dual_functional: element from a different algebra");
  if (is_zero(h.coords)) throw PreconditionError("dual_functional: zero element");
  const Subspace line = Subspace::span(n, {h.coords});
  std::vector<Vector> others;
  const Subspace ad_image = bracket_with_algebra(g, line);
  if (!ad_image.contains(h.coords)) others = ad_image.basis();

  std::vector<Vector> current = others;
  current.push_back(h.coords);
  Subspace spanned = Subspace::span(n, current);
  for (std::size_t i = 0; i < n && spanned.dim() < n; ++i) {
    Vector e = unit_vector(n, i);
    if (spanned.contains(e)) continue;
    others.push_back(e);
    current.push_back(std::move(e));
    spanned = Subspace::span(n, current);
  }
  const Subspace ann = annihilator(Subspace::span(n, others));
  const Vector& f = ann.basis().front();
  return OneForm{scaled(f, 1 / dot(f, h.coords))};
}

std::optional<ContactCertificate> contactify(const LieAlgebra& g, const OneForm& phi) {
  require_odd(g, "contactify");
  const Subspace kernel = kirillov_kernel(g, phi);
  if (kernel.dim() != 1) {
    throw PreconditionError("contactify: kernel of B_phi has dimension " + std::to_string(kernel.dim()));
  }
  const Element h{kernel.basis().front()};
  if (phi(h) != 0) throw PreconditionError("contactify: phi(h) != 0, phi is already a contact form");

  const OneForm h_star = dual_functional(g, h);
  Scalar eps = 1;
  for (std::size_t step = 0; step < kContactifySteps; ++step, eps /= 2) {
    OneForm psi{axpy(phi.coords, eps, h_star.coords)};
    const Scalar value = psi(h);
    if (value == 0 || kirillov_kernel(g, psi) != kernel) continue;
    return ContactCertificate{std::move(psi), Element{scaled(h.coords, 1 / value)}, 1, Scalar(1)};
  }
  return std::nullopt;
}

}  // namespace seaweed
