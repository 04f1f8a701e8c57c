#pragma once

#include "seaweed/contact.hpp"
#include "seaweed/kirillov.hpp"

#include <nlohmann/json.hpp>

namespace seaweed {

// Insertion-ordered so emitted documents have a stable field order.
using Json = nlohmann::ordered_json;

// Rationals travel as "num/den" strings; bare JSON integers are accepted on
// input. Malformed documents raise InputError.
Json to_json(const Scalar& x);
Json to_json(const Vector& v);
Json to_json(const Matrix& m);
Json to_json(const Subspace& s);
Json to_json(const OneForm& phi);
Json to_json(const Element& x);

Scalar scalar_from_json(const Json& j);
Vector vector_from_json(const Json& j);
Matrix matrix_from_json(const Json& j);
Subspace subspace_from_json(const Json& j);

// {"dim": d, "structure": [[i, j, r, "c"], ...], "realization": [...], "label": "..."}
// Indices are 0-based; only i < j is emitted. realization is optional.
Json to_json(const LieAlgebra& g);
LieAlgebra algebra_from_json(const Json& j);

Json to_json(const IndexReport& report);
Json to_json(const ContactBasis& basis);

Json to_json(const ContactCertificate& cert);
Json to_json(const StabilityCertificate& cert);
ContactCertificate contact_certificate_from_json(const Json& j);
StabilityCertificate stability_certificate_from_json(const Json& j);

}  // namespace seaweed
