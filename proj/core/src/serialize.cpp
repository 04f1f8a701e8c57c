#include "seaweed/serialize.hpp"

#include "seaweed/errors.hpp"

#include <string>

namespace seaweed {

namespace {

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) {
    throw InputError(std::string("missing field '") + name + "'");
  }
  return j.at(name);
}

std::size_t index_from_json(const Json& j) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0)) {
    throw InputError("expected a nonnegative integer, got " + j.dump());
  }
  return j.get<std::size_t>();
}

}  // namespace

Json to_json(const Scalar& x) { return to_string(x); }

Json to_json(const Vector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

Json to_json(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(to_json(m.row(i)));
  return out;
}

Json to_json(const Subspace& s) {
  Json out;
  out["ambient_dim"] = s.ambient_dim();
  out["dim"] = s.dim();
  Json basis = Json::array();
  for (const auto& v : s.basis()) basis.push_back(to_json(v));
  out["basis"] = std::move(basis);
  return out;
}

Json to_json(const OneForm& phi) { return to_json(phi.coords); }
Json to_json(const Element& x) { return to_json(x.coords); }

Scalar scalar_from_json(const Json& j) {
  if (j.is_string()) return parse_scalar(j.get<std::string>());
  if (j.is_number_integer()) return Scalar(static_cast<long>(j.get<long long>()));
  throw InputError("expected a rational string or integer, got " + j.dump());
}

Vector vector_from_json(const Json& j) {
  if (!j.is_array()) throw InputError("expected an array of rationals");
  Vector out;
  out.reserve(j.size());
  for (const auto& x : j) out.push_back(scalar_from_json(x));
  return out;
}

Matrix matrix_from_json(const Json& j) {
  if (!j.is_array()) throw InputError("expected a matrix (array of rows)");
  std::vector<Vector> rows;
  for (const auto& r : j) rows.push_back(vector_from_json(r));
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  return Matrix::from_rows(rows, cols);
}

Subspace subspace_from_json(const Json& j) {
  const std::size_t ambient = index_from_json(field(j, "ambient_dim"));
  std::vector<Vector> basis;
  for (const auto& v : field(j, "basis")) {
    basis.push_back(vector_from_json(v));
    if (basis.back().size() != ambient) throw InputError("subspace basis vector has the wrong length");
  }
  Subspace s = Subspace::span(ambient, basis);
  if (s.dim() != basis.size()) throw InputError("subspace basis vectors are linearly dependent");
  return s;
}

Json to_json(const LieAlgebra& g) {
  Json out;
  out["dim"] = g.dim();
  Json structure = Json::array();
  for (const auto& c : g.constants()) structure.push_back(Json::array({c.i, c.j, c.r, to_string(c.value)}));
  out["structure"] = std::move(structure);
  if (g.realization()) {
    Json mats = Json::array();
    for (const auto& m : *g.realization()) mats.push_back(to_json(m));
    out["realization"] = std::move(mats);
  }
  out["label"] = g.label();
  return out;
}

LieAlgebra algebra_from_json(const Json& j) {
  try {
    const std::size_t dim = index_from_json(field(j, "dim"));
    std::vector<StructureConstant> constants;
    for (const auto& t : field(j, "structure")) {
      if (!t.is_array() || t.size() != 4) throw InputError("structure entries must be [i, j, r, c]");
      constants.push_back({index_from_json(t[0]), index_from_json(t[1]), index_from_json(t[2]), scalar_from_json(t[3])});
    }
    std::optional<std::vector<Matrix>> realization;
    if (j.contains("realization") && !j.at("realization").is_null()) {
      realization.emplace();
      for (const auto& m : j.at("realization")) realization->push_back(matrix_from_json(m));
    }
    const std::string label = j.contains("label") ? j.at("label").get<std::string>() : std::string();
    return LieAlgebra(dim, constants, label, std::move(realization));
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed algebra JSON: ") + e.what());
  }
}

Json to_json(const IndexReport& report) {
  Json out;
  out["label"] = report.label;
  out["index"] = report.index;
  out["witness_form"] = to_json(report.witness_form);
  out["samples_used"] = report.samples_used;
  out["seed"] = report.seed;
  out["bound"] = report.bound;
  out["trials_agreed"] = report.trials_agreed;
  return out;
}

Json to_json(const ContactBasis& basis) {
  Json out;
  Json elements = Json::array();
  for (const auto& e : basis.elements) elements.push_back(to_json(e));
  out["elements"] = std::move(elements);
  out["form_matrix"] = to_json(basis.form_matrix);
  return out;
}

Json to_json(const ContactCertificate& cert) {
  Json out;
  out["form"] = to_json(cert.form);
  out["reeb"] = to_json(cert.reeb);
  out["kernel_dim"] = cert.kernel_dim;
  out["pairing"] = to_string(cert.pairing);
  return out;
}

Json to_json(const StabilityCertificate& cert) {
  Json out;
  out["form"] = to_json(cert.form);
  out["kernel"] = to_json(cert.kernel);
  out["bracket_span"] = to_json(cert.bracket_span);
  out["intersection_dim"] = cert.intersection_dim;
  return out;
}

ContactCertificate contact_certificate_from_json(const Json& j) {
  try {
    return ContactCertificate{OneForm{vector_from_json(field(j, "form"))}, Element{vector_from_json(field(j, "reeb"))},
                              index_from_json(field(j, "kernel_dim")), scalar_from_json(field(j, "pairing"))};
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed contact certificate: ") + e.what());
  }
}

StabilityCertificate stability_certificate_from_json(const Json& j) {
  try {
    return StabilityCertificate{OneForm{vector_from_json(field(j, "form"))}, subspace_from_json(field(j, "kernel")),
                                subspace_from_json(field(j, "bracket_span")),
                                index_from_json(field(j, "intersection_dim"))};
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed stability certificate: ") + e.what());
  }
}

}  // namespace seaweed
