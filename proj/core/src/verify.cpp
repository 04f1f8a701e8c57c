#include "seaweed/verify.hpp"

#include "seaweed/errors.hpp"

#include <fstream>

namespace seaweed {

Json to_json(const AlgebraRef& ref) {
  Json out;
  out["family"] = std::string(to_string(ref.family));
  out["n"] = ref.n;
  out["top"] = ref.top.to_string();
  out["bottom"] = ref.bottom.to_string();
  return out;
}

LieAlgebra resolve_algebra(const Json& algebra) {
  if (!algebra.is_object()) throw InputError("algebra must be a JSON object");
  if (algebra.contains("family")) {
    try {
      const Family family = parse_family(algebra.at("family").get<std::string>());
      const std::size_t n = algebra.at("n").get<std::size_t>();
      const Composition top = Composition::parse(algebra.at("top").get<std::string>());
      const Composition bottom = Composition::parse(algebra.at("bottom").get<std::string>());
      return make_seaweed(family, n, top, bottom);
    } catch (const nlohmann::json::exception& e) {
      throw InputError(std::string("malformed algebra reference: ") + e.what());
    }
  }
  if (algebra.contains("structure")) return algebra_from_json(algebra);
  throw InputError("unknown algebra reference: expected a 'family' reference or an inline 'structure'");
}

Json certificate_document(const ContactCertificate& cert, const Json& algebra) {
  Json doc;
  doc["schema"] = 1;
  doc["kind"] = "contact";
  doc["algebra"] = algebra;
  const Json fields = to_json(cert);
  for (const auto& [key, value] : fields.items()) doc[key] = value;
  return doc;
}

Json certificate_document(const StabilityCertificate& cert, const Json& algebra) {
  Json doc;
  doc["schema"] = 1;
  doc["kind"] = "stability";
  doc["algebra"] = algebra;
  const Json fields = to_json(cert);
  for (const auto& [key, value] : fields.items()) doc[key] = value;
  return doc;
}

namespace {

void verify_contact(const LieAlgebra& g, const ContactCertificate& cert, VerifyResult& out) {
  auto fail = [&](std::string msg) { out.failures.push_back(std::move(msg)); };
  if (cert.form.size() != g.dim() || cert.reeb.size() != g.dim()) {
    fail("form or reeb length does not match algebra dimension " + std::to_string(g.dim()));
    return;
  }
  if (g.dim() % 2 == 0) fail("algebra has even dimension");
  const Matrix b = kirillov_matrix(g, cert.form);
  if (!is_zero(b * cert.reeb.coords)) fail("reeb vector is not in the kernel of B_phi");
  const Scalar pairing = cert.form(cert.reeb);
  if (pairing != 1) fail("form(reeb) = " + to_string(pairing) + ", expected 1/1");
  if (cert.pairing != pairing) fail("recorded pairing " + to_string(cert.pairing) + " does not match form(reeb)");
  const std::size_t kdim = g.dim() - rank(b);
  if (kdim != 1) fail("kernel of B_phi has dimension " + std::to_string(kdim) + ", expected 1");
  if (cert.kernel_dim != kdim) fail("recorded kernel_dim does not match the recomputed kernel");
}

void verify_stability(const LieAlgebra& g, const StabilityCertificate& cert, VerifyResult& out) {
  auto fail = [&](std::string msg) { out.failures.push_back(std::move(msg)); };
  if (cert.form.size() != g.dim()) {
    fail("form length does not match algebra dimension " + std::to_string(g.dim()));
    return;
  }
  const auto recomputed = is_stable_form(g, cert.form);
  const Subspace kernel = kirillov_kernel(g, cert.form);
  if (cert.kernel != kernel) fail("recorded kernel differs from ker B_phi");
  if (!recomputed) {
    fail("[ker B_phi, g] meets ker B_phi nontrivially");
  } else if (cert.bracket_span != recomputed->bracket_span) {
    fail("recorded bracket_span differs from [ker B_phi, g]");
  }
  if (cert.kernel.ambient_dim() == cert.bracket_span.ambient_dim() &&
      intersect(cert.kernel, cert.bracket_span).dim() != 0) {
    fail("recorded kernel and bracket_span intersect");
  }
  if (cert.intersection_dim != 0) fail("recorded intersection_dim is not 0");
}

}  // namespace

VerifyResult verify_certificate(const Json& document) {
  if (!document.is_object() || !document.contains("kind") || !document.contains("algebra")) {
    throw InputError("certificate document needs 'kind' and 'algebra'");
  }
  VerifyResult out;
  out.kind = document.at("kind").get<std::string>();
  const LieAlgebra g = resolve_algebra(document.at("algebra"));
  if (out.kind == "contact") {
    verify_contact(g, contact_certificate_from_json(document), out);
  } else if (out.kind == "stability") {
    verify_stability(g, stability_certificate_from_json(document), out);
  } else {
    throw InputError("unknown certificate kind '" + out.kind + "'");
  }
  out.ok = out.failures.empty();
  return out;
}

VerifyResult verify_certificate_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open certificate file '" + path.string() + "'");
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw InputError("cannot parse '" + path.string() + "': " + e.what());
  }
  return verify_certificate(doc);
}

}  // namespace seaweed
