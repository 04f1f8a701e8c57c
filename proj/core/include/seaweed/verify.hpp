#pragma once

#include "seaweed/contact.hpp"
#include "seaweed/seaweed.hpp"
#include "seaweed/serialize.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace seaweed {

// Names a seaweed by its constructor arguments instead of embedding it.
struct AlgebraRef {
  Family family = Family::GL;
  std::size_t n = 0;
  Composition top;
  Composition bottom;
};

// {"family": "GL", "n": 3, "top": "2,1", "bottom": "3"}
Json to_json(const AlgebraRef& ref);

// Accepts either a reference (object with "family") or an inline algebra
// (object with "structure"). InputError for anything else.
LieAlgebra resolve_algebra(const Json& algebra);

// Self-contained certificate documents:
// {"schema": 1, "kind": "contact" | "stability", "algebra": ..., <certificate fields>}
Json certificate_document(const ContactCertificate& cert, const Json& algebra);
Json certificate_document(const StabilityCertificate& cert, const Json& algebra);

struct VerifyResult {
  bool ok = false;
  std::string kind;
  std::vector<std::string> failures;
};

// Recomputes every certificate invariant from the document. Throws
// InputError on malformed documents or unknown algebra references;
// ConstructionError if an inline algebra fails its own checks.
VerifyResult verify_certificate(const Json& document);
VerifyResult verify_certificate_file(const std::filesystem::path& path);

}  // namespace seaweed
