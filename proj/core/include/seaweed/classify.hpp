#pragma once

#include "seaweed/contact.hpp"
#include "seaweed/errors.hpp"
#include "seaweed/seaweed.hpp"

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace seaweed {

enum class SearchStatus { Found, NotFound, Skipped };
enum class Verdict { Consistent, Counterexample, Unresolved };

std::string_view to_string(SearchStatus s);
std::string_view to_string(Verdict v);

struct Budgets {
  std::size_t attempts = 64;
  std::uint64_t bound = 1'000'000;
  std::size_t index_trials = 3;
};

struct ClassifyOptions {
  Family family = Family::GL;
  std::size_t n = 1;
  std::uint64_t seed = 0;
  Budgets budgets;
  bool embed_certificates = false;
  // Lift the default size limits (GL/SL: n <= 7, SP/SO: matrix size <= 8).
  bool override_limits = false;
  // 0 picks std::thread::hardware_concurrency().
  unsigned workers = 0;
};

// Refusal to run a sweep beyond the configured size limits.
class LimitError : public InputError {
 public:
  using InputError::InputError;
};

struct ClassificationRecord {
  Family family = Family::GL;
  std::size_t n = 0;
  Composition top;
  Composition bottom;
  std::size_t ordinal = 0;
  std::size_t dim = 0;
  std::size_t index = 0;
  bool index_agreed = true;
  SearchStatus contact = SearchStatus::Skipped;
  SearchStatus stable = SearchStatus::Skipped;
  Verdict verdict = Verdict::Consistent;
  std::uint64_t seed = 0;
  Budgets budgets;
  std::size_t contact_attempts = 0;
  std::size_t stable_attempts = 0;
  // Whether the found contact form itself passes the stability criterion.
  std::optional<bool> contact_form_stable;
  std::optional<ContactCertificate> contact_certificate;
  std::optional<StabilityCertificate> stability_certificate;
};

// Verdict rules for an index-one record:
//   contact FOUND, stable FOUND                -> CONSISTENT
//   both NOT_FOUND at the same full budget     -> CONSISTENT (contrapositive evidence)
//   contact FOUND, stable NOT_FOUND            -> COUNTEREXAMPLE
//   contact FOUND but its form is not stable   -> COUNTEREXAMPLE
//   contact NOT_FOUND, stable FOUND            -> UNRESOLVED (search failure proves nothing)
// Records that are not index one are CONSISTENT, or UNRESOLVED when the
// index trials never agreed.
Verdict decide_verdict(const ClassificationRecord& r);

// Builds the seaweed, estimates its index and runs both searches when the
// index is one. Seeds derive from `record_seed`.
ClassificationRecord classify_pair(Family family, std::size_t n, const Composition& top, const Composition& bottom,
                                   std::uint64_t record_seed, const Budgets& budgets, bool embed_certificates);

// One record per enumerate_pairs(family, n) entry, in enumeration order.
// Record k uses seed (options.seed XOR k), so output does not depend on the
// worker count. Throws LimitError past the size limits.
std::vector<ClassificationRecord> classify(const ClassifyOptions& options);

void check_limits(Family family, std::size_t n, bool override_limits);

}  // namespace seaweed
