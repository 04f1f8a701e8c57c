#include "seaweed/classify.hpp"

#include "seaweed/errors.hpp"
#include "seaweed/random.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

namespace seaweed {

std::string_view to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::Found: return "FOUND";
    case SearchStatus::NotFound: return "NOT_FOUND";
    case SearchStatus::Skipped: return "SKIPPED";
  }
  return "?";
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Consistent: return "CONSISTENT";
    case Verdict::Counterexample: return "COUNTEREXAMPLE";
    case Verdict::Unresolved: return "UNRESOLVED";
  }
  return "?";
}

Verdict decide_verdict(const ClassificationRecord& r) {
  if (r.contact == SearchStatus::Skipped || r.stable == SearchStatus::Skipped) {
    return r.index_agreed ? Verdict::Consistent : Verdict::Unresolved;
  }
  const bool contact = r.contact == SearchStatus::Found;
  const bool stable = r.stable == SearchStatus::Found;
  if (contact && r.contact_form_stable == false) return Verdict::Counterexample;
  if (contact && stable) return Verdict::Consistent;
  if (contact && !stable) {
    return r.stable_attempts == r.budgets.attempts ? Verdict::Counterexample : Verdict::Unresolved;
  }
  if (!contact && !stable) {
    const bool full = r.contact_attempts == r.budgets.attempts && r.stable_attempts == r.budgets.attempts;
    return full ? Verdict::Consistent : Verdict::Unresolved;
  }
  return Verdict::Unresolved;
}

ClassificationRecord classify_pair(Family family, std::size_t n, const Composition& top, const Composition& bottom,
                                   std::uint64_t record_seed, const Budgets& budgets, bool embed_certificates) {
  ClassificationRecord rec;
  rec.family = family;
  rec.n = n;
  rec.top = top;
  rec.bottom = bottom;
  rec.seed = record_seed;
  rec.budgets = budgets;

  const LieAlgebra g = make_seaweed(family, n, top, bottom);
  rec.dim = g.dim();
  if (g.dim() == 0) {
    rec.index = 0;
  } else {
    const IndexReport idx =
        robust_index(g, derive_seed(record_seed, 0), budgets.index_trials, budgets.bound);
    rec.index = idx.index;
    rec.index_agreed = idx.trials_agreed;
  }

  if (rec.index == 1 && g.dim() % 2 == 1) {
    auto contact = find_contact_form(g, derive_seed(record_seed, 1), budgets.attempts, budgets.bound,
                                     &rec.contact_attempts);
    auto stable = find_stable_form(g, derive_seed(record_seed, 2), budgets.attempts, budgets.bound,
                                   &rec.stable_attempts);
    rec.contact = contact ? SearchStatus::Found : SearchStatus::NotFound;
    rec.stable = stable ? SearchStatus::Found : SearchStatus::NotFound;
    if (contact) rec.contact_form_stable = is_stable_form(g, contact->form).has_value();
    if (embed_certificates) {
      rec.contact_certificate = std::move(contact);
      rec.stability_certificate = std::move(stable);
    }
  }
  rec.verdict = decide_verdict(rec);
  return rec;
}

void check_limits(Family family, std::size_t n, bool override_limits) {
  if (n == 0) throw InputError("classify: n must be at least 1");
  if (override_limits) return;
  const std::size_t matrix_size = family == Family::SP ? 2 * n : n;
  const bool type_a = family == Family::GL || family == Family::SL;
  if (type_a && n > 7) {
    throw LimitError("classify: n = " + std::to_string(n) + " exceeds the GL/SL limit of 7 (use --override-limits)");
  }
  if (!type_a && matrix_size > 8) {
    throw LimitError("classify: matrix size " + std::to_string(matrix_size) +
                     " exceeds the SP/SO limit of 8 (use --override-limits)");
  }
}

std::vector<ClassificationRecord> classify(const ClassifyOptions& options) {
  check_limits(options.family, options.n, options.override_limits);
  const auto pairs = enumerate_pairs(options.family, options.n);
  std::vector<ClassificationRecord> records(pairs.size());

  unsigned workers = options.workers ? options.workers : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(pairs.size(), 1)));

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    for (std::size_t k = next++; k < pairs.size(); k = next++) {
      try {
        records[k] = classify_pair(options.family, options.n, pairs[k].first, pairs[k].second, options.seed ^ k,
                                   options.budgets, options.embed_certificates);
        records[k].ordinal = k;
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  if (failure) std::rethrow_exception(failure);
  return records;
}

}  // namespace seaweed
