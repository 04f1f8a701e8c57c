#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace seaweed {

// Ordered list of positive integers. The empty composition (total 0) is
// allowed; it stands for the trivial flag in the symplectic and orthogonal
// families.
class Composition {
 public:
  Composition() = default;
  // Throws InputError if any part is zero.
  explicit Composition(std::vector<std::size_t> parts);

  // "2,1,3"; empty text gives the empty composition.
  static Composition parse(std::string_view text);

  const std::vector<std::size_t>& parts() const { return parts_; }
  std::size_t size() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  std::size_t total() const { return total_; }

  // p_1 = a_1, p_2 = a_1 + a_2, ..., p_k = total.
  std::vector<std::size_t> prefix_sums() const;
  // a_k, a_k + a_{k-1}, ..., total.
  std::vector<std::size_t> suffix_sums() const;
  // Index of the part containing 0-based position `pos`.
  std::size_t block_of(std::size_t pos) const;

  std::string to_string() const;

  friend bool operator==(const Composition&, const Composition&) = default;

 private:
  std::vector<std::size_t> parts_;
  std::size_t total_ = 0;
};

// All 2^(n-1) compositions of n. Order: a binary counter over the n-1 cut
// points whose least significant bit is the last cut, so n = 3 yields
// (3), (2,1), (1,2), (1,1,1).
std::vector<Composition> enumerate_compositions(std::size_t n);

// Compositions of every m in [0, max_total]: the empty one first, then each
// m ascending in enumerate_compositions order. 2^max_total entries.
std::vector<Composition> enumerate_partial_compositions(std::size_t max_total);

// "2,1|3" -> ((2,1), (3)). Either side may be empty.
std::pair<Composition, Composition> parse_composition_pair(std::string_view text);

}  // namespace seaweed
