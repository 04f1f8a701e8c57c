#include "seaweed/composition.hpp"

#include "seaweed/errors.hpp"

#include <charconv>

namespace seaweed {

Composition::Composition(std::vector<std::size_t> parts) : parts_(std::move(parts)) {
  for (auto p : parts_) {
    if (p == 0) throw InputError("composition parts must be positive");
    total_ += p;
  }
}

Composition Composition::parse(std::string_view text) {
  std::vector<std::size_t> parts;
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '(')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == ')')) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.empty()) return Composition();
  while (true) {
    const auto comma = text.find(',');
    const std::string_view item = trim(text.substr(0, comma));
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size()) {
      throw InputError("malformed composition '" + std::string(text) + "'");
    }
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return Composition(std::move(parts));
}

std::vector<std::size_t> Composition::prefix_sums() const {
  std::vector<std::size_t> out;
  std::size_t acc = 0;
  for (auto p : parts_) out.push_back(acc += p);
  return out;
}

std::vector<std::size_t> Composition::suffix_sums() const {
  std::vector<std::size_t> out;
  std::size_t acc = 0;
  for (auto it = parts_.rbegin(); it != parts_.rend(); ++it) out.push_back(acc += *it);
  return out;
}

std::size_t Composition::block_of(std::size_t pos) const {
  std::size_t acc = 0;
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    acc += parts_[k];
    if (pos < acc) return k;
  }
  throw InputError("position outside composition");
}

std::string Composition::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(parts_[k]);
  }
  return out;
}

std::vector<Composition> enumerate_compositions(std::size_t n) {
  if (n == 0) return {Composition()};
  std::vector<Composition> out;
  const std::size_t cuts = n - 1;
  out.reserve(std::size_t{1} << cuts);
  for (std::size_t mask = 0; mask < (std::size_t{1} << cuts); ++mask) {
    // Bit k set means a cut after position n-1-k (1-based).
    std::vector<std::size_t> parts;
    std::size_t start = 0;
    for (std::size_t pos = 1; pos < n; ++pos) {
      if (mask & (std::size_t{1} << (n - 1 - pos))) {
        parts.push_back(pos - start);
        start = pos;
      }
    }
    parts.push_back(n - start);
    out.emplace_back(std::move(parts));
  }
  return out;
}

std::vector<Composition> enumerate_partial_compositions(std::size_t max_total) {
  std::vector<Composition> out{Composition()};
  for (std::size_t m = 1; m <= max_total; ++m) {
    auto level = enumerate_compositions(m);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

std::pair<Composition, Composition> parse_composition_pair(std::string_view text) {
  const auto bar = text.find('|');
  if (bar == std::string_view::npos || text.find('|', bar + 1) != std::string_view::npos) {
    throw InputError("expected 'top|bottom', got '" + std::string(text) + "'");
  }
  return {Composition::parse(text.substr(0, bar)), Composition::parse(text.substr(bar + 1))};
}

}  // namespace seaweed
