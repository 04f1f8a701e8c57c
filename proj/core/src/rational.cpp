#include "seaweed/rational.hpp"

#include "seaweed/errors.hpp"

#include <cctype>

namespace seaweed {

namespace {

mpz_class parse_integer(std::string_view text, std::string_view whole) {
  std::size_t pos = 0;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) pos = 1;
  if (pos == text.size()) {
    throw InputError("malformed rational '" + std::string(whole) + "'");
  }
  for (std::size_t i = pos; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw InputError("malformed rational '" + std::string(whole) + "'");
    }
  }
  std::string digits(text[0] == '+' ? text.substr(1) : text);
  return mpz_class(digits, 10);
}

}  // namespace

std::string to_string(const Scalar& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Scalar parse_scalar(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Scalar(parse_integer(text, text));
  }
  mpz_class num = parse_integer(text.substr(0, slash), text);
  mpz_class den = parse_integer(text.substr(slash + 1), text);
  if (den == 0) {
    throw InputError("zero denominator in '" + std::string(text) + "'");
  }
  Scalar out(num, den);
  out.canonicalize();
  return out;
}

bool is_zero(const Vector& v) {
  for (const auto& x : v) {
    if (x != 0) return false;
  }
  return true;
}

Scalar dot(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw DimensionError("dot: length mismatch");
  Scalar acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != 0 && b[i] != 0) acc += a[i] * b[i];
  }
  return acc;
}

Vector scaled(const Vector& v, const Scalar& factor) {
  Vector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] * factor;
  return out;
}

Vector axpy(const Vector& a, const Scalar& factor, const Vector& b) {
  if (a.size() != b.size()) throw DimensionError("axpy: length mismatch");
  Vector out = a;
  if (factor == 0) return out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (b[i] != 0) out[i] += factor * b[i];
  }
  return out;
}

Vector unit_vector(std::size_t dim, std::size_t index) {
  Vector v(dim, Scalar(0));
  v.at(index) = 1;
  return v;
}

}  // namespace seaweed
