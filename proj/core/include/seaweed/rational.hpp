#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace seaweed {

// Exact rational number. GMP keeps every value canonical: positive
// denominator, numerator and denominator coprime.
using Scalar = mpq_class;
using Vector = std::vector<Scalar>;

// "num/den", always with an explicit denominator ("3/1", "-1/2", "0/1").
std::string to_string(const Scalar& value);

// Accepts "num/den" or a bare integer. Throws InputError on malformed text
// or a zero denominator.
Scalar parse_scalar(std::string_view text);

bool is_zero(const Vector& v);
Scalar dot(const Vector& a, const Vector& b);
Vector scaled(const Vector& v, const Scalar& factor);
// a + factor * b
Vector axpy(const Vector& a, const Scalar& factor, const Vector& b);
Vector unit_vector(std::size_t dim, std::size_t index);

}  // namespace seaweed
