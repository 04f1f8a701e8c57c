#pragma once

#include "seaweed/matrix.hpp"

#include <string>
#include <vector>

namespace seaweed {

// Univariate polynomial over Q, coefficients stored lowest degree first with
// no trailing zeros. The zero polynomial has no coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(Vector coeffs);

  // Monic polynomial with the given roots, (t - r1)(t - r2)...
  static Polynomial from_roots(const Vector& roots);

  const Vector& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Scalar& leading() const;

  Polynomial derivative() const;
  Polynomial monic() const;
  Scalar operator()(const Scalar& t) const;
  Matrix operator()(const Matrix& m) const;

  std::string to_string(const std::string& var = "t") const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

 private:
  void trim();
  Vector coeffs_;
};

Polynomial operator*(const Polynomial& a, const Polynomial& b);
Polynomial operator-(const Polynomial& a, const Polynomial& b);
// Remainder of Euclidean division; throws PreconditionError on a zero divisor.
Polynomial remainder(const Polynomial& a, const Polynomial& b);
// Monic gcd; gcd(0, 0) is the zero polynomial.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

// Monic polynomial p of least degree with p(M) = 0. Throws PreconditionError
// for non-square input.
Polynomial minimal_polynomial(const Matrix& m);

// True iff gcd(p, p') is constant. Throws PreconditionError on the zero
// polynomial.
bool is_squarefree(const Polynomial& p);

}  // namespace seaweed
