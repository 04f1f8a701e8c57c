#include "seaweed/polynomial.hpp"

#include "seaweed/errors.hpp"
#include "seaweed/subspace.hpp"

#include <sstream>
#include <utility>

namespace seaweed {

Polynomial::Polynomial(Vector coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Polynomial Polynomial::from_roots(const Vector& roots) {
  Polynomial p(Vector{Scalar(1)});
  for (const auto& r : roots) p = p * Polynomial(Vector{-r, Scalar(1)});
  return p;
}

const Scalar& Polynomial::leading() const {
  if (coeffs_.empty()) throw PreconditionError("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  Vector d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<long>(i);
  return Polynomial(std::move(d));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return {};
  return Polynomial(scaled(coeffs_, 1 / leading()));
}

Scalar Polynomial::operator()(const Scalar& t) const {
  Scalar acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

Matrix Polynomial::operator()(const Matrix& m) const {
  if (!m.is_square()) throw PreconditionError("polynomial evaluation needs a square matrix");
  Matrix acc(m.rows(), m.cols());
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * m + *it * Matrix::identity(m.rows());
  }
  return acc;
}

std::string Polynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const Scalar& c = coeffs_[i];
    if (c == 0) continue;
    Scalar mag = abs(c);
    out << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    if (mag != 1 || i == 0) out << mag.get_str();
    if (i >= 1) out << var;
    if (i >= 2) out << "^" << i;
    first = false;
  }
  return out.str();
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  Vector out(a.coeffs().size() + b.coeffs().size() - 1, Scalar(0));
  for (std::size_t i = 0; i < a.coeffs().size(); ++i)
    for (std::size_t j = 0; j < b.coeffs().size(); ++j) out[i + j] += a.coeffs()[i] * b.coeffs()[j];
  return Polynomial(std::move(out));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  Vector out(std::max(a.coeffs().size(), b.coeffs().size()), Scalar(0));
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) out[i] += a.coeffs()[i];
  for (std::size_t i = 0; i < b.coeffs().size(); ++i) out[i] -= b.coeffs()[i];
  return Polynomial(std::move(out));
}

Polynomial remainder(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw PreconditionError("polynomial division by zero");
  Vector r = a.coeffs();
  const Vector& d = b.coeffs();
  const std::size_t db = d.size() - 1;
  while (r.size() > db) {
    while (!r.empty() && r.back() == 0) r.pop_back();
    if (r.size() <= db) break;
    const Scalar factor = r.back() / d.back();
    const std::size_t shift = r.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) r[shift + i] -= factor * d[i];
    r.pop_back();
  }
  return Polynomial(std::move(r));
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a;
  Polynomial y = b;
  while (!y.is_zero()) {
    Polynomial r = remainder(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

Polynomial minimal_polynomial(const Matrix& m) {
  if (!m.is_square()) throw PreconditionError("minimal_polynomial: matrix is not square");
  const std::size_t n = m.rows();
  const std::size_t n2 = n * n;
  if (n == 0) return Polynomial(Vector{Scalar(1)});
  // Find the first power M^d that lies in span{I, M, ..., M^(d-1)}; the
  // powers before it are independent, so the relation is unique.
  std::vector<Vector> powers{Matrix::identity(n).flat()};
  Matrix current = Matrix::identity(n);
  for (std::size_t d = 1; d <= n; ++d) {
    current = current * m;
    const Subspace previous = Subspace::span(n2, powers);
    if (previous.contains(current.flat())) {
      Matrix columns(n2, d + 1);
      for (std::size_t k = 0; k < d; ++k)
        for (std::size_t i = 0; i < n2; ++i) columns(i, k) = powers[k][i];
      for (std::size_t i = 0; i < n2; ++i) columns(i, d) = current.flat()[i];
      const Subspace relation = nullspace(columns);
      Vector coeffs = relation.basis().front();
      return Polynomial(scaled(coeffs, 1 / coeffs[d]));
    }
    powers.push_back(current.flat());
  }
  throw ConstructionError("minimal_polynomial: degree exceeded matrix size");
}

bool is_squarefree(const Polynomial& p) {
  if (p.is_zero()) throw PreconditionError("is_squarefree: zero polynomial");
  return gcd(p, p.derivative()).degree() == 0;
}

}  // namespace seaweed
