#include "doctest.h"
#include "oracles.hpp"

#include "seaweed/errors.hpp"
#include "seaweed/matrix.hpp"
#include "seaweed/polynomial.hpp"
#include "seaweed/rational.hpp"
#include "seaweed/subspace.hpp"

#include <algorithm>
#include <string>

using namespace seaweed;

namespace {

Matrix permute_rows(const Matrix& m, const std::vector<std::size_t>& perm) {
  Matrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(perm[i], j);
  return out;
}

std::vector<std::size_t> shuffled(std::size_t n, oracle::Generator& gen) {
  std::vector<std::size_t> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = i;
  std::shuffle(p.begin(), p.end(), gen.engine());
  return p;
}

}  // namespace

TEST_SUITE("rational") {
  TEST_CASE("round trip through text") {
    CHECK(to_string(Scalar(3, 4)) == "3/4");
    CHECK(to_string(Scalar(-2)) == "-2/1");
    CHECK(parse_scalar("6/8") == Scalar(3, 4));
    CHECK(parse_scalar("-5") == Scalar(-5));
    CHECK_THROWS_AS(parse_scalar("1/0"), InputError);
    CHECK_THROWS_AS(parse_scalar("abc"), InputError);
  }

  TEST_CASE("large reciprocals multiply to one") {
    oracle::Generator gen(11);
    for (int trial = 0; trial < 50; ++trial) {
      std::string a_text = std::to_string(gen.integer(1, 9));
      std::string b_text = std::to_string(gen.integer(1, 9));
      while (a_text.size() < 200) a_text += std::to_string(gen.integer(0, 9));
      while (b_text.size() < 200) b_text += std::to_string(gen.integer(0, 9));
      const mpz_class a(a_text), b(b_text);
      Scalar x(a, b), y(b, a);
      x.canonicalize();
      y.canonicalize();
      CHECK(x * y == 1);
    }
  }
}

TEST_SUITE("rank and nullspace") {
  TEST_CASE("examples") {
    CHECK(rank(Matrix::identity(3)) == 3);
    CHECK(rank(Matrix(4, 4)) == 0);
    CHECK(rank(Matrix{{1, 2, 3}, {2, 4, 6}, {1, 0, 1}}) == 2);
    CHECK(rank(Matrix{{0, 1, 0, 0}, {-1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, -1, 0}}) == 4);
    CHECK(rank(Matrix(0, 3)) == 0);
  }

  TEST_CASE("nullspace examples") {
    CHECK(nullspace(Matrix::identity(3)).dim() == 0);
    CHECK(nullspace(Matrix(2, 3)) == Subspace::full(3));
    const Subspace k = nullspace(Matrix{{0, 1}, {0, 0}});
    CHECK(k == Subspace::span(2, {Vector{1, 0}}));
  }

  TEST_CASE("rref reduces a known matrix") {
    const EchelonForm e = rref(Matrix{{2, 4}, {1, 3}});
    CHECK(e.reduced == Matrix::identity(2));
    CHECK(e.pivots == std::vector<std::size_t>{0, 1});
  }

  TEST_CASE("inverse") {
    const Matrix m{{1, 2}, {3, 4}};
    CHECK(inverse(m) * m == Matrix::identity(2));
    CHECK_THROWS_AS(inverse(Matrix{{1, 2}, {2, 4}}), PreconditionError);
  }

  TEST_CASE("property: rank plus nullity equals column count") {
    oracle::Generator gen(1);
    for (int trial = 0; trial < 150; ++trial) {
      const auto r = static_cast<std::size_t>(gen.integer(1, 6));
      const auto c = static_cast<std::size_t>(gen.integer(1, 6));
      const auto k = static_cast<std::size_t>(gen.integer(0, 6));
      const Matrix m = gen.low_rank(r, c, k, 9);
      const std::size_t rk = rank(m);
      CHECK(rk <= std::min({r, c, k}));
      CHECK(rk == rref(m).pivots.size());
      const Subspace ker = nullspace(m);
      CHECK(rk + ker.dim() == c);
      for (const auto& v : ker.basis()) CHECK(is_zero(m * v));
    }
  }

  TEST_CASE("property: rank is invariant under row and column permutations") {
    oracle::Generator gen(2);
    for (int trial = 0; trial < 100; ++trial) {
      const auto r = static_cast<std::size_t>(gen.integer(1, 6));
      const auto c = static_cast<std::size_t>(gen.integer(1, 6));
      const Matrix m = gen.low_rank(r, c, static_cast<std::size_t>(gen.integer(0, 5)), 7);
      const Matrix p = permute_rows(permute_rows(m, shuffled(r, gen)).transpose(), shuffled(c, gen));
      CHECK(rank(m) == rank(p));
      CHECK(rank(m) == rank(m.transpose()));
    }
  }

  TEST_CASE("property: inverse of a random invertible matrix") {
    oracle::Generator gen(3);
    int checked = 0;
    while (checked < 40) {
      const auto n = static_cast<std::size_t>(gen.integer(1, 5));
      const Matrix m = gen.matrix(n, n, 20);
      if (rank(m) < n) continue;
      CHECK(m * inverse(m) == Matrix::identity(n));
      CHECK(oracle::leibniz_det(m) != 0);
      ++checked;
    }
  }
}

TEST_SUITE("subspace") {
  TEST_CASE("intersection examples") {
    const Subspace xy = Subspace::span(3, {Vector{1, 0, 0}, Vector{0, 1, 0}});
    const Subspace yz = Subspace::span(3, {Vector{0, 1, 0}, Vector{0, 0, 1}});
    CHECK(intersect(xy, yz) == Subspace::span(3, {Vector{0, 1, 0}}));
    CHECK(sum(xy, yz) == Subspace::full(3));
    CHECK(intersect(xy, Subspace(3)).is_zero());
    CHECK_THROWS_AS(intersect(xy, Subspace(4)), DimensionError);
  }

  TEST_CASE("canonical basis makes equal spans compare equal") {
    const Subspace a = Subspace::span(3, {Vector{1, 1, 0}, Vector{1, -1, 0}});
    const Subspace b = Subspace::span(3, {Vector{2, 0, 0}, Vector{0, 3, 0}, Vector{5, 5, 0}});
    CHECK(a == b);
    CHECK(a.contains(Vector{7, -2, 0}));
    CHECK_FALSE(a.contains(Vector{0, 0, 1}));
    const auto coords = a.coordinates(Vector{7, -2, 0});
    REQUIRE(coords);
    CHECK(*coords == Vector{7, -2});
  }

  TEST_CASE("property: intersection is commutative, idempotent and bounded") {
    oracle::Generator gen(4);
    for (int trial = 0; trial < 100; ++trial) {
      const auto n = static_cast<std::size_t>(gen.integer(1, 6));
      std::vector<Vector> us, vs;
      const auto ku = gen.integer(0, static_cast<long>(n));
      const auto kv = gen.integer(0, static_cast<long>(n));
      const Matrix mu = gen.low_rank(static_cast<std::size_t>(ku) + 1, n, static_cast<std::size_t>(ku), 5);
      const Matrix mv = gen.low_rank(static_cast<std::size_t>(kv) + 1, n, static_cast<std::size_t>(kv), 5);
      for (std::size_t i = 0; i < mu.rows(); ++i) us.push_back(mu.row(i));
      for (std::size_t i = 0; i < mv.rows(); ++i) vs.push_back(mv.row(i));
      const Subspace a = Subspace::span(n, us), b = Subspace::span(n, vs);
      const Subspace ab = intersect(a, b);
      CHECK(ab == intersect(b, a));
      CHECK(intersect(a, a) == a);
      CHECK(ab.dim() <= std::min(a.dim(), b.dim()));
      CHECK(a.contains(ab));
      CHECK(b.contains(ab));
      CHECK(ab.dim() + sum(a, b).dim() == a.dim() + b.dim());
      CHECK(annihilator(annihilator(a)) == a);
    }
  }
}

TEST_SUITE("polynomial") {
  TEST_CASE("minimal polynomial examples") {
    CHECK(minimal_polynomial(Matrix::identity(3)) == Polynomial(Vector{-1, 1}));
    CHECK(minimal_polynomial(Matrix{{0, 1}, {0, 0}}) == Polynomial(Vector{0, 0, 1}));
    CHECK(minimal_polynomial(Matrix{{1, 0}, {0, 2}}) == Polynomial::from_roots({1, 2}));
    CHECK(minimal_polynomial(Matrix(3, 3)) == Polynomial(Vector{0, 1}));
    CHECK_THROWS_AS(minimal_polynomial(Matrix(2, 3)), PreconditionError);
  }

  TEST_CASE("squarefree examples") {
    CHECK_FALSE(is_squarefree(Polynomial(Vector{0, 0, 1})));
    CHECK(is_squarefree(Polynomial::from_roots({1, 2})));
    CHECK(is_squarefree(Polynomial(Vector{0, -1, 0, 1})));
    CHECK(is_squarefree(Polynomial(Vector{5})));
    CHECK_THROWS_AS(is_squarefree(Polynomial()), PreconditionError);
  }

  TEST_CASE("property: minimal polynomial annihilates and is conjugation invariant") {
    oracle::Generator gen(5);
    int checked = 0;
    while (checked < 40) {
      const auto n = static_cast<std::size_t>(gen.integer(1, 4));
      const Matrix m = gen.low_rank(n, n, static_cast<std::size_t>(gen.integer(0, 4)), 4);
      const Matrix p = gen.matrix(n, n, 6);
      if (rank(p) < n) continue;
      const Polynomial mp = minimal_polynomial(m);
      CHECK(mp(m).is_zero());
      CHECK(mp.leading() == 1);
      CHECK(mp.degree() <= static_cast<int>(n));
      CHECK(minimal_polynomial(inverse(p) * m * p) == mp);
      ++checked;
    }
  }

  TEST_CASE("property: squarefree detects repeated roots") {
    oracle::Generator gen(6);
    for (int trial = 0; trial < 60; ++trial) {
      Vector roots;
      const auto k = gen.integer(1, 4);
      for (long i = 0; i < k; ++i) roots.push_back(gen.rational(6));
      std::sort(roots.begin(), roots.end());
      const bool distinct = std::adjacent_find(roots.begin(), roots.end()) == roots.end();
      CHECK(is_squarefree(Polynomial::from_roots(roots)) == distinct);
      roots.push_back(roots.front());
      CHECK_FALSE(is_squarefree(Polynomial::from_roots(roots)));
    }
  }
}
