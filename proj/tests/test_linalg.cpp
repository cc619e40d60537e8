#include <doctest.h>

#include <random>

#include "nilsymp/linalg.hpp"

using namespace nilsymp;

TEST_CASE("rref is canonical and reports pivots") {
  QMatrix m({{Rational(2), Rational(4), Rational(0)},
             {Rational(1), Rational(2), Rational(1)}});
  const auto pivots = m.rref();
  CHECK(pivots == std::vector<std::size_t>{0, 2});
  CHECK(m.at(0, 0) == 1);
  CHECK(m.at(0, 1) == 2);
  CHECK(m.at(0, 2) == 0);
  CHECK(m.at(1, 2) == 1);
}

TEST_CASE("kernel solves the matrix exactly") {
  QMatrix m({{Rational(1), Rational(2), Rational(3)},
             {Rational(2), Rational(4), Rational(6)}});
  const auto ker = m.kernel();
  REQUIRE(ker.size() == 2);
  for (const auto& v : ker) {
    const QVec img = m.apply(v);
    for (const auto& x : img) CHECK(x == 0);
  }
}

TEST_CASE("determinant and inverse") {
  QMatrix m({{Rational(1), Rational(2)}, {Rational(3), Rational(5)}});
  CHECK(m.det() == Rational(-1));
  const QMatrix inv = m.inverse();
  const QMatrix id = m.mul(inv);
  CHECK(id.at(0, 0) == 1);
  CHECK(id.at(0, 1) == 0);
  CHECK(id.at(1, 0) == 0);
  CHECK(id.at(1, 1) == 1);
}

TEST_CASE("subspace canonical forms and operations") {
  Subspace a(3, {{Rational(1), Rational(1), Rational(0)},
                 {Rational(2), Rational(2), Rational(0)}});
  CHECK(a.dim() == 1);
  Subspace b(3, {{Rational(0), Rational(1), Rational(0)}});
  const Subspace s = a.sum(b);
  CHECK(s.dim() == 2);
  CHECK(s.contains(QVec{Rational(1), Rational(0), Rational(0)}));
  CHECK(!s.contains(QVec{Rational(0), Rational(0), Rational(1)}));
  const Subspace i = s.intersect(Subspace(3, {{Rational(1), Rational(0), Rational(0)},
                                              {Rational(0), Rational(0), Rational(1)}}));
  CHECK(i.dim() == 1);
  CHECK(i.contains(QVec{Rational(1), Rational(0), Rational(0)}));

  // same span, different spanning sets: identical canonical bases
  Subspace c(3, {{Rational(1), Rational(2), Rational(0)},
                 {Rational(0), Rational(1), Rational(0)}});
  Subspace d(3, {{Rational(3), Rational(1), Rational(0)},
                 {Rational(1), Rational(1), Rational(0)}});
  CHECK(c == d);
}

TEST_CASE("sparse rank agrees with dense rank on random matrices") {
  std::mt19937_64 rng(20240811);
  std::uniform_int_distribution<int> val(-3, 3);
  for (int trial = 0; trial < 25; ++trial) {
    const int r = 1 + static_cast<int>(rng() % 8);
    const int c = 1 + static_cast<int>(rng() % 8);
    QMatrix m(r, c);
    std::vector<SparseVec> rows(r);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) {
        const int v = val(rng);
        if (v == 0) continue;
        m.at(i, j) = v;
        rows[i].emplace_back(j, Rational(v));
      }
    CHECK(sparse_rank(rows) == m.rank());
    const auto basis = sparse_row_basis(c, rows);
    CHECK(Subspace(c, basis).dim() == m.rank());
  }
}
