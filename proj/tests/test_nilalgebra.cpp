#include <doctest.h>

#include "fixtures.hpp"

using namespace nilsymp;
using namespace nilsymp::testing;

TEST_CASE("paper-scale dimensions of named nilradicals") {
  {
    const auto c = parabolic("B3", {3});
    CHECK(c.n.dim() == 6);
    CHECK(c.n.k() == 2);
  }
  {
    const auto c = parabolic("C3", {2});
    CHECK(c.n.dim() == 7);
    CHECK(c.n.center().dim() == 3);
  }
  {
    const auto c = parabolic("A4", {2, 3});
    CHECK(c.n.dim() == 8);
    CHECK(c.n.center().dim() == 4);
  }
  {
    const auto c = parabolic("C4", {3});
    CHECK(c.n.lower_central_series()[1].dim() == 6);
    CHECK(c.n.dim() == 12);
  }
  {
    const auto c = parabolic("C3", {2, 3});
    CHECK(c.n.dim() == 8);
    CHECK(c.n.k() == 3);
    CHECK(c.n.lower_central_series()[1].dim() == 5);
  }
}

TEST_CASE("central series of an abelian nilradical") {
  const auto c = parabolic("A3", {1});
  const auto lcs = c.n.lower_central_series();
  REQUIRE(lcs.size() == 2);
  CHECK(lcs[0].dim() == 3);
  CHECK(lcs[1].dim() == 0);
  const auto ucs = c.n.upper_central_series();
  REQUIRE(ucs.size() == 2);
  CHECK(ucs[1].dim() == 3);
}

TEST_CASE("grading recovers the lower central series layer by layer") {
  // every type of rank <= 6, every Pi_0 of size <= 2
  for (const std::string code : {"A2", "A4", "A6", "B2", "B4", "B6", "C3", "C5",
                                 "C6", "D4", "D5", "D6", "E6", "F4", "G2"}) {
    const RootSystem rs = RootSystem::build(SimpleType::parse(code));
    const StructureTable st = StructureTable::build(rs);
    const int n = rs.rank();
    std::vector<std::set<int>> subsets;
    for (int a = 1; a <= n; ++a) subsets.push_back({a});
    for (int a = 1; a <= n; ++a)
      for (int b = a + 1; b <= n; ++b) subsets.push_back({a, b});
    for (const auto& s : subsets) {
      const ParabolicSpec spec{rs, s};
      const NilAlgebra alg = NilAlgebra::nilradical(spec, st);
      const auto lcs = alg.lower_central_series();
      REQUIRE(static_cast<int>(lcs.size()) == alg.k() + 1);
      for (int j = 0; j <= alg.k(); ++j) CHECK(lcs[j] == alg.grade_suffix(j));
      // upper central series coincides after transposing the indexes
      const auto ucs = alg.upper_central_series();
      REQUIRE(ucs.size() == lcs.size());
      for (int j = 0; j <= alg.k(); ++j) CHECK(ucs[j] == lcs[alg.k() - j]);
    }
  }
}

TEST_CASE("bracket grading compatibility") {
  for (const std::string code : {"B4", "C4", "F4", "G2"}) {
    const RootSystem rs = RootSystem::build(SimpleType::parse(code));
    const StructureTable st = StructureTable::build(rs);
    for (int a = 1; a <= rs.rank(); ++a) {
      const ParabolicSpec spec{rs, {a}};
      const NilAlgebra alg = NilAlgebra::nilradical(spec, st);
      for (const auto& [key, terms] : alg.bracket_table())
        for (const auto& t : terms)
          CHECK(alg.grade(t.k) == alg.grade(key.first) + alg.grade(key.second));
    }
  }
}

TEST_CASE("combinatorial abelian test agrees with the bracket-level test") {
  for (const std::string code : {"A4", "B4", "C4", "D5", "E6", "F4", "G2"}) {
    const RootSystem rs = RootSystem::build(SimpleType::parse(code));
    const StructureTable st = StructureTable::build(rs);
    for (int a = 1; a <= rs.rank(); ++a) {
      const ParabolicSpec spec{rs, {a}};
      const NilAlgebra alg = NilAlgebra::nilradical(spec, st);
      CHECK(is_abelian_nilradical(spec) == alg.is_abelian());
    }
  }
}

TEST_CASE("abelian examples from the diagram labels") {
  for (int k = 1; k <= 5; ++k) {
    const RootSystem rs = RootSystem::build({Family::A, 5});
    CHECK(is_abelian_nilradical({rs, {k}}));
  }
  CHECK(!is_abelian_nilradical({RootSystem::build({Family::B, 3}), {3}}));
  const RootSystem e8 = RootSystem::build({Family::E, 8});
  for (int a = 1; a <= 8; ++a) CHECK(!is_abelian_nilradical({e8, {a}}));
}

TEST_CASE("dimension equals the layer sum") {
  const auto c = parabolic("G2", {1});
  CHECK(c.n.dim() == 5);
  std::map<int, int> layers;
  for (int i = 0; i < c.n.dim(); ++i) layers[c.n.grade(i)]++;
  CHECK(layers[1] == 2);
  CHECK(layers[2] == 1);
  CHECK(layers[3] == 2);
}

TEST_CASE("trivial extension") {
  const NilAlgebra h = heisenberg3();
  const NilAlgebra ext = h.extend_trivially();
  CHECK(ext.dim() == 4);
  CHECK(ext.lower_central_series()[1] == Subspace(4, {{Rational(0), Rational(0), Rational(1), Rational(0)}}));
  const NilAlgebra ab = abelian(3).extend_trivially();
  CHECK(ab.is_abelian());
  CHECK(ab.dim() == 4);
}
