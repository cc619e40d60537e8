#include <doctest.h>

#include "fixtures.hpp"
#include "nilsymp/rootsys.hpp"

using namespace nilsymp;

namespace {

std::size_t classical_count(Family f, int n) {
  switch (f) {
    case Family::A: return static_cast<std::size_t>(n) * (n + 1) / 2;
    case Family::B:
    case Family::C: return static_cast<std::size_t>(n) * n;
    case Family::D: return static_cast<std::size_t>(n) * (n - 1);
    case Family::E: return n == 6 ? 36 : (n == 7 ? 63 : 120);
    case Family::F: return 24;
    case Family::G: return 6;
  }
  return 0;
}

std::vector<SimpleType> all_types(int max_rank) {
  std::vector<SimpleType> out;
  for (int n = 1; n <= max_rank; ++n) out.push_back({Family::A, n});
  for (int n = 2; n <= max_rank; ++n) out.push_back({Family::B, n});
  for (int n = 3; n <= max_rank; ++n) out.push_back({Family::C, n});
  for (int n = 4; n <= max_rank; ++n) out.push_back({Family::D, n});
  out.push_back({Family::E, 6});
  out.push_back({Family::E, 7});
  out.push_back({Family::E, 8});
  out.push_back({Family::F, 4});
  out.push_back({Family::G, 2});
  return out;
}

}  // namespace

TEST_CASE("rank constraints") {
  CHECK_THROWS_AS(SimpleType::parse("A0"), InvalidRank);
  CHECK_THROWS_AS(SimpleType::parse("B1"), InvalidRank);
  CHECK_THROWS_AS(SimpleType::parse("C2"), InvalidRank);
  CHECK_THROWS_AS(SimpleType::parse("D3"), InvalidRank);
  CHECK_THROWS_AS(SimpleType::parse("E9"), InvalidRank);
  CHECK_THROWS_AS(SimpleType::parse("F5"), InvalidRank);
  CHECK_THROWS_AS(SimpleType::parse("G3"), InvalidRank);
  CHECK(SimpleType::parse("E6").rank == 6);
}

TEST_CASE("positive root counts match the classical formulas") {
  for (const auto& t : all_types(8)) {
    const RootSystem rs = RootSystem::build(t);
    CHECK(rs.positive_roots().size() == classical_count(t.family, t.rank));
    for (const auto& r : rs.positive_roots()) CHECK(r.all_nonneg());
  }
}

TEST_CASE("maximal root coordinates are the standard diagram labels") {
  auto coords = [](const std::string& code) {
    return RootSystem::build(SimpleType::parse(code)).max_root().coords;
  };
  CHECK(coords("A1") == std::vector<int>{1});
  CHECK(coords("A5") == std::vector<int>{1, 1, 1, 1, 1});
  CHECK(coords("B2") == std::vector<int>{1, 2});
  CHECK(coords("B4") == std::vector<int>{1, 2, 2, 2});
  CHECK(coords("C4") == std::vector<int>{2, 2, 2, 1});
  CHECK(coords("D5") == std::vector<int>{1, 2, 2, 1, 1});
  CHECK(coords("E6") == std::vector<int>{1, 2, 2, 3, 2, 1});
  CHECK(coords("E7") == std::vector<int>{2, 2, 3, 4, 3, 2, 1});
  CHECK(coords("E8") == std::vector<int>{2, 3, 4, 6, 5, 4, 3, 2});
  CHECK(coords("F4") == std::vector<int>{2, 3, 4, 2});
  CHECK(coords("G2") == std::vector<int>{3, 2});
}

TEST_CASE("A1 has a single positive root") {
  const RootSystem rs = RootSystem::build({Family::A, 1});
  CHECK(rs.positive_roots().size() == 1);
  CHECK(rs.max_root() == rs.simple_root(1));
}

TEST_CASE("reflections") {
  const RootSystem g2 = RootSystem::build({Family::G, 2});
  CHECK(g2.reflect(g2.simple_root(1), 1) == -g2.simple_root(1));
  CHECK(g2.reflect(g2.simple_root(2), 1).coords == std::vector<int>{3, 1});

  const RootSystem a2 = RootSystem::build({Family::A, 2});
  CHECK(a2.reflect(a2.simple_root(2), 1).coords == std::vector<int>{1, 1});

  CHECK_THROWS_AS(a2.reflect(RootVec{{2, 0}}, 1), NotARoot);
}

TEST_CASE("reflections are involutions on every root") {
  for (const auto& t : all_types(6)) {
    const RootSystem rs = RootSystem::build(t);
    for (const auto& r : rs.positive_roots())
      for (int i = 1; i <= rs.rank(); ++i) CHECK(rs.reflect(rs.reflect(r, i), i) == r);
  }
}

TEST_CASE("root strings are unbroken intervals of length at most 4") {
  for (const std::string code : {"B3", "G2", "C3"}) {
    const RootSystem rs = RootSystem::build(SimpleType::parse(code));
    for (const auto& g : rs.positive_roots())
      for (const auto& d : rs.positive_roots()) {
        if (g == d) continue;
        // walk down then up; membership must not resume after a gap
        int len = 1;
        RootVec cur = d - g;
        while (rs.is_root(cur)) {
          ++len;
          cur = cur - g;
        }
        const RootVec below = cur;
        cur = d + g;
        while (rs.is_root(cur)) {
          ++len;
          cur = cur + g;
        }
        CHECK(len <= 4);
        CHECK(!rs.is_root(below));
      }
  }
}

TEST_CASE("negative inner product iff negative Cartan entry iff adjacency") {
  for (const auto& t : all_types(8)) {
    const RootSystem rs = RootSystem::build(t);
    for (int i = 1; i <= rs.rank(); ++i)
      for (int j = 1; j <= rs.rank(); ++j) {
        if (i == j) continue;
        const bool inner_neg = rs.inner(rs.simple_root(i), rs.simple_root(j)) < 0;
        const bool cartan_neg = rs.cartan()[i - 1][j - 1] < 0;
        CHECK(inner_neg == cartan_neg);
        // adjacency in the diagram: the sum of adjacent simple roots is a root
        const bool adjacent = rs.is_root(rs.simple_root(i) + rs.simple_root(j));
        CHECK(adjacent == cartan_neg);
      }
  }
}

TEST_CASE("long roots have squared length 2") {
  for (const auto& t : all_types(8)) {
    const RootSystem rs = RootSystem::build(t);
    Rational longest = 0;
    for (const auto& r : rs.positive_roots()) longest = std::max(longest, rs.length_sq(r));
    CHECK(longest == 2);
  }
}

TEST_CASE("coordinate sums") {
  const RootSystem c3 = RootSystem::build({Family::C, 3});
  CHECK(o_value(c3.max_root(), {2}) == 2);
  CHECK(o_value(c3.simple_root(2), {2}) == 1);
  const RootSystem g2 = RootSystem::build({Family::G, 2});
  CHECK(o_value(g2.max_root(), {1}) == 3);
  CHECK(o_value(-g2.max_root(), {1}) == -3);
}

TEST_CASE("epsilon coordinate printer for the classical families") {
  const RootSystem b3 = RootSystem::build({Family::B, 3});
  CHECK(b3.eps_string(b3.max_root()) == "e1+e2");
  CHECK(b3.eps_string(b3.simple_root(3)) == "e3");
  const RootSystem c3 = RootSystem::build({Family::C, 3});
  CHECK(c3.eps_string(c3.max_root()) == "2e1");
  CHECK(c3.eps_string(c3.simple_root(3)) == "2e3");
  const RootSystem d4 = RootSystem::build({Family::D, 4});
  CHECK(d4.eps_string(d4.simple_root(4)) == "e3+e4");
  CHECK(d4.eps_string(d4.max_root()) == "e1+e2");
}
