#include <doctest.h>

#include <random>
#include <set>

#include "fixtures.hpp"
#include "nilsymp/kostant.hpp"

using namespace nilsymp;
using namespace nilsymp::testing;

TEST_CASE("length-two elements for the full Borel of A2") {
  const auto c = parabolic("A2", {1, 2});
  const auto w = enumerate_w12(c.spec);
  CHECK(w.size() == 2);
  for (const auto& e : w) CHECK(o_value(e.second, c.spec.pi0) > 0);
}

TEST_CASE("orthogonal pair contributes a single element") {
  const auto c = parabolic("A3", {1, 3});
  const auto w = enumerate_w12(c.spec);
  CHECK(w.size() == 3);
  int orthogonal = 0;
  for (const auto& e : w)
    if (e.second == c.spec.rs.simple_root(e.beta)) ++orthogonal;
  CHECK(orthogonal == 1);
}

TEST_CASE("hwv families for small cases") {
  {
    const auto c = parabolic("A2", {1, 2});
    const auto hwv = h2_hwv(c.spec, c.st, c.n);
    REQUIRE(hwv.size() == 2);
    const RootVec g12 = c.spec.rs.simple_root(1) + c.spec.rs.simple_root(2);
    for (const auto& e : hwv) CHECK(e.partner == g12);
  }
  {
    const auto c = parabolic("B2", {1, 2});
    const auto hwv = h2_hwv(c.spec, c.st, c.n);
    REQUIRE(hwv.size() == 2);
    for (const auto& e : hwv)
      CHECK(e.partner != c.spec.rs.simple_root(e.alpha == 1 ? 2 : 1));  // reflected family only
  }
  {
    const auto c = parabolic("A3", {1, 3});
    const auto hwv = h2_hwv(c.spec, c.st, c.n);
    bool found_orthogonal_monomial = false;
    for (const auto& e : hwv)
      if (e.alpha == 1 && e.partner == c.spec.rs.simple_root(3)) found_orthogonal_monomial = true;
    CHECK(found_orthogonal_monomial);
  }
}

TEST_CASE("hwv count always equals the Weyl count and entries are distinct") {
  for (const std::string code : {"A2", "A3", "A4", "B2", "B3", "C3", "D4", "G2", "F4"}) {
    const RootSystem rs = RootSystem::build(SimpleType::parse(code));
    const StructureTable st = StructureTable::build(rs);
    const int n = rs.rank();
    std::vector<std::set<int>> subsets;
    for (int a = 1; a <= n; ++a) subsets.push_back({a});
    for (int a = 1; a <= n; ++a)
      for (int b = a + 1; b <= n; ++b) subsets.push_back({a, b});
    for (const auto& s : subsets) {
      const ParabolicSpec spec{rs, s};
      const auto w = enumerate_w12(spec);
      const auto hwv = h2_hwv(spec, st);
      CHECK(w.size() == hwv.size());
      std::set<std::pair<std::vector<int>, std::vector<int>>> pairs;
      for (const auto& e : hwv) pairs.insert({e.alpha_root.coords, e.partner.coords});
      CHECK(pairs.size() == hwv.size());
    }
  }
}

TEST_CASE("E8 first-node entries exist but never reach the top grade") {
  const auto c = parabolic("E8", {1});
  const auto hwv = h2_hwv(c.spec, c.st, c.n);
  CHECK(!hwv.empty());
  for (const auto& e : hwv) CHECK(e.partner_grade < c.n.k());
}

TEST_CASE("brute-force verification on small nilradicals") {
  for (const auto& args : std::vector<std::pair<std::string, std::set<int>>>{
           {"A2", {1, 2}}, {"B3", {3}}, {"A2", {1}}, {"A3", {1, 3}}, {"C3", {2}},
           {"B2", {1, 2}}, {"G2", {1}}, {"D4", {3, 4}}}) {
    const RootSystem rs = RootSystem::build(SimpleType::parse(args.first));
    const StructureTable st = StructureTable::build(rs);
    const ParabolicSpec spec{rs, args.second};
    const HwvReport rep = verify_hwv_against_cohomology(spec, st, true);
    INFO(rep.case_code, ": ", rep.failure);
    CHECK(rep.ok);
    CHECK(rep.hwv_count == rep.w12_count);
  }
}

TEST_CASE("heisenberg case: two vectors spanning the whole H^2") {
  const auto c = parabolic("A2", {1, 2});
  const HwvReport rep = verify_hwv_against_cohomology(c.spec, c.st, true);
  CHECK(rep.ok);
  CHECK(rep.b2 == 2);
  CHECK(rep.hwv_count == 2);
  CHECK(rep.annihilator_dim == 2);
}

TEST_CASE("verification is stable under re-signed structure tables") {
  std::mt19937_64 rng(123);
  for (const auto& args : std::vector<std::pair<std::string, std::set<int>>>{
           {"B3", {3}}, {"C3", {2, 3}}, {"G2", {1}}}) {
    const RootSystem rs = RootSystem::build(SimpleType::parse(args.first));
    const StructureTable st = StructureTable::build(rs).resigned(rng);
    const ParabolicSpec spec{rs, args.second};
    const HwvReport rep = verify_hwv_against_cohomology(spec, st, true);
    INFO(rep.case_code, ": ", rep.failure);
    CHECK(rep.ok);
  }
}

TEST_CASE("raising operators require roots outside Pi_0") {
  const auto c = parabolic("A2", {1});
  ExtForm f(c.n.dim(), 2);
  CHECK_THROWS_AS(act_raising(c.spec, c.st, c.n, 1, f), InvalidCase);
}
