#pragma once

// Shared test fixtures: small algebras with hand-checked structure.

#include <map>

#include "nilsymp/nilalgebra.hpp"

namespace nilsymp::testing {

inline NilAlgebra heisenberg3() {
  return NilAlgebra::make({"X", "Y", "Z"}, {1, 1, 2}, {{{0, 1}, {{2, Rational(1)}}}});
}

inline NilAlgebra filiform4() {
  return NilAlgebra::make({"X1", "X2", "X3", "X4"}, {1, 1, 2, 3},
                          {{{0, 1}, {{2, Rational(1)}}}, {{0, 2}, {{3, Rational(1)}}}});
}

// R T + <X,Y,Z> with [X,Y] = Z
inline NilAlgebra rt_xyz() {
  return NilAlgebra::make({"X", "Y", "Z", "T"}, {1, 1, 2, 1}, {{{0, 1}, {{2, Rational(1)}}}});
}

inline NilAlgebra abelian(int d) {
  std::vector<std::string> labels;
  for (int i = 0; i < d; ++i) labels.push_back("A" + std::to_string(i + 1));
  return NilAlgebra::make(std::move(labels), std::vector<int>(d, 1), {});
}

struct ParabolicCase {
  ParabolicSpec spec;
  StructureTable st;
  NilAlgebra n;
};

inline ParabolicCase parabolic(const std::string& type_code, std::initializer_list<int> pi0) {
  static std::map<std::string, std::pair<RootSystem, StructureTable>> cache;
  auto it = cache.find(type_code);
  if (it == cache.end()) {
    RootSystem rs = RootSystem::build(SimpleType::parse(type_code));
    StructureTable st = StructureTable::build(rs);
    it = cache.emplace(type_code, std::make_pair(std::move(rs), std::move(st))).first;
  }
  ParabolicSpec spec{it->second.first, std::set<int>(pi0)};
  NilAlgebra n = NilAlgebra::nilradical(spec, it->second.second);
  return {std::move(spec), it->second.second, std::move(n)};
}

}  // namespace nilsymp::testing
