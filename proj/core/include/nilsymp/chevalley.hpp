#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <vector>

#include "nilsymp/rootsys.hpp"

namespace nilsymp {

/// Exact structure constants N_{a,b} for pairs of positive roots with a+b a
/// root, so brackets in the nilpotent positive part are concrete numbers:
/// [X_a, X_b] = N_{a,b} X_{a+b}.
///
/// Signs: every extraspecial pair (the (height, lex)-minimal decomposition of
/// each non-simple positive root) is assigned +(p+1), then all remaining signs
/// are forced by the standard Chevalley relations. Antisymmetry and
/// |N_{a,b}| = p+1 hold by construction; validate() sweeps the Jacobi
/// identity over every positive triple.
class StructureTable {
 public:
  static StructureTable build(const RootSystem& rs);
  /// Same, but extraspecial pairs get the given signs (one per positive
  /// root, simple-root entries ignored). Any assignment is consistent.
  static StructureTable build_signed(const RootSystem& rs, const std::vector<int>& signs);
  /// A randomly re-signed, Jacobi-consistent variant of the table.
  StructureTable resigned(std::mt19937_64& rng) const;

  const RootSystem& roots() const { return rs_; }

  /// N_{a,b} for positive-root indices; zero when a+b is not a root.
  Rational constant(int a, int b) const;
  /// (index of a+b, N_{a,b}) or nullopt when a+b is not a root.
  std::optional<std::pair<int, Rational>> bracket(int a, int b) const;

  /// Full table as (a, b, coefficient, sum) rows, a < b.
  std::vector<std::tuple<int, int, Rational, int>> table() const;

  /// Exhaustive Jacobi + Chevalley-integrality sweep; throws JacobiFail.
  void validate() const;

 private:
  RootSystem rs_;
  std::map<std::pair<int, int>, Rational> n_;  // key (a,b) with a < b
};

}  // namespace nilsymp
