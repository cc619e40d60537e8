#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "nilsymp/errors.hpp"
#include "nilsymp/rational.hpp"

namespace nilsymp {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

/// One of the split simple types, e.g. {A,5} or {G,2}.
/// Rank constraints: A n>=1, B n>=2, C n>=3, D n>=4, E n in {6,7,8}, F n=4, G n=2.
struct SimpleType {
  Family family;
  int rank;

  static SimpleType parse(const std::string& code);  // "A5", "G2", ...
  std::string code() const;
  void validate() const;  // throws InvalidRank

  bool operator==(const SimpleType&) const = default;
};

/// A root in integer coordinates over the simple roots.
struct RootVec {
  std::vector<int> coords;

  int height() const;
  bool is_zero() const;
  bool all_nonneg() const;
  bool all_nonpos() const;
  RootVec operator+(const RootVec& o) const;
  RootVec operator-(const RootVec& o) const;
  RootVec operator-() const;
  bool operator==(const RootVec&) const = default;
  /// (height, lex) ordering used everywhere a tie needs breaking.
  bool operator<(const RootVec& o) const;
};

struct RootVecHash {
  std::size_t operator()(const RootVec& r) const {
    std::size_t h = 1469598103934665603ull;
    for (int c : r.coords) {
      h ^= static_cast<std::size_t>(c) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

/// Positive root system of a split simple type in the standard simple-root
/// numbering (E-series branch node is gamma_2, attached to gamma_4).
/// Immutable after construction.
class RootSystem {
 public:
  static RootSystem build(SimpleType t);

  const SimpleType& type() const { return type_; }
  int rank() const { return type_.rank; }
  const std::vector<RootVec>& positive_roots() const { return positive_; }
  const RootVec& max_root() const { return max_root_; }
  const std::vector<std::vector<int>>& cartan() const { return cartan_; }

  RootVec simple_root(int i) const;  // i is 1-based
  bool is_root(const RootVec& r) const;
  bool is_positive_root(const RootVec& r) const;
  /// Index of a positive root in the (height, lex) ordering; NotARoot otherwise.
  int index_of(const RootVec& r) const;

  /// <beta, alpha^vee> = 2(beta,alpha)/(alpha,alpha), an integer.
  int pairing(const RootVec& beta, const RootVec& alpha) const;
  /// Inner product in the normalization with long roots of squared length 2.
  Rational inner(const RootVec& a, const RootVec& b) const;
  Rational length_sq(const RootVec& a) const { return inner(a, a); }

  /// s_alpha applied to a root of the system (alpha_index is 1-based).
  RootVec reflect(const RootVec& target, int alpha_index) const;
  /// General reflection s_alpha(beta) for any alpha in the system.
  RootVec reflect_by(const RootVec& beta, const RootVec& alpha) const;

  /// Largest p with (delta - p*gamma) a root: the downward length of the
  /// gamma-string through delta.
  int string_down(const RootVec& gamma, const RootVec& delta) const;

  /// Pretty form in the epsilon coordinates classical types use.
  std::string eps_string(const RootVec& r) const;
  std::string coord_string(const RootVec& r) const;

 private:
  SimpleType type_;
  std::vector<RootVec> positive_;
  std::vector<std::vector<int>> cartan_;            // cartan_[i][j] = <g_i, g_j^vee>
  std::vector<std::vector<Rational>> bilinear_;     // (g_i, g_j)
  RootVec max_root_;
  std::unordered_map<RootVec, int, RootVecHash> index_;
};

int coord(const RootVec& gamma, int alpha_index);  // 1-based
/// o(gamma) = sum of the Pi_0 coordinates; the grading weight of the root.
int o_value(const RootVec& gamma, const std::set<int>& pi0);

}  // namespace nilsymp
