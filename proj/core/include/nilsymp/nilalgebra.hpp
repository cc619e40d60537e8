#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "nilsymp/chevalley.hpp"
#include "nilsymp/linalg.hpp"
#include "nilsymp/rootsys.hpp"

namespace nilsymp {

/// A parabolic subalgebra datum: the root system plus a nonempty set of
/// simple-root indices (1-based).
struct ParabolicSpec {
  RootSystem rs;
  std::set<int> pi0;

  void validate() const;
  std::string case_code() const;  // e.g. "C3:{2,3}"
};

struct BracketTerm {
  int k;
  Rational c;
};

/// A nilpotent Lie algebra over exact rationals with a designated grading and
/// basis labels. Brackets are stored sparsely for i < j; the grading values
/// span 1..k and brackets land in the sum of the grades.
class NilAlgebra {
 public:
  static NilAlgebra nilradical(const ParabolicSpec& spec, const StructureTable& st);
  /// Direct construction (JSON fixtures and tests). Brackets keyed i < j.
  static NilAlgebra make(std::vector<std::string> labels, std::vector<int> grading,
                         std::map<std::pair<int, int>, std::vector<BracketTerm>> brackets);

  int dim() const { return static_cast<int>(labels_.size()); }
  int k() const { return k_; }
  int grade(int i) const { return grading_[i]; }
  const std::vector<int>& grading() const { return grading_; }
  const std::vector<std::string>& labels() const { return labels_; }

  /// [e_i, e_j] as a sparse combination; antisymmetric in (i, j).
  std::vector<BracketTerm> bracket(int i, int j) const;
  const std::map<std::pair<int, int>, std::vector<BracketTerm>>& bracket_table() const {
    return brackets_;
  }
  bool is_abelian() const { return brackets_.empty(); }

  /// Root attached to each basis vector when built from a parabolic.
  const std::optional<std::vector<RootVec>>& basis_roots() const { return roots_; }

  /// [U, V] as a subspace, from subspace bases.
  Subspace bracket_space(const Subspace& u, const Subspace& v) const;

  /// Strictly decreasing chain c^0 = n, c^j = [n, c^{j-1}], ending at 0.
  std::vector<Subspace> lower_central_series() const;
  /// Increasing chain c_0 = 0, c_j = {x : [x, n] in c_{j-1}}, ending at n.
  std::vector<Subspace> upper_central_series() const;
  Subspace center() const;

  /// Appends one central generator with zero brackets (grade 1).
  NilAlgebra extend_trivially(const std::string& label = "T") const;

  /// Span of the grade >= j+1 basis vectors; equals c^j for nilradicals.
  Subspace grade_suffix(int j) const;

 private:
  std::vector<std::string> labels_;
  std::vector<int> grading_;
  int k_ = 1;
  std::map<std::pair<int, int>, std::vector<BracketTerm>> brackets_;
  std::optional<std::vector<RootVec>> roots_;
};

/// Remark-style combinatorial test: the nilradical is abelian iff Pi_0 is a
/// single root whose coordinate in the maximal root is 1.
bool is_abelian_nilradical(const ParabolicSpec& spec);

}  // namespace nilsymp
