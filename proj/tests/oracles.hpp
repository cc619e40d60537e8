#pragma once

// Independent oracles used only by tests. These recompute quantities the
// library produces, through a different route, so the two can be compared
// exactly.

#include <algorithm>
#include <vector>

#include "nilsymp/cohom.hpp"
#include "nilsymp/rootsys.hpp"

namespace nilsymp::testing {

// Differential matrix straight from the alternating-sum evaluation formula:
// (d c)(x_1..x_{p+1}) = sum_{i<j} (-1)^{i+j-1} c([x_i,x_j], ..no x_i..x_j..).
// The production code extends d as an odd derivation instead.
inline std::vector<SparseVec> eval_diff_cols(const NilAlgebra& n, int p) {
  const std::size_t ncols = monomial_count(n.dim(), p);
  const std::size_t nrows = monomial_count(n.dim(), p + 1);
  std::vector<SparseVec> cols(ncols);
  for (std::size_t row = 0; row < nrows; ++row) {
    const std::vector<int> args = monomial_unrank(n.dim(), p + 1, row);
    for (std::size_t i = 0; i < args.size(); ++i)
      for (std::size_t j = i + 1; j < args.size(); ++j) {
        const int sign = ((i + j + 1) % 2 == 0) ? 1 : -1;  // (-1)^{(i+1)+(j+1)-1}
        std::vector<int> rest;
        for (std::size_t s = 0; s < args.size(); ++s)
          if (s != i && s != j) rest.push_back(args[s]);
        for (const auto& term : n.bracket(args[i], args[j])) {
          // value of e^S on (e_m, rest): permutation sign when sets agree
          std::vector<int> tuple = rest;
          tuple.insert(tuple.begin(), term.k);
          int perm = 1;
          bool ok = true;
          for (std::size_t a = 1; a < tuple.size() && ok; ++a)
            for (std::size_t b = a; b > 0 && tuple[b] < tuple[b - 1]; --b) {
              std::swap(tuple[b], tuple[b - 1]);
              perm = -perm;
            }
          for (std::size_t a = 1; a < tuple.size(); ++a)
            if (tuple[a] == tuple[a - 1]) ok = false;
          if (!ok) continue;
          const std::size_t col = monomial_rank(n.dim(), tuple);
          auto& cv = cols[col];
          auto it = std::find_if(cv.begin(), cv.end(),
                                 [&](const auto& e) { return e.first == (int)row; });
          if (it == cv.end()) cv.emplace_back((int)row, sign * perm * term.c);
          else it->second += sign * perm * term.c;
        }
      }
  }
  for (auto& cv : cols) {
    std::erase_if(cv, [](const auto& e) { return e.second == 0; });
    std::sort(cv.begin(), cv.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  }
  return cols;
}

// Downward root-string length by direct membership scans in the root list.
inline int string_down_oracle(const RootSystem& rs, const RootVec& gamma, const RootVec& delta) {
  int p = 0;
  RootVec cur = delta - gamma;
  auto is_rt = [&](const RootVec& r) {
    for (const auto& pos : rs.positive_roots())
      if (pos == r || -pos == r) return true;
    return false;
  };
  while (is_rt(cur)) {
    ++p;
    cur = cur - gamma;
  }
  return p;
}

}  // namespace nilsymp::testing
