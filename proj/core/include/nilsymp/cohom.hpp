#pragma once

#include <vector>

#include "nilsymp/extform.hpp"
#include "nilsymp/linalg.hpp"
#include "nilsymp/nilalgebra.hpp"

namespace nilsymp {

/// A filtration n = n^0 > n^1 > ... > n^k = 0 with [n^i, n^j] in n^{i+j+1}.
struct Filtration {
  std::vector<Subspace> chain;  // chain[j] = n^j, chain[0] full, chain[k] zero

  int length() const { return static_cast<int>(chain.size()) - 1; }
};

/// Chevalley-Eilenberg differential of a single form.
ExtForm differential(const NilAlgebra& n, const ExtForm& form);

/// Sparse columns of d_p : Lambda^p -> Lambda^{p+1} in the lex monomial bases.
std::vector<SparseVec> diff_matrix_cols(const NilAlgebra& n, int p);

/// Kernel of d_2 as a subspace of Lambda^2 coordinates.
Subspace closed_2forms(const NilAlgebra& n);
/// Image of d_1 as a subspace of Lambda^2 coordinates.
Subspace exact_2forms(const NilAlgebra& n);

long betti(const NilAlgebra& n, int p);
/// b_0..b_dim; guarded to dim <= 14.
std::vector<long> betti_all(const NilAlgebra& n);

/// The filtration given by the lower central series.
Filtration lcs_filtration(const NilAlgebra& n);
/// Throws NotAFiltration unless chain is strictly decreasing, ends at zero,
/// and satisfies the bracket containments.
void validate_filtration(const NilAlgebra& n, const Filtration& f);

/// Graded pieces m_1..m_k of the dual induced by the filtration:
/// m_1 + ... + m_j annihilates n^j. Rows are dual vectors.
std::vector<QMatrix> mj_decomposition(const NilAlgebra& n, const Filtration& f);

/// Projection of a 2-form onto the m_t ^ m_{k-t+1} block.
ExtForm project_pt(const NilAlgebra& n, const Filtration& f, const ExtForm& form, int t);

/// Accuracy test: exact 2-forms vanish on n^i x n^j for i+j >= k-1 and
/// closed 2-forms vanish for i+j >= k.
bool is_accurate(const NilAlgebra& n, const Filtration& f);

/// One-dimensional central extension carrying the shifted accurate chain.
std::pair<NilAlgebra, Filtration> extend_filtration(const NilAlgebra& n, const Filtration& f,
                                                    int t);

}  // namespace nilsymp
