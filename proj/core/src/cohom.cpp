#include "nilsymp/cohom.hpp"

#include <algorithm>

namespace nilsymp {

namespace {

// d of each dual basis vector as a 2-form: d e^m = sum_{i<j} c^m_{ij} e^i e^j
std::vector<ExtForm> dual_differentials(const NilAlgebra& n) {
  std::vector<ExtForm> d1(n.dim(), ExtForm(n.dim(), 2));
  for (const auto& [key, terms] : n.bracket_table())
    for (const auto& t : terms) d1[t.k].add_term({key.first, key.second}, t.c);
  return d1;
}

}  // namespace

ExtForm differential(const NilAlgebra& n, const ExtForm& form) {
  const auto d1 = dual_differentials(n);
  ExtForm out(n.dim(), form.degree() + 1);
  for (const auto& [idx, c] : form.coeffs()) {
    for (std::size_t t = 0; t < idx.size(); ++t) {
      const int sign = (t % 2 == 0) ? 1 : -1;
      std::vector<int> rest;
      for (std::size_t s = 0; s < idx.size(); ++s)
        if (s != t) rest.push_back(idx[s]);
      for (const auto& [pair_idx, c2] : d1[idx[t]].coeffs()) {
        std::vector<int> full = pair_idx;
        full.insert(full.end(), rest.begin(), rest.end());
        out.add_term(std::move(full), sign * c * c2);
      }
    }
  }
  return out;
}

std::vector<SparseVec> diff_matrix_cols(const NilAlgebra& n, int p) {
  const auto d1 = dual_differentials(n);
  const std::size_t ncols = monomial_count(n.dim(), p);
  std::vector<SparseVec> cols(ncols);
  for (std::size_t c = 0; c < ncols; ++c) {
    const std::vector<int> idx = monomial_unrank(n.dim(), p, c);
    ExtForm df(n.dim(), p + 1);
    for (std::size_t t = 0; t < idx.size(); ++t) {
      const int sign = (t % 2 == 0) ? 1 : -1;
      std::vector<int> rest;
      for (std::size_t s = 0; s < idx.size(); ++s)
        if (s != t) rest.push_back(idx[s]);
      for (const auto& [pair_idx, c2] : d1[idx[t]].coeffs()) {
        std::vector<int> full = pair_idx;
        full.insert(full.end(), rest.begin(), rest.end());
        df.add_term(std::move(full), sign * c2);
      }
    }
    SparseVec col;
    for (const auto& [midx, v] : df.coeffs())
      col.emplace_back(static_cast<int>(monomial_rank(n.dim(), midx)), v);
    std::sort(col.begin(), col.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    cols[c] = std::move(col);
  }
  return cols;
}

Subspace closed_2forms(const NilAlgebra& n) {
  const std::size_t m = monomial_count(n.dim(), 2);
  if (n.is_abelian()) return Subspace::full(m);
  const auto cols = diff_matrix_cols(n, 2);
  // assemble the (Lambda^3 x Lambda^2) matrix rows that are actually hit
  std::map<int, QVec> rows;
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (const auto& [r, v] : cols[c]) {
      auto it = rows.find(r);
      if (it == rows.end()) it = rows.emplace(r, QVec(m)).first;
      it->second[c] = v;
    }
  QMatrix mat;
  for (auto& [r, row] : rows) mat.append_row(std::move(row));
  if (mat.rows() == 0) return Subspace::full(m);
  return Subspace(m, mat.kernel());
}

Subspace exact_2forms(const NilAlgebra& n) {
  const std::size_t m = monomial_count(n.dim(), 2);
  std::vector<QVec> rows;
  for (const auto& f : [&] {
         std::vector<ExtForm> d1(n.dim(), ExtForm(n.dim(), 2));
         for (const auto& [key, terms] : n.bracket_table())
           for (const auto& t : terms) d1[t.k].add_term({key.first, key.second}, t.c);
         return d1;
       }()) {
    if (f.is_zero()) continue;
    rows.push_back(f.coordinates());
  }
  return Subspace(m, std::move(rows));
}

namespace {

std::size_t diff_rank(const NilAlgebra& n, int p) {
  if (p < 0 || p >= n.dim()) return 0;
  if (n.is_abelian()) return 0;
  const auto cols = diff_matrix_cols(n, p);
  std::map<int, SparseVec> rows;
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (const auto& [r, v] : cols[c]) rows[r].emplace_back(static_cast<int>(c), v);
  std::vector<SparseVec> rr;
  rr.reserve(rows.size());
  for (auto& [r, row] : rows) rr.push_back(std::move(row));
  return sparse_rank(std::move(rr));
}

}  // namespace

long betti(const NilAlgebra& n, int p) {
  if (p < 0 || p > n.dim()) return 0;
  const long dim_p = static_cast<long>(monomial_count(n.dim(), p));
  return dim_p - static_cast<long>(diff_rank(n, p)) - static_cast<long>(diff_rank(n, p - 1));
}

std::vector<long> betti_all(const NilAlgebra& n) {
  if (n.dim() > 14) throw Error("full Betti table capped at dim 14");
  std::vector<std::size_t> r(n.dim() + 1, 0);
  for (int p = 0; p <= n.dim(); ++p) r[p] = diff_rank(n, p);
  std::vector<long> b;
  for (int p = 0; p <= n.dim(); ++p) {
    const long prev = p == 0 ? 0 : static_cast<long>(r[p - 1]);
    b.push_back(static_cast<long>(monomial_count(n.dim(), p)) - static_cast<long>(r[p]) - prev);
  }
  return b;
}

Filtration lcs_filtration(const NilAlgebra& n) { return Filtration{n.lower_central_series()}; }

void validate_filtration(const NilAlgebra& n, const Filtration& f) {
  const int k = f.length();
  if (k < 1) throw NotAFiltration("chain too short");
  if (f.chain[0].dim() != static_cast<std::size_t>(n.dim()))
    throw NotAFiltration("chain must start at the whole algebra");
  if (f.chain[k].dim() != 0) throw NotAFiltration("chain must end at zero");
  for (int j = 0; j + 1 <= k; ++j) {
    if (f.chain[j].dim() <= f.chain[j + 1].dim() || !f.chain[j].contains(f.chain[j + 1]))
      throw NotAFiltration("chain is not strictly decreasing");
  }
  for (int i = 0; i <= k; ++i)
    for (int j = i; j <= k; ++j) {
      const Subspace img = n.bracket_space(f.chain[i], f.chain[j]);
      const int tgt = std::min(i + j + 1, k);
      if (!f.chain[tgt].contains(img)) throw NotAFiltration("bracket containment fails");
    }
}

std::vector<QMatrix> mj_decomposition(const NilAlgebra& n, const Filtration& f) {
  const int k = f.length();
  const int d = n.dim();
  auto annihilator = [&](const Subspace& s) -> Subspace {
    if (s.dim() == 0) return Subspace::full(d);
    QMatrix m(s.dim(), d);
    for (std::size_t i = 0; i < s.dim(); ++i)
      for (int j = 0; j < d; ++j) m.at(i, j) = s.basis()[i][j];
    return Subspace(d, m.kernel());
  };
  std::vector<QMatrix> out;
  Subspace prev_ann = Subspace::zero(d);
  for (int j = 1; j <= k; ++j) {
    const Subspace ann = annihilator(f.chain[j]);
    std::vector<QVec> rows = prev_ann.complement_within(ann.basis());
    QMatrix mj;
    for (auto& r : rows) mj.append_row(std::move(r));
    out.push_back(std::move(mj));
    prev_ann = ann;
  }
  return out;
}

ExtForm project_pt(const NilAlgebra& n, const Filtration& f, const ExtForm& form, int t) {
  const int k = f.length();
  if (t < 1 || t > (k + 1) / 2) throw BadT("t out of range");
  const int d = n.dim();
  const auto mj = mj_decomposition(n, f);
  QMatrix M(0, 0);
  std::vector<int> block_of;  // block index (1-based) per new dual basis row
  for (int j = 0; j < k; ++j)
    for (std::size_t r = 0; r < mj[j].rows(); ++r) {
      M.append_row(mj[j].row(r));
      block_of.push_back(j + 1);
    }
  if (M.rows() != static_cast<std::size_t>(d)) throw Error("m_j blocks do not fill the dual");
  const QMatrix V = M.inverse();           // columns: primal basis dual to M rows
  const QMatrix omega = form.gram(d);
  const QMatrix omega_f = V.transpose().mul(omega).mul(V);
  QMatrix proj(d, d);
  const int other = k - t + 1;
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      const int ba = block_of[a], bb = block_of[b];
      const bool keep = (ba == t && bb == other) || (ba == other && bb == t);
      if (keep) proj.at(a, b) = omega_f.at(a, b);
    }
  const QMatrix back = M.transpose().mul(proj).mul(M);
  ExtForm out(d, 2);
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j)
      if (back.at(i, j) != 0) out.add_term({i, j}, back.at(i, j));
  return out;
}

bool is_accurate(const NilAlgebra& n, const Filtration& f) {
  validate_filtration(n, f);
  const int k = f.length();
  const Subspace closed = closed_2forms(n);
  const Subspace exact = exact_2forms(n);
  auto vanishes = [&](const Subspace& forms, int min_total) {
    for (const auto& fc : forms.basis()) {
      const ExtForm w = ExtForm::from_coordinates(n.dim(), 2, fc);
      const QMatrix g = w.gram(n.dim());
      for (int i = 0; i <= k; ++i)
        for (int j = i; j <= k; ++j) {
          if (i + j < min_total) continue;
          for (const auto& x : f.chain[i].basis())
            for (const auto& y : f.chain[j].basis()) {
              Rational v = 0;
              for (int a = 0; a < n.dim(); ++a) {
                if (x[a] == 0) continue;
                for (int b = 0; b < n.dim(); ++b)
                  if (y[b] != 0 && g.at(a, b) != 0) v += x[a] * g.at(a, b) * y[b];
              }
              if (v != 0) return false;
            }
        }
    }
    return true;
  };
  return vanishes(exact, k - 1) && vanishes(closed, k);
}

std::pair<NilAlgebra, Filtration> extend_filtration(const NilAlgebra& n, const Filtration& f,
                                                    int t) {
  if (n.is_abelian()) throw NotApplicable("extension rule needs a nonabelian algebra");
  const int k = f.length();
  if (t < 1 || t > (k + 1) / 2) throw BadT("t out of range");
  const Subspace c1 = n.lower_central_series()[1];
  if (!(f.chain[1] == c1)) throw NotApplicable("chain must start at the commutator");
  const NilAlgebra ext = n.extend_trivially();
  const int d = n.dim();
  auto lift = [&](const Subspace& s, bool add_t) {
    std::vector<QVec> rows;
    for (const auto& b : s.basis()) {
      QVec v(d + 1);
      for (int i = 0; i < d; ++i) v[i] = b[i];
      rows.push_back(std::move(v));
    }
    if (add_t) {
      QVec v(d + 1);
      v[d] = 1;
      rows.push_back(std::move(v));
    }
    return Subspace(d + 1, std::move(rows));
  };
  Filtration out;
  out.chain.push_back(Subspace::full(d + 1));
  for (int j = 1; j <= k; ++j) out.chain.push_back(lift(f.chain[j], j <= t));
  return {ext, out};
}

}  // namespace nilsymp
