#include "nilsymp/kostant.hpp"

#include <algorithm>
#include <map>

namespace nilsymp {

std::vector<W12Element> enumerate_w12(const ParabolicSpec& spec) {
  spec.validate();
  const RootSystem& rs = spec.rs;
  std::vector<W12Element> out;
  for (int a = 1; a <= rs.rank(); ++a) {
    if (!spec.pi0.count(a)) continue;  // first root of the pair is alpha itself
    const RootVec alpha = rs.simple_root(a);
    for (int b = 1; b <= rs.rank(); ++b) {
      if (b == a) continue;
      const RootVec beta = rs.simple_root(b);
      const int pair = rs.pairing(beta, alpha);
      if (pair == 0) {
        // s_alpha s_beta = s_beta s_alpha; keep one representative and
        // require both roots inside the nilradical set
        if (!spec.pi0.count(b) || a > b) continue;
        out.push_back({a, b, alpha, beta});
      } else {
        // (beta, alpha) < 0 for distinct simple roots; s_alpha(beta) always
        // lands in the nilradical because its alpha coordinate is positive
        const RootVec refl = rs.reflect_by(beta, alpha);
        out.push_back({a, b, alpha, refl});
      }
    }
  }
  return out;
}

std::vector<HwvEntry> h2_hwv(const ParabolicSpec& spec, const StructureTable& st) {
  return h2_hwv(spec, st, NilAlgebra::nilradical(spec, st));
}

std::vector<HwvEntry> h2_hwv(const ParabolicSpec& spec, const StructureTable& st,
                             const NilAlgebra& n) {
  (void)st;
  const auto& roots = n.basis_roots();
  if (!roots) throw InvalidCase("hwv enumeration needs a root-graded nilradical");
  std::map<RootVec, int, std::less<RootVec>> basis_index;
  for (std::size_t i = 0; i < roots->size(); ++i) basis_index[(*roots)[i]] = static_cast<int>(i);

  std::vector<HwvEntry> out;
  for (const auto& w : enumerate_w12(spec)) {
    HwvEntry e;
    e.alpha = w.alpha;
    e.alpha_root = w.first;
    e.partner = w.second;
    e.partner_grade = o_value(w.second, spec.pi0);
    const int ia = basis_index.at(w.first);
    const int ib = basis_index.at(w.second);
    e.rep = ExtForm::monomial(n.dim(), {ia, ib}, Rational(1));
    out.push_back(std::move(e));
  }
  return out;
}

ExtForm act_raising(const ParabolicSpec& spec, const StructureTable& st, const NilAlgebra& n,
                    int gamma_index, const ExtForm& form) {
  const RootSystem& rs = spec.rs;
  if (spec.pi0.count(gamma_index))
    throw InvalidCase("raising operators come from simple roots outside Pi_0");
  const auto& roots = n.basis_roots();
  if (!roots) throw InvalidCase("raising action needs a root-graded nilradical");
  const RootVec gamma = rs.simple_root(gamma_index);
  const int gpos = rs.index_of(gamma);

  std::map<RootVec, int, std::less<RootVec>> basis_index;
  for (std::size_t i = 0; i < roots->size(); ++i) basis_index[(*roots)[i]] = static_cast<int>(i);

  // X . e^{gamma+delta} = -N_{gamma,delta} e^{delta}; image of e^c per index c
  std::vector<std::vector<std::pair<int, Rational>>> action(n.dim());
  for (int c = 0; c < n.dim(); ++c) {
    const RootVec delta = (*roots)[c] - gamma;
    if (!delta.all_nonneg() || delta.is_zero()) continue;
    auto it = basis_index.find(delta);
    if (it == basis_index.end()) continue;
    const Rational nc = st.constant(gpos, rs.index_of(delta));
    if (nc != 0) action[c].emplace_back(it->second, -nc);
  }

  ExtForm out(n.dim(), form.degree());
  for (const auto& [idx, c] : form.coeffs()) {
    for (std::size_t t = 0; t < idx.size(); ++t) {
      for (const auto& [tgt, coeff] : action[idx[t]]) {
        std::vector<int> moved = idx;
        moved[t] = tgt;
        out.add_term(std::move(moved), c * coeff);
      }
    }
  }
  return out;
}

namespace {

RootVec monomial_weight(const std::vector<RootVec>& roots, const std::vector<int>& idx) {
  RootVec w = roots[idx[0]];
  for (std::size_t i = 1; i < idx.size(); ++i) w = w + roots[idx[i]];
  return w;  // stored as the positive sum; the weight itself is its negative
}

// groups coordinate vectors of weight-homogeneous forms by their weight
std::map<RootVec, std::vector<QVec>, std::less<RootVec>> by_weight(
    const NilAlgebra& n, const std::vector<QVec>& vecs) {
  std::map<RootVec, std::vector<QVec>, std::less<RootVec>> out;
  const auto& roots = *n.basis_roots();
  for (const auto& v : vecs) {
    std::optional<RootVec> w;
    for (std::size_t r = 0; r < v.size(); ++r) {
      if (v[r] == 0) continue;
      const RootVec mw = monomial_weight(roots, monomial_unrank(n.dim(), 2, r));
      if (!w) w = mw;
      else if (!(*w == mw)) throw Error("form is not weight homogeneous");
    }
    if (w) out[*w].push_back(v);
  }
  return out;
}

}  // namespace

HwvReport verify_hwv_against_cohomology(const ParabolicSpec& spec, const StructureTable& st,
                                        bool check_weights) {
  HwvReport rep;
  rep.case_code = spec.case_code();
  const NilAlgebra n = NilAlgebra::nilradical(spec, st);
  rep.dim = n.dim();
  if (n.dim() > 14) throw InvalidCase("full H^2 verification capped at dim 14");

  const Subspace closed = closed_2forms(n);
  const Subspace exact = exact_2forms(n);
  rep.b2 = static_cast<long>(closed.dim() - exact.dim());

  const auto w12 = enumerate_w12(spec);
  const auto hwv = h2_hwv(spec, st, n);
  rep.w12_count = static_cast<int>(w12.size());
  rep.hwv_count = static_cast<int>(hwv.size());
  if (rep.w12_count != rep.hwv_count) {
    rep.failure = "hwv count disagrees with W^{1,2}";
    return rep;
  }

  // (a) each representative is closed and not exact
  rep.closed_nonexact = true;
  for (const auto& e : hwv) {
    const QVec v = e.rep.coordinates();
    if (!closed.contains(v) || exact.contains(v)) {
      rep.closed_nonexact = false;
      rep.failure = "representative not closed or exact";
      return rep;
    }
  }

  // (b) classes independent in H^2
  {
    std::vector<QVec> rows;
    for (const auto& b : exact.basis()) rows.push_back(b);
    for (const auto& e : hwv) rows.push_back(e.rep.coordinates());
    rep.independent =
        Subspace(monomial_count(n.dim(), 2), rows).dim() == exact.dim() + hwv.size();
    if (!rep.independent) {
      rep.failure = "classes not independent modulo exact forms";
      return rep;
    }
  }

  // (c) every listed class is killed by every simple raising operator
  std::vector<int> raisers;
  for (int g = 1; g <= spec.rs.rank(); ++g)
    if (!spec.pi0.count(g)) raisers.push_back(g);
  rep.annihilated = true;
  for (const auto& e : hwv)
    for (int g : raisers) {
      const ExtForm img = act_raising(spec, st, n, g, e.rep);
      if (!exact.contains(img.coordinates())) {
        rep.annihilated = false;
        rep.failure = "raising operator does not annihilate a listed class";
        return rep;
      }
    }

  if (check_weights) {
    // the full annihilator subspace of H^2 under all simple raisings,
    // computed in closed-form coordinates
    const auto zb = closed.basis();
    QMatrix cond;
    for (int g : raisers) {
      std::vector<QVec> residues;
      for (const auto& z : zb) {
        const ExtForm img =
            act_raising(spec, st, n, g, ExtForm::from_coordinates(n.dim(), 2, z));
        residues.push_back(exact.reduce(img.coordinates()));
      }
      const std::size_t amb = monomial_count(n.dim(), 2);
      for (std::size_t out = 0; out < amb; ++out) {
        QVec row(zb.size());
        bool nz = false;
        for (std::size_t i = 0; i < zb.size(); ++i)
          if (residues[i][out] != 0) {
            row[i] = residues[i][out];
            nz = true;
          }
        if (nz) cond.append_row(std::move(row));
      }
    }
    std::vector<QVec> ann_forms;
    if (cond.rows() == 0) {
      ann_forms = zb;
    } else {
      for (const auto& kv : cond.kernel()) {
        QVec v(monomial_count(n.dim(), 2));
        for (std::size_t i = 0; i < zb.size(); ++i)
          if (kv[i] != 0)
            for (std::size_t j = 0; j < v.size(); ++j) v[j] += kv[i] * zb[i][j];
        ann_forms.push_back(std::move(v));
      }
    }
    // quotient by exact forms happens per weight via span comparison
    auto ann_w = by_weight(n, ann_forms);
    std::vector<QVec> hwv_vecs;
    for (const auto& e : hwv) hwv_vecs.push_back(e.rep.coordinates());
    auto hwv_w = by_weight(n, hwv_vecs);
    auto exact_w = by_weight(n, exact.basis());

    long ann_dim = 0;
    rep.weight_spans_match = true;
    std::map<RootVec, bool, std::less<RootVec>> seen;
    for (const auto& [w, vs] : ann_w) seen[w] = true;
    for (const auto& [w, vs] : hwv_w) seen[w] = true;
    const std::size_t amb = monomial_count(n.dim(), 2);
    for (const auto& [w, flag] : seen) {
      std::vector<QVec> ex = exact_w.count(w) ? exact_w[w] : std::vector<QVec>{};
      std::vector<QVec> a = ex, h = ex;
      if (ann_w.count(w)) a.insert(a.end(), ann_w[w].begin(), ann_w[w].end());
      if (hwv_w.count(w)) h.insert(h.end(), hwv_w[w].begin(), hwv_w[w].end());
      const Subspace sa(amb, a), sh(amb, h), se(amb, ex);
      ann_dim += static_cast<long>(sa.dim() - se.dim());
      if (!(sa == sh)) {
        rep.weight_spans_match = false;
        rep.failure = "weight-space span mismatch";
      }
    }
    rep.annihilator_dim = ann_dim;
    if (!rep.weight_spans_match) return rep;
    if (ann_dim != rep.hwv_count) {
      rep.weight_spans_match = false;
      rep.failure = "annihilator dimension disagrees with hwv count";
      return rep;
    }
  }

  rep.ok = true;
  return rep;
}

}  // namespace nilsymp
