#include "nilsymp/nilalgebra.hpp"

#include <algorithm>
#include <sstream>

namespace nilsymp {

void ParabolicSpec::validate() const {
  if (pi0.empty()) throw InvalidCase("Pi_0 must be nonempty");
  for (int a : pi0)
    if (a < 1 || a > rs.rank()) throw InvalidCase("Pi_0 index out of range");
}

std::string ParabolicSpec::case_code() const {
  std::ostringstream os;
  os << rs.type().code() << ":{";
  bool first = true;
  for (int a : pi0) {
    if (!first) os << ",";
    os << a;
    first = false;
  }
  os << "}";
  return os.str();
}

NilAlgebra NilAlgebra::nilradical(const ParabolicSpec& spec, const StructureTable& st) {
  spec.validate();
  const RootSystem& rs = spec.rs;
  if (!(st.roots().type() == rs.type()))
    throw InvalidCase("structure table and spec disagree on the type");

  // basis: positive roots with o > 0, in (o, height, lex) order
  std::vector<int> pos_indices;
  for (int i = 0; i < static_cast<int>(rs.positive_roots().size()); ++i)
    if (o_value(rs.positive_roots()[i], spec.pi0) > 0) pos_indices.push_back(i);
  std::stable_sort(pos_indices.begin(), pos_indices.end(), [&](int a, int b) {
    const int oa = o_value(rs.positive_roots()[a], spec.pi0);
    const int ob = o_value(rs.positive_roots()[b], spec.pi0);
    if (oa != ob) return oa < ob;
    return rs.positive_roots()[a] < rs.positive_roots()[b];
  });

  NilAlgebra n;
  std::vector<int> back(rs.positive_roots().size(), -1);
  for (std::size_t i = 0; i < pos_indices.size(); ++i) back[pos_indices[i]] = static_cast<int>(i);
  n.roots_ = std::vector<RootVec>{};
  for (std::size_t i = 0; i < pos_indices.size(); ++i) {
    const RootVec& r = rs.positive_roots()[pos_indices[i]];
    n.roots_->push_back(r);
    n.labels_.push_back("X[" + rs.coord_string(r) + "]");
    n.grading_.push_back(o_value(r, spec.pi0));
  }
  n.k_ = o_value(rs.max_root(), spec.pi0);
  for (std::size_t i = 0; i < pos_indices.size(); ++i)
    for (std::size_t j = i + 1; j < pos_indices.size(); ++j) {
      const auto br = st.bracket(pos_indices[i], pos_indices[j]);
      if (!br) continue;
      const int t = back[br->first];
      if (t < 0) throw Error("bracket escaped the nilradical");
      n.brackets_[{static_cast<int>(i), static_cast<int>(j)}] = {{t, br->second}};
    }
  return n;
}

NilAlgebra NilAlgebra::make(std::vector<std::string> labels, std::vector<int> grading,
                            std::map<std::pair<int, int>, std::vector<BracketTerm>> brackets) {
  NilAlgebra n;
  n.labels_ = std::move(labels);
  n.grading_ = std::move(grading);
  if (n.grading_.size() != n.labels_.size()) throw SchemaError("grading size mismatch");
  n.brackets_ = std::move(brackets);
  for (auto& [key, terms] : n.brackets_) {
    if (key.first >= key.second) throw SchemaError("bracket keys must have i < j");
    if (key.second >= static_cast<int>(n.labels_.size()))
      throw SchemaError("bracket index out of range");
    std::erase_if(terms, [](const BracketTerm& t) { return t.c == 0; });
  }
  std::erase_if(n.brackets_, [](const auto& kv) { return kv.second.empty(); });
  n.k_ = n.grading_.empty() ? 1 : *std::max_element(n.grading_.begin(), n.grading_.end());
  return n;
}

std::vector<BracketTerm> NilAlgebra::bracket(int i, int j) const {
  if (i == j) return {};
  const bool swap = i > j;
  if (swap) std::swap(i, j);
  auto it = brackets_.find({i, j});
  if (it == brackets_.end()) return {};
  std::vector<BracketTerm> out = it->second;
  if (swap)
    for (auto& t : out) t.c = -t.c;
  return out;
}

Subspace NilAlgebra::bracket_space(const Subspace& u, const Subspace& v) const {
  std::vector<SparseVec> gens;
  for (const auto& x : u.basis())
    for (const auto& y : v.basis()) {
      QVec w(dim());
      bool nonzero = false;
      for (const auto& [key, terms] : brackets_) {
        const auto [i, j] = key;
        const Rational f = x[i] * y[j] - x[j] * y[i];
        if (f == 0) continue;
        for (const auto& t : terms) {
          w[t.k] += f * t.c;
          nonzero = true;
        }
      }
      if (nonzero) gens.push_back(to_sparse(w));
    }
  return Subspace(dim(), sparse_row_basis(dim(), std::move(gens)));
}

std::vector<Subspace> NilAlgebra::lower_central_series() const {
  std::vector<Subspace> chain;
  const Subspace whole = Subspace::full(dim());
  chain.push_back(whole);
  while (chain.back().dim() > 0) {
    Subspace next = bracket_space(whole, chain.back());
    if (next.dim() == chain.back().dim()) throw NotNilpotent("lower central series stabilized");
    chain.push_back(std::move(next));
  }
  return chain;
}

std::vector<Subspace> NilAlgebra::upper_central_series() const {
  std::vector<Subspace> chain;
  chain.push_back(Subspace::zero(dim()));
  while (chain.back().dim() < static_cast<std::size_t>(dim())) {
    // c_j = {x : [x, e_j'] in c_{j-1} for all j'}; assemble the linear
    // conditions on x sparsely from the bracket table, with basis images
    // reduced modulo c_{j-1} once up front
    const Subspace& prev = chain.back();
    std::vector<QVec> red_unit(dim());
    for (int k = 0; k < dim(); ++k) {
      QVec e(dim());
      e[k] = 1;
      red_unit[k] = prev.reduce(e);
    }
    // row key: (partner index, output coordinate) -> coefficients over x
    std::map<std::pair<int, int>, std::map<int, Rational>> rows;
    for (const auto& [key, terms] : brackets_) {
      const auto [i, j] = key;
      for (const auto& t : terms)
        for (int out = 0; out < dim(); ++out) {
          if (red_unit[t.k][out] == 0) continue;
          rows[{j, out}][i] += t.c * red_unit[t.k][out];  // x_i from [e_i, e_j]
          rows[{i, out}][j] -= t.c * red_unit[t.k][out];  // x_j from [e_j, e_i]
        }
    }
    std::vector<SparseVec> sparse_rows;
    sparse_rows.reserve(rows.size());
    for (auto& [key, row] : rows) {
      SparseVec r;
      for (auto& [c, v] : row)
        if (v != 0) r.emplace_back(c, std::move(v));
      if (!r.empty()) sparse_rows.push_back(std::move(r));
    }
    QMatrix sys;
    for (auto& r : sparse_row_basis(dim(), std::move(sparse_rows))) sys.append_row(std::move(r));
    Subspace next = sys.rows() == 0 ? Subspace::full(dim()) : Subspace(dim(), sys.kernel());
    if (next.dim() == prev.dim()) throw NotNilpotent("upper central series stabilized");
    chain.push_back(std::move(next));
  }
  return chain;
}

Subspace NilAlgebra::center() const { return upper_central_series()[1]; }

NilAlgebra NilAlgebra::extend_trivially(const std::string& label) const {
  NilAlgebra out = *this;
  out.labels_.push_back(label);
  out.grading_.push_back(1);
  if (out.roots_) out.roots_.reset();  // extension vectors carry no root
  return out;
}

Subspace NilAlgebra::grade_suffix(int j) const {
  std::vector<QVec> rows;
  for (int i = 0; i < dim(); ++i)
    if (grading_[i] >= j + 1) {
      QVec v(dim());
      v[i] = 1;
      rows.push_back(std::move(v));
    }
  return Subspace(dim(), std::move(rows));
}

bool is_abelian_nilradical(const ParabolicSpec& spec) {
  spec.validate();
  if (spec.pi0.size() != 1) return false;
  return coord(spec.rs.max_root(), *spec.pi0.begin()) == 1;
}

}  // namespace nilsymp
