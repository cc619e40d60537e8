#include "nilsymp/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace nilsymp {

QMatrix::QMatrix(std::vector<QVec> rows) : a_(std::move(rows)) {
  rows_ = a_.size();
  cols_ = rows_ ? a_[0].size() : 0;
  for (const auto& r : a_)
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix");
}

void QMatrix::append_row(QVec r) {
  if (rows_ == 0 && cols_ == 0) cols_ = r.size();
  if (r.size() != cols_) throw std::invalid_argument("row size mismatch");
  a_.push_back(std::move(r));
  ++rows_;
}

std::vector<std::size_t> QMatrix::rref() {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
    std::size_t piv = r;
    while (piv < rows_ && a_[piv][c] == 0) ++piv;
    if (piv == rows_) continue;
    std::swap(a_[r], a_[piv]);
    const Rational inv = 1 / a_[r][c];
    for (std::size_t j = c; j < cols_; ++j) a_[r][j] *= inv;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r || a_[i][c] == 0) continue;
      const Rational f = a_[i][c];
      for (std::size_t j = c; j < cols_; ++j) a_[i][j] -= f * a_[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t QMatrix::rank() const {
  QMatrix copy = *this;
  return copy.rref().size();
}

std::vector<QVec> QMatrix::kernel() const {
  QMatrix copy = *this;
  const auto pivots = copy.rref();
  std::vector<bool> is_pivot(cols_, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<QVec> ker;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    QVec v(cols_);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -copy.a_[r][free];
    ker.push_back(std::move(v));
  }
  return ker;
}

Rational QMatrix::det() const {
  if (rows_ != cols_) throw std::invalid_argument("det of non-square matrix");
  QMatrix m = *this;
  Rational d = 1;
  for (std::size_t c = 0; c < cols_; ++c) {
    std::size_t piv = c;
    while (piv < rows_ && m.a_[piv][c] == 0) ++piv;
    if (piv == rows_) return Rational(0);
    if (piv != c) {
      std::swap(m.a_[c], m.a_[piv]);
      d = -d;
    }
    d *= m.a_[c][c];
    const Rational inv = 1 / m.a_[c][c];
    for (std::size_t i = c + 1; i < rows_; ++i) {
      if (m.a_[i][c] == 0) continue;
      const Rational f = m.a_[i][c] * inv;
      for (std::size_t j = c; j < cols_; ++j) m.a_[i][j] -= f * m.a_[c][j];
    }
  }
  return d;
}

QMatrix QMatrix::inverse() const {
  if (rows_ != cols_) throw std::invalid_argument("inverse of non-square matrix");
  QMatrix aug(rows_, 2 * cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) aug.a_[i][j] = a_[i][j];
    aug.a_[i][cols_ + i] = 1;
  }
  const auto pivots = aug.rref();
  if (pivots.size() != rows_ || pivots.back() >= cols_)
    throw std::invalid_argument("singular matrix");
  QMatrix inv(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) inv.a_[i][j] = aug.a_[i][cols_ + j];
  return inv;
}

QMatrix QMatrix::transpose() const {
  QMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.a_[j][i] = a_[i][j];
  return t;
}

QMatrix QMatrix::mul(const QMatrix& other) const {
  if (cols_ != other.rows_) throw std::invalid_argument("shape mismatch");
  QMatrix out(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      if (a_[i][k] == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) {
        if (other.a_[k][j] == 0) continue;
        out.a_[i][j] += a_[i][k] * other.a_[k][j];
      }
    }
  return out;
}

QVec QMatrix::apply(const QVec& v) const {
  if (v.size() != cols_) throw std::invalid_argument("shape mismatch");
  QVec out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (a_[i][j] != 0 && v[j] != 0) out[i] += a_[i][j] * v[j];
  return out;
}

Subspace::Subspace(std::size_t ambient, std::vector<QVec> spanning) : ambient_(ambient) {
  QMatrix m(std::move(spanning));
  if (m.rows() != 0 && m.cols() != ambient) throw std::invalid_argument("ambient mismatch");
  pivots_ = m.rref();
  for (std::size_t i = 0; i < pivots_.size(); ++i) basis_.push_back(m.row(i));
}

Subspace Subspace::zero(std::size_t ambient) { return Subspace(ambient, {}); }

Subspace Subspace::full(std::size_t ambient) {
  std::vector<QVec> rows(ambient, QVec(ambient));
  for (std::size_t i = 0; i < ambient; ++i) rows[i][i] = 1;
  return Subspace(ambient, std::move(rows));
}

QVec Subspace::reduce(const QVec& v) const {
  QVec r = v;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const Rational f = r[pivots_[i]];
    if (f == 0) continue;
    for (std::size_t j = 0; j < ambient_; ++j) r[j] -= f * basis_[i][j];
  }
  return r;
}

bool Subspace::contains(const QVec& v) const {
  const QVec r = reduce(v);
  return std::all_of(r.begin(), r.end(), [](const Rational& x) { return x == 0; });
}

bool Subspace::contains(const Subspace& other) const {
  return std::all_of(other.basis_.begin(), other.basis_.end(),
                     [this](const QVec& v) { return contains(v); });
}

Subspace Subspace::sum(const Subspace& other) const {
  std::vector<QVec> rows = basis_;
  rows.insert(rows.end(), other.basis_.begin(), other.basis_.end());
  return Subspace(std::max(ambient_, other.ambient_), std::move(rows));
}

Subspace Subspace::intersect(const Subspace& other) const {
  // Zassenhaus-style: kernel of [B1; B2]^T stacked coefficients.
  if (dim() == 0 || other.dim() == 0) return Subspace::zero(ambient_);
  QMatrix m(ambient_, dim() + other.dim());
  for (std::size_t j = 0; j < dim(); ++j)
    for (std::size_t i = 0; i < ambient_; ++i) m.at(i, j) = basis_[j][i];
  for (std::size_t j = 0; j < other.dim(); ++j)
    for (std::size_t i = 0; i < ambient_; ++i) m.at(i, dim() + j) = -other.basis_[j][i];
  std::vector<QVec> vecs;
  for (const auto& kv : m.kernel()) {
    QVec v(ambient_);
    for (std::size_t j = 0; j < dim(); ++j)
      for (std::size_t i = 0; i < ambient_; ++i) v[i] += kv[j] * basis_[j][i];
    vecs.push_back(std::move(v));
  }
  return Subspace(ambient_, std::move(vecs));
}

std::vector<QVec> Subspace::complement_within(const std::vector<QVec>& candidates) const {
  std::vector<QVec> out;
  Subspace acc = *this;
  for (const auto& c : candidates) {
    if (acc.contains(c)) continue;
    out.push_back(acc.reduce(c));
    acc = acc.sum(Subspace(ambient_, {c}));
  }
  return out;
}

SparseVec to_sparse(const QVec& v) {
  SparseVec s;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) s.emplace_back(static_cast<int>(i), v[i]);
  return s;
}

namespace {

// one elimination step: subtract (r[pc]/pv) * piv from r
void sparse_eliminate(SparseVec& r, const SparseVec& piv, int pc, const Rational& pv) {
  auto it = std::lower_bound(r.begin(), r.end(), pc,
                             [](const auto& e, int c) { return e.first < c; });
  if (it == r.end() || it->first != pc) return;
  const Rational f = it->second / pv;
  SparseVec merged;
  merged.reserve(r.size() + piv.size());
  auto a = r.begin();
  auto b = piv.begin();
  while (a != r.end() || b != piv.end()) {
    if (b == piv.end() || (a != r.end() && a->first < b->first)) {
      merged.push_back(*a++);
    } else if (a == r.end() || b->first < a->first) {
      merged.emplace_back(b->first, -f * b->second);
      ++b;
    } else {
      Rational v = a->second - f * b->second;
      if (v != 0) merged.emplace_back(a->first, std::move(v));
      ++a;
      ++b;
    }
  }
  r = std::move(merged);
}

}  // namespace

std::vector<QVec> sparse_row_basis(std::size_t ambient, std::vector<SparseVec> rows) {
  std::erase_if(rows, [](const SparseVec& r) { return r.empty(); });
  std::vector<SparseVec> pivots;
  while (!rows.empty()) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < rows.size(); ++i)
      if (rows[i].size() < rows[best].size()) best = i;
    SparseVec piv = std::move(rows[best]);
    rows[best] = std::move(rows.back());
    rows.pop_back();
    const int pc = piv.front().first;
    const Rational pv = piv.front().second;
    for (auto& r : rows) sparse_eliminate(r, piv, pc, pv);
    std::erase_if(rows, [](const SparseVec& r) { return r.empty(); });
    pivots.push_back(std::move(piv));
    if (pivots.size() == ambient) break;
  }
  std::vector<QVec> out;
  out.reserve(pivots.size());
  for (const auto& p : pivots) {
    QVec v(ambient);
    for (const auto& [c, val] : p) v[c] = val;
    out.push_back(std::move(v));
  }
  return out;
}

std::size_t sparse_rank(std::vector<SparseVec> rows) {
  std::erase_if(rows, [](const SparseVec& r) { return r.empty(); });
  std::size_t rank = 0;
  while (!rows.empty()) {
    // shortest row as pivot keeps fill-in low on these incidence-like matrices
    std::size_t best = 0;
    for (std::size_t i = 1; i < rows.size(); ++i)
      if (rows[i].size() < rows[best].size()) best = i;
    SparseVec piv = std::move(rows[best]);
    rows[best] = std::move(rows.back());
    rows.pop_back();
    ++rank;
    const int pc = piv.front().first;
    const Rational pv = piv.front().second;
    for (auto& r : rows) {
      auto it = std::lower_bound(r.begin(), r.end(), pc,
                                 [](const auto& e, int c) { return e.first < c; });
      if (it == r.end() || it->first != pc) continue;
      const Rational f = it->second / pv;
      SparseVec merged;
      merged.reserve(r.size() + piv.size());
      auto a = r.begin();
      auto b = piv.begin();
      while (a != r.end() || b != piv.end()) {
        if (b == piv.end() || (a != r.end() && a->first < b->first)) {
          merged.push_back(*a++);
        } else if (a == r.end() || b->first < a->first) {
          merged.emplace_back(b->first, -f * b->second);
          ++b;
        } else {
          Rational v = a->second - f * b->second;
          if (v != 0) merged.emplace_back(a->first, std::move(v));
          ++a;
          ++b;
        }
      }
      r = std::move(merged);
    }
    std::erase_if(rows, [](const SparseVec& r) { return r.empty(); });
  }
  return rank;
}

}  // namespace nilsymp
