#include "nilsymp/extform.hpp"

#include <algorithm>

namespace nilsymp {

namespace {

// sorts indices in place, returns permutation sign, or 0 on repeats
int sort_sign(std::vector<int>& idx) {
  int sign = 1;
  for (std::size_t i = 1; i < idx.size(); ++i)
    for (std::size_t j = i; j > 0 && idx[j] < idx[j - 1]; --j) {
      std::swap(idx[j], idx[j - 1]);
      sign = -sign;
    }
  for (std::size_t i = 1; i < idx.size(); ++i)
    if (idx[i] == idx[i - 1]) return 0;
  return sign;
}

}  // namespace

ExtForm ExtForm::monomial(int dim, std::vector<int> indices, Rational c) {
  ExtForm f(dim, static_cast<int>(indices.size()));
  f.add_term(std::move(indices), c);
  return f;
}

ExtForm ExtForm::from_pairs(int dim,
                            const std::vector<std::tuple<int, int, Rational>>& terms) {
  ExtForm f(dim, 2);
  for (const auto& [i, j, c] : terms) f.add_term({i, j}, c);
  return f;
}

void ExtForm::add_term(std::vector<int> indices, const Rational& c) {
  if (static_cast<int>(indices.size()) != degree_) throw Error("degree mismatch");
  if (c == 0) return;
  const int sign = sort_sign(indices);
  if (sign == 0) return;
  auto& slot = coeffs_[indices];
  slot += sign * c;
  if (slot == 0) coeffs_.erase(indices);
}

ExtForm& ExtForm::operator+=(const ExtForm& o) {
  if (o.degree_ != degree_ || o.dim_ != dim_) throw Error("form shape mismatch");
  for (const auto& [idx, c] : o.coeffs_) {
    auto& slot = coeffs_[idx];
    slot += c;
    if (slot == 0) coeffs_.erase(idx);
  }
  return *this;
}

ExtForm ExtForm::operator*(const Rational& c) const {
  ExtForm out(dim_, degree_);
  if (c == 0) return out;
  for (const auto& [idx, v] : coeffs_) out.coeffs_[idx] = v * c;
  return out;
}

ExtForm ExtForm::wedge(const ExtForm& o) const {
  ExtForm out(dim_, degree_ + o.degree_);
  for (const auto& [a, ca] : coeffs_)
    for (const auto& [b, cb] : o.coeffs_) {
      std::vector<int> idx = a;
      idx.insert(idx.end(), b.begin(), b.end());
      out.add_term(std::move(idx), ca * cb);
    }
  return out;
}

Rational ExtForm::eval(int i, int j) const {
  if (degree_ != 2) throw Error("eval is for 2-forms");
  if (i == j) return Rational(0);
  const bool swap = i > j;
  if (swap) std::swap(i, j);
  auto it = coeffs_.find(std::vector<int>{i, j});
  if (it == coeffs_.end()) return Rational(0);
  return swap ? -it->second : it->second;
}

QMatrix ExtForm::gram(int n) const {
  QMatrix m(n, n);
  for (const auto& [idx, c] : coeffs_) {
    m.at(idx[0], idx[1]) = c;
    m.at(idx[1], idx[0]) = -c;
  }
  return m;
}

QVec ExtForm::coordinates() const {
  QVec v(monomial_count(dim_, degree_));
  for (const auto& [idx, c] : coeffs_) v[monomial_rank(dim_, idx)] = c;
  return v;
}

ExtForm ExtForm::from_coordinates(int dim, int degree, const QVec& v) {
  ExtForm f(dim, degree);
  for (std::size_t r = 0; r < v.size(); ++r)
    if (v[r] != 0) f.coeffs_[monomial_unrank(dim, degree, r)] = v[r];
  return f;
}

std::size_t monomial_count(int dim, int p) {
  if (p < 0 || p > dim) return 0;
  std::size_t c = 1;
  for (int i = 0; i < p; ++i) c = c * static_cast<std::size_t>(dim - i) / (i + 1);
  return c;
}

std::size_t monomial_rank(int dim, const std::vector<int>& t) {
  // lex rank over strictly increasing tuples
  std::size_t rank = 0;
  int prev = -1;
  const int p = static_cast<int>(t.size());
  for (int pos = 0; pos < p; ++pos) {
    for (int v = prev + 1; v < t[pos]; ++v) rank += monomial_count(dim - v - 1, p - pos - 1);
    prev = t[pos];
  }
  return rank;
}

std::vector<int> monomial_unrank(int dim, int p, std::size_t rank) {
  std::vector<int> t;
  int prev = -1;
  for (int pos = 0; pos < p; ++pos) {
    int v = prev + 1;
    while (true) {
      const std::size_t block = monomial_count(dim - v - 1, p - pos - 1);
      if (rank < block) break;
      rank -= block;
      ++v;
    }
    t.push_back(v);
    prev = v;
  }
  return t;
}

ExtForm wedge_power(const ExtForm& omega, int m) {
  ExtForm acc = omega;
  for (int i = 1; i < m; ++i) acc = acc.wedge(omega);
  if (m == 0) throw Error("wedge_power expects m >= 1");
  return acc;
}

}  // namespace nilsymp
