#include "nilsymp/rootsys.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <sstream>

namespace nilsymp {

SimpleType SimpleType::parse(const std::string& code) {
  if (code.size() < 2) throw InvalidRank("bad type code: " + code);
  const char f = static_cast<char>(std::toupper(code[0]));
  if (std::string("ABCDEFG").find(f) == std::string::npos)
    throw InvalidRank("bad family: " + code);
  int rank = 0;
  try {
    rank = std::stoi(code.substr(1));
  } catch (...) {
    throw InvalidRank("bad rank in type code: " + code);
  }
  SimpleType t{static_cast<Family>(f), rank};
  t.validate();
  return t;
}

std::string SimpleType::code() const {
  return std::string(1, static_cast<char>(family)) + std::to_string(rank);
}

void SimpleType::validate() const {
  const int n = rank;
  bool ok = false;
  switch (family) {
    case Family::A: ok = n >= 1; break;
    case Family::B: ok = n >= 2; break;
    case Family::C: ok = n >= 3; break;
    case Family::D: ok = n >= 4; break;
    case Family::E: ok = n == 6 || n == 7 || n == 8; break;
    case Family::F: ok = n == 4; break;
    case Family::G: ok = n == 2; break;
  }
  if (!ok) throw InvalidRank("rank out of range for " + code());
}

int RootVec::height() const { return std::accumulate(coords.begin(), coords.end(), 0); }
bool RootVec::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](int c) { return c == 0; });
}
bool RootVec::all_nonneg() const {
  return std::all_of(coords.begin(), coords.end(), [](int c) { return c >= 0; });
}
bool RootVec::all_nonpos() const {
  return std::all_of(coords.begin(), coords.end(), [](int c) { return c <= 0; });
}

RootVec RootVec::operator+(const RootVec& o) const {
  RootVec r = *this;
  for (std::size_t i = 0; i < coords.size(); ++i) r.coords[i] += o.coords[i];
  return r;
}
RootVec RootVec::operator-(const RootVec& o) const {
  RootVec r = *this;
  for (std::size_t i = 0; i < coords.size(); ++i) r.coords[i] -= o.coords[i];
  return r;
}
RootVec RootVec::operator-() const {
  RootVec r = *this;
  for (auto& c : r.coords) c = -c;
  return r;
}

bool RootVec::operator<(const RootVec& o) const {
  const int ha = height(), hb = o.height();
  if (ha != hb) return ha < hb;
  return coords < o.coords;
}

namespace {

// Dynkin diagram edges and root lengths per family, standard numbering.
// d[i] = (g_i, g_i)/2 with long roots normalized to squared length 2.
struct DiagramData {
  std::vector<std::pair<int, int>> edges;  // 0-based node pairs
  std::vector<Rational> d;
};

DiagramData diagram(SimpleType t) {
  const int n = t.rank;
  DiagramData dd;
  dd.d.assign(n, Rational(1));
  auto chain = [&](int upto) {
    for (int i = 0; i + 1 < upto; ++i) dd.edges.emplace_back(i, i + 1);
  };
  switch (t.family) {
    case Family::A:
      chain(n);
      break;
    case Family::B:  // g_n short
      chain(n);
      dd.d[n - 1] = Rational(1, 2);
      break;
    case Family::C:  // g_n long, the rest short
      chain(n);
      for (int i = 0; i + 1 < n; ++i) dd.d[i] = Rational(1, 2);
      break;
    case Family::D:
      chain(n - 1);
      dd.edges.emplace_back(n - 3, n - 1);
      break;
    case Family::E:
      // line 1-3-4-5-6(-7-8), node 2 attached to node 4
      dd.edges.emplace_back(0, 2);
      for (int i = 2; i + 1 < n; ++i) dd.edges.emplace_back(i, i + 1);
      dd.edges.emplace_back(1, 3);
      break;
    case Family::F:  // g_1,g_2 long; g_3,g_4 short
      chain(4);
      dd.d[2] = dd.d[3] = Rational(1, 2);
      break;
    case Family::G:  // g_1 short, g_2 long
      chain(2);
      dd.d[0] = Rational(1, 3);
      break;
  }
  return dd;
}

}  // namespace

RootSystem RootSystem::build(SimpleType t) {
  t.validate();
  RootSystem rs;
  rs.type_ = t;
  const int n = t.rank;

  const DiagramData dd = diagram(t);
  std::vector<std::vector<Rational>> bil(n, std::vector<Rational>(n, Rational(0)));
  for (int i = 0; i < n; ++i) bil[i][i] = 2 * dd.d[i];
  for (auto [i, j] : dd.edges) {
    // adjacent simple roots: (g_i, g_j) = -max(d_i, d_j) gives the right
    // Cartan integers for every edge type occurring in the simple diagrams
    const Rational v = -std::max(dd.d[i], dd.d[j]);
    bil[i][j] = bil[j][i] = v;
  }
  rs.bilinear_ = bil;

  rs.cartan_.assign(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Rational q = bil[i][j] / dd.d[j];
      if (!is_integer(q)) throw Error("non-integral Cartan entry");
      rs.cartan_[i][j] = static_cast<int>(q.get_num().get_si());
    }

  // Generate the positive system by closing the simple roots under simple
  // reflections, keeping the positive images.
  std::vector<RootVec> queue;
  std::unordered_map<RootVec, int, RootVecHash> seen;
  for (int i = 0; i < n; ++i) {
    RootVec g{std::vector<int>(n, 0)};
    g.coords[i] = 1;
    seen.emplace(g, 0);
    queue.push_back(g);
  }
  for (std::size_t q = 0; q < queue.size(); ++q) {
    const RootVec cur = queue[q];
    for (int i = 0; i < n; ++i) {
      int pair = 0;
      for (int j = 0; j < n; ++j) pair += cur.coords[j] * rs.cartan_[j][i];
      RootVec img = cur;
      img.coords[i] -= pair;
      if (!img.all_nonneg()) continue;
      if (seen.emplace(img, 0).second) queue.push_back(img);
    }
  }
  rs.positive_ = queue;
  std::sort(rs.positive_.begin(), rs.positive_.end());
  rs.index_.clear();
  for (std::size_t i = 0; i < rs.positive_.size(); ++i) rs.index_[rs.positive_[i]] = static_cast<int>(i);

  // Maximal root: the unique positive root gamma with gamma + g_i never a root.
  int found = -1;
  for (std::size_t i = 0; i < rs.positive_.size(); ++i) {
    bool maximal = true;
    for (int s = 0; s < n && maximal; ++s) {
      RootVec g = rs.positive_[i];
      g.coords[s] += 1;
      if (rs.index_.count(g)) maximal = false;
    }
    if (maximal) {
      if (found >= 0) throw Error("maximal root not unique");
      found = static_cast<int>(i);
    }
  }
  if (found < 0) throw Error("no maximal root");
  rs.max_root_ = rs.positive_[found];
  return rs;
}

RootVec RootSystem::simple_root(int i) const {
  if (i < 1 || i > rank()) throw InvalidRank("simple root index out of range");
  RootVec g{std::vector<int>(rank(), 0)};
  g.coords[i - 1] = 1;
  return g;
}

bool RootSystem::is_root(const RootVec& r) const {
  if (index_.count(r)) return true;
  return index_.count(-r) > 0;
}

bool RootSystem::is_positive_root(const RootVec& r) const { return index_.count(r) > 0; }

int RootSystem::index_of(const RootVec& r) const {
  auto it = index_.find(r);
  if (it == index_.end()) throw NotARoot("not a positive root: " + coord_string(r));
  return it->second;
}

int RootSystem::pairing(const RootVec& beta, const RootVec& alpha) const {
  const Rational q = 2 * inner(beta, alpha) / inner(alpha, alpha);
  assert(is_integer(q));
  return static_cast<int>(q.get_num().get_si());
}

Rational RootSystem::inner(const RootVec& a, const RootVec& b) const {
  Rational s = 0;
  for (int i = 0; i < rank(); ++i) {
    if (a.coords[i] == 0) continue;
    for (int j = 0; j < rank(); ++j) {
      if (b.coords[j] == 0 || bilinear_[i][j] == 0) continue;
      s += a.coords[i] * b.coords[j] * bilinear_[i][j];
    }
  }
  return s;
}

RootVec RootSystem::reflect(const RootVec& target, int alpha_index) const {
  if (alpha_index < 1 || alpha_index > rank())
    throw InvalidRank("reflection index out of range");
  if (!is_root(target)) throw NotARoot("reflect: target is not a root");
  int pair = 0;
  for (int j = 0; j < rank(); ++j) pair += target.coords[j] * cartan_[j][alpha_index - 1];
  RootVec img = target;
  img.coords[alpha_index - 1] -= pair;
  return img;
}

RootVec RootSystem::reflect_by(const RootVec& beta, const RootVec& alpha) const {
  const int p = pairing(beta, alpha);
  RootVec img = beta;
  for (int j = 0; j < rank(); ++j) img.coords[j] -= p * alpha.coords[j];
  return img;
}

int RootSystem::string_down(const RootVec& gamma, const RootVec& delta) const {
  int p = 0;
  RootVec cur = delta - gamma;
  while (is_root(cur)) {
    ++p;
    cur = cur - gamma;
  }
  return p;
}

std::string RootSystem::coord_string(const RootVec& r) const {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < rank(); ++i) {
    const int c = r.coords[i];
    if (c == 0) continue;
    if (!first) os << (c > 0 ? "+" : "-");
    else if (c < 0) os << "-";
    const int a = std::abs(c);
    if (a != 1) os << a;
    os << "g" << (i + 1);
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

std::string RootSystem::eps_string(const RootVec& r) const {
  const Family f = type_.family;
  if (f != Family::B && f != Family::C && f != Family::D) return coord_string(r);
  const int n = rank();
  // accumulate epsilon coefficients of the simple roots
  std::vector<int> e(n + 1, 0);
  for (int i = 0; i < n; ++i) {
    const int c = r.coords[i];
    if (c == 0) continue;
    if (f == Family::B) {
      if (i < n - 1) { e[i] += c; e[i + 1] -= c; }
      else e[n - 1] += c;                      // g_n = e_n
    } else if (f == Family::C) {
      if (i < n - 1) { e[i] += c; e[i + 1] -= c; }
      else e[n - 1] += 2 * c;                  // g_n = 2 e_n
    } else {
      if (i < n - 1) { e[i] += c; e[i + 1] -= c; }
      else { e[n - 2] += c; e[n - 1] += c; }   // g_n = e_{n-1} + e_n
    }
  }
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < n; ++i) {
    if (e[i] == 0) continue;
    if (!first) os << (e[i] > 0 ? "+" : "-");
    else if (e[i] < 0) os << "-";
    const int a = std::abs(e[i]);
    if (a != 1) os << a;
    os << "e" << (i + 1);
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

int coord(const RootVec& gamma, int alpha_index) {
  return gamma.coords.at(alpha_index - 1);
}

int o_value(const RootVec& gamma, const std::set<int>& pi0) {
  int s = 0;
  for (int a : pi0) s += coord(gamma, a);
  return s;
}

}  // namespace nilsymp
