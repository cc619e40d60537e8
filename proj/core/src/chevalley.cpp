#include "nilsymp/chevalley.hpp"

#include <algorithm>
#include <array>
#include <cassert>

namespace nilsymp {

namespace {

// Special pairs (a <= b, a+b = g) for each non-simple positive root g,
// with a, b, g as indices into the (height, lex)-ordered positive system.
std::vector<std::pair<int, int>> special_pairs(const RootSystem& rs, int g) {
  std::vector<std::pair<int, int>> out;
  const auto& pos = rs.positive_roots();
  const RootVec& gamma = pos[g];
  for (int a = 0; a < static_cast<int>(pos.size()); ++a) {
    const RootVec rest = gamma - pos[a];
    if (!rest.all_nonneg() || rest.is_zero()) continue;
    if (!rs.is_positive_root(rest)) continue;
    const int b = rs.index_of(rest);
    if (a <= b) out.emplace_back(a, b);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

StructureTable StructureTable::build(const RootSystem& rs) {
  return build_signed(rs, std::vector<int>(rs.positive_roots().size(), 1));
}

StructureTable StructureTable::build_signed(const RootSystem& rs,
                                            const std::vector<int>& signs) {
  StructureTable st;
  st.rs_ = rs;
  const auto& pos = rs.positive_roots();
  const int npos = static_cast<int>(pos.size());

  auto lensq = [&](int i) { return rs.length_sq(pos[i]); };
  auto lookup = [&st](int a, int b) -> Rational {
    const bool swap = a > b;
    if (swap) std::swap(a, b);
    auto it = st.n_.find({a, b});
    if (it == st.n_.end()) throw JacobiFail("constant requested before it was derived");
    return swap ? -it->second : it->second;
  };

  // Increasing height order: pos is already sorted that way, so every
  // constant consumed below is available when it is needed.
  for (int g = 0; g < npos; ++g) {
    const auto pairs = special_pairs(rs, g);
    if (pairs.empty()) continue;
    const auto [e, h] = pairs.front();  // extraspecial
    {
      const int p = rs.string_down(pos[e], pos[h]);
      const int sign = signs.at(g) >= 0 ? 1 : -1;
      st.n_[{e, h}] = Rational(sign * (p + 1));
    }
    for (std::size_t pi = 1; pi < pairs.size(); ++pi) {
      const auto [a, b] = pairs[pi];
      // Jacobi on (X_e, X_h, X_{-a}) pins N_{a,b} against the extraspecial
      // constant. Mixed-sign constants reduce to positive pairs through
      // N_{x,y}/(z,z) = N_{y,z}/(x,x) for x+y+z = 0; pairs summing to g that
      // appear on the right have a strictly smaller first component, so the
      // recursion is well founded.
      Rational t2 = 0, t3 = 0;
      const RootVec xi = pos[h] - pos[a];
      if (rs.is_root(xi)) {
        if (xi.all_nonneg()) {
          const int x = rs.index_of(xi);  // a + x = h, x + e = b
          t2 = (-(lensq(x) / lensq(h)) * lookup(a, x)) * lookup(x, e);
        } else {
          const int x = rs.index_of(-xi);  // x + h = a, b + x = e
          const Rational n_h_ma = (lensq(x) / lensq(a)) * lookup(x, h);
          const Rational n_mx_e = -((lensq(b) / lensq(e)) * lookup(b, x));
          t2 = n_h_ma * n_mx_e;
        }
      }
      const RootVec zeta = pos[a] - pos[e];
      if (rs.is_root(zeta)) {
        assert(zeta.all_nonneg());
        const int z = rs.index_of(zeta);  // e + z = a, b + z = g
        const Rational n_ma_e = (lensq(z) / lensq(a)) * lookup(e, z);
        const Rational n_mz_h = -((lensq(b) / lensq(h)) * lookup(b, z));
        t3 = n_ma_e * n_mz_h;
      }
      const Rational neh = lookup(e, h);
      const Rational nab = lensq(g) * (t2 + t3) / (lensq(b) * neh);
      const int p = rs.string_down(pos[a], pos[b]);
      if (!is_integer(nab) || abs(nab) != p + 1)
        throw JacobiFail("sign propagation produced a non-Chevalley constant");
      st.n_[{a, b}] = nab;
    }
  }
  return st;
}

StructureTable StructureTable::resigned(std::mt19937_64& rng) const {
  std::vector<int> signs(rs_.positive_roots().size(), 1);
  for (auto& s : signs) s = (rng() & 1) ? 1 : -1;
  return build_signed(rs_, signs);
}

Rational StructureTable::constant(int a, int b) const {
  if (a == b) return Rational(0);
  const bool swap = a > b;
  if (swap) std::swap(a, b);
  auto it = n_.find({a, b});
  if (it == n_.end()) return Rational(0);
  return swap ? -it->second : it->second;
}

std::optional<std::pair<int, Rational>> StructureTable::bracket(int a, int b) const {
  const Rational c = constant(a, b);
  if (c == 0) return std::nullopt;
  const RootVec sum = rs_.positive_roots()[a] + rs_.positive_roots()[b];
  return std::make_pair(rs_.index_of(sum), c);
}

std::vector<std::tuple<int, int, Rational, int>> StructureTable::table() const {
  std::vector<std::tuple<int, int, Rational, int>> out;
  for (const auto& [key, val] : n_) {
    const RootVec sum = rs_.positive_roots()[key.first] + rs_.positive_roots()[key.second];
    out.emplace_back(key.first, key.second, val, rs_.index_of(sum));
  }
  return out;
}

void StructureTable::validate() const {
  const auto& pos = rs_.positive_roots();
  const int npos = static_cast<int>(pos.size());
  // antisymmetry is structural; check integrality and the string rule
  for (const auto& [key, val] : n_) {
    const int p = rs_.string_down(pos[key.first], pos[key.second]);
    if (!is_integer(val) || abs(val) != p + 1)
      throw JacobiFail("|N| != p+1 at (" + rs_.coord_string(pos[key.first]) + ", " +
                       rs_.coord_string(pos[key.second]) + ")");
  }
  // Jacobi over all positive triples; brackets leaving the positive part
  // vanish inside the nilpotent algebra, so the sweep is self-contained.
  for (int x = 0; x < npos; ++x)
    for (int y = x + 1; y < npos; ++y)
      for (int z = y + 1; z < npos; ++z) {
        const std::array<std::array<int, 3>, 3> cyc = {{{x, y, z}, {y, z, x}, {z, x, y}}};
        std::map<int, Rational> terms;
        for (const auto& t : cyc) {
          const auto br = bracket(t[0], t[1]);
          if (!br) continue;
          const auto br2 = bracket(br->first, t[2]);
          if (!br2) continue;
          terms[br2->first] += br->second * br2->second;
        }
        for (const auto& [idx, v] : terms)
          if (v != 0)
            throw JacobiFail("Jacobi residual at triple (" + rs_.coord_string(pos[x]) + ", " +
                             rs_.coord_string(pos[y]) + ", " + rs_.coord_string(pos[z]) + ")");
      }
}

}  // namespace nilsymp
