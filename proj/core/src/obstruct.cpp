#include "nilsymp/obstruct.hpp"

#include <algorithm>
#include <sstream>

namespace nilsymp {

std::string to_string(ObstructionKind k) {
  switch (k) {
    case ObstructionKind::DimBound: return "dim_bound";
    case ObstructionKind::PtVanishes: return "pt_vanishes";
    case ObstructionKind::NoCentralHwv: return "no_central_hwv";
    case ObstructionKind::IdentityFail: return "identity_fail";
  }
  return "?";
}

std::optional<Obstruction> dim_bound_check(const NilAlgebra& n) {
  const auto lower = n.lower_central_series();
  const auto upper = n.upper_central_series();
  const long d = n.dim();
  const std::size_t jmax = std::max(lower.size(), upper.size());
  for (std::size_t j = 0; j < jmax; ++j) {
    const long lo = j < lower.size() ? static_cast<long>(lower[j].dim()) : 0;
    const long up = j < upper.size() ? static_cast<long>(upper[j].dim()) : d;
    if (up + lo > d) {
      Obstruction o{ObstructionKind::DimBound};
      o.j = static_cast<int>(j);
      o.dim_upper = up;
      o.dim_lower = lo;
      o.dim_n = d;
      std::ostringstream os;
      os << "dim c_" << j << " + dim c^" << j << " = " << up << " + " << lo << " > " << d;
      o.detail = os.str();
      return o;
    }
  }
  return std::nullopt;
}

std::optional<Obstruction> pt_obstruction_trivial_g(const NilAlgebra& n, int t) {
  if (n.is_abelian()) return std::nullopt;
  const Filtration f = lcs_filtration(n);
  const int k = f.length();
  if (t < 1 || t > (k + 1) / 2) throw BadT("t out of range for the projection criterion");
  const long cond =
      static_cast<long>(f.chain[k - t].dim()) + static_cast<long>(f.chain[t - 1].dim());
  if (cond <= n.dim()) return std::nullopt;  // criterion not applicable at this t
  const Subspace closed = closed_2forms(n);
  for (const auto& z : closed.basis()) {
    const ExtForm w = ExtForm::from_coordinates(n.dim(), 2, z);
    if (!project_pt(n, f, w, t).is_zero()) return std::nullopt;
  }
  Obstruction o{ObstructionKind::PtVanishes};
  o.t = t;
  o.dim_n = n.dim();
  std::ostringstream os;
  os << "P_" << t << " kills all closed 2-forms while dim n^{k-t} + dim n^{t-1} = " << cond
     << " > " << n.dim();
  o.detail = os.str();
  return o;
}

std::optional<Obstruction> central_hwv_check(const ParabolicSpec& spec) {
  spec.validate();
  if (is_abelian_nilradical(spec)) throw AbelianInput("central hwv check needs a nonabelian nilradical");
  const RootSystem& rs = spec.rs;
  const RootVec& gmax = rs.max_root();
  for (int a : spec.pi0) {
    const RootVec alpha = rs.simple_root(a);
    for (int b = 1; b <= rs.rank(); ++b) {
      if (b == a) continue;
      const RootVec beta = rs.simple_root(b);
      if (rs.pairing(beta, alpha) >= 0) continue;
      const RootVec refl = rs.reflect_by(beta, alpha);
      bool central = true;
      for (int ap : spec.pi0)
        if (coord(refl, ap) != coord(gmax, ap)) {
          central = false;
          break;
        }
      if (central) return std::nullopt;
    }
  }
  Obstruction o{ObstructionKind::NoCentralHwv};
  o.detail = "no reflected pair lands in the last central-series layer";
  return o;
}

std::optional<IdentityMatch> coordinate_identities(const ParabolicSpec& spec) {
  spec.validate();
  const RootSystem& rs = spec.rs;
  const RootVec& gmax = rs.max_root();
  if (spec.pi0.size() == 1) {
    const int a = *spec.pi0.begin();
    const RootVec alpha = rs.simple_root(a);
    for (int b = 1; b <= rs.rank(); ++b) {
      if (b == a) continue;
      const RootVec beta = rs.simple_root(b);
      if (coord(gmax, a) == -rs.pairing(beta, alpha)) return IdentityMatch{1, a, b};
    }
    return std::nullopt;
  }
  if (spec.pi0.size() == 2) {
    const std::vector<int> p(spec.pi0.begin(), spec.pi0.end());
    for (int pick = 0; pick < 2; ++pick) {
      const int a = p[pick], b = p[1 - pick];
      const RootVec alpha = rs.simple_root(a);
      const RootVec beta = rs.simple_root(b);
      if (coord(gmax, b) != 1) continue;
      if (coord(gmax, a) == -rs.pairing(beta, alpha)) return IdentityMatch{2, a, b};
    }
    return std::nullopt;
  }
  // a reflected simple pair spans at most two simple directions
  return std::nullopt;
}

std::vector<CandidateRow> candidate_survey(int max_rank) {
  if (max_rank < 2) throw InvalidCase("survey needs max_rank >= 2");
  std::vector<CandidateRow> rows;
  auto add_cases = [&](SimpleType t) {
    const RootSystem rs = RootSystem::build(t);
    const int n = t.rank;
    std::vector<std::vector<int>> subsets;
    for (int a = 1; a <= n; ++a) subsets.push_back({a});
    for (int a = 1; a <= n; ++a)
      for (int b = a + 1; b <= n; ++b) subsets.push_back({a, b});
    for (const auto& s : subsets) {
      ParabolicSpec spec{rs, std::set<int>(s.begin(), s.end())};
      CandidateRow row;
      row.family = std::string(1, static_cast<char>(t.family));
      row.rank = n;
      row.pi0 = s;
      row.abelian = is_abelian_nilradical(spec);
      row.match = coordinate_identities(spec);
      row.member = row.abelian || row.match.has_value();
      rows.push_back(std::move(row));
    }
  };
  for (int n = 1; n <= max_rank; ++n) add_cases({Family::A, n});
  for (int n = 2; n <= max_rank; ++n) add_cases({Family::B, n});
  for (int n = 3; n <= max_rank; ++n) add_cases({Family::C, n});
  for (int n = 4; n <= max_rank; ++n) add_cases({Family::D, n});
  add_cases({Family::E, 6});
  add_cases({Family::E, 7});
  add_cases({Family::E, 8});
  add_cases({Family::F, 4});
  add_cases({Family::G, 2});
  return rows;
}

}  // namespace nilsymp
