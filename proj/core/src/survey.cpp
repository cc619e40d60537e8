#include "nilsymp/survey.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "nilsymp/kostant.hpp"

namespace nilsymp {

std::string CaseKey::code() const {
  std::ostringstream os;
  os << family << rank << ":{";
  for (std::size_t i = 0; i < pi0.size(); ++i) {
    if (i) os << ",";
    os << pi0[i];
  }
  os << "}";
  return os.str();
}

bool CaseKey::operator<(const CaseKey& o) const {
  if (family != o.family) return family < o.family;
  if (rank != o.rank) return rank < o.rank;
  return pi0 < o.pi0;
}

CaseKey parse_case_key(const std::string& type_code, const std::vector<int>& pi0) {
  const SimpleType t = SimpleType::parse(type_code);
  CaseKey k;
  k.family = std::string(1, static_cast<char>(t.family));
  k.rank = t.rank;
  k.pi0 = pi0;
  std::sort(k.pi0.begin(), k.pi0.end());
  if (k.pi0.empty()) throw InvalidCase("Pi_0 must be nonempty");
  for (int a : k.pi0)
    if (a < 1 || a > k.rank) throw InvalidCase("Pi_0 index out of range for " + type_code);
  return k;
}

namespace {

struct TypeContext {
  RootSystem rs;
  StructureTable st;
};

const TypeContext& context_for(const SimpleType& t, bool resign, std::uint64_t resign_seed) {
  static std::map<std::tuple<char, int, bool, std::uint64_t>, TypeContext> cache;
  const auto key = std::make_tuple(static_cast<char>(t.family), t.rank, resign, resign_seed);
  auto it = cache.find(key);
  if (it == cache.end()) {
    RootSystem rs = RootSystem::build(t);
    StructureTable st = StructureTable::build(rs);
    if (resign) {
      std::mt19937_64 rng(resign_seed ^ fnv1a64(t.code()));
      st = st.resigned(rng);
    }
    it = cache.emplace(key, TypeContext{std::move(rs), std::move(st)}).first;
  }
  return it->second;
}

SurveyRow survey_row(const CandidateRow& trow, const SurveyOptions& opts) {
  SurveyRow row;
  row.key = CaseKey{trow.family, trow.rank, trow.pi0};
  const SimpleType t = SimpleType::parse(trow.family + std::to_string(trow.rank));
  const TypeContext& ctx = context_for(t, opts.resign, opts.resign_seed);
  ParabolicSpec spec{ctx.rs, std::set<int>(trow.pi0.begin(), trow.pi0.end())};
  const NilAlgebra n = NilAlgebra::nilradical(spec, ctx.st);
  row.dim = n.dim();
  row.k = n.k();
  row.abelian = trow.abelian;
  row.member = trow.member;
  if (opts.verdicts) {
    DecideOptions dopts;
    dopts.samples = opts.samples;
    dopts.prime = opts.prime;
    dopts.seed_mix = opts.seed_mix;
    dopts.case_key = row.key.code();
    row.verdict_n = decide(n, Target::N, spec, dopts);
    row.verdict_ext = decide(n, Target::Extension, spec, dopts);
  }
  return row;
}

}  // namespace

SurveyResult run_survey(const SurveyOptions& opts) {
  if (opts.max_rank < 4) throw InvalidCase("survey needs max_rank >= 4");
  SurveyResult res;
  res.options = opts;
  for (const auto& trow : candidate_survey(opts.max_rank)) res.rows.push_back(survey_row(trow, opts));
  std::sort(res.rows.begin(), res.rows.end(),
            [](const SurveyRow& a, const SurveyRow& b) { return a.key < b.key; });
  return res;
}

namespace {

Json load_json(const std::filesystem::path& p) {
  std::ifstream in(p);
  if (!in) throw Error("cannot open " + p.string());
  Json j;
  in >> j;
  return j;
}

std::string verdict_code(const Verdict& v) { return to_string(v.outcome); }

// golden verdict expectations: exact outcome, or "no" for any non-existence
bool verdict_matches(const std::string& expected, const Verdict& got) {
  if (expected == "no")
    return got.outcome == Outcome::Obstructed || got.outcome == Outcome::ProbablyNo;
  return expected == verdict_code(got);
}

}  // namespace

void compare_with_goldens(SurveyResult& res, const std::filesystem::path& membership_path,
                          const std::filesystem::path& classification_path) {
  res.compared = true;
  res.membership_diffs.clear();
  res.verdict_diffs.clear();

  const Json t1 = load_json(membership_path);
  const int golden_rank = t1.at("max_rank").get<int>();
  const int cmp_rank = std::min(golden_rank, res.options.max_rank);
  std::set<CaseKey> golden_members;
  for (const auto& row : t1.at("rows")) {
    CaseKey k{row.at("family").get<std::string>(), row.at("rank").get<int>(),
              row.at("pi0").get<std::vector<int>>()};
    if (k.rank <= cmp_rank) golden_members.insert(k);
  }
  for (const auto& row : res.rows) {
    if (row.key.rank > cmp_rank) continue;
    const bool expected = golden_members.count(row.key) > 0;
    if (expected != row.member)
      res.membership_diffs.push_back({row.key.code(), "member", expected ? "true" : "false",
                                  row.member ? "true" : "false"});
  }

  if (!res.options.verdicts) return;
  const Json t45 = load_json(classification_path);
  std::map<CaseKey, Json> expectations;
  for (const auto& row : t45.at("rows")) {
    CaseKey k{row.at("family").get<std::string>(), row.at("rank").get<int>(),
              row.at("pi0").get<std::vector<int>>()};
    if (k.rank <= cmp_rank) expectations[k] = row;
  }
  std::map<CaseKey, const SurveyRow*> computed;
  for (const auto& row : res.rows) computed[row.key] = &row;
  for (const auto& [key, exp] : expectations) {
    auto it = computed.find(key);
    if (it == computed.end()) {
      res.verdict_diffs.push_back({key.code(), "row", "present", "missing"});
      continue;
    }
    const SurveyRow& row = *it->second;
    if (exp.contains("dim") && exp.at("dim").get<int>() != row.dim)
      res.verdict_diffs.push_back({key.code(), "dim", std::to_string(exp.at("dim").get<int>()),
                                   std::to_string(row.dim)});
    const std::string en = exp.at("verdict_n").get<std::string>();
    const std::string ee = exp.at("verdict_ext").get<std::string>();
    if (!verdict_matches(en, row.verdict_n))
      res.verdict_diffs.push_back({key.code(), "verdict_n", en, verdict_code(row.verdict_n)});
    if (!verdict_matches(ee, row.verdict_ext))
      res.verdict_diffs.push_back({key.code(), "verdict_ext", ee, verdict_code(row.verdict_ext)});
    if (exp.contains("evidence_n") && row.verdict_n.outcome == Outcome::Obstructed) {
      const auto& ev = exp.at("evidence_n");
      if (ev.contains("kind") &&
          ev.at("kind").get<std::string>() != to_string(row.verdict_n.obstruction->kind))
        res.verdict_diffs.push_back({key.code(), "evidence_n.kind",
                                     ev.at("kind").get<std::string>(),
                                     to_string(row.verdict_n.obstruction->kind)});
      if (ev.contains("t") && ev.at("t").get<int>() != row.verdict_n.obstruction->t)
        res.verdict_diffs.push_back({key.code(), "evidence_n.t",
                                     std::to_string(ev.at("t").get<int>()),
                                     std::to_string(row.verdict_n.obstruction->t)});
    }
  }
}

Json survey_to_json(const SurveyResult& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    Json jr;
    jr["family"] = row.key.family;
    jr["rank"] = row.key.rank;
    jr["pi0"] = row.key.pi0;
    jr["dim"] = row.dim;
    jr["k"] = row.k;
    jr["abelian"] = row.abelian;
    jr["member"] = row.member;
    if (r.options.verdicts) {
      jr["verdict_n"] = verdict_to_json(row.verdict_n);
      jr["verdict_ext"] = verdict_to_json(row.verdict_ext);
    }
    rows.push_back(std::move(jr));
  }
  Json out;
  out["max_rank"] = r.options.max_rank;
  out["samples"] = r.options.samples;
  out["rows"] = rows;
  if (r.compared) {
    Json diffs = Json::array();
    for (const auto& d : r.membership_diffs)
      diffs.push_back(Json{{"row", d.row}, {"field", d.field}, {"expected", d.expected},
                           {"actual", d.actual}});
    out["membership_diffs"] = diffs;
    Json vdiffs = Json::array();
    for (const auto& d : r.verdict_diffs)
      vdiffs.push_back(Json{{"row", d.row}, {"field", d.field}, {"expected", d.expected},
                            {"actual", d.actual}});
    out["verdict_diffs"] = vdiffs;
  }
  return out;
}

std::string survey_to_csv(const SurveyResult& r) {
  std::ostringstream os;
  os << "family,rank,pi0,dim,k,abelian,member,verdict_n,verdict_ext,evidence_n,evidence_ext\n";
  auto evidence = [](const Verdict& v) -> std::string {
    if (v.obstruction) return to_string(v.obstruction->kind);
    if (v.certificate) return "max_rank=" + std::to_string(v.certificate->max_rank_seen);
    if (v.witness) return "witness_terms=" + std::to_string(v.witness->coeffs().size());
    return "";
  };
  for (const auto& row : r.rows) {
    os << row.key.family << "," << row.key.rank << ",\"{";
    for (std::size_t i = 0; i < row.key.pi0.size(); ++i) {
      if (i) os << " ";
      os << row.key.pi0[i];
    }
    os << "}\"," << row.dim << "," << row.k << "," << (row.abelian ? 1 : 0) << ","
       << (row.member ? 1 : 0) << "," << to_string(row.verdict_n.outcome) << ","
       << to_string(row.verdict_ext.outcome) << "," << evidence(row.verdict_n) << ","
       << evidence(row.verdict_ext) << "\n";
  }
  return os.str();
}

void bless_goldens(const SurveyResult& r, const std::filesystem::path& membership_path,
                   const std::filesystem::path& classification_path) {
  Json t1rows = Json::array();
  Json t45rows = Json::array();
  for (const auto& row : r.rows) {
    if (row.member) {
      t1rows.push_back(
          Json{{"family", row.key.family}, {"rank", row.key.rank}, {"pi0", row.key.pi0}});
      Json v;
      v["family"] = row.key.family;
      v["rank"] = row.key.rank;
      v["pi0"] = row.key.pi0;
      v["dim"] = row.dim;
      v["abelian"] = row.abelian;
      v["verdict_n"] = to_string(row.verdict_n.outcome);
      v["verdict_ext"] = to_string(row.verdict_ext.outcome);
      t45rows.push_back(std::move(v));
    }
  }
  Json t1{{"max_rank", r.options.max_rank}, {"rows", t1rows}};
  Json t45{{"max_rank", r.options.max_rank}, {"rows", t45rows}};
  std::ofstream(membership_path) << t1.dump(1) << "\n";
  std::ofstream(classification_path) << t45.dump(1) << "\n";
}

std::string explain_case(const CaseKey& key, const SurveyOptions& opts) {
  const SimpleType t = SimpleType::parse(key.family + std::to_string(key.rank));
  const TypeContext& ctx = context_for(t, opts.resign, opts.resign_seed);
  ParabolicSpec spec{ctx.rs, std::set<int>(key.pi0.begin(), key.pi0.end())};
  spec.validate();
  const NilAlgebra n = NilAlgebra::nilradical(spec, ctx.st);

  std::ostringstream os;
  os << "case " << key.code() << "\n";
  os << "  dim n = " << n.dim() << ", nilpotency class k = " << n.k() << "\n";

  std::map<int, int> layer;
  for (int i = 0; i < n.dim(); ++i) layer[n.grade(i)]++;
  os << "  graded layers:";
  for (const auto& [g, c] : layer) os << " g_(" << g << ")=" << c;
  os << "\n";

  const auto lcs = n.lower_central_series();
  os << "  lower central series dims:";
  for (const auto& s : lcs) os << " " << s.dim();
  os << "\n";

  if (is_abelian_nilradical(spec)) {
    os << "  abelian nilradical; H^2 = Lambda^2 n* of dimension "
       << monomial_count(n.dim(), 2) << "\n";
  } else {
    // free-layer shapes worth naming
    if (n.k() == 2 && layer[2] == layer[1] * (layer[1] - 1) / 2)
      os << "  shape: free 2-step nilpotent on " << layer[1] << " generators\n";
    if (n.k() == 3 && layer[1] == 2 && layer[2] == 1 && layer[3] == 2)
      os << "  shape: free 3-step nilpotent on 2 generators\n";
  }

  if (n.dim() <= 14) {
    os << "  b_0..b_2 = " << betti(n, 0) << " " << betti(n, 1) << " " << betti(n, 2) << "\n";
    if (n.dim() <= 12) {
      os << "  full Betti table:";
      for (long b : betti_all(n)) os << " " << b;
      os << "\n";
    }
  }

  os << "  hwv entries (alpha; partner; partner grade):\n";
  for (const auto& e : h2_hwv(spec, ctx.st, n))
    os << "    g" << e.alpha << " ; " << ctx.rs.coord_string(e.partner) << " ; "
       << e.partner_grade << "\n";

  if (!is_abelian_nilradical(spec)) {
    if (auto o = central_hwv_check(spec)) os << "  obstruction: " << o->detail << "\n";
    if (auto m = coordinate_identities(spec))
      os << "  coordinate identities: case " << m->case_id << " with alpha=g" << m->alpha
         << ", beta=g" << m->beta << "\n";
    else
      os << "  coordinate identities: none\n";
  }

  DecideOptions dopts;
  dopts.samples = opts.samples;
  dopts.prime = opts.prime;
  dopts.seed_mix = opts.seed_mix;
  dopts.case_key = key.code();
  for (Target tgt : {Target::N, Target::Extension}) {
    const Verdict v = decide(n, tgt, spec, dopts);
    os << "  verdict[" << to_string(tgt) << "] = " << to_string(v.outcome);
    if (v.obstruction) os << " (" << v.obstruction->detail << ")";
    if (v.certificate)
      os << " (max closed rank " << v.certificate->max_rank_seen << "/" << v.certificate->dim
         << " over " << v.certificate->samples << " samples)";
    os << "\n";
  }
  return os.str();
}

}  // namespace nilsymp
