// Command line driver: root systems, structure constants, cohomology,
// hwv sets, obstructions, symplectic decisions, and the survey pipeline.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "nilsymp/survey.hpp"

using namespace nilsymp;

namespace {

std::optional<std::uint64_t> env_seed() {
  if (const char* s = std::getenv("NILSYMP_SEED")) {
    try {
      return std::stoull(s);
    } catch (...) {
    }
  }
  return std::nullopt;
}

struct CommonOpts {
  std::string format = "json";
  std::uint64_t seed = 0;
  bool seed_set = false;
  int samples = 64;

  std::uint64_t seed_mix() const {
    if (seed_set) return seed;
    if (auto e = env_seed()) return *e;
    return 0;
  }
};

void add_common(CLI::App* cmd, CommonOpts& c) {
  cmd->add_option("--format", c.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
  cmd->add_option("--seed", c.seed, "xor-mixed into every per-case RNG seed")
      ->each([&c](const std::string&) { c.seed_set = true; });
  cmd->add_option("--samples", c.samples, "randomized rank samples per case");
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  Json j;
  in >> j;
  return j;
}

void emit(const Json& j) { std::cout << j.dump(1) << "\n"; }

ParabolicSpec spec_for(const std::string& type_code, const std::vector<int>& pi0) {
  const CaseKey key = parse_case_key(type_code, pi0);
  RootSystem rs = RootSystem::build(SimpleType::parse(type_code));
  return ParabolicSpec{std::move(rs), std::set<int>(key.pi0.begin(), key.pi0.end())};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact engine for symplectic structures on parabolic nilradicals"};
  app.require_subcommand(1);

  std::string type_code = "A2";
  std::vector<int> pi0;
  std::string json_path;
  std::string out_path;
  CommonOpts common;

  // rootsys <type>
  auto* cmd_root = app.add_subcommand("rootsys", "positive system, Cartan data, maximal root");
  cmd_root->add_option("type", type_code, "type code, e.g. A5 or G2")->required();
  add_common(cmd_root, common);

  // build <type> --pi0 ... [--table]
  bool full_table = false;
  auto* cmd_build = app.add_subcommand("build", "nilradical of the parabolic for Pi_0");
  cmd_build->add_option("type", type_code)->required();
  cmd_build->add_option("--pi0", pi0, "simple-root indices (1-based)")->required();
  cmd_build->add_flag("--table", full_table, "emit the full positive-pair bracket table");
  add_common(cmd_build, common);

  // cohom <type> --pi0 ... [--dump-matrices]
  bool dump_matrices = false;
  auto* cmd_cohom = app.add_subcommand("cohom", "Betti data of the nilradical complex");
  cmd_cohom->add_option("type", type_code)->required();
  cmd_cohom->add_option("--pi0", pi0)->required();
  cmd_cohom->add_flag("--dump-matrices", dump_matrices, "sparse triplet dumps of d_1..d_3");
  add_common(cmd_cohom, common);

  // hwv <type> --pi0 ...
  bool verify_hwv = false;
  auto* cmd_hwv = app.add_subcommand("hwv", "highest weight vectors of H^2");
  cmd_hwv->add_option("type", type_code)->required();
  cmd_hwv->add_option("--pi0", pi0)->required();
  cmd_hwv->add_flag("--verify", verify_hwv, "brute-force cross-check (dim <= 14)");
  add_common(cmd_hwv, common);

  // obstruct <type> --pi0 ...
  auto* cmd_obs = app.add_subcommand("obstruct", "all applicable non-existence criteria");
  cmd_obs->add_option("type", type_code)->required();
  cmd_obs->add_option("--pi0", pi0)->required();
  add_common(cmd_obs, common);

  // decide (<type> --pi0 ... | --json file) [--target n|ext|both]
  std::string target = "both";
  auto* cmd_decide = app.add_subcommand("decide", "symplectic decision with witness or certificate");
  cmd_decide->add_option("type", type_code);
  cmd_decide->add_option("--pi0", pi0);
  cmd_decide->add_option("--json", json_path, "algebra JSON instead of a (type, Pi_0) case");
  cmd_decide->add_option("--target", target)->check(CLI::IsMember({"n", "ext", "both"}));
  add_common(cmd_decide, common);

  // survey --max-rank N [--out dir] [--bless] [--golden-dir dir] [--no-verdicts]
  int max_rank = 8;
  bool bless = false;
  bool no_verdicts = false;
  bool resign = false;
  std::string golden_dir = "data/golden";
  auto* cmd_survey = app.add_subcommand("survey", "full classification survey with golden comparison");
  cmd_survey->add_option("--max-rank", max_rank, "largest classical rank");
  cmd_survey->add_option("--out", out_path, "write survey.json / survey.csv here");
  cmd_survey->add_option("--golden-dir", golden_dir, "directory with membership.json / classification.json");
  cmd_survey->add_flag("--bless", bless, "rewrite the golden files from this run");
  cmd_survey->add_flag("--no-verdicts", no_verdicts, "membership survey only");
  cmd_survey->add_flag("--resign", resign, "random Jacobi-consistent re-signing of the tables");
  add_common(cmd_survey, common);

  // explain <type> --pi0 ...
  auto* cmd_explain = app.add_subcommand("explain", "human-readable case report");
  cmd_explain->add_option("type", type_code)->required();
  cmd_explain->add_option("--pi0", pi0)->required();
  add_common(cmd_explain, common);

  // ingest --json file
  auto* cmd_ingest = app.add_subcommand("ingest", "validate an algebra JSON file");
  cmd_ingest->add_option("--json", json_path)->required();
  add_common(cmd_ingest, common);

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmd_root->parsed()) {
      const RootSystem rs = RootSystem::build(SimpleType::parse(type_code));
      emit(root_system_json(rs));
      return 0;
    }
    if (cmd_build->parsed()) {
      ParabolicSpec spec = spec_for(type_code, pi0);
      const StructureTable st = StructureTable::build(spec.rs);
      if (full_table) {
        emit(structure_table_json(st));
        return 0;
      }
      emit(algebra_to_json(NilAlgebra::nilradical(spec, st)));
      return 0;
    }
    if (cmd_cohom->parsed()) {
      ParabolicSpec spec = spec_for(type_code, pi0);
      const StructureTable st = StructureTable::build(spec.rs);
      const NilAlgebra n = NilAlgebra::nilradical(spec, st);
      Json j;
      j["case"] = spec.case_code();
      j["dim"] = n.dim();
      if (n.dim() <= 12) {
        j["betti"] = betti_all(n);
      } else {
        j["betti_0_2"] = {betti(n, 0), betti(n, 1), betti(n, 2)};
      }
      if (dump_matrices) {
        for (int p = 1; p <= 3; ++p) {
          std::ostringstream os;
          const auto cols = diff_matrix_cols(n, p);
          for (std::size_t c = 0; c < cols.size(); ++c)
            for (const auto& [r, v] : cols[c]) os << p << " " << r << " " << c << " " << v << "\n";
          j["d" + std::to_string(p)] = os.str();
        }
      }
      emit(j);
      return 0;
    }
    if (cmd_hwv->parsed()) {
      ParabolicSpec spec = spec_for(type_code, pi0);
      const StructureTable st = StructureTable::build(spec.rs);
      if (verify_hwv) {
        const HwvReport rep = verify_hwv_against_cohomology(spec, st, spec.rs.rank() <= 4);
        emit(hwv_report_json(rep));
        return rep.ok ? 0 : 1;
      }
      Json entries = Json::array();
      for (const auto& e : h2_hwv(spec, st)) {
        Json je;
        je["alpha"] = e.alpha;
        je["partner"] = e.partner.coords;
        je["grade_of_partner"] = e.partner_grade;
        entries.push_back(je);
      }
      emit(Json{{"case", spec.case_code()}, {"hwv", entries}});
      return 0;
    }
    if (cmd_obs->parsed()) {
      ParabolicSpec spec = spec_for(type_code, pi0);
      const StructureTable st = StructureTable::build(spec.rs);
      const NilAlgebra n = NilAlgebra::nilradical(spec, st);
      Json j;
      j["case"] = spec.case_code();
      if (auto o = dim_bound_check(n)) j["dim_bound"] = o->detail;
      if (!n.is_abelian()) {
        for (int t = 1; t <= (n.k() + 1) / 2; ++t)
          if (auto o = pt_obstruction_trivial_g(n, t))
            j["pt_t" + std::to_string(t)] = o->detail;
        if (auto o = central_hwv_check(spec)) j["central_hwv"] = o->detail;
      }
      if (auto m = coordinate_identities(spec))
        j["coordinate_identity"] = Json{{"case", m->case_id}, {"alpha", m->alpha}, {"beta", m->beta}};
      emit(j);
      return 0;
    }
    if (cmd_decide->parsed()) {
      NilAlgebra n = [&] {
        if (!json_path.empty()) return algebra_from_json(read_json_file(json_path));
        if (pi0.empty()) throw InvalidCase("decide needs --pi0 or --json");
        ParabolicSpec spec = spec_for(type_code, pi0);
        const StructureTable st = StructureTable::build(spec.rs);
        return NilAlgebra::nilradical(spec, st);
      }();
      std::optional<ParabolicSpec> spec;
      if (json_path.empty()) spec = spec_for(type_code, pi0);
      DecideOptions dopts;
      dopts.samples = common.samples;
      dopts.seed_mix = common.seed_mix();
      dopts.case_key = json_path.empty() ? parse_case_key(type_code, pi0).code() : json_path;
      Json out = Json::array();
      int exit_code = 0;
      auto run_target = [&](Target tgt) {
        const Verdict v = decide(n, tgt, spec, dopts);
        out.push_back(verdict_to_json(v));
        switch (v.outcome) {
          case Outcome::Witness: exit_code = std::max(exit_code, 0); break;
          case Outcome::Obstructed: exit_code = std::max(exit_code, 1); break;
          case Outcome::ProbablyNo: exit_code = std::max(exit_code, 2); break;
          case Outcome::OddDim: exit_code = std::max(exit_code, 3); break;
        }
      };
      if (target == "n" || target == "both") run_target(Target::N);
      if (target == "ext" || target == "both") run_target(Target::Extension);
      emit(out);
      return exit_code;
    }
    if (cmd_survey->parsed()) {
      SurveyOptions opts;
      opts.max_rank = max_rank;
      opts.samples = common.samples;
      opts.seed_mix = common.seed_mix();
      opts.verdicts = !no_verdicts;
      opts.resign = resign;
      SurveyResult res = run_survey(opts);
      const auto t1 = std::filesystem::path(golden_dir) / "membership.json";
      const auto t45 = std::filesystem::path(golden_dir) / "classification.json";
      if (bless) {
        bless_goldens(res, t1, t45);
        std::cerr << "golden files rewritten under " << golden_dir << "\n";
      }
      compare_with_goldens(res, t1, t45);
      if (!out_path.empty()) {
        std::filesystem::create_directories(out_path);
        std::ofstream(std::filesystem::path(out_path) / "survey.json")
            << survey_to_json(res).dump(1) << "\n";
        std::ofstream(std::filesystem::path(out_path) / "survey.csv") << survey_to_csv(res);
      }
      if (common.format == "csv") std::cout << survey_to_csv(res);
      else emit(survey_to_json(res));
      if (!res.matches_goldens()) {
        std::cerr << "golden mismatches: " << res.membership_diffs.size() << " membership, "
                  << res.verdict_diffs.size() << " verdict\n";
        for (const auto& d : res.membership_diffs)
          std::cerr << "  [membership] " << d.row << ": expected " << d.expected << ", got "
                    << d.actual << "\n";
        for (const auto& d : res.verdict_diffs)
          std::cerr << "  [" << d.field << "] " << d.row << ": expected " << d.expected
                    << ", got " << d.actual << "\n";
        return 1;
      }
      return 0;
    }
    if (cmd_explain->parsed()) {
      SurveyOptions opts;
      opts.samples = common.samples;
      opts.seed_mix = common.seed_mix();
      std::cout << explain_case(parse_case_key(type_code, pi0), opts);
      return 0;
    }
    if (cmd_ingest->parsed()) {
      const NilAlgebra n = algebra_from_json(read_json_file(json_path));
      emit(algebra_to_json(n));
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 10;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 11;
  }
  return 0;
}
