#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nilsymp/cohom.hpp"
#include "nilsymp/nilalgebra.hpp"

namespace nilsymp {

enum class ObstructionKind { DimBound, PtVanishes, NoCentralHwv, IdentityFail };

std::string to_string(ObstructionKind k);

/// A certificate of non-existence; `detail` carries everything needed to
/// re-verify it independently.
struct Obstruction {
  ObstructionKind kind;
  int j = -1;          // DimBound: violating index
  int t = -1;          // PtVanishes: the projection used
  long dim_upper = -1; // DimBound: dim c_j
  long dim_lower = -1; // DimBound: dim c^j
  long dim_n = -1;
  std::string detail;
};

/// Central-series dimension bound: a violation rules out symplectic
/// structures on both the algebra and its trivial extension.
std::optional<Obstruction> dim_bound_check(const NilAlgebra& n);

/// Trivial-coefficient projection criterion on the lower central series:
/// fires when dim c^{k-t} + dim c^{t-1} > dim n and P_t kills every closed
/// 2-form. Valid t range is 1..ceil(k/2).
std::optional<Obstruction> pt_obstruction_trivial_g(const NilAlgebra& n, int t);

/// Root-combinatorial form of the t=1 criterion for parabolic nilradicals:
/// some alpha in Pi_0, beta in Pi with (beta,alpha) < 0 must have
/// s_alpha(beta) matching the maximal-root coordinates on all of Pi_0.
std::optional<Obstruction> central_hwv_check(const ParabolicSpec& spec);

struct IdentityMatch {
  int case_id;  // 1: singleton, 2: pair
  int alpha;    // 1-based
  int beta;     // 1-based
};

/// Coordinate identities a symplectic (or trivially extended symplectic)
/// nonabelian nilradical must satisfy; nullopt means obstructed.
std::optional<IdentityMatch> coordinate_identities(const ParabolicSpec& spec);

struct CandidateRow {
  std::string family;
  int rank;
  std::vector<int> pi0;
  bool abelian = false;
  bool member = false;
  std::optional<IdentityMatch> match;
};

/// All |Pi_0| in {1,2} cases for classical ranks up to max_rank plus every
/// exceptional type; member = abelian or a coordinate-identity survivor.
std::vector<CandidateRow> candidate_survey(int max_rank);

}  // namespace nilsymp
