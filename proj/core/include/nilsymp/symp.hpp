#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "nilsymp/cohom.hpp"
#include "nilsymp/obstruct.hpp"

namespace nilsymp {

enum class Target { N, Extension };
enum class Outcome { Witness, Obstructed, ProbablyNo, OddDim };

std::string to_string(Target t);
std::string to_string(Outcome o);

/// Randomized nonexistence certificate: `max_rank_seen` over `samples`
/// uniform combinations of the closed-form basis over F_prime. The failure
/// bound is the exact Schwartz-Zippel product ((dim/2)/prime)^samples,
/// conditional on the generic Pfaffian staying nonzero mod prime.
struct RankCertificate {
  int samples = 0;
  std::uint64_t prime = 0;
  long max_rank_seen = 0;
  long dim = 0;
  Rational failure_bound;
};

struct Verdict {
  Target target = Target::N;
  Outcome outcome = Outcome::OddDim;
  std::optional<ExtForm> witness;
  std::optional<Obstruction> obstruction;
  std::optional<RankCertificate> certificate;
};

struct DecideOptions {
  int samples = 64;
  std::uint64_t prime = 4611686018427387847ull;  // largest 62-bit prime
  std::uint64_t seed_mix = 0;                    // xor-folded into per-case seeds
  std::string case_key;                          // reproducible seeding handle
};

/// Exact test: omega closed and omega^{dim/2} nonzero. The top power is
/// evaluated through the Pfaffian route (determinant of the skew Gram
/// matrix), which vanishes exactly when the wedge power does.
bool verify_symplectic(const NilAlgebra& n, const ExtForm& omega);

struct MaxRankResult {
  long max_rank = 0;
  RankCertificate certificate;
  std::optional<ExtForm> witness;  // present when full rank was reached
};

/// Maximum rank over random F_p combinations of the closed 2-form basis.
/// A full-rank sample lifts to an exact rational witness immediately.
MaxRankResult max_closed_rank(const NilAlgebra& n, int samples, std::uint64_t prime,
                              std::uint64_t seed);

/// Full decision pipeline for one target: parity, dimension bound,
/// projection obstructions for every valid t, the parabolic central-hwv
/// criterion when a spec is attached, then witness search.
Verdict decide(const NilAlgebra& n, Target target, const std::optional<ParabolicSpec>& spec,
               const DecideOptions& opts);

std::uint64_t fnv1a64(const std::string& s);

}  // namespace nilsymp
