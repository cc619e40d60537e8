#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nilsymp/cohom.hpp"
#include "nilsymp/nilalgebra.hpp"

namespace nilsymp {

/// A length-2 Weyl element w = s_alpha s_beta whose negative-to-positive set
/// lies in the nilradical roots; the set itself is {alpha, s_alpha(beta)}.
struct W12Element {
  int alpha;  // 1-based simple index, in Pi_0
  int beta;   // 1-based simple index
  RootVec first;   // alpha as a root
  RootVec second;  // s_alpha(beta)
};

/// One highest-weight vector of the degree-2 cohomology: the monomial
/// dual to the pair (alpha, partner).
struct HwvEntry {
  int alpha;          // 1-based simple index
  RootVec alpha_root;
  RootVec partner;    // beta (orthogonal case) or s_alpha(beta)
  int partner_grade;  // o-value of the partner
  ExtForm rep;        // e^alpha ^ e^partner in the nilradical dual basis
};

std::vector<W12Element> enumerate_w12(const ParabolicSpec& spec);

std::vector<HwvEntry> h2_hwv(const ParabolicSpec& spec, const StructureTable& st);
std::vector<HwvEntry> h2_hwv(const ParabolicSpec& spec, const StructureTable& st,
                             const NilAlgebra& n);

/// Dual (coadjoint) action of the simple raising operator X_gamma, gamma a
/// simple root outside Pi_0, on a form over the nilradical dual. The sign
/// convention is ad* = -(ad)^T.
ExtForm act_raising(const ParabolicSpec& spec, const StructureTable& st, const NilAlgebra& n,
                    int gamma_index, const ExtForm& form);

struct HwvReport {
  std::string case_code;
  int dim = 0;
  long b2 = -1;
  int w12_count = 0;
  int hwv_count = 0;
  bool closed_nonexact = false;
  bool independent = false;
  bool annihilated = false;      // raising operators kill every class mod exacts
  bool weight_spans_match = true;  // per-weight hwv span = annihilator span
  long annihilator_dim = -1;
  bool ok = false;
  std::string failure;
};

/// Brute-force cross-check of the listed hwv set against the computed
/// degree-2 cohomology; requires dim n <= 14. `check_weights` additionally
/// compares, weight by weight, the span of the listed vectors with the space
/// of classes killed by every simple raising operator.
HwvReport verify_hwv_against_cohomology(const ParabolicSpec& spec, const StructureTable& st,
                                        bool check_weights);

}  // namespace nilsymp
