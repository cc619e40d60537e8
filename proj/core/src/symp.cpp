#include "nilsymp/symp.hpp"

#include <algorithm>
#include <random>

namespace nilsymp {

std::string to_string(Target t) { return t == Target::N ? "n" : "ext"; }

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::Witness: return "witness";
    case Outcome::Obstructed: return "obstructed";
    case Outcome::ProbablyNo: return "probably_no";
    case Outcome::OddDim: return "odd_dim";
  }
  return "?";
}

std::uint64_t fnv1a64(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>((u128)a * b % p); }

u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

u64 invmod(u64 a, u64 p) { return powmod(a % p, p - 2, p); }

u64 uniform_mod(std::mt19937_64& rng, u64 p) {
  const u64 limit = (~0ull / p) * p;
  u64 x = rng();
  while (x >= limit) x = rng();
  return x % p;
}

u64 rational_mod(const Rational& q, u64 p) {
  const u64 num = mpz_fdiv_ui(q.get_num().get_mpz_t(), p);
  const u64 den = mpz_fdiv_ui(q.get_den().get_mpz_t(), p);
  if (den == 0) throw Error("denominator divisible by the sampling prime");
  return mulmod(num, invmod(den, p), p);
}

long skew_rank_mod(std::vector<std::vector<u64>>& m, u64 p) {
  const std::size_t d = m.size();
  long rank = 0;
  std::size_t row = 0;
  for (std::size_t col = 0; col < d && row < d; ++col) {
    std::size_t piv = row;
    while (piv < d && m[piv][col] == 0) ++piv;
    if (piv == d) continue;
    std::swap(m[row], m[piv]);
    const u64 inv = invmod(m[row][col], p);
    for (std::size_t j = col; j < d; ++j) m[row][j] = mulmod(m[row][j], inv, p);
    for (std::size_t i = 0; i < d; ++i) {
      if (i == row || m[i][col] == 0) continue;
      const u64 f = m[i][col];
      for (std::size_t j = col; j < d; ++j) {
        const u64 sub = mulmod(f, m[row][j], p);
        m[i][j] = (m[i][j] + p - sub) % p;
      }
    }
    ++row;
    ++rank;
  }
  return rank;
}

// witness candidates tried before random sampling: the direct pairing on an
// abelian algebra, then the plain sum of the closed-form basis
std::vector<QVec> structured_candidates(const NilAlgebra& n, const Subspace& closed) {
  std::vector<QVec> out;
  const std::size_t m = monomial_count(n.dim(), 2);
  if (n.is_abelian() && n.dim() % 2 == 0) {
    ExtForm pairing(n.dim(), 2);
    for (int i = 0; i + 1 < n.dim(); i += 2) pairing.add_term({i, i + 1}, Rational(1));
    out.push_back(pairing.coordinates());
  }
  if (!closed.basis().empty()) {
    QVec sum(m);
    for (const auto& b : closed.basis())
      for (std::size_t j = 0; j < m; ++j) sum[j] += b[j];
    out.push_back(std::move(sum));
  }
  return out;
}

long exact_skew_rank(const NilAlgebra& n, const QVec& coords) {
  return static_cast<long>(ExtForm::from_coordinates(n.dim(), 2, coords).gram(n.dim()).rank());
}

}  // namespace

bool verify_symplectic(const NilAlgebra& n, const ExtForm& omega) {
  if (n.dim() % 2 != 0) throw OddDim("symplectic algebras are even dimensional");
  if (omega.degree() != 2) throw Error("witness must be a 2-form");
  if (!differential(n, omega).is_zero()) return false;
  return omega.gram(n.dim()).det() != 0;
}

MaxRankResult max_closed_rank(const NilAlgebra& n, int samples, u64 prime, u64 seed) {
  const int d = n.dim();
  const Subspace closed = closed_2forms(n);
  MaxRankResult res;
  res.certificate.samples = samples;
  res.certificate.prime = prime;
  res.certificate.dim = d;

  // exact-rank pass over the structured candidates
  for (const auto& cand : structured_candidates(n, closed)) {
    const long r = exact_skew_rank(n, cand);
    if (r > res.max_rank) res.max_rank = r;
    if (r == d) {
      res.witness = ExtForm::from_coordinates(d, 2, cand);
      res.certificate.max_rank_seen = r;
      return res;
    }
  }

  const auto& basis = closed.basis();

  // small rational lifts first: witnesses with printable coefficients
  {
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
    std::uniform_int_distribution<long> coef(-10000, 10000);
    const std::size_t m = monomial_count(d, 2);
    for (int t = 0; t < 8 && !basis.empty(); ++t) {
      QVec coords(m);
      for (const auto& b : basis) {
        const long c = coef(rng);
        if (c == 0) continue;
        for (std::size_t j = 0; j < m; ++j)
          if (b[j] != 0) coords[j] += Rational(c) * b[j];
      }
      const long r = exact_skew_rank(n, coords);
      if (r > res.max_rank) res.max_rank = r;
      if (r == d) {
        res.witness = ExtForm::from_coordinates(d, 2, coords);
        res.certificate.max_rank_seen = r;
        return res;
      }
    }
  }

  // mod-p sampling; a full-rank sample is itself an exact witness because a
  // nonzero determinant mod p is nonzero over the rationals
  std::vector<std::vector<std::pair<std::pair<int, int>, u64>>> basis_mod;
  basis_mod.reserve(basis.size());
  for (const auto& b : basis) {
    std::vector<std::pair<std::pair<int, int>, u64>> entries;
    for (std::size_t r = 0; r < b.size(); ++r) {
      if (b[r] == 0) continue;
      const auto idx = monomial_unrank(d, 2, r);
      entries.push_back({{idx[0], idx[1]}, rational_mod(b[r], prime)});
    }
    basis_mod.push_back(std::move(entries));
  }

  std::mt19937_64 rng(seed);
  for (int s = 0; s < samples && !basis.empty(); ++s) {
    std::vector<u64> coeff(basis.size());
    for (auto& c : coeff) c = uniform_mod(rng, prime);
    std::vector<std::vector<u64>> m(d, std::vector<u64>(d, 0));
    for (std::size_t bi = 0; bi < basis.size(); ++bi) {
      if (coeff[bi] == 0) continue;
      for (const auto& [ij, v] : basis_mod[bi]) {
        const u64 add = mulmod(coeff[bi], v, prime);
        m[ij.first][ij.second] = (m[ij.first][ij.second] + add) % prime;
        m[ij.second][ij.first] = (m[ij.second][ij.first] + prime - add) % prime;
      }
    }
    const long r = skew_rank_mod(m, prime);
    if (r > res.max_rank) res.max_rank = r;
    if (r == d) {
      // lift: the sampled residues, read as integers, give a closed form
      // whose determinant is nonzero mod p and hence nonzero exactly
      QVec coords(monomial_count(d, 2));
      for (std::size_t bi = 0; bi < basis.size(); ++bi)
        for (std::size_t j = 0; j < coords.size(); ++j)
          if (basis[bi][j] != 0 && coeff[bi] != 0)
            coords[j] += Rational(static_cast<unsigned long>(coeff[bi])) * basis[bi][j];
      if (exact_skew_rank(n, coords) == d) {
        res.witness = ExtForm::from_coordinates(d, 2, coords);
        res.certificate.max_rank_seen = d;
        res.max_rank = d;
        return res;
      }
    }
  }
  res.certificate.max_rank_seen = res.max_rank;
  // ((d/2)/p)^samples, exact
  Rational per(static_cast<unsigned long>(d / 2));
  per /= Rational(static_cast<unsigned long>(prime));
  Rational bound = 1;
  for (int i = 0; i < samples; ++i) bound *= per;
  res.certificate.failure_bound = bound;
  return res;
}

Verdict decide(const NilAlgebra& n_in, Target target, const std::optional<ParabolicSpec>& spec,
               const DecideOptions& opts) {
  Verdict v;
  v.target = target;
  const NilAlgebra alg = target == Target::N ? n_in : n_in.extend_trivially();

  if (alg.dim() % 2 != 0) {
    v.outcome = Outcome::OddDim;
    return v;
  }
  // For parabolic inputs the root-combinatorial criterion runs first: it is
  // O(rank^2), while the series bound needs exact central series and the
  // projection stage an exact kernel of the full degree-2 differential. On
  // the large exceptional cases the combinatorial test already decides, and
  // it covers the algebra and its trivial extension alike.
  if (spec && !is_abelian_nilradical(*spec)) {
    if (auto o = central_hwv_check(*spec)) {
      v.outcome = Outcome::Obstructed;
      v.obstruction = std::move(o);
      return v;
    }
  }
  if (auto o = dim_bound_check(alg)) {
    v.outcome = Outcome::Obstructed;
    v.obstruction = std::move(o);
    return v;
  }
  if (!alg.is_abelian()) {
    const int k = lcs_filtration(alg).length();
    for (int t = 1; t <= (k + 1) / 2; ++t) {
      if (auto o = pt_obstruction_trivial_g(alg, t)) {
        v.outcome = Outcome::Obstructed;
        v.obstruction = std::move(o);
        return v;
      }
    }
  }

  const std::string key = opts.case_key.empty()
                              ? "anonymous"
                              : opts.case_key + ":" + to_string(target);
  const std::uint64_t seed = fnv1a64(key) ^ opts.seed_mix;
  MaxRankResult mr = max_closed_rank(alg, opts.samples, opts.prime, seed);
  if (mr.witness) {
    v.outcome = Outcome::Witness;
    v.witness = std::move(mr.witness);
    return v;
  }
  v.outcome = Outcome::ProbablyNo;
  v.certificate = std::move(mr.certificate);
  return v;
}

}  // namespace nilsymp
