#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "matkex/bcfrx.hpp"
#include "matkex/buchberger.hpp"
#include "matkex/shape.hpp"

namespace matkex {

// One guess for the diagonal blocks of the restricted-form equivalent key:
// both drawn from the canonical 2x2 row-echelon forms. The search tries
// the identity pair first, then the rest of the 3x3 grid over
// {I, diag(1,0), 0}, then the combos involving [[0,1],[0,0]].
struct RestrictedCombo {
  int id = 0;
  // 2x2 patterns as 0/1 entries, row-major.
  std::array<int, 4> n11{}, n22{};
};

std::vector<RestrictedCombo> restricted_combos(bool extended);

// The quadratic system a restricted-form N and its inverse must satisfy:
// variables x1..x8 are the off-diagonal entries of N (row-major), x9..x24
// the full inverse (row-major). Equations, in order: the four 22-block
// matches of N*D*N^-1 against N*C*N^-1, the four 11-block matches against
// N*E*N^-1, the sixteen entries of N*N^-1 - I, then eight more per extra
// transcript.
struct PolySystem {
  PolyCtxPtr ctx;
  std::shared_ptr<const PrimeField> field;
  std::vector<MPoly> gens;
};

PolySystem build_system(const BcfrxTranscript& t, const RestrictedCombo& combo,
                        const std::vector<BcfrxTranscript>& extras);

struct CandidateN {
  Mat n, n_inv;
  int combo_id = 0;
  uint64_t root = 0;  // the eliminant root this candidate came from
};

struct SolveStats {
  GbStatus gb_status = GbStatus::ok;
  bool shape_ok = false;
  unsigned eliminant_degree = 0;
  unsigned max_cofactor_degree = 0;
  bool basis_verified = false;  // only when verification was requested
  GbStats gb;
};

struct BcfrxAttackOptions {
  GbOptions gb;
  bool verify_basis = false;    // S-polynomial + generator certificate
  bool extended_combos = true;  // widen the combo grid past the 3x3 set
  int max_primes = 64;          // integer attack prime budget
  size_t max_chains = 4096;     // cross-prime candidate matching cap
};

// Groebner + shape-position enumeration of every restricted-form N
// consistent with the system; each candidate's inverse is verified.
std::vector<CandidateN> solve_for_n(const PolySystem& sys,
                                    const RestrictedCombo& combo,
                                    const BcfrxAttackOptions& opt,
                                    SolveStats* stats = nullptr);

// Session-key recovery from one transcript given an equivalent key. The
// 12 and 21 blocks come from one-sided linear solves, so a noninvertible
// session-key block still recovers. nullopt when the solves are
// inconsistent (candidate rejected).
std::optional<Mat> recover_key_mod_p(const BcfrxTranscript& t,
                                     const CandidateN& cand);

struct ModPAttackResult {
  bool success = false;
  std::vector<Mat> keys;  // deduplicated candidate session keys for t
  std::vector<CandidateN> candidates;
  int combo_used = -1;
  SolveStats solve;
};

// Full per-prime pipeline: combo search, system build, solve, recover,
// dedup. Transcripts must share the long-term key and the prime.
ModPAttackResult attack_bcfrx_mod_p(const BcfrxTranscript& t,
                                    const std::vector<BcfrxTranscript>& extras,
                                    const BcfrxAttackOptions& opt = {});

struct PrimeTrace {
  std::string prime;
  size_t candidates = 0;
  bool attacked_ok = false;
  double millis = 0;
};

struct IntegerAttackReport {
  bool success = false;
  std::optional<Mat> key;  // over Z when successful
  std::vector<PrimeTrace> primes;
  int primes_used = 0;
  BigInt lambda_estimate = 0;  // 2*max|entry| + 1 of the recovered key
  uint64_t seed = 0;
  double gen_millis = 0, modp_millis = 0, crt_millis = 0;
};

// Stage-1 assembly: run the mod-p attack over fresh primes of the given
// size and lift entrywise by centered CRT until the lift survives a new
// prime unchanged with determinant one.
IntegerAttackReport attack_bcfrx_integer(
    const std::vector<BcfrxTranscript>& transcripts, unsigned prime_bits,
    uint64_t seed, const BcfrxAttackOptions& opt = {});

}  // namespace matkex
