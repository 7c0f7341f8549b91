#pragma once

#include <string>
#include <vector>

#include "matkex/json_io.hpp"

namespace matkex {

// One experiment = trial_count independent (setup -> honest run -> attack
// -> compare) rounds, each driven by its own seed-derived generator, so
// the report is reproducible regardless of scheduling.
struct ExperimentConfig {
  std::string protocol;  // bcfrx | bcfrx_p | hks | ru
  int trials = 1;
  unsigned prime_bits = 31;
  int word_len = 12;
  int dim = 6;     // m for hks, n for ru
  int exp_n = 5;   // power-sum bound for hks
  int deg = 3;     // secret polynomial degree bound
  int samples = 8;
  int transcripts = 2;
  uint64_t seed = 1;
  int threads = 1;
  GbOptions gb;
  bool verify_basis = false;

  void validate() const;  // throws std::invalid_argument
};

struct TrialRecord {
  int index = 0;
  bool success = false;
  double setup_ms = 0, attack_ms = 0;
  // Attack-specific detail (zero when not applicable).
  size_t candidates = 0;
  bool shape_ok = false;
  unsigned eliminant_degree = 0;
  unsigned max_cofactor_degree = 0;
  bool basis_verified = false;
  int combo_used = -1;
  int primes_used = 0;
  int samples_used = 0;
  std::string lambda;  // measured bound, Z runs only
};

struct TrialSummary {
  ExperimentConfig cfg;
  std::vector<TrialRecord> trials;
  int successes = 0;
  double total_ms = 0;
};

TrialSummary run_experiment(const ExperimentConfig& cfg);

Json summary_to_json(const TrialSummary& s);

// Schema and ring-consistency diagnostics for an instance/transcript file;
// empty result means the file is well-formed. Never mutates the file.
std::vector<std::string> verify_transcript_file(const std::string& path);

}  // namespace matkex
