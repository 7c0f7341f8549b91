// Command-line driver: generate instances, run experiments, attack
// transcript files, and validate artifacts.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "matkex/experiment.hpp"
#include "matkex/rng.hpp"

using namespace matkex;

namespace {

constexpr int kExitSuccess = 0;
constexpr int kExitAttackFailed = 1;
constexpr int kExitUsage = 2;

void write_json(const Json& j, const std::string& path) {
  if (path.empty()) return;
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(2) << "\n";
}

int cmd_gen(const ExperimentConfig& cfg, bool truth, const std::string& out) {
  Rng rng(cfg.seed);
  Json j;
  if (cfg.protocol == "bcfrx" || cfg.protocol == "bcfrx_p") {
    Ring ring = Ring::integers();
    if (cfg.protocol == "bcfrx_p")
      ring = Ring::mod(
          std::make_shared<const PrimeField>(gen_prime(cfg.prime_bits, rng)));
    BcfrxKey key = bcfrx_keygen(ring, cfg.word_len, rng);
    BcfrxInstanceFile file{cfg.protocol, cfg.word_len, cfg.seed, {}, {}};
    for (int t = 0; t < cfg.transcripts; ++t) {
      Mat session = sample_sl(4, ring, cfg.word_len, rng);
      file.transcripts.push_back(
          bcfrx_run(key, session, cfg.word_len, rng, truth));
    }
    if (truth) file.truth_key_m = key.m;
    j = bcfrx_file_to_json(file);
  } else if (cfg.protocol == "hks") {
    auto field =
        std::make_shared<const PrimeField>(gen_prime(cfg.prime_bits, rng));
    j = hks_to_json(hks_setup(field, cfg.dim, cfg.exp_n, cfg.deg, rng, truth),
                    cfg.seed);
  } else {
    auto field =
        std::make_shared<const PrimeField>(gen_prime(cfg.prime_bits, rng));
    j = ru_to_json(ru_setup(field, cfg.dim, cfg.deg, rng, truth), cfg.seed);
  }
  if (out.empty())
    std::cout << j.dump(2) << "\n";
  else
    write_json(j, out);
  return kExitSuccess;
}

int cmd_attack(const std::string& in, const std::string& out,
               const ExperimentConfig& cfg) {
  std::ifstream f(in);
  if (!f) {
    std::cerr << "cannot open " << in << "\n";
    return kExitUsage;
  }
  Json j;
  f >> j;
  std::string proto = j.at("protocol").get<std::string>();

  BcfrxAttackOptions opt;
  opt.gb = cfg.gb;

  Json report;
  bool success = false;

  if (proto == "bcfrx") {
    BcfrxInstanceFile file = bcfrx_file_from_json(j);
    IntegerAttackReport rep = attack_bcfrx_integer(file.transcripts,
                                                   cfg.prime_bits, cfg.seed,
                                                   opt);
    success = rep.success;
    report = integer_report_to_json(rep);
  } else if (proto == "bcfrx_p") {
    BcfrxInstanceFile file = bcfrx_file_from_json(j);
    std::vector<BcfrxTranscript> extras(file.transcripts.begin() + 1,
                                        file.transcripts.end());
    ModPAttackResult res =
        attack_bcfrx_mod_p(file.transcripts.front(), extras, opt);
    success = res.success;
    report = modp_report_to_json(
        res, file.transcripts.front().c.ring().field().p().str());
  } else if (proto == "hks") {
    HksInstance inst = hks_from_json(j);
    inst.truth.reset();
    Rng eve(cfg.seed);
    auto sampler = [&inst, &eve]() {
      return hks_sample_public_image(inst, eve);
    };
    HksAttackResult res = attack_hks(inst, sampler, cfg.samples);
    success = res.success;
    report = hks_report_to_json(res);
  } else if (proto == "ru") {
    RuInstance inst = ru_from_json(j);
    inst.truth.reset();
    Vec key = attack_ru(inst);
    success = true;
    report = ru_report_to_json(key);
  } else {
    std::cerr << "unknown protocol in " << in << "\n";
    return kExitUsage;
  }

  std::cout << report.dump(2) << "\n";
  write_json(report, out);
  return success ? kExitSuccess : kExitAttackFailed;
}

int cmd_run(const ExperimentConfig& cfg, const std::string& out,
            bool canonical, bool bench) {
  TrialSummary sum = run_experiment(cfg);
  Json j = summary_to_json(sum);
  if (canonical) j = canonicalize_report(j);
  write_json(j, out);

  std::cout << cfg.protocol << ": " << sum.successes << "/" << cfg.trials
            << " trials succeeded (" << sum.total_ms << " ms total)\n";
  if (bench) {
    double setup = 0, attack = 0;
    for (const auto& r : sum.trials) {
      setup += r.setup_ms;
      attack += r.attack_ms;
    }
    std::cout << "  setup:  " << setup / cfg.trials << " ms/trial\n"
              << "  attack: " << attack / cfg.trials << " ms/trial\n";
    if (cfg.protocol == "bcfrx_p") {
      size_t cand = 0;
      int shape = 0;
      for (const auto& r : sum.trials) {
        cand += r.candidates;
        shape += r.shape_ok ? 1 : 0;
      }
      std::cout << "  shape position: " << shape << "/" << cfg.trials
                << ", mean candidates: "
                << double(cand) / double(cfg.trials) << "\n";
    }
  }
  return sum.successes == cfg.trials ? kExitSuccess : kExitAttackFailed;
}

int cmd_verify(const std::string& in) {
  auto diags = verify_transcript_file(in);
  if (diags.empty()) {
    std::cout << in << ": ok\n";
    return kExitSuccess;
  }
  for (const auto& d : diags) std::cout << in << ": " << d << "\n";
  return kExitAttackFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cryptanalysis workbench for matrix-based key establishment"};
  app.require_subcommand(1);

  ExperimentConfig cfg;
  bool truth = false, canonical = false;
  std::string in, out;

  auto add_common = [&](CLI::App* c, bool with_protocol) {
    if (with_protocol)
      c->add_option("--protocol", cfg.protocol,
                    "bcfrx | bcfrx_p | hks | ru")
          ->required();
    c->add_option("--seed", cfg.seed, "master seed")->required();
    c->add_option("--prime-bits", cfg.prime_bits, "prime size in bits");
    c->add_option("--word-len", cfg.word_len, "transvection word length");
    c->add_option("--dim", cfg.dim, "matrix dimension (hks m / ru n)");
    c->add_option("--exp-n", cfg.exp_n, "power-sum exponent bound (hks)");
    c->add_option("--deg", cfg.deg, "secret polynomial degree bound");
    c->add_option("--samples", cfg.samples, "adversary sampler draws (hks)");
    c->add_option("--transcripts", cfg.transcripts,
                  "protocol runs per instance (bcfrx)");
    c->add_option("--budget-pairs", cfg.gb.max_pairs,
                  "Groebner pair budget");
    c->add_option("--budget-steps", cfg.gb.max_steps,
                  "Groebner reduction budget");
  };

  CLI::App* gen = app.add_subcommand("gen", "generate an instance file");
  add_common(gen, true);
  gen->add_flag("--truth", truth, "embed ground truth (test mode)");
  gen->add_option("--out", out, "output path (default: stdout)");

  CLI::App* run = app.add_subcommand("run", "run seeded experiment trials");
  add_common(run, true);
  run->add_option("--trials", cfg.trials, "trial count")->required();
  run->add_option("--threads", cfg.threads, "worker threads");
  run->add_flag("--verify-basis", cfg.verify_basis,
                "certify every Groebner basis");
  run->add_flag("--canonical", canonical, "zero timing fields in the report");
  run->add_option("--out", out, "report path");

  CLI::App* bench = app.add_subcommand("bench", "run trials, print timings");
  add_common(bench, true);
  bench->add_option("--trials", cfg.trials, "trial count")->required();
  bench->add_option("--threads", cfg.threads, "worker threads");
  bench->add_option("--out", out, "report path");

  CLI::App* attack = app.add_subcommand("attack", "attack an instance file");
  add_common(attack, false);
  attack->add_option("--in", in, "instance file")->required();
  attack->add_option("--out", out, "report path");

  CLI::App* verify = app.add_subcommand("verify", "validate an instance file");
  verify->add_option("--in", in, "instance file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (gen->parsed()) {
      cfg.trials = 1;
      cfg.validate();
      return cmd_gen(cfg, truth, out);
    }
    if (run->parsed()) {
      cfg.validate();
      return cmd_run(cfg, out, canonical, false);
    }
    if (bench->parsed()) {
      cfg.validate();
      return cmd_run(cfg, out, canonical, true);
    }
    if (attack->parsed()) return cmd_attack(in, out, cfg);
    if (verify->parsed()) return cmd_verify(in);
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitAttackFailed;
  }
  return kExitUsage;
}
