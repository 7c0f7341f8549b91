#include "matkex/experiment.hpp"

#include <atomic>
#include <chrono>
#include <fstream>
#include <thread>

#include "matkex/rng.hpp"

namespace matkex {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

BcfrxAttackOptions attack_options(const ExperimentConfig& cfg) {
  BcfrxAttackOptions opt;
  opt.gb = cfg.gb;
  opt.verify_basis = cfg.verify_basis;
  return opt;
}

TrialRecord trial_bcfrx_integer(const ExperimentConfig& cfg, int index) {
  TrialRecord rec;
  rec.index = index;
  Rng rng = Rng::derive(cfg.seed, index);

  auto t0 = Clock::now();
  LambdaBound lambda;
  Ring z = Ring::integers();
  BcfrxKey key = bcfrx_keygen(z, cfg.word_len, rng, &lambda);
  std::vector<BcfrxTranscript> transcripts;
  for (int t = 0; t < cfg.transcripts; ++t) {
    Mat session = sample_sl(4, z, cfg.word_len, rng);
    transcripts.push_back(
        bcfrx_run(key, session, cfg.word_len, rng, true, &lambda));
  }
  rec.setup_ms = ms_since(t0);
  rec.lambda = lambda.lambda().str();

  std::vector<BcfrxTranscript> public_view;
  for (const auto& t : transcripts)
    public_view.push_back(BcfrxTranscript{t.c, t.d, t.e, std::nullopt});

  t0 = Clock::now();
  IntegerAttackReport rep = attack_bcfrx_integer(public_view, cfg.prime_bits,
                                                 rng.u64(), attack_options(cfg));
  rec.attack_ms = ms_since(t0);
  rec.primes_used = rep.primes_used;
  rec.success = rep.success && rep.key &&
                *rep.key == transcripts.front().truth->session_key;
  return rec;
}

TrialRecord trial_bcfrx_mod_p(const ExperimentConfig& cfg, int index) {
  TrialRecord rec;
  rec.index = index;
  Rng rng = Rng::derive(cfg.seed, index);

  auto t0 = Clock::now();
  auto field =
      std::make_shared<const PrimeField>(gen_prime(cfg.prime_bits, rng));
  Ring ring = Ring::mod(field);
  BcfrxKey key = bcfrx_keygen(ring, cfg.word_len, rng);
  std::vector<BcfrxTranscript> transcripts;
  for (int t = 0; t < cfg.transcripts; ++t) {
    Mat session = sample_sl(4, ring, cfg.word_len, rng);
    transcripts.push_back(bcfrx_run(key, session, cfg.word_len, rng, true));
  }
  rec.setup_ms = ms_since(t0);

  BcfrxTranscript target{transcripts[0].c, transcripts[0].d, transcripts[0].e,
                         std::nullopt};
  std::vector<BcfrxTranscript> extras;
  for (size_t i = 1; i < transcripts.size(); ++i)
    extras.push_back(BcfrxTranscript{transcripts[i].c, transcripts[i].d,
                                     transcripts[i].e, std::nullopt});

  t0 = Clock::now();
  ModPAttackResult res = attack_bcfrx_mod_p(target, extras, attack_options(cfg));
  rec.attack_ms = ms_since(t0);

  rec.candidates = res.candidates.size();
  rec.shape_ok = res.solve.shape_ok;
  rec.eliminant_degree = res.solve.eliminant_degree;
  rec.max_cofactor_degree = res.solve.max_cofactor_degree;
  rec.basis_verified = res.solve.basis_verified;
  rec.combo_used = res.combo_used;

  const Mat& truth = transcripts.front().truth->session_key;
  for (const Mat& k : res.keys) rec.success = rec.success || k == truth;
  return rec;
}

TrialRecord trial_hks(const ExperimentConfig& cfg, int index) {
  TrialRecord rec;
  rec.index = index;
  Rng rng = Rng::derive(cfg.seed, index);

  auto t0 = Clock::now();
  auto field =
      std::make_shared<const PrimeField>(gen_prime(cfg.prime_bits, rng));
  HksInstance inst =
      hks_setup(field, cfg.dim, cfg.exp_n, cfg.deg, rng, true);
  rec.setup_ms = ms_since(t0);

  HksInstance public_view = inst;
  public_view.truth.reset();
  Rng eve = rng.fork(0xe5e);
  auto sampler = [&public_view, &eve]() {
    return hks_sample_public_image(public_view, eve);
  };

  t0 = Clock::now();
  HksAttackResult res = attack_hks(public_view, sampler, cfg.samples);
  rec.attack_ms = ms_since(t0);
  rec.samples_used = res.samples_used;
  rec.success = res.success && res.key && *res.key == inst.truth->key;
  return rec;
}

TrialRecord trial_ru(const ExperimentConfig& cfg, int index) {
  TrialRecord rec;
  rec.index = index;
  Rng rng = Rng::derive(cfg.seed, index);

  auto t0 = Clock::now();
  auto field =
      std::make_shared<const PrimeField>(gen_prime(cfg.prime_bits, rng));
  RuInstance inst = ru_setup(field, cfg.dim, cfg.deg, rng, true);
  rec.setup_ms = ms_since(t0);

  RuInstance public_view = inst;
  public_view.truth.reset();

  t0 = Clock::now();
  Vec key = attack_ru(public_view);
  rec.attack_ms = ms_since(t0);
  rec.success = key == inst.truth->key;
  return rec;
}

TrialRecord run_trial(const ExperimentConfig& cfg, int index) {
  if (cfg.protocol == "bcfrx") return trial_bcfrx_integer(cfg, index);
  if (cfg.protocol == "bcfrx_p") return trial_bcfrx_mod_p(cfg, index);
  if (cfg.protocol == "hks") return trial_hks(cfg, index);
  return trial_ru(cfg, index);
}

}  // namespace

void ExperimentConfig::validate() const {
  auto bad = [](const std::string& what) {
    throw std::invalid_argument("config: " + what);
  };
  if (protocol != "bcfrx" && protocol != "bcfrx_p" && protocol != "hks" &&
      protocol != "ru")
    bad("unknown protocol '" + protocol + "'");
  if (trials < 1) bad("trials must be positive");
  if (prime_bits < 3 || prime_bits > 64) bad("prime_bits must be in [3, 64]");
  if (word_len < 0) bad("word_len must be >= 0");
  if (dim < 2) bad("dim must be >= 2");
  if (exp_n < 2) bad("exp_n must be >= 2");
  if (deg < 1) bad("deg must be >= 1");
  if (samples < 1) bad("samples must be >= 1");
  if (transcripts < 1) bad("transcripts must be >= 1");
  if (threads < 1) bad("threads must be >= 1");
}

TrialSummary run_experiment(const ExperimentConfig& cfg) {
  cfg.validate();
  TrialSummary sum;
  sum.cfg = cfg;
  sum.trials.resize(cfg.trials);

  auto t0 = Clock::now();
  if (cfg.threads == 1) {
    for (int i = 0; i < cfg.trials; ++i) sum.trials[i] = run_trial(cfg, i);
  } else {
    std::atomic<int> next{0};
    auto worker = [&] {
      for (;;) {
        int i = next.fetch_add(1);
        if (i >= cfg.trials) return;
        sum.trials[i] = run_trial(cfg, i);
      }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < cfg.threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  sum.total_ms = ms_since(t0);
  for (const auto& r : sum.trials) sum.successes += r.success ? 1 : 0;
  return sum;
}

Json summary_to_json(const TrialSummary& s) {
  Json trials = Json::array();
  for (const auto& r : s.trials) {
    Json t{{"index", r.index},
           {"success", r.success},
           {"setup_ms", r.setup_ms},
           {"attack_ms", r.attack_ms}};
    if (s.cfg.protocol == "bcfrx") {
      t["primes_used"] = r.primes_used;
      t["lambda"] = r.lambda;
    } else if (s.cfg.protocol == "bcfrx_p") {
      t["candidates"] = r.candidates;
      t["combo_used"] = r.combo_used;
      t["shape_ok"] = r.shape_ok;
      t["eliminant_degree"] = r.eliminant_degree;
      t["max_cofactor_degree"] = r.max_cofactor_degree;
      if (s.cfg.verify_basis) t["basis_verified"] = r.basis_verified;
    } else if (s.cfg.protocol == "hks") {
      t["samples_used"] = r.samples_used;
    }
    trials.push_back(std::move(t));
  }
  return Json{
      {"config",
       Json{{"protocol", s.cfg.protocol},
            {"trials", s.cfg.trials},
            {"prime_bits", s.cfg.prime_bits},
            {"word_len", s.cfg.word_len},
            {"dim", s.cfg.dim},
            {"exp_n", s.cfg.exp_n},
            {"deg", s.cfg.deg},
            {"samples", s.cfg.samples},
            {"transcripts", s.cfg.transcripts},
            {"seed", std::to_string(s.cfg.seed)},
            {"threads", s.cfg.threads},
            {"budget_pairs", s.cfg.gb.max_pairs},
            {"budget_steps", s.cfg.gb.max_steps}}},
      {"trials", std::move(trials)},
      {"summary", Json{{"trials", s.cfg.trials},
                       {"successes", s.successes},
                       {"success_rate",
                        double(s.successes) / double(s.cfg.trials)},
                       {"total_ms", s.total_ms}}}};
}

namespace {

void check_matrix(const Json& j, const std::string& label, int expect_n,
                  const Json* expect_ring, std::vector<std::string>& out) {
  try {
    Mat m = mat_from_json(j);
    if (expect_n > 0 && (m.rows() != expect_n || m.cols() != expect_n)) {
      out.push_back(label + ": expected " + std::to_string(expect_n) + "x" +
                    std::to_string(expect_n) + " matrix");
      return;
    }
    if (expect_ring && !(j.at("ring") == *expect_ring)) {
      out.push_back(label + ": ring differs from the rest of the file");
      return;
    }
    if (m.ring().is_field()) {
      if (m.det().is_zero()) out.push_back(label + ": matrix is singular");
    } else {
      BigInt d = m.det();
      if (!(d == BigInt(1) || d == BigInt(-1)))
        out.push_back(label + ": determinant is not a unit over Z");
    }
  } catch (const std::exception& e) {
    out.push_back(label + ": " + e.what());
  }
}

}  // namespace

std::vector<std::string> verify_transcript_file(const std::string& path) {
  std::vector<std::string> out;
  std::ifstream in(path);
  if (!in) return {"cannot open file: " + path};
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    return {std::string("JSON parse error: ") + e.what()};
  }

  if (!j.contains("protocol") || !j.at("protocol").is_string())
    return {"missing required field: protocol"};
  std::string proto = j.at("protocol").get<std::string>();

  if (!j.contains("params")) out.push_back("missing required field: params");
  if (!j.contains("public")) out.push_back("missing required field: public");
  if (!out.empty()) return out;

  if (proto == "bcfrx" || proto == "bcfrx_p") {
    const Json& pub = j.at("public");
    if (!pub.contains("transcripts") || !pub.at("transcripts").is_array() ||
        pub.at("transcripts").empty()) {
      out.push_back("public.transcripts: need a non-empty array");
      return out;
    }
    const Json* ring = nullptr;
    size_t idx = 0;
    for (const Json& t : pub.at("transcripts")) {
      std::string base = "transcripts[" + std::to_string(idx++) + "]";
      for (const char* part : {"c", "d", "e"}) {
        if (!t.contains(part)) {
          out.push_back(base + ": missing matrix " + part);
          continue;
        }
        if (!ring && t.at(part).contains("ring")) ring = &t.at(part).at("ring");
        check_matrix(t.at(part), base + "." + part, 4, ring, out);
      }
    }
    if (ring) {
      bool is_int = ring->at("type") == "int";
      if (proto == "bcfrx" && !is_int)
        out.push_back("protocol bcfrx requires integer transcripts");
      if (proto == "bcfrx_p" && is_int)
        out.push_back("protocol bcfrx_p requires mod-p transcripts");
    }
  } else if (proto == "hks") {
    try {
      HksInstance inst = hks_from_json(j);
      if (inst.b.size() != inst.m || inst.w_a.size() != inst.m ||
          inst.w_b.size() != inst.m)
        out.push_back("hks: vector lengths disagree with m");
      if (inst.q.rows() != inst.m || inst.q.cols() != inst.m)
        out.push_back("hks: Q is not m x m");
    } catch (const std::exception& e) {
      out.push_back(std::string("hks: ") + e.what());
    }
  } else if (proto == "ru") {
    try {
      RuInstance inst = ru_from_json(j);
      if (inst.d.size() != inst.n || inst.w_a.size() != inst.n ||
          inst.w_b.size() != inst.n)
        out.push_back("ru: vector lengths disagree with n");
      if (inst.c.det().is_zero() || inst.d_mat.det().is_zero())
        out.push_back("ru: public matrices must be invertible");
      if (!commutes(inst.c, inst.d_mat))
        out.push_back("ru: public matrices do not commute");
    } catch (const std::exception& e) {
      out.push_back(std::string("ru: ") + e.what());
    }
  } else {
    out.push_back("unknown protocol: " + proto);
  }
  return out;
}

}  // namespace matkex
