#include "matkex/json_io.hpp"

#include <stdexcept>

namespace matkex {

namespace {

Json truth_session_to_json(const BcfrxTruth& tr) {
  return Json{{"k", mat_to_json(tr.session_key)},
              {"a", mat_to_json(tr.a)},
              {"a2", mat_to_json(tr.a2)},
              {"b", mat_to_json(tr.b)},
              {"b2", mat_to_json(tr.b2)}};
}

BcfrxTruth truth_session_from_json(const Json& j) {
  return BcfrxTruth{mat_from_json(j.at("k")), mat_from_json(j.at("a")),
                    mat_from_json(j.at("a2")), mat_from_json(j.at("b")),
                    mat_from_json(j.at("b2"))};
}

}  // namespace

Json ring_to_json(const Ring& ring) {
  if (ring.is_field()) return Json{{"type", "fp"}, {"p", ring.field().p().str()}};
  return Json{{"type", "int"}};
}

Ring ring_from_json(const Json& j) {
  std::string type = j.at("type").get<std::string>();
  if (type == "int") return Ring::integers();
  if (type == "fp") {
    BigInt p(j.at("p").get<std::string>());
    return Ring::mod(std::make_shared<const PrimeField>(std::move(p)));
  }
  throw std::invalid_argument("ring_from_json: unknown ring type " + type);
}

Json mat_to_json(const Mat& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
    rows.push_back(std::move(row));
  }
  return Json{{"ring", ring_to_json(m.ring())},
              {"rows", m.rows()},
              {"cols", m.cols()},
              {"entries", std::move(rows)}};
}

Mat mat_from_json(const Json& j) {
  Ring ring = ring_from_json(j.at("ring"));
  int rows = j.at("rows").get<int>();
  int cols = j.at("cols").get<int>();
  const Json& e = j.at("entries");
  if (!e.is_array() || e.size() != static_cast<size_t>(rows))
    throw std::invalid_argument("mat_from_json: row count mismatch");
  Mat m(ring, rows, cols);
  for (int i = 0; i < rows; ++i) {
    const Json& row = e.at(i);
    if (!row.is_array() || row.size() != static_cast<size_t>(cols))
      throw std::invalid_argument("mat_from_json: column count mismatch");
    for (int k = 0; k < cols; ++k) {
      BigInt v(row.at(k).get<std::string>());
      if (ring.is_field() && (v.sign() < 0 || !(v < ring.field().p())))
        throw std::invalid_argument("mat_from_json: entry outside [0, p)");
      m.set(i, k, v);
    }
  }
  return m;
}

Json vec_to_json(const Vec& v) {
  Json entries = Json::array();
  for (int i = 0; i < v.size(); ++i) entries.push_back(v.at(i).str());
  return Json{{"ring", ring_to_json(v.ring())}, {"entries", std::move(entries)}};
}

Vec vec_from_json(const Json& j) {
  Ring ring = ring_from_json(j.at("ring"));
  const Json& e = j.at("entries");
  Vec v(ring, static_cast<int>(e.size()));
  for (int i = 0; i < v.size(); ++i) {
    BigInt x(e.at(i).get<std::string>());
    if (ring.is_field() && (x.sign() < 0 || !(x < ring.field().p())))
      throw std::invalid_argument("vec_from_json: entry outside [0, p)");
    v.set(i, x);
  }
  return v;
}

Json poly_to_json(const MPoly& p) {
  const PolyCtx& ctx = *p.ctx();
  Json terms = Json::array();
  for (const Term& t : p.terms()) {
    Json exps = Json::array();
    for (int i = 0; i < ctx.nvars; ++i) exps.push_back(int(t.m.e[i]));
    terms.push_back(Json::array(
        {std::to_string(ctx.fp.to_u64(t.c)), std::move(exps)}));
  }
  return Json{{"modulus", std::to_string(ctx.fp.p())},
              {"order", ctx.order == Order::lex ? "lex" : "degrevlex"},
              {"nvars", ctx.nvars},
              {"terms", std::move(terms)}};
}

MPoly poly_from_json(const Json& j, Order order) {
  uint64_t p = std::stoull(j.at("modulus").get<std::string>());
  std::string ord = j.at("order").get<std::string>();
  Order file_order = ord == "lex" ? Order::lex : Order::degrevlex;
  if (file_order != order)
    throw std::invalid_argument("poly_from_json: order mismatch");
  int nvars = j.at("nvars").get<int>();
  PolyCtxPtr ctx = make_poly_ctx(p, order, nvars);
  MPoly out(ctx);
  for (const Json& t : j.at("terms")) {
    uint64_t c = std::stoull(t.at(0).get<std::string>());
    Monomial m;
    const Json& exps = t.at(1);
    for (int i = 0; i < nvars; ++i) {
      m.e[i] = static_cast<uint8_t>(exps.at(i).get<int>());
      m.deg += m.e[i];
    }
    out.add_term(c, m);
  }
  out.finish();
  return out;
}

Json bcfrx_file_to_json(const BcfrxInstanceFile& f) {
  Json pub_transcripts = Json::array();
  Json truth_sessions = Json::array();
  bool any_truth = f.truth_key_m.has_value();
  for (const auto& t : f.transcripts) {
    pub_transcripts.push_back(Json{{"c", mat_to_json(t.c)},
                                   {"d", mat_to_json(t.d)},
                                   {"e", mat_to_json(t.e)}});
    if (t.truth) {
      truth_sessions.push_back(truth_session_to_json(*t.truth));
      any_truth = true;
    }
  }
  Json j{{"protocol", f.protocol},
         {"params",
          Json{{"word_len", f.word_len},
               {"seed", std::to_string(f.seed)},
               {"transcripts", f.transcripts.size()}}},
         {"public", Json{{"transcripts", std::move(pub_transcripts)}}}};
  if (any_truth) {
    Json truth;
    if (f.truth_key_m) truth["key_m"] = mat_to_json(*f.truth_key_m);
    if (!truth_sessions.empty()) truth["sessions"] = std::move(truth_sessions);
    j["truth"] = std::move(truth);
  }
  return j;
}

BcfrxInstanceFile bcfrx_file_from_json(const Json& j) {
  BcfrxInstanceFile f;
  f.protocol = j.at("protocol").get<std::string>();
  if (f.protocol != "bcfrx" && f.protocol != "bcfrx_p")
    throw std::invalid_argument("bcfrx_file_from_json: wrong protocol");
  f.word_len = j.at("params").at("word_len").get<int>();
  f.seed = std::stoull(j.at("params").at("seed").get<std::string>());
  const Json& ts = j.at("public").at("transcripts");
  for (const Json& t : ts)
    f.transcripts.push_back(BcfrxTranscript{mat_from_json(t.at("c")),
                                            mat_from_json(t.at("d")),
                                            mat_from_json(t.at("e")),
                                            std::nullopt});
  if (j.contains("truth")) {
    const Json& truth = j.at("truth");
    if (truth.contains("key_m")) f.truth_key_m = mat_from_json(truth.at("key_m"));
    if (truth.contains("sessions")) {
      const Json& ss = truth.at("sessions");
      for (size_t i = 0; i < ss.size() && i < f.transcripts.size(); ++i)
        f.transcripts[i].truth = truth_session_from_json(ss.at(i));
    }
  }
  return f;
}

Json hks_to_json(const HksInstance& inst, uint64_t seed) {
  Json j{{"protocol", "hks"},
         {"params", Json{{"p", inst.field->p().str()},
                         {"m", inst.m},
                         {"n", inst.n},
                         {"deg", inst.deg},
                         {"seed", std::to_string(seed)}}},
         {"public", Json{{"q", mat_to_json(inst.q)},
                         {"b", vec_to_json(inst.b)},
                         {"w_a", vec_to_json(inst.w_a)},
                         {"w_b", vec_to_json(inst.w_b)}}}};
  if (inst.truth)
    j["truth"] = Json{{"j", mat_to_json(inst.truth->j)},
                      {"k", mat_to_json(inst.truth->k)},
                      {"key", vec_to_json(inst.truth->key)}};
  return j;
}

HksInstance hks_from_json(const Json& j) {
  if (j.at("protocol").get<std::string>() != "hks")
    throw std::invalid_argument("hks_from_json: wrong protocol");
  const Json& params = j.at("params");
  auto field = std::make_shared<const PrimeField>(
      BigInt(params.at("p").get<std::string>()));
  const Json& pub = j.at("public");
  HksInstance inst{field,
                   params.at("m").get<int>(),
                   params.at("n").get<int>(),
                   params.at("deg").get<int>(),
                   mat_from_json(pub.at("q")),
                   vec_from_json(pub.at("b")),
                   vec_from_json(pub.at("w_a")),
                   vec_from_json(pub.at("w_b")),
                   std::nullopt};
  if (j.contains("truth")) {
    const Json& truth = j.at("truth");
    inst.truth = HksTruth{mat_from_json(truth.at("j")),
                          mat_from_json(truth.at("k")),
                          vec_from_json(truth.at("key"))};
  }
  return inst;
}

Json ru_to_json(const RuInstance& inst, uint64_t seed) {
  Json j{{"protocol", "ru"},
         {"params", Json{{"q", inst.field->p().str()},
                         {"n", inst.n},
                         {"deg", inst.deg},
                         {"seed", std::to_string(seed)}}},
         {"public", Json{{"c", mat_to_json(inst.c)},
                         {"d_matrix", mat_to_json(inst.d_mat)},
                         {"d", vec_to_json(inst.d)},
                         {"w_a", vec_to_json(inst.w_a)},
                         {"w_b", vec_to_json(inst.w_b)}}}};
  if (inst.truth) {
    Json fa = Json::array(), fb = Json::array();
    for (const auto& c : inst.truth->f_a.coeffs) fa.push_back(c.str());
    for (const auto& c : inst.truth->f_b.coeffs) fb.push_back(c.str());
    j["truth"] = Json{{"f_a_deg", inst.truth->f_a.deg},
                      {"f_a", std::move(fa)},
                      {"f_b_deg", inst.truth->f_b.deg},
                      {"f_b", std::move(fb)},
                      {"key", vec_to_json(inst.truth->key)}};
  }
  return j;
}

RuInstance ru_from_json(const Json& j) {
  if (j.at("protocol").get<std::string>() != "ru")
    throw std::invalid_argument("ru_from_json: wrong protocol");
  const Json& params = j.at("params");
  auto field = std::make_shared<const PrimeField>(
      BigInt(params.at("q").get<std::string>()));
  const Json& pub = j.at("public");
  RuInstance inst{field,
                  params.at("n").get<int>(),
                  params.at("deg").get<int>(),
                  mat_from_json(pub.at("c")),
                  mat_from_json(pub.at("d_matrix")),
                  vec_from_json(pub.at("d")),
                  vec_from_json(pub.at("w_a")),
                  vec_from_json(pub.at("w_b")),
                  std::nullopt};
  if (j.contains("truth")) {
    const Json& truth = j.at("truth");
    BiPoly fa{truth.at("f_a_deg").get<int>(), {}};
    for (const Json& c : truth.at("f_a")) fa.coeffs.emplace_back(c.get<std::string>());
    BiPoly fb{truth.at("f_b_deg").get<int>(), {}};
    for (const Json& c : truth.at("f_b")) fb.coeffs.emplace_back(c.get<std::string>());
    inst.truth = RuTruth{std::move(fa), std::move(fb),
                         vec_from_json(truth.at("key"))};
  }
  return inst;
}

Json integer_report_to_json(const IntegerAttackReport& rep) {
  Json primes = Json::array();
  for (const auto& tr : rep.primes)
    primes.push_back(Json{{"p", tr.prime},
                          {"candidates", tr.candidates},
                          {"ok", tr.attacked_ok},
                          {"attack_ms", tr.millis}});
  Json j{{"protocol", "bcfrx"},
         {"success", rep.success},
         {"primes", std::move(primes)},
         {"primes_used", rep.primes_used},
         {"lambda_estimate", rep.lambda_estimate.str()},
         {"seed", std::to_string(rep.seed)},
         {"prime_gen_ms", rep.gen_millis},
         {"mod_p_ms", rep.modp_millis},
         {"crt_ms", rep.crt_millis}};
  if (rep.key) j["recovered_key"] = mat_to_json(*rep.key);
  return j;
}

Json modp_report_to_json(const ModPAttackResult& res, const std::string& p) {
  Json keys = Json::array();
  for (const Mat& k : res.keys) keys.push_back(mat_to_json(k));
  return Json{{"protocol", "bcfrx_p"},
              {"success", res.success},
              {"p", p},
              {"combo_used", res.combo_used},
              {"candidates", res.candidates.size()},
              {"keys", std::move(keys)},
              {"shape",
               Json{{"ok", res.solve.shape_ok},
                    {"eliminant_degree", res.solve.eliminant_degree},
                    {"max_cofactor_degree", res.solve.max_cofactor_degree}}},
              {"gb",
               Json{{"pairs", res.solve.gb.pairs_popped},
                    {"reductions", res.solve.gb.steps},
                    {"max_degree", res.solve.gb.max_degree},
                    {"basis_size", res.solve.gb.basis_size}}}};
}

Json hks_report_to_json(const HksAttackResult& res) {
  Json j{{"protocol", "hks"},
         {"success", res.success},
         {"samples_used", res.samples_used},
         {"post_check_ok", res.post_check_ok}};
  if (res.key) j["recovered_key"] = vec_to_json(*res.key);
  return j;
}

Json ru_report_to_json(const Vec& key) {
  return Json{{"protocol", "ru"},
              {"success", true},
              {"recovered_key", vec_to_json(key)}};
}

Json canonicalize_report(Json j) {
  if (j.is_object()) {
    for (auto& [key, value] : j.items()) {
      if (value.is_number() && key.size() > 3 &&
          key.compare(key.size() - 3, 3, "_ms") == 0)
        value = 0.0;
      else
        value = canonicalize_report(value);
    }
  } else if (j.is_array()) {
    for (auto& v : j) v = canonicalize_report(v);
  }
  return j;
}

}  // namespace matkex
