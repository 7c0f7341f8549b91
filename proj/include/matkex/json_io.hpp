#pragma once

#include <json.hpp>

#include "matkex/bcfrx.hpp"
#include "matkex/bcfrx_attack.hpp"
#include "matkex/hks.hpp"
#include "matkex/linear_attacks.hpp"
#include "matkex/ru.hpp"

namespace matkex {

using Json = nlohmann::ordered_json;

// All integers cross the wire as decimal strings; matrices are row-major
// arrays of rows with an explicit ring descriptor.
Json ring_to_json(const Ring& ring);
Ring ring_from_json(const Json& j);

Json mat_to_json(const Mat& m);
Mat mat_from_json(const Json& j);

Json vec_to_json(const Vec& v);
Vec vec_from_json(const Json& j);

Json poly_to_json(const MPoly& p);
MPoly poly_from_json(const Json& j, Order order);

// Instance files: {"protocol": ..., "params": {...}, "public": {...}}
// plus an optional "truth" section written only in test mode.
struct BcfrxInstanceFile {
  std::string protocol;  // "bcfrx" or "bcfrx_p"
  int word_len = 0;
  uint64_t seed = 0;
  std::vector<BcfrxTranscript> transcripts;
  std::optional<Mat> truth_key_m;
};

Json bcfrx_file_to_json(const BcfrxInstanceFile& f);
BcfrxInstanceFile bcfrx_file_from_json(const Json& j);

Json hks_to_json(const HksInstance& inst, uint64_t seed);
HksInstance hks_from_json(const Json& j);

Json ru_to_json(const RuInstance& inst, uint64_t seed);
RuInstance ru_from_json(const Json& j);

Json integer_report_to_json(const IntegerAttackReport& rep);
Json modp_report_to_json(const ModPAttackResult& res, const std::string& p);
Json hks_report_to_json(const HksAttackResult& res);
Json ru_report_to_json(const Vec& key);

// Zeroes every key ending in "_ms" recursively, giving the canonical form
// used by determinism comparisons.
Json canonicalize_report(Json j);

}  // namespace matkex
