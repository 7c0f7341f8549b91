#pragma once

#include <functional>
#include <optional>

#include "matkex/hks.hpp"
#include "matkex/ru.hpp"

namespace matkex {

// Passive recovery of the HKS shared key: solve the linear conditions
// X*b = w_A and X*F = F*X for sampler images F, then emit X*w_B. The
// sampler stands in for running the public key-generation algorithm on
// fresh coins; s images seed the system and three held-out images gate
// the answer, doubling s (up to max_samples) on a failed gate.
struct HksAttackResult {
  bool success = false;
  std::optional<Vec> key;
  int samples_used = 0;
  bool post_check_ok = false;
};

HksAttackResult attack_hks(const HksInstance& inst,
                           const std::function<Mat()>& sampler, int s,
                           int max_samples = 128);

// Passive recovery of the RU shared key: any X with XC = CX, XD = DX and
// Xd = w_A yields the key as X*w_B. Such an X always exists for genuine
// instances, so this returns unconditionally.
Vec attack_ru(const RuInstance& inst);

}  // namespace matkex
