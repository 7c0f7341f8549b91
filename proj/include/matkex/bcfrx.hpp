#pragma once

#include <optional>

#include "matkex/mat.hpp"

namespace matkex {

class Rng;

// Running bound on entry growth across a protocol run over Z: lambda is
// 2*max|entry| + 1 over every matrix absorbed, so every entry lies
// strictly inside (-lambda/2, lambda/2).
class LambdaBound {
 public:
  void absorb(const Mat& m) {
    if (m.ring().is_field()) return;
    BigInt a = m.max_abs();
    if (max_abs_ < a) max_abs_ = a;
  }
  BigInt lambda() const { return max_abs_ + max_abs_ + 1; }
  const BigInt& max_abs() const { return max_abs_; }

 private:
  BigInt max_abs_ = 0;
};

// Long-term key: M in SL_4 plus its inverse, defining the commuting
// conjugate subgroups UP^M and LOW^M of the upper/lower SL_2 embeddings.
struct BcfrxKey {
  Mat m;
  Mat m_inv;
};

enum class Subgroup { alice, bob };  // conjugated upper / lower block

struct BcfrxTruth {
  Mat session_key;
  Mat a, a2, b, b2;  // Alice's and Bob's one-time pads
};

// What the eavesdropper sees: the three passes C, D, E. Ground truth is
// carried only when the simulator runs in test mode.
struct BcfrxTranscript {
  Mat c, d, e;
  std::optional<BcfrxTruth> truth;

  BcfrxTranscript reduced(const std::shared_ptr<const PrimeField>& f) const {
    return {c.reduced(f), d.reduced(f), e.reduced(f), std::nullopt};
  }
};

BcfrxKey bcfrx_keygen(const Ring& ring, int word_len, Rng& rng,
                      LambdaBound* lambda = nullptr);

// Random element of the key's Alice-side or Bob-side subgroup: a word in
// the embedded SL_2 block conjugated by the long-term key.
Mat bcfrx_sample_subgroup(const BcfrxKey& key, Subgroup which, int word_len,
                          Rng& rng);

// One protocol run carrying session_key from Bob to Alice. The simulator
// recomputes Alice's final step and checks it returned session_key.
BcfrxTranscript bcfrx_run(const BcfrxKey& key, const Mat& session_key,
                          int word_len, Rng& rng, bool keep_truth,
                          LambdaBound* lambda = nullptr);

}  // namespace matkex
