#include "matkex/bcfrx.hpp"

#include <stdexcept>

#include "matkex/rng.hpp"

namespace matkex {

BcfrxKey bcfrx_keygen(const Ring& ring, int word_len, Rng& rng,
                      LambdaBound* lambda) {
  Mat m = sample_sl(4, ring, word_len, rng);
  Mat m_inv = m.inverse();
  if (lambda) lambda->absorb(m);
  return {std::move(m), std::move(m_inv)};
}

Mat bcfrx_sample_subgroup(const BcfrxKey& key, Subgroup which, int word_len,
                          Rng& rng) {
  const Ring& ring = key.m.ring();
  Mat s2 = sample_sl(2, ring, word_len, rng);
  Mat u = Mat::identity(ring, 4);
  u.set_block(which == Subgroup::alice ? 0 : 2,
              which == Subgroup::alice ? 0 : 2, s2);
  return key.m_inv * u * key.m;
}

BcfrxTranscript bcfrx_run(const BcfrxKey& key, const Mat& session_key,
                          int word_len, Rng& rng, bool keep_truth,
                          LambdaBound* lambda) {
  // Bob first (he owns the session key), then Alice.
  Mat b = bcfrx_sample_subgroup(key, Subgroup::bob, word_len, rng);
  Mat b2 = bcfrx_sample_subgroup(key, Subgroup::bob, word_len, rng);
  Mat a = bcfrx_sample_subgroup(key, Subgroup::alice, word_len, rng);
  Mat a2 = bcfrx_sample_subgroup(key, Subgroup::alice, word_len, rng);

  Mat c = b * session_key * b2;
  Mat d = a * c * a2;
  Mat b_inv = b.inverse();
  Mat b2_inv = b2.inverse();
  Mat e = b_inv * d * b2_inv;

  // Alice's final step; exact by the commuting-subgroup identity.
  Mat a_inv = a.inverse();
  Mat a2_inv = a2.inverse();
  Mat alice_key = a_inv * e * a2_inv;
  if (!(alice_key == session_key))
    throw std::logic_error("bcfrx_run: honest run failed to agree");

  if (lambda) {
    for (const Mat* m : std::initializer_list<const Mat*>{
             &session_key, &a, &a2, &b, &b2, &c, &d, &e, &b_inv, &b2_inv,
             &a_inv, &a2_inv})
      lambda->absorb(*m);
  }

  BcfrxTranscript t{std::move(c), std::move(d), std::move(e), std::nullopt};
  if (keep_truth)
    t.truth = BcfrxTruth{session_key, std::move(a), std::move(a2),
                         std::move(b), std::move(b2)};
  return t;
}

}  // namespace matkex
