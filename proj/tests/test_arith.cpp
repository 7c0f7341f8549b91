#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "matkex/crt.hpp"
#include "matkex/prime_field.hpp"
#include "matkex/rng.hpp"
#include "matkex/smallfp.hpp"
#include "oracles.hpp"

using namespace matkex;

TEST_CASE("BigInt basics and decimal round-trip") {
  BigInt a("123456789012345678901234567890");
  BigInt b("-987654321098765432109876543210");
  CHECK(a.str() == "123456789012345678901234567890");
  CHECK(b.sign() == -1);
  CHECK((a + b).str() == "-864197532086419753208641975320");
  CHECK((a * BigInt(0)).is_zero());
  CHECK(BigInt(-7).mod(BigInt(5)) == BigInt(3));
  CHECK(BigInt(-7).quot(BigInt(5)) == BigInt(-1));
  CHECK(BigInt::pow2(10) == BigInt(1024));
  CHECK_THROWS_AS(BigInt("12x4"), std::invalid_argument);

  BigInt big = BigInt::pow2(64) - 1;
  CHECK(big.fits_u64());
  CHECK(big.to_u64() == ~uint64_t{0});
  CHECK(!(big + 1).fits_u64());
  CHECK(BigInt::from_u64(~uint64_t{0}) == big);
}

TEST_CASE("Rng determinism and derivation") {
  Rng a(42), b(42);
  for (int i = 0; i < 100; ++i) CHECK(a.u64() == b.u64());

  Rng c = Rng::derive(42, 7), d = Rng::derive(42, 7), e = Rng::derive(42, 8);
  CHECK(c.u64() == d.u64());
  CHECK(c.u64() != e.u64());  // astronomically unlikely to collide

  Rng f(1);
  for (int i = 0; i < 1000; ++i) {
    uint64_t v = f.below(17);
    CHECK(v < 17);
  }
}

TEST_CASE("gen_prime produces primes of exactly the requested size") {
  Rng rng(2024);

  SUBCASE("bits=3 only allows 5 and 7") {
    for (int i = 0; i < 20; ++i) {
      PrimeField f = gen_prime(3, rng);
      bool ok = f.p() == BigInt(5) || f.p() == BigInt(7);
      CHECK(ok);
    }
  }

  SUBCASE("bits=8") {
    PrimeField f = gen_prime(8, rng);
    CHECK(f.bit_length() == 8);
    CHECK(oracle::trial_division_prime(f.p()));
    // 251 is an 8-bit prime, so the contract is satisfiable.
    CHECK_NOTHROW(PrimeField(BigInt(251)));
  }

  SUBCASE("bits=64 against independent primality oracles") {
    PrimeField f = gen_prime(64, rng);
    CHECK(f.p() >= BigInt::pow2(63));
    CHECK(f.p() < BigInt::pow2(64));
    CHECK(oracle::trial_division_prime(f.p()));  // no small factors
    CHECK(oracle::miller_rabin_prime(f.p(), 40, 999));
  }

  SUBCASE("deterministic given the seed") {
    Rng r1(5), r2(5);
    CHECK(gen_prime(40, r1).p() == gen_prime(40, r2).p());
  }

  SUBCASE("bits below 3 rejected") {
    CHECK_THROWS_AS(gen_prime(2, rng), std::invalid_argument);
  }
}

TEST_CASE("PrimeField rejects composites and tiny moduli") {
  CHECK_THROWS_AS(PrimeField(BigInt(15)), std::invalid_argument);
  CHECK_THROWS_AS(PrimeField(BigInt(2)), std::invalid_argument);
  CHECK_NOTHROW(PrimeField(BigInt(3)));
}

TEST_CASE("crt_combine frozen examples") {
  PrimeField p5{BigInt(5)}, p7{BigInt(7)};

  // Oracle: brute-force scan of (-17.5, 17.5].
  auto scanned = oracle::crt_scan({{2, 5}, {3, 7}});
  REQUIRE(scanned.has_value());
  CHECK(*scanned == 17);
  CHECK(crt_combine({{BigInt(2), p5}, {BigInt(3), p7}}) == BigInt(17));

  CHECK(crt_combine({{BigInt(3), p7}}) == BigInt(3));
  CHECK(crt_combine({{BigInt(6), p7}}) == BigInt(-1));

  SUBCASE("duplicate modulus rejected") {
    CHECK_THROWS_AS(crt_combine({{BigInt(1), p5}, {BigInt(2), p5}}),
                    std::invalid_argument);
  }
  SUBCASE("value out of range rejected") {
    CHECK_THROWS_AS(crt_combine({{BigInt(9), p5}}), std::invalid_argument);
    CHECK_THROWS_AS(crt_combine({{BigInt(-1), p5}}), std::invalid_argument);
  }
}

TEST_CASE("crt round-trip property: 1000 random bounded integers") {
  Rng rng(7);
  for (int trial = 0; trial < 1000; ++trial) {
    // Fresh distinct primes, 3 to 5 of them.
    int count = 3 + int(rng.below(3));
    std::vector<PrimeField> fields;
    BigInt n(1);
    while (static_cast<int>(fields.size()) < count) {
      PrimeField f = gen_prime(16 + unsigned(rng.below(8)), rng);
      bool dup = false;
      for (const auto& g : fields) dup = dup || g.p() == f.p();
      if (dup) continue;
      n *= f.p();
      fields.push_back(std::move(f));
    }
    // |x| < n/2 so the centered lift is exact.
    BigInt x = BigInt::random_below(rng, n - 1) - (n - 1).quot(2);
    std::vector<std::pair<BigInt, PrimeField>> residues;
    for (const auto& f : fields) residues.emplace_back(x.mod(f.p()), f);
    CHECK(crt_combine(residues) == x);
  }
}

TEST_CASE("mod_inverse examples and property") {
  auto p7 = std::make_shared<const PrimeField>(BigInt(7));

  CHECK(mod_inverse(Residue(BigInt(1), p7)).value() == BigInt(1));
  CHECK(mod_inverse(Residue(BigInt(3), p7)).value() == BigInt(5));
  CHECK_THROWS_AS(mod_inverse(Residue(BigInt(0), p7)), NonInvertible);

  Rng rng(11);
  for (int f = 0; f < 10; ++f) {
    auto field = std::make_shared<const PrimeField>(
        gen_prime(20 + unsigned(rng.below(30)), rng));
    for (int i = 0; i < 100; ++i) {
      BigInt a = field->sample(rng);
      if (a.is_zero()) continue;
      Residue r(a, field);
      CHECK((mod_inverse(r) * r).value().is_one());
    }
  }
}

TEST_CASE("Residue arithmetic stays canonical and guards mixed fields") {
  auto p7 = std::make_shared<const PrimeField>(BigInt(7));
  auto p5 = std::make_shared<const PrimeField>(BigInt(5));
  Residue a(BigInt(5), p7), b(BigInt(4), p7);
  CHECK((a + b).value() == BigInt(2));
  CHECK((a * b).value() == BigInt(6));
  CHECK((-a).value() == BigInt(2));
  CHECK_THROWS_AS(a + Residue(BigInt(1), p5), std::invalid_argument);
}

TEST_CASE("SmallFp agrees with PrimeField across sizes") {
  Rng rng(13);
  for (unsigned bits : {5u, 17u, 31u, 62u, 64u}) {
    PrimeField big = gen_prime(bits, rng);
    SmallFp fp(big.p().to_u64());
    for (int i = 0; i < 200; ++i) {
      BigInt a = big.sample(rng), b = big.sample(rng);
      uint64_t am = fp.from_u64(a.to_u64()), bm = fp.from_u64(b.to_u64());
      CHECK(fp.to_u64(fp.add(am, bm)) == big.add(a, b).to_u64());
      CHECK(fp.to_u64(fp.sub(am, bm)) == big.sub(a, b).to_u64());
      CHECK(fp.to_u64(fp.mul(am, bm)) == big.mul(a, b).to_u64());
      if (!a.is_zero())
        CHECK(fp.to_u64(fp.inv(am)) == big.inv(a).to_u64());
    }
    CHECK(fp.to_u64(fp.one()) == 1);
  }
  CHECK_THROWS_AS(SmallFp(4), std::invalid_argument);
}

TEST_CASE("gen_prime distinctness by regeneration") {
  Rng rng(99);
  std::vector<BigInt> seen;
  for (int i = 0; i < 25; ++i) {
    PrimeField f = gen_prime(20, rng);
    BigInt p = f.p();
    while (true) {
      bool dup = false;
      for (const auto& q : seen) dup = dup || q == p;
      if (!dup) break;
      p = gen_prime(20, rng).p();
    }
    seen.push_back(p);
  }
  for (size_t i = 0; i < seen.size(); ++i)
    for (size_t j = i + 1; j < seen.size(); ++j)
      CHECK(seen[i].gcd(seen[j]).is_one());
}
