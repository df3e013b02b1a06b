#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hesim/modmath.hpp"

using namespace hesim;

namespace {
const BigInt kToyP("2932031007403");
}

TEST_CASE("mod_pow basics") {
    CHECK(mod_pow(3, 5, kToyP) == 243);
    CHECK(mod_pow(243, 2, kToyP) == 59049);
    CHECK(mod_pow(7, 0, 13) == 1);
    CHECK(mod_pow(0, 0, 13) == 1);  // empty product convention
    CHECK(mod_pow(BigInt("123456789123456789"), BigInt("987654321"), 1000000007) ==
          mod_pow(BigInt("123456789123456789") % 1000000007, BigInt("987654321"),
                  1000000007));
    CHECK_THROWS_WITH_AS(mod_pow(2, 3, 1), "invalid modulus", std::invalid_argument);
    CHECK_THROWS_WITH_AS(mod_pow(2, 3, 0), "invalid modulus", std::invalid_argument);
    CHECK_THROWS_AS(mod_pow(2, -1, 7), std::invalid_argument);
}

TEST_CASE("mod_pow handles huge operands without truncation") {
    // 2^16000 has 16001 bits; reduce it mod a 512-bit prime-ish modulus and
    // cross-check via the exponent decomposition 16000 = 128 * 125.
    BigInt m = (BigInt(1) << 512) - 569;
    BigInt direct = mod_pow(2, 16000, m);
    BigInt staged = mod_pow(mod_pow(2, 128, m), 125, m);
    CHECK(direct == staged);
    CHECK(direct >= 0);
    CHECK(direct < m);
}

TEST_CASE("mod_pow is multiplicative in the base") {
    Rng rng(7);
    BigInt m = (BigInt(1) << 128) + 51;
    for (int i = 0; i < 50; i++) {
        BigInt a = rng.below(m), b = rng.below(m), e = rng.below(1 << 20);
        CHECK(mod_pow(a * b % m, e, m) == mod_pow(a, e, m) * mod_pow(b, e, m) % m);
    }
}

TEST_CASE("mod_inv") {
    CHECK(mod_inv(3, 7) == 5);
    BigInt inv = mod_inv(59049, kToyP);
    CHECK(inv * 59049 % kToyP == 1);
    CHECK(inv >= 1);
    CHECK(inv < kToyP);
    CHECK_THROWS_WITH_AS(mod_inv(6, 9), "no modular inverse", std::domain_error);

    Rng rng(11);
    for (int i = 0; i < 100; i++) {
        BigInt a = rng.between(1, kToyP - 1);
        CHECK(mod_inv(a, kToyP) * a % kToyP == 1);
    }
}

TEST_CASE("is_probable_prime") {
    CHECK(is_probable_prime(kToyP, 64));
    CHECK_FALSE(is_probable_prime(1, 64));
    CHECK_FALSE(is_probable_prime(0, 64));
    CHECK_FALSE(is_probable_prime(-7, 64));
    CHECK(is_probable_prime(2, 64));
    CHECK(is_probable_prime(3, 64));
    CHECK_FALSE(is_probable_prime(4, 64));
    CHECK(is_probable_prime(997, 64));
    CHECK_FALSE(is_probable_prime(BigInt(1021) * 1031, 64));

    // Carmichael numbers fool the Fermat test but not Miller-Rabin.
    CHECK_FALSE(is_probable_prime(561, 64));
    CHECK_FALSE(is_probable_prime(BigInt("9746347772161"), 64));
}

TEST_CASE("composite built from two generated 64-bit primes is rejected") {
    Rng rng(13);
    SafePrimePair a = gen_safe_prime(64, rng);
    SafePrimePair b = gen_safe_prime(64, rng);
    CHECK_FALSE(is_probable_prime(a.p * b.p, 64));
}

TEST_CASE("gen_safe_prime small sizes, brute-force verified") {
    Rng rng(17);
    SafePrimePair pair = gen_safe_prime(16, rng);
    CHECK(mpz_sizeinbase(pair.p.get_mpz_t(), 2) == 16);
    CHECK(pair.p == 2 * pair.u + 1);
    auto brute_prime = [](unsigned long n) {
        if (n < 2) return false;
        for (unsigned long d = 2; d * d <= n; d++)
            if (n % d == 0) return false;
        return true;
    };
    CHECK(brute_prime(pair.p.get_ui()));
    CHECK(brute_prime(pair.u.get_ui()));
}

TEST_CASE("gen_safe_prime is deterministic in the seed") {
    Rng r1(23), r2(23), r3(24);
    SafePrimePair a = gen_safe_prime(64, r1);
    SafePrimePair b = gen_safe_prime(64, r2);
    CHECK(a.p == b.p);
    // a different seed yields a different prime with overwhelming probability
    CHECK(gen_safe_prime(64, r3).p != a.p);
}

TEST_CASE("gen_safe_prime output passes 64-round testing at 256 bits") {
    Rng rng(29);
    SafePrimePair pair = gen_safe_prime(256, rng);
    CHECK(mpz_sizeinbase(pair.p.get_mpz_t(), 2) == 256);
    CHECK(is_probable_prime(pair.p, 64));
    CHECK(is_probable_prime(pair.u, 64));
}

TEST_CASE("find_generator") {
    SafePrimePair p11{11, 5};
    Rng rng(31);
    for (int i = 0; i < 10; i++) {
        BigInt g = find_generator(p11, rng);
        CHECK(g >= 2);
        CHECK(g <= 9);
        CHECK(g * g % 11 != 1);
        CHECK(mod_pow(g, 5, 11) == 10);  // order-2u elements satisfy g^u = p-1
    }

    Rng rng2(37);
    SafePrimePair pair = gen_safe_prime(128, rng2);
    BigInt g = find_generator(pair, rng2);
    CHECK(mod_pow(g, pair.u, pair.p) == pair.p - 1);
    CHECK(mod_pow(g, 2 * pair.u, pair.p) == 1);
}
