#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "toy_fixture.hpp"

#include <filesystem>
#include <fstream>

using namespace hesim;
using namespace hesim::testing;

TEST_CASE("toy fixture reproduces the worked key values") {
    KeyPair kp = toy_keys();
    CHECK(mod_pow(kp.params.g, kp.key.q, kp.params.p) == kp.params.Q);
    CHECK(kp.params.Q == 243);
    SharedNonce nonce = toy_nonce();
    CHECK(nonce.c1 == 9);
    CHECK(nonce.R == 59049);
}

TEST_CASE("security profile mapping") {
    CHECK(SecurityProfile::from_strength(80).modulus_bits == 1024);
    CHECK(SecurityProfile::from_strength(112).modulus_bits == 2048);
    CHECK(SecurityProfile::from_strength(128).modulus_bits == 3072);
    CHECK(SecurityProfile::from_strength(192).modulus_bits == 7680);
    CHECK(SecurityProfile::from_strength(256).modulus_bits == 15360);
    CHECK_THROWS_AS(SecurityProfile::from_strength(100), std::invalid_argument);
}

TEST_CASE("built-in groups are safe primes with a true generator") {
    for (unsigned bits : {1024u, 2048u, 3072u}) {
        auto group = builtin_group(bits);
        REQUIRE(group.has_value());
        const auto& [p, g] = *group;
        CHECK(mpz_sizeinbase(p.get_mpz_t(), 2) == bits);
        BigInt u = (p - 1) / 2;
        CHECK(is_probable_prime(p, 64));
        CHECK(is_probable_prime(u, 64));
        CHECK(mod_pow(g, u, p) == p - 1);
    }

    SUBCASE("7680-bit group, fewer rounds to keep the test quick") {
        auto group = builtin_group(7680);
        REQUIRE(group.has_value());
        const auto& [p, g] = *group;
        CHECK(mpz_sizeinbase(p.get_mpz_t(), 2) == 7680);
        BigInt u = (p - 1) / 2;
        CHECK(is_probable_prime(p, 4));
        CHECK(is_probable_prime(u, 4));
        CHECK(mod_pow(g, u, p) == p - 1);
    }
}

TEST_CASE("keygen at profile 80 yields a 1024-bit safe prime") {
    Rng rng(5);
    KeyPair kp = keygen(SecurityProfile::from_strength(80), rng);
    CHECK(mpz_sizeinbase(kp.params.p.get_mpz_t(), 2) == 1024);
    CHECK(kp.params.Q == mod_pow(kp.params.g, kp.key.q, kp.params.p));
}

TEST_CASE("keygen is deterministic in the seed") {
    Rng r1(9), r2(9);
    KeyPair a = keygen_bits(64, r1);
    KeyPair b = keygen_bits(64, r2);
    CHECK(a.params.p == b.params.p);
    CHECK(a.params.g == b.params.g);
    CHECK(a.params.Q == b.params.Q);
    CHECK(a.key.q == b.key.q);
    CHECK(is_probable_prime(a.params.p, 64));
}

TEST_CASE("encrypt matches the worked example") {
    KeyPair kp = toy_keys();
    Ciphertext ct = encrypt(kp.params, 2, BigInt(2));
    CHECK(ct.c1 == 9);
    CHECK(ct.c2 == 118098);  // 2 * R with R = 59049
    CHECK(encrypt(kp.params, 1, BigInt(2)).c2 == 59049);
}

TEST_CASE("encrypt rejects invalid plaintexts") {
    KeyPair kp = toy_keys();
    CHECK_THROWS_WITH_AS(encrypt(kp.params, 0, BigInt(2)), "zero plaintext not encodable",
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(encrypt(kp.params, kp.params.p, BigInt(2)),
                         "zero plaintext not encodable", std::invalid_argument);
    BigInt too_big = (kp.params.p - 1) / 2 + 1;
    CHECK_THROWS_WITH_AS(encrypt(kp.params, too_big, BigInt(2)), "plaintext out of range",
                         std::invalid_argument);
    CHECK_NOTHROW(encrypt(kp.params, (kp.params.p - 1) / 2, BigInt(2)));
}

TEST_CASE("decrypt matches the worked example and the centered lift") {
    KeyPair kp = toy_keys();
    CHECK(decrypt(kp.params, kp.key, {9, 118098}) == 2);
    // residue p-3 masked by R decrypts to -3
    BigInt c2 = BigInt(59049) * (kp.params.p - 3) % kp.params.p;
    CHECK(decrypt(kp.params, kp.key, {9, c2}) == -3);
}

TEST_CASE("round trip over random signed plaintexts and nonces") {
    KeyPair kp = toy_keys();
    Rng rng(21);
    BigInt bound = kp.params.plaintext_bound();
    for (int i = 0; i < 200; i++) {
        BigInt m = rng.between(1, bound);
        if (rng.u64() & 1) m = -m;
        Ciphertext ct = encrypt(kp.params, m, rng);
        CHECK(ct.c1 >= 1);
        CHECK(ct.c1 <= kp.params.p - 1);
        CHECK(ct.c2 >= 1);
        CHECK(ct.c2 <= kp.params.p - 1);
        CHECK(decrypt(kp.params, kp.key, ct) == m);
    }
}

TEST_CASE("homomorphic product") {
    KeyPair kp = toy_keys();
    Rng rng(33);
    Ciphertext two = encrypt(kp.params, 2, rng);
    Ciphertext three = encrypt(kp.params, 3, rng);
    CHECK(decrypt(kp.params, kp.key, hom_mul(two, three, kp.params.p)) == 6);

    // multiplicative identity
    Ciphertext one = encrypt(kp.params, 1, rng);
    CHECK(decrypt(kp.params, kp.key, hom_mul(two, one, kp.params.p)) == 2);

    SUBCASE("product of eight factors, fresh and shared nonces") {
        for (bool shared : {false, true}) {
            BigInt r = rng.between(1, kp.params.p - 2);
            for (int trial = 0; trial < 20; trial++) {
                BigInt expected = 1;
                Ciphertext acc{1, 1};
                for (int i = 0; i < 8; i++) {
                    BigInt x = rng.between(1, 30);
                    if (rng.u64() & 1) x = -x;
                    expected *= x;
                    Ciphertext ct = shared ? encrypt(kp.params, x, r)
                                           : encrypt(kp.params, x, rng);
                    acc = hom_mul(acc, ct, kp.params.p);
                }
                REQUIRE(abs(expected) < kp.params.plaintext_bound());
                CHECK(decrypt(kp.params, kp.key, acc) == expected);
            }
        }
    }
}

TEST_CASE("key files round-trip and reject malformed input") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "hesim_keys_test";
    fs::create_directories(dir);
    KeyPair kp = toy_keys();
    std::string pub = (dir / "toy.pub").string(), priv = (dir / "toy.key").string();
    write_public_key(pub, kp.params);
    write_private_key(priv, kp.params, kp.key);

    PublicParams loaded = read_public_key(pub);
    CHECK(loaded.p == kp.params.p);
    CHECK(loaded.g == kp.params.g);
    CHECK(loaded.Q == kp.params.Q);
    KeyPair loaded_kp = read_private_key(priv);
    CHECK(loaded_kp.key.q == kp.key.q);

    std::string bad = (dir / "bad.pub").string();
    { std::ofstream(bad) << "p=123\ng=3\n"; }  // missing Q
    CHECK_THROWS(read_public_key(bad));
    { std::ofstream(bad) << "p=123\ng=3\nQ=24x3\n"; }  // non-decimal
    CHECK_THROWS(read_public_key(bad));
    { std::ofstream(bad) << "p=123 g=3 Q=243\n"; }  // not one field per line
    CHECK_THROWS(read_public_key(bad));
    fs::remove_all(dir);
}
