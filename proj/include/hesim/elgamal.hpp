#pragma once

/**
 * @file elgamal.hpp
 * @brief Multiplicative ElGamal over Z_p^*: keygen, encrypt, decrypt and the
 *        homomorphic ciphertext product.
 *
 * Plaintexts are signed integers m with 1 <= |m| <= (p-1)/2; negative values
 * are encoded as the residue p + m and recovered by the centered lift.
 * Zero cannot be encrypted (multiplicative masking has no preimage for it).
 */

#include "hesim/modmath.hpp"

#include <array>
#include <optional>
#include <string>
#include <utility>

namespace hesim {

struct PublicParams {
    BigInt p;  // prime modulus
    BigInt g;  // generator
    BigInt Q;  // public key, g^q mod p

    /// Largest admissible |plaintext|, (p-1)/2.
    BigInt plaintext_bound() const { return (p - 1) / 2; }
};

struct PrivateKey {
    BigInt q;  // secret exponent in [1, p-2]
};

struct Ciphertext {
    BigInt c1;  // g^r mod p
    BigInt c2;  // m * Q^r mod p
};

/// NIST strength to modulus length. Only these five pairs are valid.
struct SecurityProfile {
    int strength;
    unsigned modulus_bits;

    /// Throws std::invalid_argument listing valid strengths for anything
    /// outside {80, 112, 128, 192, 256}.
    static SecurityProfile from_strength(int strength);
    static const std::array<int, 5>& known_strengths();
};

struct KeyPair {
    PublicParams params;
    PrivateKey key;
};

/// Key generation over a pre-generated built-in safe-prime group of the
/// profile's length (the group is fixed; q and Q are drawn from rng).
/// Generates the group on the fly if no built-in one exists for the length.
KeyPair keygen(const SecurityProfile& profile, Rng& rng);

/// Key generation with a freshly generated safe prime of exactly `bits` bits.
KeyPair keygen_bits(unsigned bits, Rng& rng);

/// Built-in safe-prime group for a modulus length, if one is compiled in.
std::optional<std::pair<BigInt, BigInt>> builtin_group(unsigned bits);  // (p, g)

/// Encrypt with an explicit nonce exponent r in [1, p-2].
Ciphertext encrypt(const PublicParams& params, const BigInt& m, const BigInt& r);

/// Encrypt with a fresh random nonce.
Ciphertext encrypt(const PublicParams& params, const BigInt& m, Rng& rng);

/// Decrypt to the centered signed representative in (-p/2, p/2].
BigInt decrypt(const PublicParams& params, const PrivateKey& sk, const Ciphertext& ct);

/// Componentwise ciphertext product; decrypts to the plaintext product as
/// long as |x*y| <= (p-1)/2.
Ciphertext hom_mul(const Ciphertext& a, const Ciphertext& b, const BigInt& p);

/// Centered lift of a residue v in [0, p-1] to (-p/2, p/2].
BigInt centered_lift(const BigInt& v, const BigInt& p);

// --- key files ---------------------------------------------------------
// <name>.pub holds "p=<dec>", "g=<dec>", "Q=<dec>", one per line;
// <name>.key holds the same fields plus "q=<dec>".

void write_public_key(const std::string& path, const PublicParams& params);
void write_private_key(const std::string& path, const PublicParams& params, const PrivateKey& sk);
PublicParams read_public_key(const std::string& path);
KeyPair read_private_key(const std::string& path);

}  // namespace hesim
