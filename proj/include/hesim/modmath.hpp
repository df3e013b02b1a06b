#pragma once

/**
 * @file modmath.hpp
 * @brief Arbitrary-precision modular arithmetic and safe-prime generation.
 *
 * Residues and exponents are held in GMP's mpz_class; everything here is a
 * pure function, safe to call concurrently as long as each caller owns its
 * own Rng.
 */

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>

namespace hesim {

using BigInt = mpz_class;

/// Deterministic random source (Mersenne Twister). One per caller; not
/// shareable across threads.
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(gmp_randinit_mt) {
        state_.seed(static_cast<unsigned long>(seed));
    }

    /// Uniform in [0, bound).
    BigInt below(const BigInt& bound) { return state_.get_z_range(bound); }

    /// Uniform in [lo, hi] inclusive.
    BigInt between(const BigInt& lo, const BigInt& hi) {
        return lo + state_.get_z_range(hi - lo + 1);
    }

    /// Uniform bit string of exactly `bits` random bits (top bit not forced).
    BigInt bits(unsigned bits) { return state_.get_z_bits(bits); }

    uint64_t u64() {
        BigInt v = state_.get_z_bits(64);
        uint64_t out = 0;
        for (int i = 0; i < 64; i++)
            if (mpz_tstbit(v.get_mpz_t(), i)) out |= (uint64_t{1} << i);
        return out;
    }

private:
    gmp_randclass state_;
};

struct SafePrimePair {
    BigInt p;  // safe prime, p = 2u + 1
    BigInt u;  // (p - 1) / 2, prime
};

/// base^exp mod m. Throws std::invalid_argument("invalid modulus") for m < 2
/// and rejects negative exponents.
BigInt mod_pow(const BigInt& base, const BigInt& exp, const BigInt& m);

/// Multiplicative inverse of a mod m, in [1, m-1].
/// Throws std::domain_error("no modular inverse") when gcd(a, m) != 1.
BigInt mod_inv(const BigInt& a, const BigInt& m);

/// Miller-Rabin with `rounds` random bases, preceded by deterministic trial
/// division by small primes. False positives occur with probability at most
/// 4^-rounds; n <= 1 is always composite.
bool is_probable_prime(const BigInt& n, int rounds);

/// Random safe prime of exactly `bits` bits (bits >= 16). Candidates walk a
/// sieved window from a random start with the top two bits and low bit
/// forced, so the bit length is guaranteed. Deterministic in the rng stream.
SafePrimePair gen_safe_prime(unsigned bits, Rng& rng);

/// Generator of the full group Z_p^* for a safe prime p = 2u + 1: random
/// g in [2, p-2] with g^2 != 1 and g^u != 1 (mod p). Such g has order 2u
/// and satisfies g^u = p - 1.
BigInt find_generator(const SafePrimePair& pair, Rng& rng);

}  // namespace hesim
