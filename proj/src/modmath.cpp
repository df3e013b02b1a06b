#include "hesim/modmath.hpp"

#include <array>
#include <vector>

namespace hesim {

BigInt mod_pow(const BigInt& base, const BigInt& exp, const BigInt& m) {
    if (m < 2) throw std::invalid_argument("invalid modulus");
    if (exp < 0) throw std::invalid_argument("negative exponent");
    BigInt out;
    mpz_powm(out.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), m.get_mpz_t());
    return out;
}

BigInt mod_inv(const BigInt& a, const BigInt& m) {
    if (m < 2) throw std::invalid_argument("invalid modulus");
    BigInt out;
    if (mpz_invert(out.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
        throw std::domain_error("no modular inverse");
    return out;
}

namespace {

// Odd primes below 2^10, used for trial division and candidate sieving.
const std::vector<uint64_t>& small_primes() {
    static const std::vector<uint64_t> primes = [] {
        std::vector<uint64_t> out;
        std::array<bool, 1024> comp{};
        for (uint64_t i = 3; i < comp.size(); i += 2)
            if (!comp[i]) {
                out.push_back(i);
                for (uint64_t j = i * i; j < comp.size(); j += 2 * i) comp[j] = true;
            }
        return out;
    }();
    return primes;
}

bool miller_rabin_witness(const BigInt& n, const BigInt& base, const BigInt& d, unsigned long s) {
    BigInt x = mod_pow(base, d, n);
    if (x == 1 || x == n - 1) return false;
    for (unsigned long i = 1; i < s; i++) {
        x = x * x % n;
        if (x == n - 1) return false;
    }
    return true;  // composite witness found
}

}  // namespace

bool is_probable_prime(const BigInt& n, int rounds) {
    if (rounds < 1) throw std::invalid_argument("rounds must be >= 1");
    if (n < 2) return false;
    if (n == 2) return true;
    if (mpz_even_p(n.get_mpz_t())) return false;
    for (uint64_t q : small_primes()) {
        if (n == q) return true;
        if (mpz_fdiv_ui(n.get_mpz_t(), q) == 0) return false;
    }
    if (n < 1024 * 1024) return true;  // trial division above is exhaustive here

    // n - 1 = d * 2^s with d odd
    BigInt nm1 = n - 1;
    unsigned long s = mpz_scan1(nm1.get_mpz_t(), 0);
    BigInt d = nm1 >> s;

    // Fixed-seed base stream keeps results reproducible across calls.
    Rng bases(0x4d725261626173ULL);
    for (int i = 0; i < rounds; i++) {
        BigInt a = bases.between(2, n - 2);
        if (miller_rabin_witness(n, a, d, s)) return false;
    }
    return true;
}

SafePrimePair gen_safe_prime(unsigned bits, Rng& rng) {
    if (bits < 16) throw std::invalid_argument("bits must be >= 16");
    const auto& primes = small_primes();
    std::vector<uint64_t> res(primes.size());
    const long window = 1L << 18;  // deltas of step 4 scanned per random start
    for (;;) {
        BigInt start = rng.bits(bits);
        mpz_setbit(start.get_mpz_t(), bits - 1);
        mpz_setbit(start.get_mpz_t(), bits - 2);
        // p ≡ 3 (mod 4) keeps both p and u = (p-1)/2 odd along the walk.
        start += ((3 - mpz_fdiv_ui(start.get_mpz_t(), 4)) + 4) % 4;
        for (size_t i = 0; i < primes.size(); i++)
            res[i] = mpz_fdiv_ui(start.get_mpz_t(), primes[i]);
        for (long d = 0; d < window; d++) {
            bool survives = true;
            for (size_t i = 0; i < primes.size(); i++) {
                uint64_t r = (res[i] + 4ull * (uint64_t)d) % primes[i];
                // r == 0 divides p; r == 1 divides u
                if (r <= 1) { survives = false; break; }
            }
            if (!survives) continue;
            BigInt p = start + 4 * d;
            if (mpz_sizeinbase(p.get_mpz_t(), 2) != bits) break;  // walked past the top
            BigInt u = (p - 1) / 2;
            if (p > 1024 * 1024) {
                // cheap single-round screens before the full 64-round check
                if (!is_probable_prime(u, 1) || !is_probable_prime(p, 1)) continue;
            }
            if (is_probable_prime(u, 64) && is_probable_prime(p, 64)) return {p, u};
        }
    }
}

BigInt find_generator(const SafePrimePair& pair, Rng& rng) {
    const BigInt& p = pair.p;
    for (;;) {
        BigInt g = rng.between(2, p - 2);
        if (g * g % p == 1) continue;
        if (mod_pow(g, pair.u, p) == 1) continue;
        return g;
    }
}

}  // namespace hesim
