#pragma once

/**
 * @file encvec.hpp
 * @brief Element-wise encryption of integer vectors and feature-weight
 *        matrices, fixed-point scaling of real weights, and capacity checks
 *        against the modulus.
 *
 * Two nonce modes exist. Fresh mode draws an independent nonce per element
 * and is the default. Shared mode reuses one nonce for every element of a
 * vector (and across the vectors and weights entering one similarity
 * computation); it is the only mode that permits ciphertext-side summation
 * of products, and it weakens security, so it is strictly opt-in.
 */

#include "hesim/elgamal.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace hesim {

enum class NonceMode { fresh, shared };

/// Execution policy for element-wise kernels. `parallel` runs the loop
/// under OpenMP; results are identical to `serial`.
enum class Exec { serial, parallel };

class PlainVector {
public:
    /// Bound B must dominate every |element|; it feeds capacity checking.
    PlainVector(std::vector<int64_t> elements, int64_t bound);

    /// Bound inferred as max |element| (at least 1).
    static PlainVector with_inferred_bound(std::vector<int64_t> elements);

    size_t dimension() const { return elements_.size(); }
    int64_t bound() const { return bound_; }
    const std::vector<int64_t>& elements() const { return elements_; }
    int64_t operator[](size_t k) const { return elements_[k]; }

private:
    std::vector<int64_t> elements_;
    int64_t bound_;
};

/// One nonce shared by every ciphertext of a shared-mode computation.
struct SharedNonce {
    BigInt c1;  // g^r mod p
    BigInt R;   // Q^r mod p

    static SharedNonce from_exponent(const PublicParams& params, const BigInt& r);
    static SharedNonce random(const PublicParams& params, Rng& rng);
};

struct EncryptedVector {
    std::vector<Ciphertext> elements;
    NonceMode mode = NonceMode::fresh;
    BigInt shared_R;    // only meaningful in shared mode
    int64_t bound = 0;  // element bound B carried over from the plaintext

    size_t dimension() const { return elements.size(); }
    const BigInt& shared_c1() const { return elements.front().c1; }
};

/// Symmetric matrix of pairwise feature similarities, unit diagonal,
/// entries in [-1, 1].
class WeightMatrix {
public:
    WeightMatrix(size_t n, std::vector<double> values);
    static WeightMatrix identity(size_t n);

    size_t dimension() const { return n_; }
    double at(size_t k, size_t l) const { return values_[k * n_ + l]; }

private:
    size_t n_;
    std::vector<double> values_;
};

/// Fixed-point image of a WeightMatrix: entries round(w * S).
struct ScaledWeightMatrix {
    size_t n = 0;
    int64_t scale = 1;
    std::vector<int64_t> values;  // row-major, n*n

    int64_t at(size_t k, size_t l) const { return values[k * n + l]; }
};

/// Element-wise encryption of scaled weights. Zero entries cannot enter the
/// multiplicative scheme; they are stored as explicit plaintext-zero markers
/// (nullopt) and skipped by the homomorphic sums.
struct EncryptedWeightMatrix {
    size_t n = 0;
    int64_t scale = 1;
    NonceMode mode = NonceMode::fresh;
    BigInt shared_R;
    std::vector<std::optional<Ciphertext>> elements;  // row-major

    const std::optional<Ciphertext>& at(size_t k, size_t l) const {
        return elements[k * n + l];
    }
};

EncryptedVector encrypt_vector(const PublicParams& params, const PlainVector& v,
                               NonceMode mode, Rng& rng, Exec exec = Exec::serial);

/// Shared-mode encryption under a caller-supplied nonce (used when several
/// operands must agree on R, or to pin the expository fixture's r).
EncryptedVector encrypt_vector(const PublicParams& params, const PlainVector& v,
                               const SharedNonce& nonce);

PlainVector decrypt_vector(const PublicParams& params, const PrivateKey& sk,
                           const EncryptedVector& cv, Exec exec = Exec::serial);

/// w_{k,l} = cosine of the 2-entry feature columns {a_k, b_k} and {a_l, b_l}.
WeightMatrix feature_similarity_weights(const PlainVector& a, const PlainVector& b);

ScaledWeightMatrix scale_weights(const WeightMatrix& w, int64_t scale);

EncryptedWeightMatrix encrypt_weights(const PublicParams& params,
                                      const ScaledWeightMatrix& sw, NonceMode mode,
                                      Rng& rng, Exec exec = Exec::serial);

EncryptedWeightMatrix encrypt_weights(const PublicParams& params,
                                      const ScaledWeightMatrix& sw,
                                      const SharedNonce& nonce);

enum class SimilarityKind { cosine, angular, tanimoto, soft_cosine };

struct CapacityReport {
    bool ok = false;
    BigInt required;       // worst-case |aggregate| for the requested shape
    BigInt limit;          // (p - 1) / 2
    int64_t max_bound = 0; // largest admissible B for this n, S, kind
};

/// Pairwise kinds need n*B^2 <= (p-1)/2; soft cosine needs n^2*S*B^2 <= (p-1)/2.
CapacityReport capacity_check(const PublicParams& params, size_t n, int64_t bound,
                              int64_t scale, SimilarityKind kind);

}  // namespace hesim
