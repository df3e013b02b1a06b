#pragma once

/**
 * @file simeval.hpp
 * @brief Ciphertext-domain aggregate computation and similarity finalization.
 *
 * Aggregates (dot products, squared norms, weighted double sums) are built
 * from ciphertext products. In shared-nonce mode the products collapse to a
 * single residue that is decrypted once; in fresh mode each term is its own
 * ciphertext and is decrypted individually, then summed exactly. Both routes
 * yield the same integers. Square roots and arccos happen over doubles only
 * after decryption.
 */

#include "hesim/encvec.hpp"

namespace hesim {

enum class AggKind { dot, norm_i, norm_j, soft_num, soft_den_i, soft_den_j };

/// A not-yet-decrypted integer aggregate.
struct AggregateCipher {
    AggKind kind = AggKind::dot;
    NonceMode mode = NonceMode::fresh;
    BigInt bound;  // worst-case |value|, used for capacity enforcement

    // shared mode: single residue sum of c2 products, each term masked by
    // R^mask_power (2 for pairwise products, 3 for weighted triples)
    BigInt shared_sum;
    BigInt shared_c1;
    int mask_power = 2;

    // fresh mode: one product ciphertext per term
    std::vector<Ciphertext> terms;
};

struct AggregateSums {
    BigInt dot;
    BigInt norm_i_sq;
    BigInt norm_j_sq;
};

struct SoftAggregateSums {
    BigInt num;    // sum of w'_int * x_i * x_j, carries one factor of S
    BigInt den_i;  // likewise for (i, i)
    BigInt den_j;  // likewise for (j, j)
    int64_t scale = 1;
};

struct SoftAggregateCiphers {
    AggregateCipher num;
    AggregateCipher den_i;
    AggregateCipher den_j;
    int64_t scale = 1;
};

struct SimilarityResult {
    double similarity = 0.0;
    double distance = 0.0;
    SimilarityKind kind = SimilarityKind::cosine;
};

AggregateCipher hom_dot(const PublicParams& params, const EncryptedVector& ci,
                        const EncryptedVector& cj, Exec exec = Exec::serial);

AggregateCipher hom_norm_sq(const PublicParams& params, const EncryptedVector& ci,
                            Exec exec = Exec::serial);

/// Tanimoto needs only dot and the denominator sum(a_k^2 + b_k^2 - a_k*b_k).
/// In shared mode every product carries the same R^2 mask, so the denominator
/// collapses into one aggregate and the whole measure costs two lifts where
/// cosine needs three. The denominator lift needs 2*n*B^2 <= (p-1)/2.
struct TanimotoAggregates {
    AggregateCipher dot;
    AggregateCipher denom;
};

TanimotoAggregates hom_tanimoto(const PublicParams& params, const EncryptedVector& ci,
                                const EncryptedVector& cj, Exec exec = Exec::serial);

SimilarityResult tanimoto_from_aggregates(const PublicParams& params,
                                          const PrivateKey& sk,
                                          const TanimotoAggregates& aggs,
                                          Exec exec = Exec::serial);

SoftAggregateCiphers hom_soft_sums(const PublicParams& params,
                                   const EncryptedWeightMatrix& cw,
                                   const EncryptedVector& ci, const EncryptedVector& cj,
                                   Exec exec = Exec::serial);

/// Decrypt an aggregate to its exact signed integer value. Throws
/// "aggregate overflow; capacity_check violated" when the aggregate's bound
/// does not fit below (p-1)/2, since the lifted value is then untrustworthy.
BigInt decrypt_aggregate(const PublicParams& params, const PrivateKey& sk,
                         const AggregateCipher& agg, Exec exec = Exec::serial);

/// dot, |X_i|^2 and |X_j|^2 from two ciphertext vectors in one call.
AggregateSums aggregate_sums(const PublicParams& params, const PrivateKey& sk,
                             const EncryptedVector& ci, const EncryptedVector& cj,
                             Exec exec = Exec::serial);

SoftAggregateSums soft_aggregate_sums(const PublicParams& params, const PrivateKey& sk,
                                      const EncryptedWeightMatrix& cw,
                                      const EncryptedVector& ci,
                                      const EncryptedVector& cj,
                                      Exec exec = Exec::serial);

SimilarityResult finalize_cosine(const AggregateSums& sums);
SimilarityResult finalize_angular(const AggregateSums& sums);
SimilarityResult finalize_tanimoto(const AggregateSums& sums);
SimilarityResult finalize_soft_cosine(const SoftAggregateSums& sums);

/// Full encrypted pipeline for one similarity kind. Weights are required for
/// soft cosine and ignored otherwise.
SimilarityResult encrypted_similarity(const PublicParams& params, const PrivateKey& sk,
                                      const EncryptedVector& ci, const EncryptedVector& cj,
                                      SimilarityKind kind,
                                      const EncryptedWeightMatrix* weights = nullptr,
                                      Exec exec = Exec::serial);

}  // namespace hesim
