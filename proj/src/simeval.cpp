#include "hesim/simeval.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace hesim {

namespace {

void check_compatible(const EncryptedVector& ci, const EncryptedVector& cj) {
    if (ci.dimension() != cj.dimension())
        throw std::invalid_argument("vector dimension mismatch");
    if (ci.mode != cj.mode) throw std::invalid_argument("nonce mode mismatch");
    if (ci.mode == NonceMode::shared && ci.shared_R != cj.shared_R)
        throw std::invalid_argument("shared-nonce vectors carry different masks");
}

BigInt pairwise_bound(const EncryptedVector& ci, const EncryptedVector& cj) {
    return BigInt(ci.dimension()) * ci.bound * cj.bound;
}

// Per-term modular sum over index range, partitioned for OpenMP; partial
// sums combine serially so the result is order-exact.
template <typename Term>
BigInt modular_sum(size_t count, const BigInt& p, Exec exec, Term&& term) {
    BigInt total = 0;
    if (exec == Exec::parallel) {
        std::vector<BigInt> products(count);
#pragma omp parallel for schedule(static)
        for (size_t t = 0; t < count; t++) products[t] = term(t);
        for (const BigInt& v : products) total = (total + v) % p;
    } else {
        for (size_t t = 0; t < count; t++) total = (total + term(t)) % p;
    }
    return total;
}

// Shared-mode lift once the decryption mask c1^q is already known. The same
// mask serves every aggregate built under one shared nonce.
BigInt lift_shared(const PublicParams& params, const AggregateCipher& agg,
                   const BigInt& mask) {
    if (agg.bound > params.plaintext_bound())
        throw std::runtime_error("aggregate overflow; capacity_check violated");
    BigInt unmask = mod_inv(mod_pow(mask, agg.mask_power, params.p), params.p);
    return centered_lift(agg.shared_sum * unmask % params.p, params.p);
}

}  // namespace

AggregateCipher hom_dot(const PublicParams& params, const EncryptedVector& ci,
                        const EncryptedVector& cj, Exec exec) {
    check_compatible(ci, cj);
    const size_t n = ci.dimension();
    AggregateCipher agg;
    agg.kind = AggKind::dot;
    agg.mode = ci.mode;
    agg.bound = pairwise_bound(ci, cj);
    if (ci.mode == NonceMode::shared) {
        agg.mask_power = 2;
        agg.shared_c1 = ci.shared_c1();
        agg.shared_sum = modular_sum(n, params.p, exec, [&](size_t k) -> BigInt {
            return ci.elements[k].c2 * cj.elements[k].c2 % params.p;
        });
    } else {
        agg.terms.resize(n);
#pragma omp parallel for schedule(static) if (exec == Exec::parallel)
        for (size_t k = 0; k < n; k++)
            agg.terms[k] = hom_mul(ci.elements[k], cj.elements[k], params.p);
    }
    return agg;
}

AggregateCipher hom_norm_sq(const PublicParams& params, const EncryptedVector& ci,
                            Exec exec) {
    AggregateCipher agg = hom_dot(params, ci, ci, exec);
    agg.kind = AggKind::norm_i;
    return agg;
}

TanimotoAggregates hom_tanimoto(const PublicParams& params, const EncryptedVector& ci,
                                const EncryptedVector& cj, Exec exec) {
    check_compatible(ci, cj);
    const size_t n = ci.dimension();
    TanimotoAggregates out;
    out.denom.kind = AggKind::dot;
    out.denom.mode = ci.mode;
    // a^2 + b^2 - a*b lies in [0, a^2 + b^2], so the sum is bounded by
    // n * (Bi^2 + Bj^2)
    out.denom.bound = BigInt(n) * (BigInt(ci.bound) * ci.bound +
                                   BigInt(cj.bound) * cj.bound);
    if (ci.mode == NonceMode::shared) {
        // The denominator term rewrites as (a - b)^2 + a*b, and the c2
        // residues are linear in the plaintexts under the common mask R, so
        // both sums come out of one pass with two products per element —
        // cheaper than the three separate sums cosine needs.
        out.dot.kind = AggKind::dot;
        out.dot.mode = NonceMode::shared;
        out.dot.bound = pairwise_bound(ci, cj);
        out.dot.mask_power = out.denom.mask_power = 2;
        out.dot.shared_c1 = out.denom.shared_c1 = ci.shared_c1();
        const BigInt& p = params.p;
        BigInt dot_sum = 0, den_sum = 0;
        if (exec == Exec::parallel) {
            std::vector<BigInt> prod(n), sq(n);
#pragma omp parallel for schedule(static)
            for (size_t k = 0; k < n; k++) {
                const BigInt& a = ci.elements[k].c2;
                const BigInt& b = cj.elements[k].c2;
                prod[k] = a * b % p;
                BigInt diff = (a + p - b) % p;
                sq[k] = diff * diff % p;
            }
            for (size_t k = 0; k < n; k++) {
                dot_sum = (dot_sum + prod[k]) % p;
                den_sum = (den_sum + sq[k] + prod[k]) % p;
            }
        } else {
            for (size_t k = 0; k < n; k++) {
                const BigInt& a = ci.elements[k].c2;
                const BigInt& b = cj.elements[k].c2;
                BigInt prod = a * b % p;
                BigInt diff = (a + p - b) % p;
                dot_sum = (dot_sum + prod) % p;
                den_sum = (den_sum + diff * diff + prod) % p;
            }
        }
        out.dot.shared_sum = dot_sum;
        out.denom.shared_sum = den_sum;
    } else {
        out.dot = hom_dot(params, ci, cj, exec);
        out.denom.terms.resize(3 * n);
#pragma omp parallel for schedule(static) if (exec == Exec::parallel)
        for (size_t k = 0; k < n; k++) {
            out.denom.terms[3 * k] = hom_mul(ci.elements[k], ci.elements[k], params.p);
            out.denom.terms[3 * k + 1] =
                hom_mul(cj.elements[k], cj.elements[k], params.p);
            Ciphertext neg = hom_mul(ci.elements[k], cj.elements[k], params.p);
            neg.c2 = params.p - neg.c2;  // multiply the plaintext by -1
            out.denom.terms[3 * k + 2] = neg;
        }
    }
    return out;
}

SimilarityResult tanimoto_from_aggregates(const PublicParams& params,
                                          const PrivateKey& sk,
                                          const TanimotoAggregates& aggs, Exec exec) {
    BigInt dot, denom;
    if (aggs.dot.mode == NonceMode::shared) {
        BigInt mask = mod_pow(aggs.dot.shared_c1, sk.q, params.p);
        dot = lift_shared(params, aggs.dot, mask);
        denom = lift_shared(params, aggs.denom, mask);
    } else {
        dot = decrypt_aggregate(params, sk, aggs.dot, exec);
        denom = decrypt_aggregate(params, sk, aggs.denom, exec);
    }
    if (denom == 0) throw std::domain_error("degenerate Tanimoto input");
    double s = dot.get_d() / denom.get_d();
    return {s, 1.0 - s, SimilarityKind::tanimoto};
}

SoftAggregateCiphers hom_soft_sums(const PublicParams& params,
                                   const EncryptedWeightMatrix& cw,
                                   const EncryptedVector& ci, const EncryptedVector& cj,
                                   Exec exec) {
    check_compatible(ci, cj);
    const size_t n = ci.dimension();
    if (cw.n != n) throw std::invalid_argument("weight matrix dimension mismatch");
    if (cw.mode != ci.mode) throw std::invalid_argument("nonce mode mismatch");
    if (cw.mode == NonceMode::shared && cw.shared_R != ci.shared_R)
        throw std::invalid_argument("shared-nonce weights carry a different mask");

    auto weighted = [&](const EncryptedVector& a, const EncryptedVector& b,
                        AggKind kind) {
        AggregateCipher agg;
        agg.kind = kind;
        agg.mode = cw.mode;
        agg.bound = BigInt(n) * n * cw.scale * a.bound * b.bound;
        if (cw.mode == NonceMode::shared) {
            agg.mask_power = 3;
            agg.shared_c1 = a.shared_c1();
            agg.shared_sum = modular_sum(n * n, params.p, exec, [&](size_t t) -> BigInt {
                const auto& w = cw.elements[t];
                if (!w) return 0;  // plaintext-zero weight contributes nothing
                size_t k = t / n, l = t % n;
                return w->c2 * a.elements[k].c2 % params.p * b.elements[l].c2 % params.p;
            });
        } else {
            agg.terms.reserve(n * n);
            std::vector<size_t> live;
            live.reserve(n * n);
            for (size_t t = 0; t < n * n; t++)
                if (cw.elements[t]) live.push_back(t);
            agg.terms.resize(live.size());
#pragma omp parallel for schedule(static) if (exec == Exec::parallel)
            for (size_t i = 0; i < live.size(); i++) {
                size_t t = live[i], k = t / n, l = t % n;
                agg.terms[i] = hom_mul(hom_mul(*cw.elements[t], a.elements[k], params.p),
                                       b.elements[l], params.p);
            }
        }
        return agg;
    };

    SoftAggregateCiphers out;
    out.scale = cw.scale;
    out.num = weighted(ci, cj, AggKind::soft_num);
    out.den_i = weighted(ci, ci, AggKind::soft_den_i);
    out.den_j = weighted(cj, cj, AggKind::soft_den_j);
    return out;
}

BigInt decrypt_aggregate(const PublicParams& params, const PrivateKey& sk,
                         const AggregateCipher& agg, Exec exec) {
    if (agg.mode == NonceMode::shared)
        return lift_shared(params, agg, mod_pow(agg.shared_c1, sk.q, params.p));
    if (agg.bound > params.plaintext_bound())
        throw std::runtime_error("aggregate overflow; capacity_check violated");
    const size_t count = agg.terms.size();
    std::vector<BigInt> values(count);
#pragma omp parallel for schedule(static) if (exec == Exec::parallel)
    for (size_t t = 0; t < count; t++)
        values[t] = decrypt(params, sk, agg.terms[t]);
    BigInt total = 0;
    for (const BigInt& v : values) total += v;  // exact integer sum
    return total;
}

AggregateSums aggregate_sums(const PublicParams& params, const PrivateKey& sk,
                             const EncryptedVector& ci, const EncryptedVector& cj,
                             Exec exec) {
    AggregateCipher dot = hom_dot(params, ci, cj, exec);
    AggregateCipher ni = hom_norm_sq(params, ci, exec);
    AggregateCipher nj = hom_norm_sq(params, cj, exec);
    AggregateSums sums;
    if (ci.mode == NonceMode::shared) {
        BigInt mask = mod_pow(ci.shared_c1(), sk.q, params.p);
        sums.dot = lift_shared(params, dot, mask);
        sums.norm_i_sq = lift_shared(params, ni, mask);
        sums.norm_j_sq = lift_shared(params, nj, mask);
    } else {
        sums.dot = decrypt_aggregate(params, sk, dot, exec);
        sums.norm_i_sq = decrypt_aggregate(params, sk, ni, exec);
        sums.norm_j_sq = decrypt_aggregate(params, sk, nj, exec);
    }
    return sums;
}

SoftAggregateSums soft_aggregate_sums(const PublicParams& params, const PrivateKey& sk,
                                      const EncryptedWeightMatrix& cw,
                                      const EncryptedVector& ci,
                                      const EncryptedVector& cj, Exec exec) {
    SoftAggregateCiphers aggs = hom_soft_sums(params, cw, ci, cj, exec);
    SoftAggregateSums sums;
    sums.scale = aggs.scale;
    if (cw.mode == NonceMode::shared) {
        BigInt mask = mod_pow(ci.shared_c1(), sk.q, params.p);
        sums.num = lift_shared(params, aggs.num, mask);
        sums.den_i = lift_shared(params, aggs.den_i, mask);
        sums.den_j = lift_shared(params, aggs.den_j, mask);
    } else {
        sums.num = decrypt_aggregate(params, sk, aggs.num, exec);
        sums.den_i = decrypt_aggregate(params, sk, aggs.den_i, exec);
        sums.den_j = decrypt_aggregate(params, sk, aggs.den_j, exec);
    }
    return sums;
}

namespace {

double cosine_value(const AggregateSums& sums) {
    if (sums.norm_i_sq <= 0 || sums.norm_j_sq <= 0)
        throw std::domain_error("undefined similarity for zero vector");
    return sums.dot.get_d() /
           (std::sqrt(sums.norm_i_sq.get_d()) * std::sqrt(sums.norm_j_sq.get_d()));
}

}  // namespace

SimilarityResult finalize_cosine(const AggregateSums& sums) {
    double s = cosine_value(sums);
    return {s, 1.0 - s, SimilarityKind::cosine};
}

SimilarityResult finalize_angular(const AggregateSums& sums) {
    double c = std::clamp(cosine_value(sums), -1.0, 1.0);
    double d = 2.0 * std::acos(c) / std::numbers::pi;
    return {1.0 - d, d, SimilarityKind::angular};
}

SimilarityResult finalize_tanimoto(const AggregateSums& sums) {
    if (sums.norm_i_sq < 0 || sums.norm_j_sq < 0)
        throw std::domain_error("undefined similarity for zero vector");
    BigInt denom = sums.norm_i_sq + sums.norm_j_sq - sums.dot;
    if (denom == 0) throw std::domain_error("degenerate Tanimoto input");
    double s = sums.dot.get_d() / denom.get_d();
    return {s, 1.0 - s, SimilarityKind::tanimoto};
}

SimilarityResult finalize_soft_cosine(const SoftAggregateSums& sums) {
    if (sums.den_i <= 0 || sums.den_j <= 0)
        throw std::domain_error("invalid weight matrix for these vectors");
    // num, den_i and den_j each carry exactly one factor of S, so S cancels.
    double s = sums.num.get_d() /
               (std::sqrt(sums.den_i.get_d()) * std::sqrt(sums.den_j.get_d()));
    return {s, 1.0 - s, SimilarityKind::soft_cosine};
}

SimilarityResult encrypted_similarity(const PublicParams& params, const PrivateKey& sk,
                                      const EncryptedVector& ci, const EncryptedVector& cj,
                                      SimilarityKind kind,
                                      const EncryptedWeightMatrix* weights, Exec exec) {
    if (kind == SimilarityKind::soft_cosine) {
        if (!weights) throw std::invalid_argument("soft cosine requires a weight matrix");
        return finalize_soft_cosine(soft_aggregate_sums(params, sk, *weights, ci, cj, exec));
    }
    if (kind == SimilarityKind::tanimoto)
        return tanimoto_from_aggregates(params, sk, hom_tanimoto(params, ci, cj, exec),
                                        exec);
    AggregateSums sums = aggregate_sums(params, sk, ci, cj, exec);
    switch (kind) {
        case SimilarityKind::cosine: return finalize_cosine(sums);
        case SimilarityKind::angular: return finalize_angular(sums);
        default: throw std::logic_error("unreachable");
    }
}

}  // namespace hesim
