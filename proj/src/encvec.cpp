#include "hesim/encvec.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace hesim {

PlainVector::PlainVector(std::vector<int64_t> elements, int64_t bound)
    : elements_(std::move(elements)), bound_(bound) {
    if (elements_.empty()) throw std::invalid_argument("vector dimension must be >= 1");
    if (bound_ < 1) throw std::invalid_argument("element bound must be >= 1");
    for (size_t k = 0; k < elements_.size(); k++)
        if (std::abs(elements_[k]) > bound_)
            throw std::invalid_argument("element " + std::to_string(k) +
                                        " exceeds declared bound");
}

PlainVector PlainVector::with_inferred_bound(std::vector<int64_t> elements) {
    int64_t bound = 1;
    for (int64_t e : elements) bound = std::max(bound, std::abs(e));
    return PlainVector(std::move(elements), bound);
}

SharedNonce SharedNonce::from_exponent(const PublicParams& params, const BigInt& r) {
    if (r < 1 || r > params.p - 2) throw std::invalid_argument("nonce out of range");
    return {mod_pow(params.g, r, params.p), mod_pow(params.Q, r, params.p)};
}

SharedNonce SharedNonce::random(const PublicParams& params, Rng& rng) {
    return from_exponent(params, rng.between(1, params.p - 2));
}

namespace {

BigInt masked_residue(const PublicParams& params, int64_t m, const BigInt& R) {
    BigInt residue = BigInt(m) % params.p;
    if (residue < 0) residue += params.p;
    return residue * R % params.p;
}

void check_element(int64_t value, size_t k) {
    if (value == 0)
        throw std::invalid_argument(
            "element " + std::to_string(k) +
            " is zero; zero element not encodable; use the documented zero-offset convention");
}

}  // namespace

EncryptedVector encrypt_vector(const PublicParams& params, const PlainVector& v,
                               NonceMode mode, Rng& rng, Exec exec) {
    const size_t n = v.dimension();
    for (size_t k = 0; k < n; k++) check_element(v[k], k);
    if (mode == NonceMode::shared)
        return encrypt_vector(params, v, SharedNonce::random(params, rng));

    // Nonces are drawn serially so the result is independent of thread count.
    std::vector<BigInt> nonces(n);
    for (size_t k = 0; k < n; k++) nonces[k] = rng.between(1, params.p - 2);
    EncryptedVector out;
    out.mode = NonceMode::fresh;
    out.bound = v.bound();
    out.elements.resize(n);
#pragma omp parallel for schedule(static) if (exec == Exec::parallel)
    for (size_t k = 0; k < n; k++)
        out.elements[k] = encrypt(params, BigInt(v[k]), nonces[k]);
    return out;
}

EncryptedVector encrypt_vector(const PublicParams& params, const PlainVector& v,
                               const SharedNonce& nonce) {
    EncryptedVector out;
    out.mode = NonceMode::shared;
    out.shared_R = nonce.R;
    out.bound = v.bound();
    out.elements.reserve(v.dimension());
    for (size_t k = 0; k < v.dimension(); k++) {
        check_element(v[k], k);
        out.elements.push_back({nonce.c1, masked_residue(params, v[k], nonce.R)});
    }
    return out;
}

PlainVector decrypt_vector(const PublicParams& params, const PrivateKey& sk,
                           const EncryptedVector& cv, Exec exec) {
    const size_t n = cv.dimension();
    std::vector<int64_t> plain(n);
    std::string failure;
#pragma omp parallel for schedule(static) if (exec == Exec::parallel)
    for (size_t k = 0; k < n; k++) {
        try {
            BigInt m = decrypt(params, sk, cv.elements[k]);
            if (!m.fits_slong_p()) throw std::runtime_error("plaintext exceeds 64 bits");
            plain[k] = m.get_si();
        } catch (const std::exception& e) {
#pragma omp critical
            failure = "decrypt failed at element " + std::to_string(k) + ": " + e.what();
        }
    }
    if (!failure.empty()) throw std::runtime_error(failure);
    return PlainVector::with_inferred_bound(std::move(plain));
}

WeightMatrix::WeightMatrix(size_t n, std::vector<double> values)
    : n_(n), values_(std::move(values)) {
    if (n_ == 0 || values_.size() != n_ * n_)
        throw std::invalid_argument("weight matrix shape mismatch");
    for (size_t k = 0; k < n_; k++) {
        if (at(k, k) != 1.0)
            throw std::invalid_argument("weight matrix diagonal must be 1");
        for (size_t l = 0; l < n_; l++) {
            if (std::abs(at(k, l)) > 1.0 + 1e-12)
                throw std::invalid_argument("weight matrix entries must lie in [-1, 1]");
            if (at(k, l) != at(l, k))
                throw std::invalid_argument("weight matrix must be symmetric");
        }
    }
}

WeightMatrix WeightMatrix::identity(size_t n) {
    std::vector<double> values(n * n, 0.0);
    for (size_t k = 0; k < n; k++) values[k * n + k] = 1.0;
    return WeightMatrix(n, std::move(values));
}

WeightMatrix feature_similarity_weights(const PlainVector& a, const PlainVector& b) {
    if (a.dimension() != b.dimension())
        throw std::invalid_argument("vector dimension mismatch");
    const size_t n = a.dimension();
    std::vector<double> norms(n);
    for (size_t k = 0; k < n; k++) {
        double sq = double(a[k]) * a[k] + double(b[k]) * b[k];
        if (sq == 0.0) throw std::invalid_argument("undefined feature weight");
        norms[k] = std::sqrt(sq);
    }
    std::vector<double> w(n * n);
    for (size_t k = 0; k < n; k++) {
        w[k * n + k] = 1.0;
        for (size_t l = k + 1; l < n; l++) {
            double dot = double(a[k]) * a[l] + double(b[k]) * b[l];
            double c = dot / (norms[k] * norms[l]);
            c = std::clamp(c, -1.0, 1.0);
            w[k * n + l] = w[l * n + k] = c;
        }
    }
    return WeightMatrix(n, std::move(w));
}

ScaledWeightMatrix scale_weights(const WeightMatrix& w, int64_t scale) {
    if (scale < 1) throw std::invalid_argument("scale must be >= 1");
    const size_t n = w.dimension();
    ScaledWeightMatrix out{n, scale, std::vector<int64_t>(n * n)};
    for (size_t k = 0; k < n; k++)
        for (size_t l = 0; l < n; l++)
            out.values[k * n + l] = llround(w.at(k, l) * double(scale));
    return out;
}

EncryptedWeightMatrix encrypt_weights(const PublicParams& params,
                                      const ScaledWeightMatrix& sw, NonceMode mode,
                                      Rng& rng, Exec exec) {
    if (mode == NonceMode::shared)
        return encrypt_weights(params, sw, SharedNonce::random(params, rng));
    const size_t total = sw.n * sw.n;
    std::vector<BigInt> nonces(total);
    for (size_t i = 0; i < total; i++)
        if (sw.values[i] != 0) nonces[i] = rng.between(1, params.p - 2);
    EncryptedWeightMatrix out;
    out.n = sw.n;
    out.scale = sw.scale;
    out.mode = NonceMode::fresh;
    out.elements.resize(total);
#pragma omp parallel for schedule(static) if (exec == Exec::parallel)
    for (size_t i = 0; i < total; i++)
        if (sw.values[i] != 0)
            out.elements[i] = encrypt(params, BigInt(sw.values[i]), nonces[i]);
    return out;
}

EncryptedWeightMatrix encrypt_weights(const PublicParams& params,
                                      const ScaledWeightMatrix& sw,
                                      const SharedNonce& nonce) {
    EncryptedWeightMatrix out;
    out.n = sw.n;
    out.scale = sw.scale;
    out.mode = NonceMode::shared;
    out.shared_R = nonce.R;
    out.elements.reserve(sw.n * sw.n);
    for (int64_t v : sw.values) {
        if (v == 0)
            out.elements.push_back(std::nullopt);
        else
            out.elements.push_back(Ciphertext{nonce.c1, masked_residue(params, v, nonce.R)});
    }
    return out;
}

CapacityReport capacity_check(const PublicParams& params, size_t n, int64_t bound,
                              int64_t scale, SimilarityKind kind) {
    CapacityReport report;
    report.limit = params.plaintext_bound();
    BigInt b(bound);
    if (kind == SimilarityKind::soft_cosine)
        report.required = BigInt(n) * n * scale * b * b;
    else
        report.required = BigInt(n) * b * b;
    report.ok = report.required <= report.limit;
    BigInt denom = kind == SimilarityKind::soft_cosine ? BigInt(n) * n * scale : BigInt(n);
    BigInt max_b_sq = report.limit / denom;
    BigInt max_b = sqrt(max_b_sq);
    report.max_bound = max_b.fits_slong_p() ? max_b.get_si()
                                            : std::numeric_limits<int64_t>::max();
    return report;
}

}  // namespace hesim
