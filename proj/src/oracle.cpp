#include "hesim/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace hesim {
namespace oracle {

namespace {

void check_dims(const PlainVector& a, const PlainVector& b) {
    if (a.dimension() != b.dimension())
        throw std::invalid_argument("vector dimension mismatch");
}

BigInt dot(const PlainVector& a, const PlainVector& b) {
    BigInt sum = 0;
    for (size_t k = 0; k < a.dimension(); k++) sum += BigInt(a[k]) * b[k];
    return sum;
}

double cosine_value(const PlainVector& a, const PlainVector& b) {
    check_dims(a, b);
    BigInt na = dot(a, a), nb = dot(b, b);
    if (na == 0 || nb == 0) throw std::domain_error("undefined similarity for zero vector");
    return dot(a, b).get_d() / (std::sqrt(na.get_d()) * std::sqrt(nb.get_d()));
}

}  // namespace

SimilarityResult plain_cosine(const PlainVector& a, const PlainVector& b) {
    double s = cosine_value(a, b);
    return {s, 1.0 - s, SimilarityKind::cosine};
}

SimilarityResult plain_angular(const PlainVector& a, const PlainVector& b) {
    double c = std::clamp(cosine_value(a, b), -1.0, 1.0);
    double d = 2.0 * std::acos(c) / std::numbers::pi;
    return {1.0 - d, d, SimilarityKind::angular};
}

SimilarityResult plain_tanimoto(const PlainVector& a, const PlainVector& b) {
    check_dims(a, b);
    BigInt ab = dot(a, b);
    BigInt denom = dot(a, a) + dot(b, b) - ab;
    if (denom == 0) throw std::domain_error("degenerate Tanimoto input");
    double s = ab.get_d() / denom.get_d();
    return {s, 1.0 - s, SimilarityKind::tanimoto};
}

SimilarityResult plain_soft_cosine(const PlainVector& a, const PlainVector& b,
                                   const WeightMatrix& w) {
    check_dims(a, b);
    const size_t n = a.dimension();
    if (w.dimension() != n) throw std::invalid_argument("weight matrix dimension mismatch");
    double num = 0.0, den_a = 0.0, den_b = 0.0;
    for (size_t k = 0; k < n; k++)
        for (size_t l = 0; l < n; l++) {
            num += w.at(k, l) * double(a[k]) * double(b[l]);
            den_a += w.at(k, l) * double(a[k]) * double(a[l]);
            den_b += w.at(k, l) * double(b[k]) * double(b[l]);
        }
    if (den_a <= 0.0 || den_b <= 0.0)
        throw std::domain_error("invalid weight matrix for these vectors");
    double s = num / (std::sqrt(den_a) * std::sqrt(den_b));
    return {s, 1.0 - s, SimilarityKind::soft_cosine};
}

}  // namespace oracle
}  // namespace hesim
