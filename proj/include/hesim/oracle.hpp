#pragma once

/**
 * @file oracle.hpp
 * @brief Plaintext reference implementation of the four similarity measures.
 *
 * Ground truth for equivalence testing of the encrypted pipeline. Integer
 * sums are exact (big-integer); the soft-cosine oracle takes real-valued
 * weights directly, which makes it the arbiter for fixed-point quantization
 * error. Optimized for obviousness, not speed.
 */

#include "hesim/encvec.hpp"
#include "hesim/simeval.hpp"

namespace hesim {
namespace oracle {

SimilarityResult plain_cosine(const PlainVector& a, const PlainVector& b);
SimilarityResult plain_angular(const PlainVector& a, const PlainVector& b);
SimilarityResult plain_tanimoto(const PlainVector& a, const PlainVector& b);
SimilarityResult plain_soft_cosine(const PlainVector& a, const PlainVector& b,
                                   const WeightMatrix& w);

}  // namespace oracle
}  // namespace hesim
