#pragma once

/**
 * @file io.hpp
 * @brief Text file formats for plaintext vectors, ciphertext vectors and
 *        scaled weight matrices.
 *
 * Plaintext vector:   "n=<dec>" then n lines of "<dec>".
 * Ciphertext vector:  "n=<dec>", "mode=fresh|shared", "R=<dec>" (shared
 *                     only), then n lines of "<c1-dec> <c2-dec>".
 * Weight matrix:      "n=<dec>", "S=<dec>", then n*n scaled integers
 *                     row-major, one per line.
 *
 * Parsers reject missing headers, malformed numbers and wrong counts, and
 * name the offending line in the error.
 */

#include "hesim/encvec.hpp"

#include <string>

namespace hesim {

void write_plain_vector(const std::string& path, const PlainVector& v);
PlainVector read_plain_vector(const std::string& path);

void write_encrypted_vector(const std::string& path, const EncryptedVector& v);
EncryptedVector read_encrypted_vector(const std::string& path);

void write_weight_matrix(const std::string& path, const ScaledWeightMatrix& w);
ScaledWeightMatrix read_weight_matrix(const std::string& path);

}  // namespace hesim
