#pragma once

/**
 * @file bench.hpp
 * @brief Security-strength benchmark protocol: per strength, time vector
 *        encryption and the four encrypted similarity computations over
 *        pre-stored ciphertexts, and emit CSV rows.
 *
 * A bench run is also a correctness run: before any timing row is emitted,
 * the encrypted similarity values are checked against the plaintext oracle
 * on the same random vectors.
 */

#include "hesim/simeval.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace hesim {

struct BenchConfig {
    std::vector<std::string> strengths;  // "80".."256" or "toy"
    size_t n = 1000;                     // vector dimension
    size_t soft_n = 100;                 // soft-cosine dimension (quadratic cost)
    int64_t element_bound = 1000;        // elements drawn uniformly from [1, B]
    int64_t weight_scale = 1000000;
    int repetitions = 1;  // timing rounds; total_ms is the median of per-round minima
    uint64_t seed = 0;
    NonceMode mode = NonceMode::shared;
    Exec exec = Exec::serial;
};

struct BenchRow {
    std::string strength;
    std::string operation;  // encrypt|cosine|angular|tanimoto|soft_cosine [+_omp]
    double total_ms = 0.0;
};

struct BenchReport {
    std::vector<BenchRow> rows;
};

/// Runs the protocol. Throws if an encrypted similarity disagrees with the
/// oracle (no timing output is produced in that case).
BenchReport run_bench(const BenchConfig& config);

/// "strength,operation,total_ms" header plus one row per line, total_ms with
/// three decimal places. Row order: strengths as configured (ascending when
/// produced by run_bench), operations in fixed order encrypt, cosine,
/// angular, tanimoto, soft_cosine.
void write_csv(std::ostream& out, const BenchReport& report);

}  // namespace hesim
