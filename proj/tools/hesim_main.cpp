// hesim: ElGamal-encrypted vector similarity CLI.
//
// Exit codes: 0 success, 1 usage error, 2 data/crypto error.

#include "hesim/bench.hpp"
#include "hesim/io.hpp"
#include "hesim/oracle.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>

namespace {

using namespace hesim;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

uint64_t default_seed() {
    std::random_device rd;
    return (uint64_t(rd()) << 32) | rd();
}

NonceMode parse_mode(const std::string& mode) {
    if (mode == "fresh") return NonceMode::fresh;
    if (mode == "shared") return NonceMode::shared;
    throw UsageError("--mode must be 'fresh' or 'shared'");
}

SimilarityKind parse_kind(const std::string& kind) {
    if (kind == "cosine") return SimilarityKind::cosine;
    if (kind == "angular") return SimilarityKind::angular;
    if (kind == "tanimoto") return SimilarityKind::tanimoto;
    if (kind == "soft") return SimilarityKind::soft_cosine;
    throw UsageError("--kind must be one of cosine|angular|tanimoto|soft");
}

SecurityProfile checked_profile(int strength) {
    try {
        return SecurityProfile::from_strength(strength);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

int run_keygen(int strength, unsigned bits, const std::string& out, uint64_t seed,
               bool fresh_prime) {
    if ((strength == 0) == (bits == 0))
        throw UsageError("exactly one of --strength or --bits is required");
    Rng rng(seed);
    KeyPair kp;
    if (strength != 0) {
        SecurityProfile profile = checked_profile(strength);
        kp = fresh_prime ? keygen_bits(profile.modulus_bits, rng) : keygen(profile, rng);
    } else {
        if (bits < 16) throw UsageError("--bits must be >= 16");
        kp = keygen_bits(bits, rng);
    }
    write_public_key(out + ".pub", kp.params);
    write_private_key(out + ".key", kp.params, kp.key);
    std::cout << "modulus bits: " << mpz_sizeinbase(kp.params.p.get_mpz_t(), 2) << "\n";
    return 0;
}

int run_encrypt(const std::string& pub, const std::string& in, const std::string& mode,
                const std::string& out, uint64_t seed) {
    PublicParams params = read_public_key(pub);
    PlainVector v = read_plain_vector(in);
    auto cap = capacity_check(params, v.dimension(), v.bound(), 1, SimilarityKind::cosine);
    if (!cap.ok)
        throw std::runtime_error("capacity check failed: n*B^2 = " +
                                 cap.required.get_str() + " exceeds (p-1)/2 = " +
                                 cap.limit.get_str() + "; largest admissible B is " +
                                 std::to_string(cap.max_bound));
    Rng rng(seed);
    NonceMode nonce_mode = parse_mode(mode);
    if (nonce_mode == NonceMode::shared)
        std::cerr << "warning: shared-nonce mode reuses one encryption nonce across "
                     "all elements and weakens security\n";
    EncryptedVector cv = encrypt_vector(params, v, nonce_mode, rng);
    write_encrypted_vector(out, cv);
    return 0;
}

int run_similarity(const std::string& key, const std::string& file_i,
                   const std::string& file_j, const std::string& kind_name,
                   const std::string& weights_path, uint64_t seed, bool parallel) {
    SimilarityKind kind = parse_kind(kind_name);
    if (kind == SimilarityKind::soft_cosine && weights_path.empty())
        throw UsageError("--kind soft requires --weights");
    KeyPair kp = read_private_key(key);
    EncryptedVector ci = read_encrypted_vector(file_i);
    EncryptedVector cj = read_encrypted_vector(file_j);
    Exec exec = parallel ? Exec::parallel : Exec::serial;
    SimilarityResult result;
    if (kind == SimilarityKind::soft_cosine) {
        ScaledWeightMatrix scaled = read_weight_matrix(weights_path);
        EncryptedWeightMatrix cw;
        if (ci.mode == NonceMode::shared) {
            // weights join the vectors' shared mask
            cw = encrypt_weights(kp.params, scaled,
                                 SharedNonce{ci.shared_c1(), ci.shared_R});
        } else {
            Rng rng(seed);
            cw = encrypt_weights(kp.params, scaled, NonceMode::fresh, rng, exec);
        }
        result = encrypted_similarity(kp.params, kp.key, ci, cj, kind, &cw, exec);
    } else {
        result = encrypted_similarity(kp.params, kp.key, ci, cj, kind, nullptr, exec);
    }
    printf("similarity=%.5f distance=%.5f\n", result.similarity, result.distance);
    return 0;
}

int run_bench_cmd(const BenchConfig& config, const std::string& out) {
    for (const std::string& s : config.strengths) {
        if (s == "toy") continue;
        int strength = 0;
        try {
            strength = std::stoi(s);
        } catch (const std::exception&) {
            throw UsageError("invalid strength '" + s + "'");
        }
        checked_profile(strength);
    }
    BenchReport report = run_bench(config);
    if (out.empty()) {
        write_csv(std::cout, report);
    } else {
        std::ofstream file(out);
        if (!file) throw std::runtime_error("cannot write " + out);
        write_csv(file, report);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ElGamal multiplicative homomorphic encryption and encrypted vector "
                 "similarity (cosine, angular, Tanimoto, soft cosine)"};
    app.require_subcommand(1);

    int strength = 0;
    unsigned bits = 0;
    std::string out, pub, key, in, mode = "fresh", kind, weights, csv_out;
    std::vector<std::string> files;
    uint64_t seed = default_seed();
    bool fresh_prime = false, parallel = false;

    auto* keygen_cmd = app.add_subcommand("keygen", "Generate an ElGamal key pair");
    keygen_cmd->add_option("--strength", strength, "NIST strength (80|112|128|192|256)");
    keygen_cmd->add_option("--bits", bits, "Explicit modulus bit length");
    keygen_cmd->add_option("--out", out, "Output path stem (writes .pub and .key)")
        ->required();
    keygen_cmd->add_option("--seed", seed, "Deterministic rng seed");
    keygen_cmd->add_flag("--fresh-prime", fresh_prime,
                         "Generate a fresh safe prime instead of the built-in group");

    auto* encrypt_cmd = app.add_subcommand("encrypt", "Encrypt a plaintext vector file");
    encrypt_cmd->add_option("--pub", pub, "Public key file")->required();
    encrypt_cmd->add_option("--in", in, "Plaintext vector file")->required();
    encrypt_cmd->add_option("--mode", mode, "fresh|shared (default fresh)");
    encrypt_cmd->add_option("--out", out, "Ciphertext vector output file")->required();
    encrypt_cmd->add_option("--seed", seed, "Deterministic rng seed");

    auto* sim_cmd = app.add_subcommand("similarity",
                                       "Similarity of two ciphertext vector files");
    sim_cmd->add_option("--key", key, "Private key file")->required();
    sim_cmd->add_option("vectors", files, "Two ciphertext vector files")
        ->expected(2)
        ->required();
    sim_cmd->add_option("--kind", kind, "cosine|angular|tanimoto|soft")->required();
    sim_cmd->add_option("--weights", weights, "Scaled weight matrix file (soft only)");
    sim_cmd->add_option("--seed", seed, "Rng seed for fresh-mode weight encryption");
    sim_cmd->add_flag("--parallel", parallel, "OpenMP-parallel aggregation");

    BenchConfig config;
    config.strengths = {"80", "112", "128"};
    config.seed = default_seed();
    auto* bench_cmd = app.add_subcommand("bench", "Timing protocol with CSV output");
    bench_cmd->add_option("--strengths", config.strengths,
                          "Strengths to run (80|112|128|192|256|toy)");
    bench_cmd->add_option("--n", config.n, "Vector dimension (default 1000)");
    bench_cmd->add_option("--soft-n", config.soft_n,
                          "Soft-cosine dimension (default 100; cost is quadratic)");
    bench_cmd->add_option("--bound", config.element_bound,
                          "Element bound B, elements drawn from [1, B]");
    bench_cmd->add_option("--scale", config.weight_scale, "Fixed-point weight scale");
    bench_cmd->add_option("--reps", config.repetitions, "Repetitions to average over");
    bench_cmd->add_option("--seed", config.seed, "Deterministic rng seed");
    bench_cmd->add_option("--mode", mode, "fresh|shared (default shared)");
    bench_cmd->add_flag("--parallel", parallel, "OpenMP-parallel kernels");
    bench_cmd->add_option("--out", csv_out, "CSV output path (default stdout)");

    try {
        app.parse(argc, argv);
        if (keygen_cmd->parsed()) return run_keygen(strength, bits, out, seed, fresh_prime);
        if (encrypt_cmd->parsed()) return run_encrypt(pub, in, mode, out, seed);
        if (sim_cmd->parsed())
            return run_similarity(key, files[0], files[1], kind, weights, seed, parallel);
        if (bench_cmd->parsed()) {
            if (!bench_cmd->count("--mode")) mode = "shared";
            config.mode = parse_mode(mode);
            config.exec = parallel ? Exec::parallel : Exec::serial;
            return run_bench_cmd(config, csv_out);
        }
        return 1;
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
