#include "hesim/elgamal.hpp"

#include <fstream>
#include <map>
#include <vector>

namespace hesim {

const std::array<int, 5>& SecurityProfile::known_strengths() {
    static const std::array<int, 5> strengths = {80, 112, 128, 192, 256};
    return strengths;
}

SecurityProfile SecurityProfile::from_strength(int strength) {
    switch (strength) {
        case 80: return {80, 1024};
        case 112: return {112, 2048};
        case 128: return {128, 3072};
        case 192: return {192, 7680};
        case 256: return {256, 15360};
        default:
            throw std::invalid_argument(
                "unknown strength " + std::to_string(strength) +
                "; valid strengths are 80, 112, 128, 192, 256");
    }
}

namespace {

KeyPair finish_keygen(const BigInt& p, const BigInt& g, Rng& rng) {
    BigInt q = rng.between(2, p - 2);
    BigInt Q = mod_pow(g, q, p);
    return {PublicParams{p, g, Q}, PrivateKey{q}};
}

}  // namespace

KeyPair keygen(const SecurityProfile& profile, Rng& rng) {
    if (auto group = builtin_group(profile.modulus_bits))
        return finish_keygen(group->first, group->second, rng);
    return keygen_bits(profile.modulus_bits, rng);
}

KeyPair keygen_bits(unsigned bits, Rng& rng) {
    SafePrimePair pair = gen_safe_prime(bits, rng);
    BigInt g = find_generator(pair, rng);
    return finish_keygen(pair.p, g, rng);
}

Ciphertext encrypt(const PublicParams& params, const BigInt& m, const BigInt& r) {
    BigInt residue = m % params.p;
    if (residue < 0) residue += params.p;
    if (residue == 0) throw std::invalid_argument("zero plaintext not encodable");
    if (abs(m) > params.plaintext_bound())
        throw std::invalid_argument("plaintext out of range");
    if (r < 1 || r > params.p - 2) throw std::invalid_argument("nonce out of range");
    BigInt c1 = mod_pow(params.g, r, params.p);
    BigInt c2 = residue * mod_pow(params.Q, r, params.p) % params.p;
    return {c1, c2};
}

Ciphertext encrypt(const PublicParams& params, const BigInt& m, Rng& rng) {
    return encrypt(params, m, rng.between(1, params.p - 2));
}

BigInt centered_lift(const BigInt& v, const BigInt& p) {
    return v <= (p - 1) / 2 ? v : v - p;
}

BigInt decrypt(const PublicParams& params, const PrivateKey& sk, const Ciphertext& ct) {
    BigInt mask = mod_pow(ct.c1, sk.q, params.p);
    BigInt inv;
    try {
        inv = mod_inv(mask, params.p);
    } catch (const std::domain_error&) {
        throw std::runtime_error("corrupt ciphertext");
    }
    return centered_lift(ct.c2 * inv % params.p, params.p);
}

Ciphertext hom_mul(const Ciphertext& a, const Ciphertext& b, const BigInt& p) {
    return {a.c1 * b.c1 % p, a.c2 * b.c2 % p};
}

// --- key files ---------------------------------------------------------

namespace {

void write_fields(const std::string& path,
                  const std::vector<std::pair<std::string, const BigInt*>>& fields) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    for (const auto& [name, value] : fields) out << name << "=" << value->get_str() << "\n";
    if (!out) throw std::runtime_error("write failed for " + path);
}

std::map<std::string, BigInt> read_fields(const std::string& path,
                                          const std::vector<std::string>& required) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::map<std::string, BigInt> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error(path + ": malformed line '" + line + "'");
        std::string name = line.substr(0, eq), value = line.substr(eq + 1);
        if (value.empty() || value.find_first_not_of("0123456789") != std::string::npos)
            throw std::runtime_error(path + ": non-decimal value for field '" + name + "'");
        out.emplace(name, BigInt(value));
    }
    for (const auto& name : required)
        if (!out.count(name))
            throw std::runtime_error(path + ": missing field '" + name + "'");
    return out;
}

}  // namespace

void write_public_key(const std::string& path, const PublicParams& params) {
    write_fields(path, {{"p", &params.p}, {"g", &params.g}, {"Q", &params.Q}});
}

void write_private_key(const std::string& path, const PublicParams& params,
                       const PrivateKey& sk) {
    write_fields(path, {{"p", &params.p}, {"g", &params.g}, {"Q", &params.Q}, {"q", &sk.q}});
}

PublicParams read_public_key(const std::string& path) {
    auto fields = read_fields(path, {"p", "g", "Q"});
    return {fields["p"], fields["g"], fields["Q"]};
}

KeyPair read_private_key(const std::string& path) {
    auto fields = read_fields(path, {"p", "g", "Q", "q"});
    return {{fields["p"], fields["g"], fields["Q"]}, {fields["q"]}};
}

}  // namespace hesim
