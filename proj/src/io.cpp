#include "hesim/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace hesim {

namespace {

class LineReader {
public:
    LineReader(const std::string& path) : path_(path), in_(path) {
        if (!in_) throw std::runtime_error("cannot read " + path);
    }

    std::string next() {
        std::string line;
        lineno_++;
        if (!std::getline(in_, line)) fail("unexpected end of file");
        return line;
    }

    bool at_end() {
        std::string line;
        return !std::getline(in_, line);
    }

    [[noreturn]] void fail(const std::string& what) const {
        throw std::runtime_error(path_ + ":" + std::to_string(lineno_) + ": " + what);
    }

    /// "name=<dec>" header with a nonnegative decimal payload.
    BigInt header(const std::string& name) {
        std::string line = next();
        std::string prefix = name + "=";
        if (line.rfind(prefix, 0) != 0) fail("expected header '" + prefix + "<dec>'");
        std::string value = line.substr(prefix.size());
        if (value.empty() || value.find_first_not_of("0123456789") != std::string::npos)
            fail("non-decimal value for '" + name + "'");
        return BigInt(value);
    }

    int64_t signed_value() {
        std::string line = next();
        int64_t out = 0;
        auto [ptr, ec] = std::from_chars(line.data(), line.data() + line.size(), out);
        if (ec != std::errc{} || ptr != line.data() + line.size())
            fail("malformed integer '" + line + "'");
        return out;
    }

    std::pair<BigInt, BigInt> residue_pair() {
        std::string line = next();
        auto space = line.find(' ');
        if (space == std::string::npos) fail("expected '<c1> <c2>'");
        std::string a = line.substr(0, space), b = line.substr(space + 1);
        for (const std::string& part : {a, b})
            if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos)
                fail("malformed residue '" + part + "'");
        return {BigInt(a), BigInt(b)};
    }

private:
    std::string path_;
    std::ifstream in_;
    long lineno_ = 0;
};

size_t dimension_from(const BigInt& n, const LineReader& reader) {
    if (n < 1 || !n.fits_ulong_p()) {
        // dimension headers beyond addressable range are malformed input
        throw std::runtime_error("vector dimension must be >= 1");
    }
    (void)reader;
    return n.get_ui();
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    return out;
}

}  // namespace

void write_plain_vector(const std::string& path, const PlainVector& v) {
    auto out = open_out(path);
    out << "n=" << v.dimension() << "\n";
    for (int64_t e : v.elements()) out << e << "\n";
    if (!out) throw std::runtime_error("write failed for " + path);
}

PlainVector read_plain_vector(const std::string& path) {
    LineReader reader(path);
    size_t n = dimension_from(reader.header("n"), reader);
    std::vector<int64_t> elements(n);
    for (size_t k = 0; k < n; k++) elements[k] = reader.signed_value();
    if (!reader.at_end()) reader.fail("trailing content after vector");
    return PlainVector::with_inferred_bound(std::move(elements));
}

void write_encrypted_vector(const std::string& path, const EncryptedVector& v) {
    auto out = open_out(path);
    out << "n=" << v.dimension() << "\n";
    out << "mode=" << (v.mode == NonceMode::shared ? "shared" : "fresh") << "\n";
    if (v.mode == NonceMode::shared) out << "R=" << v.shared_R.get_str() << "\n";
    for (const Ciphertext& ct : v.elements)
        out << ct.c1.get_str() << " " << ct.c2.get_str() << "\n";
    if (!out) throw std::runtime_error("write failed for " + path);
}

EncryptedVector read_encrypted_vector(const std::string& path) {
    LineReader reader(path);
    size_t n = dimension_from(reader.header("n"), reader);
    std::string mode_line = reader.next();
    EncryptedVector out;
    if (mode_line == "mode=fresh")
        out.mode = NonceMode::fresh;
    else if (mode_line == "mode=shared")
        out.mode = NonceMode::shared;
    else
        reader.fail("expected 'mode=fresh' or 'mode=shared'");
    if (out.mode == NonceMode::shared) out.shared_R = reader.header("R");
    out.elements.reserve(n);
    for (size_t k = 0; k < n; k++) {
        auto [c1, c2] = reader.residue_pair();
        out.elements.push_back({c1, c2});
    }
    if (!reader.at_end()) reader.fail("trailing content after vector");
    if (out.mode == NonceMode::shared)
        for (const Ciphertext& ct : out.elements)
            if (ct.c1 != out.elements.front().c1)
                throw std::runtime_error(path + ": shared-mode elements disagree on c1");
    out.bound = 0;  // unknown until decryption; aggregate bounds use vector bounds
    return out;
}

void write_weight_matrix(const std::string& path, const ScaledWeightMatrix& w) {
    auto out = open_out(path);
    out << "n=" << w.n << "\n";
    out << "S=" << w.scale << "\n";
    for (int64_t v : w.values) out << v << "\n";
    if (!out) throw std::runtime_error("write failed for " + path);
}

ScaledWeightMatrix read_weight_matrix(const std::string& path) {
    LineReader reader(path);
    size_t n = dimension_from(reader.header("n"), reader);
    BigInt scale = reader.header("S");
    if (scale < 1 || !scale.fits_slong_p())
        throw std::runtime_error(path + ": scale must be a positive 64-bit integer");
    ScaledWeightMatrix out{n, scale.get_si(), std::vector<int64_t>(n * n)};
    for (size_t i = 0; i < n * n; i++) out.values[i] = reader.signed_value();
    if (!reader.at_end()) reader.fail("trailing content after matrix");
    return out;
}

}  // namespace hesim
