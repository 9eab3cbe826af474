#include "hypspec/report.hpp"

#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>

#include "hypspec/errors.hpp"

namespace hypspec {

namespace {

// Compact SHA-1 (FIPS 180-1); plenty for content addressing of cache files.
struct Sha1 {
    std::uint32_t h[5] = {0x67452301u, 0xEFCDAB89u, 0x98BADCFEu, 0x10325476u,
                          0xC3D2E1F0u};
    std::uint64_t total = 0;
    unsigned char buf[64];
    std::size_t fill = 0;

    static std::uint32_t rol(std::uint32_t x, int s) {
        return (x << s) | (x >> (32 - s));
    }

    void block(const unsigned char* p) {
        std::uint32_t w[80];
        for (int i = 0; i < 16; ++i)
            w[i] = (std::uint32_t(p[4 * i]) << 24) | (std::uint32_t(p[4 * i + 1]) << 16) |
                   (std::uint32_t(p[4 * i + 2]) << 8) | std::uint32_t(p[4 * i + 3]);
        for (int i = 16; i < 80; ++i)
            w[i] = rol(w[i - 3] ^ w[i - 8] ^ w[i - 14] ^ w[i - 16], 1);
        std::uint32_t a = h[0], b = h[1], c = h[2], d = h[3], e = h[4];
        for (int i = 0; i < 80; ++i) {
            std::uint32_t f, k;
            if (i < 20) { f = (b & c) | (~b & d); k = 0x5A827999u; }
            else if (i < 40) { f = b ^ c ^ d; k = 0x6ED9EBA1u; }
            else if (i < 60) { f = (b & c) | (b & d) | (c & d); k = 0x8F1BBCDCu; }
            else { f = b ^ c ^ d; k = 0xCA62C1D6u; }
            std::uint32_t t = rol(a, 5) + f + e + k + w[i];
            e = d; d = c; c = rol(b, 30); b = a; a = t;
        }
        h[0] += a; h[1] += b; h[2] += c; h[3] += d; h[4] += e;
    }

    void update(const void* data, std::size_t n) {
        const unsigned char* p = static_cast<const unsigned char*>(data);
        total += n;
        while (n > 0) {
            std::size_t take = std::min(n, sizeof(buf) - fill);
            std::memcpy(buf + fill, p, take);
            fill += take; p += take; n -= take;
            if (fill == 64) { block(buf); fill = 0; }
        }
    }

    std::string finish() {
        std::uint64_t bits = total * 8;
        unsigned char pad = 0x80;
        update(&pad, 1);
        unsigned char zero = 0;
        while (fill != 56) update(&zero, 1);
        unsigned char len[8];
        for (int i = 0; i < 8; ++i) len[i] = (unsigned char)(bits >> (56 - 8 * i));
        update(len, 8);
        char out[41];
        for (int i = 0; i < 5; ++i)
            std::snprintf(out + 8 * i, 9, "%08x", h[i]);
        return std::string(out, 40);
    }
};

std::string fmt17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

} // namespace

std::string sha1_hex(const std::string& bytes) {
    Sha1 s;
    s.update(bytes.data(), bytes.size());
    return s.finish();
}

std::string file_blob_hash(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CorruptRecord("cannot hash missing file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    const std::string content = ss.str();
    Sha1 s;
    const std::string header = "blob " + std::to_string(content.size());
    s.update(header.data(), header.size() + 1);  // includes the NUL
    s.update(content.data(), content.size());
    return s.finish();
}

std::string report_to_json(const StatReport& rep, const std::string& config_json,
                           const std::string& spectrum_hash) {
    std::ostringstream os;
    os << "{\n";
    os << "  \"q\": \"" << rep.q_label << "\",\n";
    os << "  \"op\": \"" << (rep.op_kind == SpectralKind::laplace ? "laplace" : "dirac")
       << "\",\n";
    os << "  \"A\": " << fmt17(rep.support_radius) << ",\n";
    os << "  \"L\": " << fmt17(rep.window.L) << ",\n";
    os << "  \"tau\": " << fmt17(rep.window.tau) << ",\n";
    os << "  \"halved\": " << (rep.halved ? "true" : "false") << ",\n";
    os << "  \"degenerate\": " << (rep.degenerate ? "true" : "false") << ",\n";
    os << "  \"exact_mean_re\": " << fmt17(rep.exact_mean.real()) << ",\n";
    os << "  \"exact_mean_im\": " << fmt17(rep.exact_mean.imag()) << ",\n";
    os << "  \"exact_variance\": " << fmt17(rep.exact_variance) << ",\n";
    os << "  \"mc_mean_re\": " << fmt17(rep.mc_mean.real()) << ",\n";
    os << "  \"mc_mean_im\": " << fmt17(rep.mc_mean.imag()) << ",\n";
    os << "  \"mc_mean_se\": " << fmt17(rep.mc_mean_se) << ",\n";
    os << "  \"mc_variance\": " << fmt17(rep.mc_variance) << ",\n";
    os << "  \"mc_variance_se\": " << fmt17(rep.mc_variance_se) << ",\n";
    os << "  \"reference_variance\": " << fmt17(rep.reference_variance) << ",\n";
    os << "  \"rmt_reference\": " << fmt17(rep.rmt_reference) << ",\n";
    os << "  \"rmt_reference_kind\": \"" << rep.rmt_reference_kind << "\",\n";
    os << "  \"ifq\": " << fmt17(rep.ifq_value) << ",\n";
    os << "  \"cutoff_NL\": " << fmt17(rep.cutoff_NL) << ",\n";
    os << "  \"samples\": " << rep.sample_count << ",\n";
    os << "  \"seed\": " << rep.seed << ",\n";
    os << "  \"spectrum_hash\": \"" << spectrum_hash << "\",\n";
    os << "  \"config\": " << (config_json.empty() ? "null" : config_json) << "\n";
    os << "}\n";
    return os.str();
}

std::string csv_header() {
    return "q,A,L,tau,op,exact_var,mc_var,mc_se,ref_var,ifq,samples,seed,cutoff_NL";
}

std::string report_to_csv_row(const StatReport& rep) {
    std::ostringstream os;
    os << rep.q_label << ',' << fmt17(rep.support_radius) << ',' << fmt17(rep.window.L)
       << ',' << fmt17(rep.window.tau) << ','
       << (rep.op_kind == SpectralKind::laplace ? "laplace" : "dirac") << ','
       << fmt17(rep.exact_variance) << ',' << fmt17(rep.mc_variance) << ','
       << fmt17(rep.mc_variance_se) << ',' << fmt17(rep.reference_variance) << ','
       << fmt17(rep.ifq_value) << ',' << rep.sample_count << ',' << rep.seed << ','
       << fmt17(rep.cutoff_NL);
    return os.str();
}

} // namespace hypspec
