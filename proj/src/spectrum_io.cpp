#include "hypspec/spectrum_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "hypspec/errors.hpp"

namespace hypspec {

namespace {

std::string fmt17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

double parse_double(const std::string& tok, const char* what) {
    char* end = nullptr;
    double v = std::strtod(tok.c_str(), &end);
    if (end == tok.c_str() || *end != '\0')
        throw CorruptRecord(std::string("bad ") + what + " field: " + tok);
    return v;
}

} // namespace

void write_spectrum(const LengthSpectrum& spec, const std::string& path) {
    std::ofstream out(path, std::ios::binary);  // binary: no newline surprises
    if (!out) throw CorruptRecord("cannot open for writing: " + path);
    out << "HYPSPEC v" << spec.format_version << ' ' << spec.gens_label << ' '
        << fmt17(spec.L_max) << '\n';
    for (const GeodesicClass& c : spec.classes) {
        out << word_to_text(c.normal_form) << ' ' << fmt17(c.length);
        for (auto h : c.homology) out << ' ' << h;
        out << ' ' << (c.sigma > 0 ? "+1" : "-1") << ' ' << fmt17(c.trace) << '\n';
    }
    if (!out) throw CorruptRecord("write failed: " + path);
}

LengthSpectrum read_spectrum(const std::string& path, const GeneratorSet& gens) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CorruptRecord("cannot open spectrum cache: " + path);
    std::string line;
    if (!std::getline(in, line)) throw CorruptRecord("empty spectrum cache");

    LengthSpectrum spec;
    {
        std::istringstream hs(line);
        std::string magic, vtok, label, lmax_tok;
        if (!(hs >> magic >> vtok >> label >> lmax_tok) || magic != "HYPSPEC")
            throw CorruptRecord("bad header: " + line);
        if (vtok.size() < 2 || vtok[0] != 'v')
            throw CorruptRecord("bad version field: " + vtok);
        int ver = std::atoi(vtok.c_str() + 1);
        if (ver != 1)
            throw FormatVersionMismatch("unsupported spectrum format version " + vtok);
        spec.format_version = ver;
        spec.gens_label = label;
        spec.L_max = parse_double(lmax_tok, "L_max");
    }

    const int want_fields = 2 + 2 * gens.genus + 2;
    while (std::getline(in, line)) {
        if (line.empty()) throw CorruptRecord("blank line in spectrum cache");
        std::istringstream ls(line);
        std::vector<std::string> toks;
        std::string t;
        while (ls >> t) toks.push_back(t);
        if (static_cast<int>(toks.size()) != want_fields)
            throw CorruptRecord("record has " + std::to_string(toks.size()) +
                                " fields, expected " + std::to_string(want_fields));
        GeodesicClass c;
        try {
            c.normal_form = word_from_text(toks[0], gens.genus);
        } catch (const std::exception& e) {
            throw CorruptRecord(e.what());
        }
        c.length = parse_double(toks[1], "length");
        for (int k = 0; k < 2 * gens.genus; ++k) {
            const std::string& f = toks[static_cast<std::size_t>(2 + k)];
            char* end = nullptr;
            c.homology.push_back(std::strtol(f.c_str(), &end, 10));
            if (end == f.c_str() || *end != '\0')
                throw CorruptRecord("bad homology field: " + f);
        }
        const std::string& sg = toks[static_cast<std::size_t>(2 + 2 * gens.genus)];
        if (sg == "+1")
            c.sigma = +1;
        else if (sg == "-1")
            c.sigma = -1;
        else
            throw CorruptRecord("bad sigma field: " + sg);
        c.trace = parse_double(toks.back(), "trace");
        spec.classes.push_back(std::move(c));
    }
    check_spectrum_invariants(spec, gens);
    return spec;
}

LengthSpectrum read_spectrum(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CorruptRecord("cannot open spectrum cache: " + path);
    std::string magic, ver, label;
    in >> magic >> ver >> label;
    if (label != "bolza")
        throw CorruptRecord("cache label '" + label +
                            "' is not a built-in generator set; pass the set explicitly");
    return read_spectrum(path, bolza_generators());
}

} // namespace hypspec
