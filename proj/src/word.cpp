#include "hypspec/word.hpp"

#include <cstdlib>
#include <stdexcept>

namespace hypspec {

std::string word_to_text(const Word& w) {
    if (w.empty()) return "e";
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += ',';
        int signed_idx = letter_gen(w[i]) + 1;
        if (letter_is_inverse(w[i])) signed_idx = -signed_idx;
        out += std::to_string(signed_idx);
    }
    return out;
}

Word word_from_text(const std::string& text, int genus) {
    Word w;
    if (text == "e") return w;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        const std::string tok = text.substr(pos, comma - pos);
        char* end = nullptr;
        long v = std::strtol(tok.c_str(), &end, 10);
        if (end == tok.c_str() || *end != '\0' || v == 0 ||
            std::abs(v) > 2L * genus)
            throw std::invalid_argument("word_from_text: bad letter '" + tok + "'");
        w.push_back(make_letter(static_cast<int>(std::abs(v)) - 1, v < 0));
        pos = comma + 1;
    }
    return w;
}

std::string word_pretty(const Word& w, int genus) {
    if (w.empty()) return "e";
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += '.';
        int gen = letter_gen(w[i]);
        if (gen < genus)
            out += "a" + std::to_string(gen + 1);
        else
            out += "b" + std::to_string(gen - genus + 1);
        if (letter_is_inverse(w[i])) out += '\'';
    }
    return out;
}

} // namespace hypspec
