#include "sofic/alphabet.hpp"

#include <sstream>

#include "sofic/error.hpp"

namespace sofic {

Alphabet::Alphabet(std::vector<std::string> symbols) : symbols_(std::move(symbols)) {
    if (symbols_.empty()) {
        throw Error(ErrorKind::input, "empty alphabet");
    }
    for (SymbolId i = 0; i < symbols_.size(); ++i) {
        const auto& s = symbols_[i];
        if (s.empty()) {
            throw Error(ErrorKind::input, "empty symbol name");
        }
        if (!index_.emplace(s, i).second) {
            throw Error(ErrorKind::input, "duplicate symbol '" + s + "'");
        }
        if (s.size() != 1) {
            single_character_ = false;
        }
    }
}

std::optional<SymbolId> Alphabet::find(std::string_view name) const {
    auto it = index_.find(name);
    if (it == index_.end()) {
        return std::nullopt;
    }
    return it->second;
}

SymbolId Alphabet::index(std::string_view name) const {
    if (auto s = find(name)) {
        return *s;
    }
    throw Error(ErrorKind::input, "unknown symbol '" + std::string(name) + "'");
}

Word Alphabet::parse_word(std::string_view text) const {
    Word w;
    if (single_character_) {
        for (char c : text) {
            if (c == ' ') {
                continue;
            }
            w.push_back(index(std::string_view(&c, 1)));
        }
        return w;
    }
    std::istringstream in{std::string(text)};
    std::string token;
    while (in >> token) {
        w.push_back(index(token));
    }
    return w;
}

std::string Alphabet::format(const Word& w) const {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (!single_character_ && i > 0) {
            out += ' ';
        }
        out += name(w[i]);
    }
    return out;
}

}  // namespace sofic
