#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sofic {

using SymbolId = std::uint32_t;

/// A finite word over an alphabet, stored as symbol indices. May be empty.
using Word = std::vector<SymbolId>;

/// Ordered list of distinct symbol names.
class Alphabet {
public:
    Alphabet() = default;
    explicit Alphabet(std::vector<std::string> symbols);

    std::size_t size() const noexcept { return symbols_.size(); }
    const std::vector<std::string>& symbols() const noexcept { return symbols_; }
    const std::string& name(SymbolId s) const { return symbols_.at(s); }

    std::optional<SymbolId> find(std::string_view name) const;
    /// Throws ErrorKind::input for names not in the alphabet.
    SymbolId index(std::string_view name) const;

    /// True when every symbol name is a single character; words are then
    /// written without separators.
    bool single_character() const noexcept { return single_character_; }

    /// Parses "1001" (single-character alphabets) or "ab cd" (space separated).
    Word parse_word(std::string_view text) const;
    std::string format(const Word& w) const;

    bool operator==(const Alphabet& other) const { return symbols_ == other.symbols_; }

private:
    std::vector<std::string> symbols_;
    std::map<std::string, SymbolId, std::less<>> index_;
    bool single_character_ = true;
};

}  // namespace sofic
