#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sofic/presentation.hpp"

namespace sofic {

/// w is a block of the presented shift. Requires an essential presentation.
bool contains_word(const Presentation& p, const Word& w);

/// All blocks of length n in lexicographic symbol order.
std::vector<Word> blocks(const Presentation& p, std::size_t n);

/// Shortest word (as symbol names) in exactly one of the two languages, found
/// by a breadth-first search over pairs of forward subsets. Both graphs are
/// trimmed first, symbols are matched by name. With `max_length` the search
/// stops at that word length; otherwise it runs to closure (exact).
std::optional<std::vector<std::string>> language_mismatch(const Presentation& a, const Presentation& b,
                                                          std::optional<std::size_t> max_length,
                                                          std::size_t max_states = 1u << 20);

}  // namespace sofic
