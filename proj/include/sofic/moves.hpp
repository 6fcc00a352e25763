#pragma once

#include <string>
#include <string_view>

#include "sofic/presentation.hpp"

namespace sofic {

/// Inserts `star` after every occurrence of `symbol`: each edge u -a-> v
/// becomes u -a-> x_e -star-> v with a fresh vertex x_e. Throws
/// ErrorKind::input when `symbol` is unknown or `star` already exists.
Presentation symbol_expand(const Presentation& p, std::string_view symbol, std::string_view star = "*");

/// n-th higher block presentation: vertices are paths of length n-1, edges
/// paths of length n labelled by their n-block. The alphabet holds the
/// realised n-blocks in lexicographic order. Requires an essential
/// presentation and n >= 2.
Presentation higher_block(const Presentation& p, std::size_t n, std::size_t max_edges = 1u << 16);

}  // namespace sofic
