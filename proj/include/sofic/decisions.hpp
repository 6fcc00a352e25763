#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sofic/io.hpp"
#include "sofic/presentation.hpp"
#include "sofic/subset_engine.hpp"

namespace sofic {

enum class Verdict { no, yes, unknown };

const char* to_string(Verdict v);
inline Verdict verdict(bool b) { return b ? Verdict::yes : Verdict::no; }

/// For all blocks u, w there is v with uvw a block. Requires an essential
/// presentation.
bool is_irreducible_shift(const Presentation& p, const EngineLimits& limits = {});

/// Whether uw, wv in the language always give uwv in the language. Throws
/// ErrorKind::precondition when w is not a block.
bool is_intrinsically_synchronising(const Presentation& p, const Word& w, const EngineLimits& limits = {});
bool is_intrinsically_synchronising(const SubsetAnalysis& analysis, const Word& w);

/// yes iff every sufficiently long block is intrinsically synchronising.
/// unknown when the subset family or monoid exceeds its cap.
Verdict is_sft(const Presentation& p, const EngineLimits& limits = {});
bool is_sft(const SubsetAnalysis& analysis);

/// Two label-equal paths from a common vertex.
struct PathPair {
    VertexId start;
    Word label;
    std::vector<VertexId> first;   // vertices visited after start
    std::vector<VertexId> second;
};

struct ClosingReport {
    bool closing = true;
    /// Smallest D such that label-equal paths of length D+1 from one vertex
    /// share their first edge. Present iff closing.
    std::optional<std::size_t> delay;
    /// Present iff not closing: paths with different first edges that can
    /// be pumped to any length.
    std::optional<PathPair> witness;
};

/// right: paths compared forwards from a common start; left: on the transpose.
ClosingReport closing_delay(const Presentation& p, Side side);

struct AftReport {
    bool aft = false;
    ClosingReport closing;  // right-closing report of the left Fischer cover
    std::string note;
};

/// Irreducible shift whose left Fischer cover is right-closing. Throws
/// ErrorKind::precondition for shifts that are not irreducible. For SFTs the
/// right-closing verdict is reported together with a note.
AftReport aft_report(const Presentation& p, const EngineLimits& limits = {});
bool is_aft(const Presentation& p, const EngineLimits& limits = {});

/// Distinct circuits with equal labels in a left-resolving graph.
struct DivergingWord {
    Word word;
    std::vector<VertexId> first;   // circuit vertices, first == last
    std::vector<VertexId> second;
};

/// Lexicographically first pair of distinct vertices lying on a cycle of
/// the pair graph (arcs: same-label edges into distinct pairs), with its
/// shortest cycle. Intended for left Fischer covers.
std::optional<DivergingWord> diverging_periodic_word(const Presentation& p);

struct DecisionReport {
    bool essential = false;
    bool left_resolving = false;
    bool right_resolving = false;
    bool shift_irreducible = false;
    Verdict sft = Verdict::unknown;
    Verdict strictly_sofic = Verdict::unknown;
    /// no when the shift is not irreducible.
    Verdict aft = Verdict::unknown;
    ClosingReport right_closing;
    ClosingReport left_closing;
    std::vector<std::string> notes;
};

/// Analyses the essential part of p; `essential` refers to p itself.
DecisionReport inspect(const Presentation& p, const EngineLimits& limits = {});

Json closing_to_json(const Presentation& p, const ClosingReport& r);
Json report_to_json(const Presentation& p, const DecisionReport& r);
std::string report_to_table(const DecisionReport& r);

}  // namespace sofic
