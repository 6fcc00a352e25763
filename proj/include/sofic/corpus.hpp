#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sofic/io.hpp"
#include "sofic/presentation.hpp"

namespace sofic {

/// A named expected value of a metric, with where it comes from.
struct Expectation {
    std::string metric;
    Json expected;
    std::string source;
};

struct CorpusEntry {
    std::string name;
    std::string description;
    Presentation presentation;
    std::vector<Expectation> expected;
    /// Optional independent description of the language: true when the word
    /// ends with a forbidden factor. Blocks are compared against it up to
    /// `validation_length`.
    std::function<bool(const Word&)> ends_forbidden;
    std::size_t validation_length = 0;
    /// Expected left Krieger cover up to labelled isomorphism, when known.
    std::optional<Presentation> reference_krieger;
};

std::vector<CorpusEntry> corpus();
std::optional<CorpusEntry> corpus_entry(std::string_view name);

/// Unlabelled example with communication classes {v,w}, {x}, {u}, {y};
/// u lies on no circuit. Edges carry a single dummy symbol.
Presentation communication_example();

/// Metrics usable in expectations, e.g. "krieger_vertices", "aft".
std::vector<std::string> metric_names();
Json evaluate_metric(const CorpusEntry& entry, const std::string& metric);

/// First word (up to the validation length) on which the presentation and
/// the forbidden-factor description disagree.
std::optional<Word> validate_against_forbidden(const CorpusEntry& entry);

struct RandomSpec {
    std::uint64_t seed = 1;
    std::size_t max_vertices = 6;
    std::size_t max_symbols = 3;
    double edge_density = 0.2;
    std::size_t max_retries = 1000;
    /// Draw at most one incoming edge per (vertex, label).
    bool left_resolving = false;
};

/// Deterministic in the spec; trimmed to its essential part and restricted
/// to the symbols it uses. Resamples until nonempty.
Presentation random_presentation(const RandomSpec& spec);

}  // namespace sofic
