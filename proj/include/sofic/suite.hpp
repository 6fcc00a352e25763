#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sofic/corpus.hpp"
#include "sofic/io.hpp"
#include "sofic/presentation.hpp"
#include "sofic/subset_engine.hpp"

namespace sofic {

enum class Status { pass, fail, skip };
const char* to_string(Status s);

struct PropertyResult {
    std::string property;
    Status status;
    std::string detail;
};

struct PropertyReport {
    std::string subject;
    std::vector<PropertyResult> results;
    /// Canonical document of the input, present iff some property failed.
    std::optional<Json> reproducer;

    std::size_t count(Status s) const;
    const PropertyResult* find(std::string_view property) const;
};

struct SuiteOptions {
    EngineLimits limits;
    /// Language bound for cover verification.
    std::size_t block_bound = 8;
    /// Brute-force past-language comparison runs on graphs up to this size.
    std::size_t oracle_max_vertices = 4;
    std::size_t oracle_length = 8;
    /// Orders used for the higher block invariance checks.
    std::vector<std::size_t> higher_block_orders{2};
    /// Higher block recodings with more paths than this are skipped.
    std::size_t max_higher_block_edges = 2048;
};

/// Evaluates every applicable property on the essential part of p.
/// Inapplicable properties are skipped with the failing guard; resource caps
/// skip with their cause.
PropertyReport run_property_suite(const Presentation& p, std::string subject, const SuiteOptions& options = {});

struct ExpectationResult {
    std::string metric;
    Json expected;
    Json actual;
    std::string source;
    bool passed;
};

struct EntryReport {
    std::vector<ExpectationResult> expectations;
    PropertyReport properties;
};

struct CheckReport {
    std::vector<EntryReport> entries;

    bool ok() const;
    bool capped() const;  // some property was skipped on a resource cap
};

/// Corpus expectations plus the suite on every entry, with higher block
/// orders 2 and 3.
CheckReport check_corpus(const SuiteOptions& options = {});
EntryReport check_corpus_entry(const CorpusEntry& entry, const SuiteOptions& options = {});
/// Suite on `count` random presentations with seeds seed, seed+1, ...
CheckReport check_random(std::size_t count, std::uint64_t seed, const SuiteOptions& options = {},
                         const RandomSpec& shape = {});
CheckReport check_presentation(const Presentation& p, std::string subject, const SuiteOptions& options = {});

Json property_report_to_json(const PropertyReport& r);
Json check_report_to_json(const CheckReport& r);

}  // namespace sofic
