#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sofic/io.hpp"
#include "sofic/presentation.hpp"
#include "sofic/subset_engine.hpp"

namespace sofic {

enum class CoverKind { left_krieger, past_set, left_fischer, right_krieger, right_fischer };

const char* to_string(CoverKind k);
/// CLI spellings: krieger, past-set, fischer-left, fischer-right, krieger-right.
std::optional<CoverKind> parse_cover_kind(std::string_view s);

struct CoverOptions {
    EngineLimits limits;
    /// Language equality with the source is checked for words up to this length...
    std::size_t block_bound = 10;
    /// ...or exactly, by closing the product of forward subsets.
    bool exact_language = false;
    bool verify = true;
};

/// A cover built from the predecessor-set calculus of a source presentation.
///
/// Vertices are classes of the source's past partition; for left kinds the
/// class id and representative subset refer to the source's Pre family, for
/// right kinds to that of its transpose.
struct Cover {
    CoverKind kind;
    Presentation graph;
    std::vector<std::uint32_t> class_of_vertex;
    std::vector<VertexSet> representative_subset;
    std::vector<bool> synchronising;
    std::vector<std::optional<Word>> witness;  // shortest synchronising word, when synchronising
    std::string note;
};

/// Vertices: predecessor-set classes of right-rays. Two-sided input only.
Cover left_krieger_cover(const Presentation& p, const CoverOptions& options = {});
Cover left_krieger_cover(const Presentation& p, const SubsetAnalysis& analysis,
                         const CoverOptions& options = {});

/// Vertices: predecessor-set classes of all blocks.
Cover past_set_cover(const Presentation& p, const CoverOptions& options = {});
Cover past_set_cover(const Presentation& p, const SubsetAnalysis& analysis,
                     const CoverOptions& options = {});

/// Induced subgraph of the past set cover on synchronising classes. The
/// presented shift must be irreducible.
Cover left_fischer_cover(const Presentation& p, const CoverOptions& options = {});
Cover left_fischer_cover(const Presentation& p, const SubsetAnalysis& analysis,
                         const CoverOptions& options = {});

/// Right Krieger / right Fischer cover via the transpose.
Cover right_cover(const Presentation& p, CoverKind kind, const CoverOptions& options = {});

/// The cover on finite-word pasts of right-rays; identified with the left
/// Krieger cover (finite pasts determine infinite pasts on essential graphs).
Cover ray_word_cover(const Presentation& p, const CoverOptions& options = {});
/// The cover on infinite pasts of finite words; identified with the past set cover.
Cover word_ray_cover(const Presentation& p, const CoverOptions& options = {});

Cover build_cover(const Presentation& p, CoverKind kind, const CoverOptions& options = {});

struct SynchronisingClass {
    std::uint32_t class_id;
    Word witness;
};

/// Classes of I(m) over intrinsically synchronising words m, each with its
/// shortest such m. Sorted by class id.
std::vector<SynchronisingClass> synchronising_classes(const SubsetAnalysis& analysis);
std::vector<SynchronisingClass> synchronising_classes(const Presentation& p,
                                                      const EngineLimits& limits = {});

/// Edge- and label-preserving vertex injection. Vertices with equal
/// representative subsets are matched first.
std::optional<std::vector<VertexId>> subgraph_embedding(const Cover& inner, const Cover& outer);

Json cover_to_json(const Cover& c);
std::string cover_to_dot(const Cover& c);

}  // namespace sofic
