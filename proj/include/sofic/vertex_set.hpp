#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <vector>

#include "sofic/presentation.hpp"

namespace sofic {

/// Fixed-width set of vertices, one bit per vertex.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::size_t width) : width_(width), words_((width + 63) / 64, 0) {}

    static VertexSet full(std::size_t width) {
        VertexSet s(width);
        for (std::size_t v = 0; v < width; ++v) {
            s.set(static_cast<VertexId>(v));
        }
        return s;
    }

    std::size_t width() const noexcept { return width_; }

    bool test(VertexId v) const { return (words_[v >> 6] >> (v & 63)) & 1u; }
    void set(VertexId v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
    void reset(VertexId v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

    bool empty() const {
        for (auto w : words_) {
            if (w != 0) {
                return false;
            }
        }
        return true;
    }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) {
            c += static_cast<std::size_t>(std::popcount(w));
        }
        return c;
    }

    bool subset_of(const VertexSet& other) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            if (words_[i] & ~other.words_[i]) {
                return false;
            }
        }
        return true;
    }

    bool intersects(const VertexSet& other) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            if (words_[i] & other.words_[i]) {
                return true;
            }
        }
        return false;
    }

    VertexSet& operator|=(const VertexSet& other) {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            words_[i] |= other.words_[i];
        }
        return *this;
    }

    std::vector<VertexId> members() const {
        std::vector<VertexId> out;
        for (std::size_t v = 0; v < width_; ++v) {
            if (test(static_cast<VertexId>(v))) {
                out.push_back(static_cast<VertexId>(v));
            }
        }
        return out;
    }

    std::size_t hash() const noexcept {
        std::size_t h = width_;
        for (auto w : words_) {
            h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return h;
    }

    bool operator==(const VertexSet&) const = default;

private:
    std::size_t width_ = 0;
    std::vector<std::uint64_t> words_;
};

struct VertexSetHash {
    std::size_t operator()(const VertexSet& s) const noexcept { return s.hash(); }
};

}  // namespace sofic
