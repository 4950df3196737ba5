#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "egoprune/math.hpp"

namespace egoprune {

/// One frame's patch-grid of token embeddings. Token i sits at grid cell
/// (i / cols, i % cols), row-major; embeddings are N x d doubles.
struct TokenGrid {
    int32_t rows = 0;
    int32_t cols = 0;
    int32_t d = 0;
    int32_t patch_w = 0;
    int32_t patch_h = 0;
    int32_t frame_w = 0;
    int32_t frame_h = 0;
    std::vector<double> embeddings;

    int32_t token_count() const { return rows * cols; }

    std::span<const double> token(int32_t i) const {
        return {embeddings.data() + static_cast<size_t>(i) * d, static_cast<size_t>(d)};
    }
    std::span<double> token_mut(int32_t i) {
        return {embeddings.data() + static_cast<size_t>(i) * d, static_cast<size_t>(d)};
    }

    bool same_grid_shape(const TokenGrid& o) const {
        return rows == o.rows && cols == o.cols && d == o.d;
    }

    /// Throws unless dimensions, patch geometry, buffer size, and finiteness
    /// invariants all hold.
    void validate() const;
};

/// Patch centers in pixel coordinates: token (r, c) maps to
/// ((c + 0.5) * patch_w, (r + 0.5) * patch_h).
std::vector<Vec2> patch_centers(const TokenGrid& grid);

}  // namespace egoprune
