#include "egoprune/token_grid.hpp"

#include <cmath>
#include <string>

#include "egoprune/error.hpp"

namespace egoprune {

void TokenGrid::validate() const {
    if (rows < 1 || cols < 1 || d < 1 || patch_w < 1 || patch_h < 1 || frame_w < 1 || frame_h < 1) {
        fail(Errc::bad_header, "TokenGrid: all dimensions must be positive");
    }
    // The grid may overhang the frame by less than one full patch.
    if (static_cast<int64_t>(rows) * patch_h > static_cast<int64_t>(frame_h) + patch_h ||
        static_cast<int64_t>(cols) * patch_w > static_cast<int64_t>(frame_w) + patch_w) {
        fail(Errc::bad_header, "TokenGrid: patch grid exceeds frame bounds");
    }
    const size_t expected = static_cast<size_t>(rows) * cols * d;
    if (embeddings.size() != expected) {
        fail(Errc::dimension_mismatch,
             "TokenGrid: embedding buffer holds " + std::to_string(embeddings.size()) +
                 " scalars, expected " + std::to_string(expected));
    }
    for (double v : embeddings) {
        if (!std::isfinite(v)) {
            fail(Errc::non_finite_payload, "TokenGrid: non-finite embedding value");
        }
    }
}

std::vector<Vec2> patch_centers(const TokenGrid& grid) {
    std::vector<Vec2> centers;
    centers.reserve(static_cast<size_t>(grid.token_count()));
    for (int32_t r = 0; r < grid.rows; ++r) {
        for (int32_t c = 0; c < grid.cols; ++c) {
            centers.push_back({(c + 0.5) * grid.patch_w, (r + 0.5) * grid.patch_h});
        }
    }
    return centers;
}

}  // namespace egoprune
