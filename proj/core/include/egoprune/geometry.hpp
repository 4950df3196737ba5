#pragma once

#include <cstdint>
#include <vector>

#include "egoprune/image.hpp"
#include "egoprune/math.hpp"

namespace egoprune {

/// Projective map from previous-frame pixels to current-frame pixels, stored
/// with unit Frobenius norm and a positive-h9 sign convention. h and c*h map
/// every point identically for any c != 0.
struct Homography {
    Mat3 h = Mat3::identity();
    int32_t n_inliers = 0;
    double mean_reproj_error = 0.0;
};

struct Correspondence {
    Vec2 src;  // previous frame
    Vec2 dst;  // current frame
};

struct RansacParams {
    int iters = 2000;
    double reproj_thresh = 3.0;  // pixels
    bool adaptive = false;       // early exit once a pure sample is near certain
};

/// Normalizes scale and fixes the sign (positive h9, falling back to the
/// first entry of meaningful magnitude). Throws Errc::singular_matrix for a
/// non-invertible matrix and Errc::invalid_argument for non-finite entries.
Homography make_homography(const Mat3& raw);

/// Applies H to p. Throws Errc::point_at_infinity when the denominator
/// h7 x + h8 y + h9 is within 1e-12 of zero.
Vec2 warp_point(const Homography& h, Vec2 p);
Vec2 warp_point(const Mat3& h, Vec2 p);

/// Direct linear transform from >= 4 correspondences with Hartley
/// normalization of both point sets.
Homography dlt_homography(const std::vector<Correspondence>& corrs);

struct RansacResult {
    Homography h;
    std::vector<uint8_t> inlier_mask;  // one flag per input correspondence
};

/// Classic RANSAC: minimal 4-point DLT fits scored by one-way reprojection
/// error, best consensus refit on all of its inliers. Deterministic given the
/// seed. Throws Errc::insufficient_data (< 4 matches) or Errc::no_consensus
/// (best model below 4 inliers).
RansacResult ransac_homography(const std::vector<Correspondence>& matches,
                               const RansacParams& params, uint64_t seed);

/// Fraction of the current frame covered by the previous frame's quad warped
/// through H, via Sutherland-Hodgman clipping against the frame rectangle.
double frame_overlap(const Homography& h, int width, int height);

/// Area of a polygon clipped to [0,w] x [0,h].
double clipped_quad_area(const std::vector<Vec2>& quad, double w, double h);

struct WarpedImage {
    ImageBuffer image;
    std::vector<uint8_t> coverage;  // 1 where the source quad covered the pixel
};

/// Inverse-maps every output pixel through H^-1 and samples the source with
/// bilinear interpolation; uncovered pixels are black with coverage 0.
WarpedImage warp_image(const Homography& h, const ImageBuffer& src, int out_w, int out_h);

}  // namespace egoprune
