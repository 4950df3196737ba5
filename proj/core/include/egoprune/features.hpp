#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "egoprune/image.hpp"
#include "egoprune/math.hpp"

namespace egoprune {

struct Keypoint {
    Vec2 position;
    double score = 0.0;  // corner response (segment-test SAD)
};

/// 256-bit binary descriptor packed into four 64-bit words.
struct BinaryDescriptor {
    std::array<uint64_t, 4> bits{};

    int hamming(const BinaryDescriptor& other) const;
};

struct Match {
    int32_t idx_a = 0;
    int32_t idx_b = 0;
    int32_t distance = 0;  // Hamming, in [0, 256]
};

struct FeatureParams {
    int fast_threshold = 20;   // intensity delta for the segment test
    int max_keypoints = 1000;  // keep strongest this many
    double match_ratio = 0.75; // Lowe ratio
};

/// FAST-9 segment-test corners on the luma image, 3x3 non-maximum
/// suppression, sorted by descending score and truncated to max_keypoints.
/// Requires at least a 32x32 image.
std::vector<Keypoint> detect_corners(const ImageBuffer& image, int threshold = 20,
                                     int max_keypoints = 1000);

/// BRIEF-256 descriptors over box-smoothed 31x31 patches with a fixed seeded
/// sampling-pair table. Keypoints closer than 16 px to a border are dropped;
/// kept[i] gives the original index of descriptor i.
struct DescribeResult {
    std::vector<BinaryDescriptor> descriptors;
    std::vector<int32_t> kept;
};

DescribeResult describe(const ImageBuffer& image, const std::vector<Keypoint>& keypoints);

/// Brute-force Hamming matching with Lowe's ratio test; at most one match per
/// b-descriptor survives (lowest distance wins). Empty inputs give an empty
/// result. ratio must lie in (0, 1).
std::vector<Match> match_ratio(const std::vector<BinaryDescriptor>& desc_a,
                               const std::vector<BinaryDescriptor>& desc_b, double ratio = 0.75);

/// Detection + description for one frame, keypoints compacted to the
/// described subset.
struct FrameFeatures {
    std::vector<Keypoint> keypoints;
    std::vector<BinaryDescriptor> descriptors;
};

FrameFeatures compute_frame_features(const ImageBuffer& image, const FeatureParams& params);

}  // namespace egoprune
