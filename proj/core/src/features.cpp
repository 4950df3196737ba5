#include "egoprune/features.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <string>

#include "egoprune/error.hpp"
#include "egoprune/prng.hpp"

namespace egoprune {

namespace {

// Bresenham circle of radius 3, clockwise from 12 o'clock.
constexpr int kCircle[16][2] = {
    {0, -3}, {1, -3}, {2, -2}, {3, -1}, {3, 0},  {3, 1},  {2, 2},  {1, 3},
    {0, 3},  {-1, 3}, {-2, 2}, {-3, 1}, {-3, 0}, {-3, -1}, {-2, -2}, {-1, -3},
};

constexpr int kSegmentLength = 9;  // FAST-9
constexpr int kDescriptorBorder = 16;

// Longest circular run of set flags; returns the summed score of that run.
// flags/diffs are the 16 circle comparisons for one pixel.
double best_arc_score(const bool flags[16], const double diffs[16]) {
    double best = -1.0;
    for (int start = 0; start < 16; ++start) {
        if (!flags[start]) {
            continue;
        }
        int len = 0;
        double sum = 0.0;
        while (len < 16 && flags[(start + len) % 16]) {
            sum += diffs[(start + len) % 16];
            ++len;
        }
        if (len >= kSegmentLength && sum > best) {
            best = sum;
        }
    }
    return best;
}

struct PairTable {
    // 256 (p, q) offset pairs inside the 31x31 patch, clear of the 5x5
    // smoothing window.
    std::array<int8_t, 256> px, py, qx, qy;
};

const PairTable& sampling_pairs() {
    static const PairTable table = [] {
        PairTable t;
        Prng rng(0x42f0e1eba9ea3693ull);  // fixed: the table is part of the format
        for (int i = 0; i < 256; ++i) {
            int ax, ay, bx, by;
            do {
                ax = static_cast<int>(rng.next_below(27)) - 13;
                ay = static_cast<int>(rng.next_below(27)) - 13;
                bx = static_cast<int>(rng.next_below(27)) - 13;
                by = static_cast<int>(rng.next_below(27)) - 13;
            } while (ax == bx && ay == by);
            t.px[i] = static_cast<int8_t>(ax);
            t.py[i] = static_cast<int8_t>(ay);
            t.qx[i] = static_cast<int8_t>(bx);
            t.qy[i] = static_cast<int8_t>(by);
        }
        return t;
    }();
    return table;
}

// Summed-area table with one row/col of zero padding at the origin.
struct Integral {
    int w = 0, h = 0;
    std::vector<uint32_t> sums;

    explicit Integral(const std::vector<uint8_t>& gray, int width, int height)
        : w(width), h(height), sums(static_cast<size_t>(width + 1) * (height + 1), 0) {
        for (int y = 0; y < h; ++y) {
            uint32_t row = 0;
            for (int x = 0; x < w; ++x) {
                row += gray[static_cast<size_t>(y) * w + x];
                sums[static_cast<size_t>(y + 1) * (w + 1) + (x + 1)] =
                    sums[static_cast<size_t>(y) * (w + 1) + (x + 1)] + row;
            }
        }
    }

    // Sum over the 5x5 box centred at (x, y); caller keeps it in bounds.
    uint32_t box5(int x, int y) const {
        const int x0 = x - 2, y0 = y - 2, x1 = x + 3, y1 = y + 3;
        return sums[static_cast<size_t>(y1) * (w + 1) + x1] -
               sums[static_cast<size_t>(y0) * (w + 1) + x1] -
               sums[static_cast<size_t>(y1) * (w + 1) + x0] +
               sums[static_cast<size_t>(y0) * (w + 1) + x0];
    }
};

}  // namespace

int BinaryDescriptor::hamming(const BinaryDescriptor& other) const {
    int d = 0;
    for (int i = 0; i < 4; ++i) {
        d += std::popcount(bits[i] ^ other.bits[i]);
    }
    return d;
}

std::vector<Keypoint> detect_corners(const ImageBuffer& image, int threshold, int max_keypoints) {
    if (image.width < 32 || image.height < 32) {
        fail(Errc::invalid_argument, "detect_corners: image must be at least 32x32, got " +
                                         std::to_string(image.width) + "x" +
                                         std::to_string(image.height));
    }
    if (max_keypoints < 1) {
        fail(Errc::invalid_argument, "detect_corners: max_keypoints must be positive");
    }
    const int w = image.width;
    const int h = image.height;
    const std::vector<uint8_t> gray = to_grayscale(image);

    std::vector<double> score_map(static_cast<size_t>(w) * h, -1.0);

    for (int y = 3; y < h - 3; ++y) {
        for (int x = 3; x < w - 3; ++x) {
            const int center = gray[static_cast<size_t>(y) * w + x];
            const int hi = center + threshold;
            const int lo = center - threshold;

            bool bright[16], dark[16];
            double bright_diff[16], dark_diff[16];
            int n_bright = 0, n_dark = 0;
            for (int i = 0; i < 16; ++i) {
                const int v = gray[static_cast<size_t>(y + kCircle[i][1]) * w + (x + kCircle[i][0])];
                bright[i] = v > hi;
                dark[i] = v < lo;
                bright_diff[i] = bright[i] ? v - hi : 0.0;
                dark_diff[i] = dark[i] ? lo - v : 0.0;
                n_bright += bright[i];
                n_dark += dark[i];
            }
            if (n_bright < kSegmentLength && n_dark < kSegmentLength) {
                continue;
            }
            double score = -1.0;
            if (n_bright >= kSegmentLength) {
                score = std::max(score, best_arc_score(bright, bright_diff));
            }
            if (n_dark >= kSegmentLength) {
                score = std::max(score, best_arc_score(dark, dark_diff));
            }
            score_map[static_cast<size_t>(y) * w + x] = score;
        }
    }

    // 3x3 non-maximum suppression; score ties resolved by raster order.
    std::vector<Keypoint> keypoints;
    for (int y = 3; y < h - 3; ++y) {
        for (int x = 3; x < w - 3; ++x) {
            const double s = score_map[static_cast<size_t>(y) * w + x];
            if (s < 0.0) {
                continue;
            }
            bool is_max = true;
            for (int dy = -1; dy <= 1 && is_max; ++dy) {
                for (int dx = -1; dx <= 1; ++dx) {
                    if (dx == 0 && dy == 0) {
                        continue;
                    }
                    const double ns = score_map[static_cast<size_t>(y + dy) * w + (x + dx)];
                    if (ns > s || (ns == s && (dy < 0 || (dy == 0 && dx < 0)))) {
                        is_max = false;
                        break;
                    }
                }
            }
            if (is_max) {
                keypoints.push_back({{static_cast<double>(x), static_cast<double>(y)}, s});
            }
        }
    }

    std::sort(keypoints.begin(), keypoints.end(), [](const Keypoint& a, const Keypoint& b) {
        if (a.score != b.score) {
            return a.score > b.score;
        }
        if (a.position.y != b.position.y) {
            return a.position.y < b.position.y;
        }
        return a.position.x < b.position.x;
    });
    if (keypoints.size() > static_cast<size_t>(max_keypoints)) {
        keypoints.resize(static_cast<size_t>(max_keypoints));
    }
    return keypoints;
}

DescribeResult describe(const ImageBuffer& image, const std::vector<Keypoint>& keypoints) {
    const int w = image.width;
    const int h = image.height;
    const std::vector<uint8_t> gray = to_grayscale(image);
    const Integral integral(gray, w, h);
    const PairTable& pairs = sampling_pairs();

    DescribeResult out;
    out.descriptors.reserve(keypoints.size());
    out.kept.reserve(keypoints.size());

    for (size_t i = 0; i < keypoints.size(); ++i) {
        const int cx = static_cast<int>(std::lround(keypoints[i].position.x));
        const int cy = static_cast<int>(std::lround(keypoints[i].position.y));
        if (cx < kDescriptorBorder || cy < kDescriptorBorder || cx >= w - kDescriptorBorder ||
            cy >= h - kDescriptorBorder) {
            continue;
        }
        BinaryDescriptor desc;
        for (int b = 0; b < 256; ++b) {
            const uint32_t p = integral.box5(cx + pairs.px[b], cy + pairs.py[b]);
            const uint32_t q = integral.box5(cx + pairs.qx[b], cy + pairs.qy[b]);
            if (p < q) {
                desc.bits[b >> 6] |= uint64_t{1} << (b & 63);
            }
        }
        out.descriptors.push_back(desc);
        out.kept.push_back(static_cast<int32_t>(i));
    }
    return out;
}

std::vector<Match> match_ratio(const std::vector<BinaryDescriptor>& desc_a,
                               const std::vector<BinaryDescriptor>& desc_b, double ratio) {
    if (!(ratio > 0.0 && ratio < 1.0)) {
        fail(Errc::invalid_argument, "match_ratio: ratio must lie in (0, 1)");
    }
    if (desc_a.empty() || desc_b.size() < 2) {
        return {};
    }

    std::vector<Match> candidates;
    candidates.reserve(desc_a.size());
    for (size_t ia = 0; ia < desc_a.size(); ++ia) {
        int best = std::numeric_limits<int>::max();
        int second = std::numeric_limits<int>::max();
        int best_idx = -1;
        for (size_t ib = 0; ib < desc_b.size(); ++ib) {
            const int d = desc_a[ia].hamming(desc_b[ib]);
            if (d < best) {
                second = best;
                best = d;
                best_idx = static_cast<int>(ib);
            } else if (d < second) {
                second = d;
            }
        }
        if (best < ratio * second) {
            candidates.push_back({static_cast<int32_t>(ia), best_idx, best});
        }
    }

    // Resolve many-to-one collisions: keep the lowest distance per b index
    // (ties to the lowest a index).
    std::vector<int32_t> winner(desc_b.size(), -1);
    for (int32_t c = 0; c < static_cast<int32_t>(candidates.size()); ++c) {
        const int32_t b = candidates[c].idx_b;
        if (winner[b] < 0 || candidates[c].distance < candidates[winner[b]].distance) {
            winner[b] = c;
        }
    }
    std::vector<Match> result;
    for (const int32_t c : winner) {
        if (c >= 0) {
            result.push_back(candidates[c]);
        }
    }
    std::sort(result.begin(), result.end(),
              [](const Match& l, const Match& r) { return l.idx_a < r.idx_a; });
    return result;
}

FrameFeatures compute_frame_features(const ImageBuffer& image, const FeatureParams& params) {
    FrameFeatures out;
    const std::vector<Keypoint> raw = detect_corners(image, params.fast_threshold, params.max_keypoints);
    const DescribeResult described = describe(image, raw);
    out.descriptors = described.descriptors;
    out.keypoints.reserve(described.kept.size());
    for (const int32_t idx : described.kept) {
        out.keypoints.push_back(raw[static_cast<size_t>(idx)]);
    }
    return out;
}

}  // namespace egoprune
