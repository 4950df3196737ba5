#pragma once

#include <cstdint>
#include <vector>

namespace egoprune {

/// 8-bit RGB raster, row-major, interleaved channels.
struct ImageBuffer {
    int width = 0;
    int height = 0;
    std::vector<uint8_t> pixels;  // width * height * 3 bytes

    ImageBuffer() = default;
    ImageBuffer(int w, int h) : width(w), height(h), pixels(static_cast<size_t>(w) * h * 3, 0) {}

    size_t offset(int x, int y) const { return (static_cast<size_t>(y) * width + x) * 3; }

    uint8_t* at(int x, int y) { return pixels.data() + offset(x, y); }
    const uint8_t* at(int x, int y) const { return pixels.data() + offset(x, y); }

    bool same_shape(const ImageBuffer& other) const {
        return width == other.width && height == other.height;
    }
};

/// Per-pixel luma (0.299 R + 0.587 G + 0.114 B), rounded to 8 bits.
std::vector<uint8_t> to_grayscale(const ImageBuffer& img);

}  // namespace egoprune
