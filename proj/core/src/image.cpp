#include "egoprune/image.hpp"

#include <cmath>

namespace egoprune {

std::vector<uint8_t> to_grayscale(const ImageBuffer& img) {
    std::vector<uint8_t> gray(static_cast<size_t>(img.width) * img.height);
    const uint8_t* p = img.pixels.data();
    for (size_t i = 0; i < gray.size(); ++i) {
        const double y = 0.299 * p[3 * i] + 0.587 * p[3 * i + 1] + 0.114 * p[3 * i + 2];
        gray[i] = static_cast<uint8_t>(std::lround(y));
    }
    return gray;
}

}  // namespace egoprune
