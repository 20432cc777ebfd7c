#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "snow/grid.hpp"

namespace snow {

/// 8-bit grayscale image.
struct GrayImage {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> pixels;  ///< row-major, width * height

    std::uint8_t at(int x, int y) const {
        return pixels[static_cast<std::size_t>(y) * static_cast<std::size_t>(width) +
                      static_cast<std::size_t>(x)];
    }
};

/// Rasterizes a state to a square image: every pixel takes the intensity of
/// the nearest cell center. Frozen cells are 255, boundary 160, nonreceptive
/// round(100 s / beta) capped at 100, edge cells and pixels outside the grid
/// 0. Deterministic: equal states give byte-identical images.
GrayImage render_raster(const GridState& g, int pixels);

/// Binary PGM (P5, maxval 255) encoding of an image.
std::string encode_pgm(const GrayImage& image);

void write_pgm(const GrayImage& image, const std::filesystem::path& path);

}  // namespace snow
