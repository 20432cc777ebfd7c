#include "snow/raster.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <stdexcept>

namespace snow {

namespace {

// Nearest cell center for a point of the embedding, by rounding fractional
// cube coordinates; the Voronoi cells of the centers are the hexagons.
AxialCoord nearest_cell(double x, double y) {
    constexpr double kTwoOverSqrt3 = 1.1547005383792515290;
    const double fi = x * kTwoOverSqrt3;
    const double fj = y - 0.5 * fi;
    const double fk = -fi - fj;

    double ri = std::round(fi), rj = std::round(fj), rk = std::round(fk);
    const double di = std::abs(ri - fi), dj = std::abs(rj - fj), dk = std::abs(rk - fk);
    if (di > dj && di > dk)
        ri = -rj - rk;
    else if (dj > dk)
        rj = -ri - rk;
    return {static_cast<int>(ri), static_cast<int>(rj)};
}

std::uint8_t cell_intensity(const GridState& g, int idx) {
    if (g.geo->is_edge(idx)) return 0;
    const auto k = static_cast<std::size_t>(idx);
    switch (g.cls[k]) {
        case CellClass::Frozen:
            return 255;
        case CellClass::Boundary:
            return 160;
        case CellClass::NonReceptive: {
            const double level = std::round(100.0 * g.s[k] / g.params.beta);
            return static_cast<std::uint8_t>(std::clamp(level, 0.0, 100.0));
        }
    }
    return 0;
}

}  // namespace

GrayImage render_raster(const GridState& g, int pixels) {
    if (pixels < 64) throw std::invalid_argument("render_raster: pixels must be >= 64");
    GrayImage img;
    img.width = pixels;
    img.height = pixels;
    img.pixels.assign(static_cast<std::size_t>(pixels) * static_cast<std::size_t>(pixels), 0);

    const double center = 0.5 * (pixels - 1);
    const double scale = (pixels - 1) / (2.0 * g.params.radius);

    for (int py = 0; py < pixels; ++py) {
        const double y = (center - py) / scale;
        for (int px = 0; px < pixels; ++px) {
            const double x = (px - center) / scale;
            // resolve the mirror half through the same lookup so mirror
            // pixels always land on mirror cells
            AxialCoord c = nearest_cell(std::abs(x), y);
            if (x < 0.0) c = reflect(c);
            const int idx = g.geo->index_of(c);
            if (idx < 0) continue;
            img.pixels[static_cast<std::size_t>(py) * static_cast<std::size_t>(pixels) +
                       static_cast<std::size_t>(px)] = cell_intensity(g, idx);
        }
    }
    return img;
}

std::string encode_pgm(const GrayImage& image) {
    std::string out = "P5\n" + std::to_string(image.width) + " " +
                      std::to_string(image.height) + "\n255\n";
    out.append(reinterpret_cast<const char*>(image.pixels.data()), image.pixels.size());
    return out;
}

void write_pgm(const GrayImage& image, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("write_pgm: cannot open " + path.string());
    const std::string bytes = encode_pgm(image);
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw std::runtime_error("write_pgm: write failed for " + path.string());
}

}  // namespace snow
