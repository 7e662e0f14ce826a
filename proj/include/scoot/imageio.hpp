#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace scoot {

// 8-bit single-channel raster, row-major.
struct GrayImage {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> pixels;

    GrayImage() = default;
    GrayImage(int w, int h, std::uint8_t fill = 255)
        : width(w), height(h), pixels(static_cast<std::size_t>(w) * h, fill) {}

    std::uint8_t at(int x, int y) const {
        return pixels[static_cast<std::size_t>(y) * width + x];
    }
    std::uint8_t& at(int x, int y) {
        return pixels[static_cast<std::size_t>(y) * width + x];
    }
    bool same_size(const GrayImage& o) const {
        return width == o.width && height == o.height;
    }
};

// Per-pixel grade index in [0, n_levels).
struct QuantizedImage {
    int width = 0;
    int height = 0;
    int n_levels = 2;
    std::vector<std::uint8_t> grades;

    std::uint8_t at(int x, int y) const {
        return grades[static_cast<std::size_t>(y) * width + x];
    }
};

class ImageIoError : public std::runtime_error {
public:
    enum class Kind { Unreadable, UnsupportedFormat, BadDimensions };

    ImageIoError(Kind kind, const std::string& path, const std::string& detail)
        : std::runtime_error(detail + ": " + path), kind_(kind), path_(path) {}

    Kind kind() const { return kind_; }
    const std::string& path() const { return path_; }

private:
    Kind kind_;
    std::string path_;
};

// Loads a PGM (P5, maxval 255) or 8-bit PNG (gray or RGB). RGB is reduced
// with gray = round(0.299 R + 0.587 G + 0.114 B).
GrayImage load_gray(const std::string& path);

GrayImage load_pgm(const std::string& path);
void save_pgm(const GrayImage& img, const std::string& path);
GrayImage load_png(const std::string& path);

std::uint8_t luma(std::uint8_t r, std::uint8_t g, std::uint8_t b);

// grade(v) = min(floor(v * n_levels / 256), n_levels - 1); n_levels in [2, 256].
QuantizedImage quantize(const GrayImage& img, int n_levels);

// Nearest neighbor with the pixel-center convention:
// src_x = floor((x + 0.5) * W / W'), clamped.
GrayImage resize_nn(const GrayImage& img, int new_width, int new_height);

// Rotates counter-clockwise about the image center; output keeps the input
// dimensions and out-of-bounds samples take `fill`.
GrayImage rotate_nn(const GrayImage& img, double degrees_ccw, std::uint8_t fill = 255);

struct StrokeSplit {
    GrayImage dark;   // pixels < threshold kept, rest whitened to 255
    GrayImage light;  // pixels >= threshold kept, rest whitened to 255
};

StrokeSplit split_strokes(const GrayImage& img, std::uint8_t threshold);

}  // namespace scoot
