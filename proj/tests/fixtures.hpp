#pragma once

// Deterministic synthetic sketch fixtures shared by the meta-measure tests
// and the acceptance suite.

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>
#include <vector>

#include "scoot/imageio.hpp"

namespace fixtures {

inline scoot::GrayImage random_image(std::mt19937& rng, int w, int h) {
    scoot::GrayImage img(w, h);
    std::uniform_int_distribution<int> byte(0, 255);
    for (auto& p : img.pixels) p = static_cast<std::uint8_t>(byte(rng));
    return img;
}

inline void draw_line(scoot::GrayImage& img, int x0, int y0, int x1, int y1,
                      std::uint8_t intensity) {
    const int steps = std::max(std::abs(x1 - x0), std::abs(y1 - y0));
    for (int s = 0; s <= steps; ++s) {
        const double t = steps == 0 ? 0.0 : static_cast<double>(s) / steps;
        const int x = static_cast<int>(std::lround(x0 + t * (x1 - x0)));
        const int y = static_cast<int>(std::lround(y0 + t * (y1 - y0)));
        if (x >= 0 && x < img.width && y >= 0 && y < img.height) img.at(x, y) = intensity;
    }
}

// White paper with dark strokes and a hatched patch, loosely sketch-like.
inline scoot::GrayImage sketch(std::mt19937& rng, int w, int h) {
    scoot::GrayImage img(w, h, 255);
    std::uniform_int_distribution<int> px(0, w - 1), py(0, h - 1);
    std::uniform_int_distribution<int> ink(10, 120);
    for (int i = 0; i < 30; ++i)
        draw_line(img, px(rng), py(rng), px(rng), py(rng),
                  static_cast<std::uint8_t>(ink(rng)));
    // hatched region for texture
    const int hx = px(rng) / 2, hy = py(rng) / 2;
    const int hw = w / 3, hh = h / 3;
    for (int y = hy; y < std::min(h, hy + hh); y += 3)
        draw_line(img, hx, y, std::min(w - 1, hx + hw), y, 90);
    return img;
}

inline scoot::GrayImage shift(const scoot::GrayImage& img, int dx, int dy) {
    scoot::GrayImage out(img.width, img.height, 255);
    for (int y = 0; y < img.height; ++y)
        for (int x = 0; x < img.width; ++x) {
            const int sx = x - dx, sy = y - dy;
            if (sx >= 0 && sx < img.width && sy >= 0 && sy < img.height)
                out.at(x, y) = img.at(sx, sy);
        }
    return out;
}

// Style variants of a GT sketch, ordered roughly best-to-worst in style.
inline scoot::GrayImage variant_jitter(const scoot::GrayImage& gt, std::mt19937& rng) {
    scoot::GrayImage out = gt;
    std::uniform_int_distribution<int> dv(-12, 12);
    for (auto& p : out.pixels)
        if (p < 200) p = static_cast<std::uint8_t>(std::clamp(p + dv(rng), 0, 199));
    return out;
}

inline scoot::GrayImage variant_darken(const scoot::GrayImage& gt) {
    scoot::GrayImage out = gt;
    for (auto& p : out.pixels)
        if (p < 200) p = static_cast<std::uint8_t>(p > 35 ? p - 35 : 0);
    return out;
}

inline scoot::GrayImage variant_thin(const scoot::GrayImage& gt, std::mt19937& rng) {
    scoot::GrayImage out = gt;
    std::bernoulli_distribution drop(0.35);
    for (auto& p : out.pixels)
        if (p < 200 && drop(rng)) p = 255;
    return out;
}

inline scoot::GrayImage variant_hatch(const scoot::GrayImage& gt, std::mt19937& rng) {
    scoot::GrayImage out = gt;
    std::uniform_int_distribution<int> phase(0, 3);
    const int off = phase(rng);
    for (int y = off; y < out.height; y += 4)
        for (int x = 0; x < out.width; ++x)
            if (out.at(x, y) > 200) out.at(x, y) = 150;
    return out;
}

struct Fixture {
    std::filesystem::path dir;
    std::string manifest;  // dataset manifest path
    std::string pairs;     // ranked pair set path (empty unless built)
};

// 6-photo, 3-algorithm dataset. GT sketches are gt_w x gt_h; syntheses are
// rendered at syn_w x syn_h so size tolerance is exercised.
inline Fixture write_dataset(const std::filesystem::path& dir, unsigned seed, int n_photos = 6,
                             int gt_w = 96, int gt_h = 96, int syn_w = 100, int syn_h = 100) {
    namespace fs = std::filesystem;
    fs::create_directories(dir);
    std::mt19937 rng(seed);

    std::string gt_json, algo_json[3];
    const char* algo_names[3] = {"alpha", "beta", "gamma"};
    for (int i = 0; i < n_photos; ++i) {
        const std::string id = "p" + std::to_string(i);
        const scoot::GrayImage gt = sketch(rng, gt_w, gt_h);
        scoot::save_pgm(gt, (dir / (id + "_gt.pgm")).string());

        const scoot::GrayImage base = scoot::resize_nn(gt, syn_w, syn_h);
        // each synthesizer is slightly misaligned and increasingly off-style
        const scoot::GrayImage variants[3] = {
            shift(variant_jitter(base, rng), 1, 1),
            shift(variant_thin(base, rng), 2, 0),
            shift(variant_hatch(variant_darken(base), rng), 0, 2)};
        for (int a = 0; a < 3; ++a)
            scoot::save_pgm(variants[a],
                            (dir / (id + "_" + algo_names[a] + ".pgm")).string());

        const std::string sep = i ? ", " : "";
        gt_json += sep + "\"" + id + "\": \"" + id + "_gt.pgm\"";
        for (int a = 0; a < 3; ++a)
            algo_json[a] += sep + "\"" + id + "\": \"" + id + "_" + algo_names[a] + ".pgm\"";
    }

    std::string manifest = "{\n  \"gt\": {" + gt_json + "},\n  \"algorithms\": {\n";
    for (int a = 0; a < 3; ++a)
        manifest += std::string("    \"") + algo_names[a] + "\": {" + algo_json[a] + "}" +
                    (a < 2 ? ",\n" : "\n");
    manifest += "  }\n}\n";

    Fixture f;
    f.dir = dir;
    f.manifest = (dir / "manifest.json").string();
    std::ofstream(f.manifest) << manifest;
    return f;
}

// Ranked pairs with better = the GT itself and worse = uniform noise.
inline std::string write_noise_pairs(const std::filesystem::path& dir, unsigned seed,
                                     int n_entries = 50, int w = 96, int h = 96) {
    namespace fs = std::filesystem;
    fs::create_directories(dir);
    std::mt19937 rng(seed);

    std::string body;
    for (int i = 0; i < n_entries; ++i) {
        const std::string id = "e" + std::to_string(i);
        const scoot::GrayImage gt = sketch(rng, w, h);
        scoot::GrayImage better = gt;
        const scoot::GrayImage worse = random_image(rng, w, h);
        scoot::save_pgm(gt, (dir / (id + "_gt.pgm")).string());
        scoot::save_pgm(better, (dir / (id + "_better.pgm")).string());
        scoot::save_pgm(worse, (dir / (id + "_worse.pgm")).string());
        body += std::string(i ? ",\n" : "") + "  {\"gt\": \"" + id + "_gt.pgm\", \"better\": \"" +
                id + "_better.pgm\", \"worse\": \"" + id + "_worse.pgm\"}";
    }
    const std::string path = (dir / "pairs.json").string();
    std::ofstream(path) << "[\n" + body + "\n]\n";
    return path;
}

}  // namespace fixtures
