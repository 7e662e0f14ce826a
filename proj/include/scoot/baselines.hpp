#pragma once

#include "scoot/imageio.hpp"

namespace scoot {

struct SsimParams {
    int window = 11;
    double sigma = 1.5;
    double k1 = 0.01;
    double k2 = 0.03;
    double dynamic_range = 255.0;
};

struct GmsdParams {
    int downsample = 2;
    double c = 170.0;
};

// Single-scale SSIM, Gaussian 11x11 sigma 1.5 windows, valid-region averaging.
// Returns a value in [-1, 1]; 1 for identical images.
double ssim(const GrayImage& x, const GrayImage& y, const SsimParams& p = {});

// Gradient magnitude similarity deviation: 2x2 mean downsample, Prewitt
// gradients, per-pixel similarity (2 gx gy + c)/(gx^2 + gy^2 + c), population
// standard deviation of the map. 0 for identical images; lower is better.
double gmsd(const GrayImage& x, const GrayImage& y, const GmsdParams& p = {});

}  // namespace scoot
