#include "scoot/baselines.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace scoot {

namespace {

std::vector<double> gaussian_window(int size, double sigma) {
    std::vector<double> w(static_cast<std::size_t>(size) * size);
    const double half = (size - 1) / 2.0;
    double total = 0;
    for (int y = 0; y < size; ++y)
        for (int x = 0; x < size; ++x) {
            const double dx = x - half, dy = y - half;
            const double v = std::exp(-(dx * dx + dy * dy) / (2.0 * sigma * sigma));
            w[static_cast<std::size_t>(y) * size + x] = v;
            total += v;
        }
    for (double& v : w) v /= total;
    return w;
}

// 2x2 average pooling; odd trailing row/column is dropped.
std::vector<double> mean_pool(const GrayImage& img, int factor, int& pw, int& ph) {
    pw = img.width / factor;
    ph = img.height / factor;
    std::vector<double> out(static_cast<std::size_t>(pw) * ph);
    const double inv = 1.0 / (factor * factor);
    for (int y = 0; y < ph; ++y)
        for (int x = 0; x < pw; ++x) {
            double s = 0;
            for (int j = 0; j < factor; ++j)
                for (int i = 0; i < factor; ++i)
                    s += img.at(x * factor + i, y * factor + j);
            out[static_cast<std::size_t>(y) * pw + x] = s * inv;
        }
    return out;
}

inline double at_clamped(const std::vector<double>& m, int w, int h, int x, int y) {
    if (x < 0) x = 0;
    if (x > w - 1) x = w - 1;
    if (y < 0) y = 0;
    if (y > h - 1) y = h - 1;
    return m[static_cast<std::size_t>(y) * w + x];
}

}  // namespace

double ssim(const GrayImage& x, const GrayImage& y, const SsimParams& p) {
    if (!x.same_size(y))
        throw std::invalid_argument("ssim: image sizes differ");
    if (p.window < 1 || p.window % 2 == 0 || p.sigma <= 0)
        throw std::invalid_argument("ssim: bad window parameters");
    if (x.width < p.window || x.height < p.window)
        throw std::invalid_argument("ssim: image smaller than the window");

    const std::vector<double> w = gaussian_window(p.window, p.sigma);
    const double c1 = (p.k1 * p.dynamic_range) * (p.k1 * p.dynamic_range);
    const double c2 = (p.k2 * p.dynamic_range) * (p.k2 * p.dynamic_range);
    const int half = p.window / 2;

    double total = 0;
    long count = 0;
    for (int cy = half; cy < x.height - half; ++cy) {
        for (int cx = half; cx < x.width - half; ++cx) {
            double mx = 0, my = 0, sxx = 0, syy = 0, sxy = 0;
            const double* wp = w.data();
            for (int j = -half; j <= half; ++j) {
                for (int i = -half; i <= half; ++i, ++wp) {
                    const double px = x.at(cx + i, cy + j);
                    const double py = y.at(cx + i, cy + j);
                    mx += *wp * px;
                    my += *wp * py;
                    sxx += *wp * (px * px);
                    syy += *wp * (py * py);
                    sxy += *wp * (px * py);  // px*py first, so arguments commute bit-exactly
                }
            }
            const double vx = sxx - mx * mx;
            const double vy = syy - my * my;
            const double cov = sxy - mx * my;
            const double num = (2.0 * (mx * my) + c1) * (2.0 * cov + c2);
            const double den = (mx * mx + my * my + c1) * (vx + vy + c2);
            total += num / den;
            ++count;
        }
    }
    return total / count;
}

double gmsd(const GrayImage& x, const GrayImage& y, const GmsdParams& p) {
    if (!x.same_size(y))
        throw std::invalid_argument("gmsd: image sizes differ");
    if (x.width < 2 * p.downsample || x.height < 2 * p.downsample)
        throw std::invalid_argument("gmsd: image too small");

    int pw = 0, ph = 0;
    const std::vector<double> dx = mean_pool(x, p.downsample, pw, ph);
    const std::vector<double> dy = mean_pool(y, p.downsample, pw, ph);

    // Prewitt with replicate borders
    auto gradient_mag = [&](const std::vector<double>& m, int px, int py) {
        double gx = 0, gy = 0;
        for (int j = -1; j <= 1; ++j) {
            gx += at_clamped(m, pw, ph, px - 1, py + j) - at_clamped(m, pw, ph, px + 1, py + j);
            gy += at_clamped(m, pw, ph, px + j, py - 1) - at_clamped(m, pw, ph, px + j, py + 1);
        }
        gx /= 3.0;
        gy /= 3.0;
        return std::sqrt(gx * gx + gy * gy);
    };

    double sum = 0, sum2 = 0;
    const long n = static_cast<long>(pw) * ph;
    for (int py = 0; py < ph; ++py) {
        for (int px = 0; px < pw; ++px) {
            const double gx = gradient_mag(dx, px, py);
            const double gy = gradient_mag(dy, px, py);
            const double gms = (2.0 * (gx * gy) + p.c) / (gx * gx + gy * gy + p.c);
            sum += gms;
            sum2 += gms * gms;
        }
    }
    const double mean = sum / n;
    double var = sum2 / n - mean * mean;
    if (var < 0) var = 0;
    return std::sqrt(var);
}

}  // namespace scoot
