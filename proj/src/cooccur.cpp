#include "scoot/cooccur.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>

namespace scoot {

double CooccurrenceMatrix::sum() const {
    return std::accumulate(cells.begin(), cells.end(), 0.0);
}

CooccurrenceMatrix glcm(const QuantizedImage& q, const Region& region, Offset d) {
    if (d.dx == 0 && d.dy == 0)
        throw std::invalid_argument("glcm: offset must be nonzero");
    if (region.x0 < 0 || region.y0 < 0 || region.x0 >= region.x1 || region.y0 >= region.y1 ||
        region.x1 > q.width || region.y1 > q.height)
        throw std::out_of_range("glcm: region out of bounds");

    const int n = q.n_levels;
    std::vector<std::uint32_t> counts(static_cast<std::size_t>(n) * n, 0);

    // Hoist the bounds check: both endpoints stay in-region exactly on
    // [xlo,xhi) x [ylo,yhi), leaving a branch-free inner loop.
    const int xlo = std::max(region.x0, region.x0 - d.dx);
    const int xhi = std::min(region.x1, region.x1 - d.dx);
    const int ylo = std::max(region.y0, region.y0 - d.dy);
    const int yhi = std::min(region.y1, region.y1 - d.dy);

    for (int y = ylo; y < yhi; ++y) {
        const std::uint8_t* row = q.grades.data() + static_cast<std::size_t>(y) * q.width;
        const std::uint8_t* nbr =
            q.grades.data() + static_cast<std::size_t>(y + d.dy) * q.width + d.dx;
        for (int x = xlo; x < xhi; ++x)
            counts[static_cast<std::size_t>(row[x]) * n + nbr[x]]++;
    }

    CooccurrenceMatrix m;
    m.n_levels = n;
    m.cells.assign(counts.begin(), counts.end());
    return m;
}

CooccurrenceMatrix normalize(const CooccurrenceMatrix& m) {
    CooccurrenceMatrix out = m;
    out.normalized = true;
    const double total = m.sum();
    if (total > 0) {
        for (double& c : out.cells) c /= total;
    } else {
        out.degenerate = true;
    }
    return out;
}

namespace {
void require_normalized(const CooccurrenceMatrix& m, const char* who) {
    if (!m.normalized)
        throw std::invalid_argument(std::string(who) + ": matrix must be normalized");
}
}  // namespace

double homogeneity(const CooccurrenceMatrix& m) {
    require_normalized(m, "homogeneity");
    double h = 0.0;
    for (int i = 0; i < m.n_levels; ++i)
        for (int j = 0; j < m.n_levels; ++j)
            h += m.at(i, j) / (1.0 + std::abs(i - j));
    return h;
}

double contrast(const CooccurrenceMatrix& m) {
    require_normalized(m, "contrast");
    double c = 0.0;
    for (int i = 0; i < m.n_levels; ++i)
        for (int j = 0; j < m.n_levels; ++j) {
            const double diff = i - j;
            c += diff * diff * m.at(i, j);
        }
    return c;
}

double energy(const CooccurrenceMatrix& m) {
    require_normalized(m, "energy");
    double e = 0.0;
    for (const double c : m.cells) e += c * c;
    return e;
}

}  // namespace scoot
