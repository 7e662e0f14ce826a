#pragma once

#include <stdexcept>
#include <vector>

#include "scoot/imageio.hpp"

namespace scoot {

// Displacement d = (dx, dy) added to position (x, y); x = column, y = row.
struct Offset {
    int dx = 0;
    int dy = 0;
    bool operator==(const Offset&) const = default;
};

// Pixel bounds of a block: [x0, x1) x [y0, y1).
struct Region {
    int x0 = 0;
    int y0 = 0;
    int x1 = 0;
    int y1 = 0;

    int width() const { return x1 - x0; }
    int height() const { return y1 - y0; }
};

struct CooccurrenceMatrix {
    int n_levels = 0;
    std::vector<double> cells;  // n_levels x n_levels, row-major
    bool normalized = false;
    bool degenerate = false;  // normalized from an all-zero (no pair) matrix

    double at(int i, int j) const { return cells[static_cast<std::size_t>(i) * n_levels + j]; }
    double& at(int i, int j) { return cells[static_cast<std::size_t>(i) * n_levels + j]; }
    double sum() const;
};

// Counts ordered gray-grade pairs (q(x,y), q(x+dx,y+dy)) with both endpoints
// inside the region. Pairs are counted in one direction only; neighbors that
// fall outside the region are skipped.
CooccurrenceMatrix glcm(const QuantizedImage& q, const Region& region, Offset d);

// Scales cells so they sum to 1. A zero matrix stays zero and is flagged
// degenerate.
CooccurrenceMatrix normalize(const CooccurrenceMatrix& m);

// Haralick statistics of a normalized matrix; all three reject unnormalized
// input.
double homogeneity(const CooccurrenceMatrix& m);  // sum M(i,j) / (1 + |i-j|), in [0,1]
double contrast(const CooccurrenceMatrix& m);     // sum |i-j|^2 M(i,j), in [0,(N-1)^2]
double energy(const CooccurrenceMatrix& m);       // sum M(i,j)^2, in [0,1]

}  // namespace scoot
