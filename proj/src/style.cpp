#include "scoot/style.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace scoot {

std::string ScootConfig::stats_string() const {
    std::string s;
    auto has = [&](Statistic st) {
        return std::find(statistics.begin(), statistics.end(), st) != statistics.end();
    };
    if (has(Statistic::Homogeneity)) s += 'h';
    if (has(Statistic::Contrast)) s += 'c';
    if (has(Statistic::Energy)) s += 'e';
    return s;
}

void ScootConfig::validate() const {
    if (grid_k < 1)
        throw std::invalid_argument("config: grid_k must be >= 1");
    if (n_levels < 2 || n_levels > 256)
        throw std::invalid_argument("config: n_levels must be in [2, 256]");
    if (directions.empty())
        throw std::invalid_argument("config: directions must be nonempty");
    for (const Offset& d : directions)
        if (d.dx == 0 && d.dy == 0)
            throw std::invalid_argument("config: (0,0) is not a valid direction");
    if (statistics.empty())
        throw std::invalid_argument("config: statistics must be nonempty");
}

std::vector<Statistic> parse_statistics(const std::string& s) {
    std::set<char> seen;
    for (char c : s) {
        if (c != 'h' && c != 'c' && c != 'e')
            throw std::invalid_argument("unknown statistic '" + std::string(1, c) +
                                        "' (expected a subset of \"hce\")");
        seen.insert(c);
    }
    if (seen.empty())
        throw std::invalid_argument("statistics subset must be nonempty");
    std::vector<Statistic> out;
    if (seen.count('h')) out.push_back(Statistic::Homogeneity);
    if (seen.count('c')) out.push_back(Statistic::Contrast);
    if (seen.count('e')) out.push_back(Statistic::Energy);
    return out;
}

std::string FeatureLayout::describe() const {
    return extractor_id + " k=" + std::to_string(grid_k) + " levels=" + std::to_string(n_levels) +
           " per_block=" + std::to_string(per_block);
}

std::vector<Region> block_grid(int width, int height, int k) {
    if (k < 1)
        throw std::invalid_argument("block_grid: k must be >= 1");
    if (width < k || height < k)
        throw std::invalid_argument("block_grid: image smaller than the grid");
    std::vector<Region> blocks;
    blocks.reserve(static_cast<std::size_t>(k) * k);
    for (int r = 0; r < k; ++r) {
        const int y0 = r * height / k;
        const int y1 = (r + 1) * height / k;
        for (int c = 0; c < k; ++c) {
            const int x0 = c * width / k;
            const int x1 = (c + 1) * width / k;
            blocks.push_back(Region{x0, y0, x1, y1});
        }
    }
    return blocks;
}

namespace {

class GlcmExtractor final : public FeatureExtractor {
public:
    std::string id() const override { return "glcm"; }
    bool uses_quantized() const override { return true; }
    bool uses_direction() const override { return true; }
    int per_block_size(const ScootConfig& cfg) const override {
        return static_cast<int>(cfg.statistics.size());
    }
    std::string layout_id(const ScootConfig& cfg) const override {
        return "glcm:" + cfg.stats_string();
    }
    void extract(const GrayImage&, const QuantizedImage* q, const Region& region, Offset d,
                 const ScootConfig& cfg, std::vector<double>& out,
                 std::vector<std::string>& warnings) const override {
        const CooccurrenceMatrix m = normalize(glcm(*q, region, d));
        if (m.degenerate)
            warnings.push_back("degenerate block (no co-occurrence pairs)");
        // h, c, e in fixed order, filtered by the configured subset
        auto has = [&](Statistic st) {
            return std::find(cfg.statistics.begin(), cfg.statistics.end(), st) !=
                   cfg.statistics.end();
        };
        if (has(Statistic::Homogeneity)) out.push_back(homogeneity(m));
        if (has(Statistic::Contrast)) out.push_back(contrast(m));
        if (has(Statistic::Energy)) out.push_back(energy(m));
    }
};

class GlrlmExtractor final : public FeatureExtractor {
public:
    std::string id() const override { return "glrlm"; }
    bool uses_quantized() const override { return true; }
    bool uses_direction() const override { return true; }
    int per_block_size(const ScootConfig&) const override { return 5; }
    void extract(const GrayImage&, const QuantizedImage* q, const Region& region, Offset d,
                 const ScootConfig&, std::vector<double>& out,
                 std::vector<std::string>&) const override {
        const std::vector<double> f = glrlm_features(*q, region, d);
        out.insert(out.end(), f.begin(), f.end());
    }
};

class SobelExtractor final : public FeatureExtractor {
public:
    std::string id() const override { return "sobel"; }
    bool uses_quantized() const override { return false; }
    bool uses_direction() const override { return false; }
    int per_block_size(const ScootConfig&) const override { return 2; }
    void extract(const GrayImage& img, const QuantizedImage*, const Region& region, Offset,
                 const ScootConfig&, std::vector<double>& out,
                 std::vector<std::string>&) const override {
        const std::vector<double> f = sobel_features(img, region);
        out.insert(out.end(), f.begin(), f.end());
    }
};

}  // namespace

std::shared_ptr<const FeatureExtractor> make_glcm_extractor() {
    static const auto instance = std::make_shared<const GlcmExtractor>();
    return instance;
}

std::shared_ptr<const FeatureExtractor> make_glrlm_extractor() {
    static const auto instance = std::make_shared<const GlrlmExtractor>();
    return instance;
}

std::shared_ptr<const FeatureExtractor> make_sobel_extractor() {
    static const auto instance = std::make_shared<const SobelExtractor>();
    return instance;
}

StyleFeatureVector phi(const GrayImage& img, const ScootConfig& cfg, Offset d,
                       const FeatureExtractor& extractor) {
    cfg.validate();

    StyleFeatureVector v;
    v.layout = FeatureLayout{extractor.layout_id(cfg), extractor.per_block_size(cfg), cfg.grid_k,
                             extractor.uses_quantized() ? cfg.effective_levels() : 0};
    v.values.reserve(static_cast<std::size_t>(v.layout.per_block) * cfg.grid_k * cfg.grid_k);

    QuantizedImage q;
    if (extractor.uses_quantized())
        q = quantize(img, cfg.effective_levels());

    const std::vector<Region> blocks = block_grid(img.width, img.height, cfg.grid_k);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        const std::size_t before = v.warnings.size();
        extractor.extract(img, extractor.uses_quantized() ? &q : nullptr, blocks[b], d, cfg,
                          v.values, v.warnings);
        for (std::size_t w = before; w < v.warnings.size(); ++w)
            v.warnings[w] = "block " + std::to_string(b) + ": " + v.warnings[w];
    }
    return v;
}

StyleFeatureVector psi(const GrayImage& img, const ScootConfig& cfg,
                       const FeatureExtractor& extractor) {
    if (!extractor.uses_direction())
        return phi(img, cfg, Offset{1, 0}, extractor);

    cfg.validate();
    StyleFeatureVector acc = phi(img, cfg, cfg.directions[0], extractor);
    for (std::size_t i = 1; i < cfg.directions.size(); ++i) {
        const StyleFeatureVector next = phi(img, cfg, cfg.directions[i], extractor);
        for (std::size_t j = 0; j < acc.values.size(); ++j)
            acc.values[j] += next.values[j];
        acc.warnings.insert(acc.warnings.end(), next.warnings.begin(), next.warnings.end());
    }
    const double inv = 1.0 / static_cast<double>(cfg.directions.size());
    for (double& x : acc.values) x *= inv;

    // one warning per degenerate block is enough
    std::sort(acc.warnings.begin(), acc.warnings.end());
    acc.warnings.erase(std::unique(acc.warnings.begin(), acc.warnings.end()), acc.warnings.end());
    return acc;
}

double feature_distance(const StyleFeatureVector& a, const StyleFeatureVector& b) {
    if (!(a.layout == b.layout))
        throw std::invalid_argument("feature vectors have mismatched layouts: " +
                                    a.layout.describe() + " vs " + b.layout.describe());
    double d2 = 0.0;
    for (std::size_t i = 0; i < a.values.size(); ++i) {
        const double diff = a.values[i] - b.values[i];
        d2 += diff * diff;
    }
    return std::sqrt(d2);
}

ScootScore scoot_score(const GrayImage& gt, const GrayImage& syn, const ScootConfig& cfg,
                       const FeatureExtractor& extractor) {
    const StyleFeatureVector fg = psi(gt, cfg, extractor);
    const StyleFeatureVector fs = psi(syn, cfg, extractor);
    ScootScore result;
    result.score = 1.0 / (1.0 + feature_distance(fg, fs));
    for (const std::string& w : fg.warnings) result.warnings.push_back("gt: " + w);
    for (const std::string& w : fs.warnings) result.warnings.push_back("syn: " + w);
    return result;
}

double scoot(const GrayImage& gt, const GrayImage& syn, const ScootConfig& cfg,
             const FeatureExtractor& extractor) {
    return scoot_score(gt, syn, cfg, extractor).score;
}

double scoot(const GrayImage& gt, const GrayImage& syn) {
    return scoot(gt, syn, ScootConfig{}, *make_glcm_extractor());
}

std::vector<double> glrlm_features(const QuantizedImage& q, const Region& region, Offset d) {
    if (d.dx == 0 && d.dy == 0)
        throw std::invalid_argument("glrlm: offset must be nonzero");
    if (region.x0 < 0 || region.y0 < 0 || region.x0 >= region.x1 || region.y0 >= region.y1 ||
        region.x1 > q.width || region.y1 > q.height)
        throw std::out_of_range("glrlm: region out of bounds");

    auto inside = [&](int x, int y) {
        return x >= region.x0 && x < region.x1 && y >= region.y0 && y < region.y1;
    };

    double n_runs = 0;
    double sum_inv_l2 = 0;   // sum over runs of 1/l^2
    double sum_l2 = 0;       // sum over runs of l^2
    std::vector<double> runs_per_grade(q.n_levels, 0.0);
    std::vector<double> runs_per_length;

    for (int y = region.y0; y < region.y1; ++y) {
        for (int x = region.x0; x < region.x1; ++x) {
            const int g = q.at(x, y);
            // run starts where the predecessor along d is absent or differs
            if (inside(x - d.dx, y - d.dy) && q.at(x - d.dx, y - d.dy) == g)
                continue;
            int len = 0;
            int cx = x, cy = y;
            while (inside(cx, cy) && q.at(cx, cy) == g) {
                ++len;
                cx += d.dx;
                cy += d.dy;
            }
            n_runs += 1;
            sum_inv_l2 += 1.0 / (static_cast<double>(len) * len);
            sum_l2 += static_cast<double>(len) * len;
            runs_per_grade[g] += 1;
            if (static_cast<std::size_t>(len) >= runs_per_length.size())
                runs_per_length.resize(len + 1, 0.0);
            runs_per_length[len] += 1;
        }
    }

    const double pixels = static_cast<double>(region.width()) * region.height();
    double gln = 0, rln = 0;
    for (double c : runs_per_grade) gln += c * c;
    for (double c : runs_per_length) rln += c * c;

    return {sum_inv_l2 / n_runs,        // SRE
            sum_l2 / n_runs,            // LRE
            gln / (n_runs * n_runs),    // GLN, extra 1/N_r keeps it in (0,1]
            rln / (n_runs * n_runs),    // RLN, ditto
            n_runs / pixels};           // RP
}

std::vector<double> sobel_features(const GrayImage& img, const Region& region) {
    if (region.x0 < 0 || region.y0 < 0 || region.x1 > img.width || region.y1 > img.height)
        throw std::out_of_range("sobel: region out of bounds");
    if (region.width() < 3 || region.height() < 3)
        throw std::invalid_argument("sobel: region must be at least 3x3");

    double sum = 0, sum2 = 0;
    long count = 0;
    for (int y = region.y0 + 1; y < region.y1 - 1; ++y) {
        for (int x = region.x0 + 1; x < region.x1 - 1; ++x) {
            const double gx = -img.at(x - 1, y - 1) + img.at(x + 1, y - 1) -
                              2.0 * img.at(x - 1, y) + 2.0 * img.at(x + 1, y) -
                              img.at(x - 1, y + 1) + img.at(x + 1, y + 1);
            const double gy = -img.at(x - 1, y - 1) - 2.0 * img.at(x, y - 1) -
                              img.at(x + 1, y - 1) + img.at(x - 1, y + 1) +
                              2.0 * img.at(x, y + 1) + img.at(x + 1, y + 1);
            const double mag = std::sqrt(gx * gx + gy * gy);
            sum += mag;
            sum2 += mag * mag;
            ++count;
        }
    }
    const double mean = sum / count;
    double var = sum2 / count - mean * mean;
    if (var < 0) var = 0;
    // max |gx| = |gy| = 4*255, so max magnitude = 1020*sqrt(2)
    const double max_mag = 1020.0 * std::sqrt(2.0);
    return {mean / max_mag, std::sqrt(var) / max_mag};
}

}  // namespace scoot
