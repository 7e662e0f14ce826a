#pragma once

#include <memory>
#include <string>
#include <vector>

#include "scoot/cooccur.hpp"
#include "scoot/imageio.hpp"

namespace scoot {

enum class Statistic { Homogeneity, Contrast, Energy };

struct ScootConfig {
    int n_levels = 6;
    int grid_k = 4;
    std::vector<Offset> directions = {{0, 1}, {-1, 1}, {-1, 0}, {-1, -1}};
    // per-block statistic order is fixed: h, c, e (filtered by this subset)
    std::vector<Statistic> statistics = {Statistic::Contrast, Statistic::Energy};
    bool quantize_enabled = true;

    // 256 raw intensity levels when quantization is off
    int effective_levels() const { return quantize_enabled ? n_levels : 256; }
    std::string stats_string() const;
    void validate() const;
};

// Parses a subset string like "ce" or "hec"; order in the string is ignored.
std::vector<Statistic> parse_statistics(const std::string& s);

struct FeatureLayout {
    std::string extractor_id;
    int per_block = 0;
    int grid_k = 0;
    int n_levels = 0;
    bool operator==(const FeatureLayout&) const = default;
    std::string describe() const;
};

struct StyleFeatureVector {
    FeatureLayout layout;
    std::vector<double> values;
    std::vector<std::string> warnings;  // e.g. degenerate (zero-pair) blocks
};

class FeatureExtractor {
public:
    virtual ~FeatureExtractor() = default;
    virtual std::string id() const = 0;
    virtual bool uses_quantized() const = 0;
    virtual bool uses_direction() const = 0;
    virtual int per_block_size(const ScootConfig& cfg) const = 0;
    // identifies the feature layout; glcm extractors fold the statistic
    // subset in so vectors from different subsets never compare equal
    virtual std::string layout_id(const ScootConfig&) const { return id(); }
    // q is non-null iff uses_quantized()
    virtual void extract(const GrayImage& img, const QuantizedImage* q, const Region& region,
                         Offset d, const ScootConfig& cfg, std::vector<double>& out,
                         std::vector<std::string>& warnings) const = 0;
};

// GLCM statistics (the CE feature and its subsets), run-length statistics,
// and the gradient-magnitude stand-in.
std::shared_ptr<const FeatureExtractor> make_glcm_extractor();
std::shared_ptr<const FeatureExtractor> make_glrlm_extractor();
std::shared_ptr<const FeatureExtractor> make_sobel_extractor();

// k x k tiling with rounded boundaries; blocks returned row-major.
std::vector<Region> block_grid(int width, int height, int k);

// Per-block features at one direction, concatenated row-major.
StyleFeatureVector phi(const GrayImage& img, const ScootConfig& cfg, Offset d,
                       const FeatureExtractor& extractor);

// Average of phi over the configured directions (single phi for
// direction-independent extractors).
StyleFeatureVector psi(const GrayImage& img, const ScootConfig& cfg,
                       const FeatureExtractor& extractor);

// Euclidean distance between two feature vectors; rejects mismatched layouts.
double feature_distance(const StyleFeatureVector& a, const StyleFeatureVector& b);

struct ScootScore {
    double score = 0.0;
    std::vector<std::string> warnings;
};

// E = 1 / (1 + ||psi(gt) - psi(syn)||_2), in (0, 1].
ScootScore scoot_score(const GrayImage& gt, const GrayImage& syn, const ScootConfig& cfg,
                       const FeatureExtractor& extractor);
double scoot(const GrayImage& gt, const GrayImage& syn, const ScootConfig& cfg,
             const FeatureExtractor& extractor);
double scoot(const GrayImage& gt, const GrayImage& syn);  // CE defaults

// Galloway run-length statistics (SRE, LRE, GLN, RLN, RP) for maximal runs
// along d; GLN and RLN carry an extra 1/N_r so every component lies in (0,1].
std::vector<double> glrlm_features(const QuantizedImage& q, const Region& region, Offset d);

// (mean, stddev) of the Sobel gradient magnitude over interior pixels,
// scaled by the maximum possible magnitude; region must be at least 3x3.
std::vector<double> sobel_features(const GrayImage& img, const Region& region);

}  // namespace scoot
