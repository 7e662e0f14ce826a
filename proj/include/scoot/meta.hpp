#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "scoot/imageio.hpp"

namespace scoot {

// Spearman rank correlation with fractional (average) ranks for ties.
// Throws SpearmanDegenerate when either list has zero rank variance.
class SpearmanDegenerate : public std::runtime_error {
public:
    SpearmanDegenerate() : std::runtime_error("spearman: zero rank variance") {}
};

double spearman_rho(const std::vector<double>& a, const std::vector<double>& b);

// Uniform wrapper over Scoot variants and the pixel-level baselines.
struct Measure {
    std::string id;
    bool higher_is_better = true;
    std::function<double(const GrayImage& gt, const GrayImage& syn)> score;
};

struct BenchmarkDataset {
    std::vector<std::string> photo_ids;  // sorted
    std::vector<std::string> algo_ids;   // sorted
    std::map<std::string, std::string> gt_paths;  // photo -> path
    std::map<std::string, std::map<std::string, std::string>> syn_paths;  // algo -> photo -> path
};

struct RankedPair {
    std::string gt, better, worse;
};

// Manifest: {"gt": {photo: path}, "algorithms": {algo: {photo: path}}};
// paths resolve relative to the manifest's directory. Every (algorithm,
// photo) cell must be present and at least 2 algorithms are required.
BenchmarkDataset load_manifest(const std::string& path);

// Pair set: JSON list of {"gt": path, "better": path, "worse": path}.
std::vector<RankedPair> load_ranked_pairs(const std::string& path);

struct MetaResult {
    std::string meta_id;
    std::string measure_id;
    double aggregate = 0.0;
    std::vector<std::pair<std::string, double>> per_item;  // id-sorted
    std::vector<std::string> warnings;
};

using Perturbation = std::function<GrayImage(const GrayImage&)>;

// Runs fn(i) for i in [0, n) on up to `jobs` threads; results land in index
// order so aggregation is deterministic.
void parallel_for(std::size_t n, int jobs, const std::function<void(std::size_t)>& fn);

// Shared core of MM1/MM2: per photo, theta = 1 - rho between the score list
// against the GT and against the perturbed GT; aggregate = mean theta.
// A degenerate (constant) score list records theta = 1 with a warning.
MetaResult run_stability(const BenchmarkDataset& ds, const Measure& m, const Perturbation& perturb,
                         const std::string& meta_id, int jobs = 1);

MetaResult mm1_resize_stability(const BenchmarkDataset& ds, const Measure& m, int jobs = 1);
MetaResult mm2_rotation_stability(const BenchmarkDataset& ds, const Measure& m, int jobs = 1);

// Percentage of photos where the polarity-adjusted mean score over all
// algorithms beats the light-stroke score of the GT itself.
MetaResult mm3_content_capture(const BenchmarkDataset& ds, const Measure& m,
                               std::uint8_t threshold = 170, int jobs = 1);

// Percentage of entries where the measure ranks `better` above `worse`
// against the GT; exact ties count as disagreement.
MetaResult mm4_human_agreement(const std::vector<RankedPair>& pairs, const Measure& m,
                               int jobs = 1);

}  // namespace scoot
