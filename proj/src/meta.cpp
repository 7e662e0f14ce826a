#include "scoot/meta.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <thread>

#include <json.hpp>

namespace scoot {

namespace {

std::vector<double> fractional_ranks(const std::vector<double>& v) {
    std::vector<double> sorted = v;
    std::sort(sorted.begin(), sorted.end());
    std::vector<double> ranks(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        const auto lb = std::lower_bound(sorted.begin(), sorted.end(), v[i]);
        const auto ub = std::upper_bound(sorted.begin(), sorted.end(), v[i]);
        const double first = 1.0 + static_cast<double>(lb - sorted.begin());
        const double ties = static_cast<double>(ub - lb);
        ranks[i] = first + (ties - 1.0) * 0.5;
    }
    return ranks;
}

}  // namespace

// Runs fn(i) for i in [0, n) on up to `jobs` threads; results land in
// index order so aggregation is deterministic.
void parallel_for(std::size_t n, int jobs, const std::function<void(std::size_t)>& fn) {
    if (jobs < 1) jobs = 1;
    const std::size_t workers = std::min<std::size_t>(jobs, n);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) fn(i);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

namespace {

nlohmann::json parse_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open manifest: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error("invalid JSON in " + path + ": " + e.what());
    }
    return j;
}

std::string resolve(const std::string& manifest_path, const std::string& rel) {
    const std::filesystem::path p(rel);
    if (p.is_absolute()) return rel;
    return (std::filesystem::path(manifest_path).parent_path() / p).string();
}

}  // namespace

double spearman_rho(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("spearman: length mismatch");
    if (a.size() < 2)
        throw std::invalid_argument("spearman: need at least 2 observations");

    const std::vector<double> ra = fractional_ranks(a);
    const std::vector<double> rb = fractional_ranks(b);
    const double n = static_cast<double>(a.size());

    double sa = 0, sb = 0, sab = 0, saa = 0, sbb = 0;
    for (std::size_t i = 0; i < ra.size(); ++i) {
        sa += ra[i];
        sb += rb[i];
        sab += ra[i] * rb[i];
        saa += ra[i] * ra[i];
        sbb += rb[i] * rb[i];
    }
    const double var_a = n * saa - sa * sa;
    const double var_b = n * sbb - sb * sb;
    if (var_a <= 0 || var_b <= 0)
        throw SpearmanDegenerate();
    return (n * sab - sa * sb) / std::sqrt(var_a * var_b);
}

BenchmarkDataset load_manifest(const std::string& path) {
    const nlohmann::json j = parse_json_file(path);
    if (!j.is_object() || !j.contains("gt") || !j.contains("algorithms"))
        throw std::runtime_error("manifest " + path + ": expected keys \"gt\" and \"algorithms\"");
    if (!j["gt"].is_object() || j["gt"].empty())
        throw std::runtime_error("manifest " + path + ": \"gt\" must be a nonempty object");
    if (!j["algorithms"].is_object())
        throw std::runtime_error("manifest " + path + ": \"algorithms\" must be an object");

    BenchmarkDataset ds;
    for (const auto& [photo, p] : j["gt"].items()) {
        if (!p.is_string())
            throw std::runtime_error("manifest " + path + ": gt." + photo + " must be a path");
        ds.photo_ids.push_back(photo);
        ds.gt_paths[photo] = resolve(path, p.get<std::string>());
    }
    std::sort(ds.photo_ids.begin(), ds.photo_ids.end());

    for (const auto& [algo, cells] : j["algorithms"].items()) {
        if (!cells.is_object())
            throw std::runtime_error("manifest " + path + ": algorithms." + algo +
                                     " must be an object");
        ds.algo_ids.push_back(algo);
        for (const std::string& photo : ds.photo_ids) {
            if (!cells.contains(photo) || !cells[photo].is_string())
                throw std::runtime_error("manifest " + path + ": missing path algorithms." + algo +
                                         "." + photo);
            ds.syn_paths[algo][photo] = resolve(path, cells[photo].get<std::string>());
        }
    }
    std::sort(ds.algo_ids.begin(), ds.algo_ids.end());
    if (ds.algo_ids.size() < 2)
        throw std::runtime_error("manifest " + path + ": need at least 2 algorithms");
    return ds;
}

std::vector<RankedPair> load_ranked_pairs(const std::string& path) {
    const nlohmann::json j = parse_json_file(path);
    if (!j.is_array() || j.empty())
        throw std::runtime_error("pair set " + path + ": expected a nonempty JSON list");
    std::vector<RankedPair> pairs;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const auto& e = j[i];
        if (!e.is_object() || !e.contains("gt") || !e.contains("better") || !e.contains("worse"))
            throw std::runtime_error("pair set " + path + ": entry " + std::to_string(i) +
                                     " needs keys gt/better/worse");
        RankedPair p{resolve(path, e["gt"].get<std::string>()),
                     resolve(path, e["better"].get<std::string>()),
                     resolve(path, e["worse"].get<std::string>())};
        if (p.better == p.worse || p.gt == p.better || p.gt == p.worse)
            throw std::runtime_error("pair set " + path + ": entry " + std::to_string(i) +
                                     " paths must be distinct");
        pairs.push_back(std::move(p));
    }
    return pairs;
}

MetaResult run_stability(const BenchmarkDataset& ds, const Measure& m, const Perturbation& perturb,
                         const std::string& meta_id, int jobs) {
    MetaResult result;
    result.meta_id = meta_id;
    result.measure_id = m.id;
    result.per_item.resize(ds.photo_ids.size());
    std::vector<std::string> item_warnings(ds.photo_ids.size());

    parallel_for(ds.photo_ids.size(), jobs, [&](std::size_t i) {
        const std::string& photo = ds.photo_ids[i];
        const GrayImage gt = load_gray(ds.gt_paths.at(photo));
        const GrayImage perturbed = perturb(gt);
        std::vector<double> base, shifted;
        for (const std::string& algo : ds.algo_ids) {
            const GrayImage syn = load_gray(ds.syn_paths.at(algo).at(photo));
            base.push_back(m.score(gt, syn));
            shifted.push_back(m.score(perturbed, syn));
        }
        double theta;
        try {
            theta = 1.0 - spearman_rho(base, shifted);
        } catch (const SpearmanDegenerate&) {
            theta = 1.0;
            item_warnings[i] = "photo " + photo + ": constant score list, theta set to 1";
        }
        result.per_item[i] = {photo, theta};
    });

    double sum = 0;
    for (const auto& [id, v] : result.per_item) sum += v;
    result.aggregate = sum / static_cast<double>(result.per_item.size());
    for (const std::string& w : item_warnings)
        if (!w.empty()) result.warnings.push_back(w);
    return result;
}

MetaResult mm1_resize_stability(const BenchmarkDataset& ds, const Measure& m, int jobs) {
    return run_stability(
        ds, m,
        [](const GrayImage& gt) {
            return resize_nn(gt, std::max(1, gt.width - 5), std::max(1, gt.height - 5));
        },
        "mm1", jobs);
}

MetaResult mm2_rotation_stability(const BenchmarkDataset& ds, const Measure& m, int jobs) {
    return run_stability(
        ds, m, [](const GrayImage& gt) { return rotate_nn(gt, 5.0, 255); }, "mm2", jobs);
}

MetaResult mm3_content_capture(const BenchmarkDataset& ds, const Measure& m,
                               std::uint8_t threshold, int jobs) {
    MetaResult result;
    result.meta_id = "mm3";
    result.measure_id = m.id;
    result.per_item.resize(ds.photo_ids.size());

    parallel_for(ds.photo_ids.size(), jobs, [&](std::size_t i) {
        const std::string& photo = ds.photo_ids[i];
        const GrayImage gt = load_gray(ds.gt_paths.at(photo));
        const GrayImage light = split_strokes(gt, threshold).light;
        double mean = 0;
        for (const std::string& algo : ds.algo_ids)
            mean += m.score(gt, load_gray(ds.syn_paths.at(algo).at(photo)));
        mean /= static_cast<double>(ds.algo_ids.size());
        const double light_score = m.score(gt, light);
        const bool success = m.higher_is_better ? mean > light_score : mean < light_score;
        result.per_item[i] = {photo, success ? 1.0 : 0.0};
    });

    double successes = 0;
    for (const auto& [id, v] : result.per_item) successes += v;
    result.aggregate = 100.0 * successes / static_cast<double>(result.per_item.size());
    return result;
}

MetaResult mm4_human_agreement(const std::vector<RankedPair>& pairs, const Measure& m, int jobs) {
    if (pairs.empty())
        throw std::invalid_argument("mm4: pair set must be nonempty");
    MetaResult result;
    result.meta_id = "mm4";
    result.measure_id = m.id;
    result.per_item.resize(pairs.size());

    parallel_for(pairs.size(), jobs, [&](std::size_t i) {
        const GrayImage gt = load_gray(pairs[i].gt);
        const double sb = m.score(gt, load_gray(pairs[i].better));
        const double sw = m.score(gt, load_gray(pairs[i].worse));
        // ties count as disagreement
        const bool agree = m.higher_is_better ? sb > sw : sb < sw;
        char label[16];
        std::snprintf(label, sizeof(label), "%04zu", i);
        result.per_item[i] = {label, agree ? 1.0 : 0.0};
    });

    double agreements = 0;
    for (const auto& [id, v] : result.per_item) agreements += v;
    result.aggregate = 100.0 * agreements / static_cast<double>(result.per_item.size());
    return result;
}

}  // namespace scoot
