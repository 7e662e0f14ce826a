#include <cstdio>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "scoot/measures.hpp"
#include "scoot/meta.hpp"
#include "scoot/style.hpp"
#include "scoot/version.hpp"

using nlohmann::ordered_json;

namespace {

struct CliOptions {
    std::string measure = "scoot-ce";
    int levels = 6;
    int grid = 4;
    std::string stats;  // empty = take the subset from the measure id
    bool no_quantize = false;
    int threshold = 170;
    std::string format = "json";
    int jobs = 1;
    std::string manifest;
    std::string pairs;
};

void add_config_flags(CLI::App* cmd, CliOptions& opt) {
    cmd->add_option("--measure", opt.measure, "measure id (see `scoot list`)");
    cmd->add_option("--levels", opt.levels, "quantization levels N_l")->check(CLI::Range(2, 256));
    cmd->add_option("--grid", opt.grid, "block grid size k")->check(CLI::Range(1, 64));
    cmd->add_option("--stats", opt.stats, "GLCM statistic subset, e.g. ce, hec");
    cmd->add_flag("--no-quantize", opt.no_quantize, "use raw 256 intensity levels");
    cmd->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--jobs", opt.jobs, "worker threads")->check(CLI::Range(1, 256));
}

// --stats picks the statistic subset; it maps onto the matching scoot-* id
std::string apply_stats_flag(const std::string& measure, const std::string& stats) {
    if (stats.empty()) return measure;
    if (measure == "scoot-glrlm" || measure == "scoot-sobel" || measure == "ssim" ||
        measure == "gmsd")
        throw std::invalid_argument("--stats only applies to GLCM-based scoot measures");
    scoot::ScootConfig tmp;
    tmp.statistics = scoot::parse_statistics(stats);
    static const std::map<std::string, std::string> ids = {
        {"h", "scoot-h"},   {"c", "scoot-c"},   {"e", "scoot-e"},    {"hc", "scoot-ch"},
        {"ce", "scoot-ce"}, {"he", "scoot-he"}, {"hce", "scoot-hec"}};
    std::string id = ids.at(tmp.stats_string());
    if (measure == "scoot-ce-nq" && id == "scoot-ce") id = "scoot-ce-nq";
    return id;
}

scoot::ScootConfig base_config(const CliOptions& opt) {
    scoot::ScootConfig cfg;
    cfg.n_levels = opt.levels;
    cfg.grid_k = opt.grid;
    cfg.quantize_enabled = !opt.no_quantize;
    return cfg;
}

// --jobs is deliberately absent: reports must not depend on parallelism
ordered_json config_echo(const std::string& measure, const scoot::ScootConfig& cfg,
                         const CliOptions& opt) {
    ordered_json dirs = ordered_json::array();
    for (const auto& d : cfg.directions) dirs.push_back({d.dx, d.dy});
    return ordered_json{{"measure", measure},
                       {"levels", cfg.n_levels},
                       {"grid", cfg.grid_k},
                       {"stats", cfg.stats_string()},
                       {"quantize", cfg.quantize_enabled},
                       {"directions", dirs},
                       {"threshold", opt.threshold}};
}

ordered_json report_header(const std::string& command) {
    return ordered_json{{"tool", scoot::kToolName},
                       {"version", scoot::kToolVersion},
                       {"command", command}};
}

std::string fmt_score(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void emit(const ordered_json& report) { std::cout << report.dump(2) << "\n"; }

int run_score(const CliOptions& opt, const std::string& gt_path, const std::string& syn_path) {
    const std::string measure_id = apply_stats_flag(opt.measure, opt.stats);
    const scoot::ScootConfig base = base_config(opt);
    const scoot::Measure m = scoot::make_measure(measure_id, base);

    const scoot::GrayImage gt = scoot::load_gray(gt_path);
    const scoot::GrayImage syn = scoot::load_gray(syn_path);

    std::vector<std::string> warnings;
    double score;
    if (scoot::is_scoot_measure(measure_id) && measure_id != "scoot-glrlm" &&
        measure_id != "scoot-sobel") {
        const auto r = scoot::scoot_score(gt, syn, scoot::measure_config(measure_id, base),
                                          *scoot::make_glcm_extractor());
        score = r.score;
        warnings = r.warnings;
    } else {
        score = m.score(gt, syn);
    }

    if (opt.format == "csv") {
        std::cout << "gt,syn,measure,score\n"
                  << gt_path << "," << syn_path << "," << measure_id << "," << fmt_score(score)
                  << "\n";
        return 0;
    }
    ordered_json report = report_header("score");
    report["measure"] = measure_id;
    report["config"] = config_echo(measure_id, scoot::measure_config(measure_id, base), opt);
    report["records"] = ordered_json::array(
        {{{"gt", gt_path}, {"syn", syn_path}, {"score", score}, {"warnings", warnings}}});
    emit(report);
    return 0;
}

int run_batch(const CliOptions& opt) {
    const std::string measure_id = apply_stats_flag(opt.measure, opt.stats);
    const scoot::ScootConfig base = base_config(opt);
    const scoot::Measure m = scoot::make_measure(measure_id, base);
    const scoot::BenchmarkDataset ds = scoot::load_manifest(opt.manifest);

    struct Cell {
        std::string algo, photo, gt, syn;
        double score;
    };
    std::vector<Cell> cells;
    for (const auto& algo : ds.algo_ids)
        for (const auto& photo : ds.photo_ids)
            cells.push_back({algo, photo, ds.gt_paths.at(photo), ds.syn_paths.at(algo).at(photo),
                             0.0});

    scoot::parallel_for(cells.size(), opt.jobs, [&](std::size_t i) {
        cells[i].score = m.score(scoot::load_gray(cells[i].gt), scoot::load_gray(cells[i].syn));
    });

    if (opt.format == "csv") {
        std::cout << "gt,syn,measure,score\n";
        for (const Cell& c : cells)
            std::cout << c.gt << "," << c.syn << "," << measure_id << "," << fmt_score(c.score)
                      << "\n";
        return 0;
    }
    ordered_json report = report_header("batch");
    report["measure"] = measure_id;
    report["config"] = config_echo(measure_id, scoot::measure_config(measure_id, base), opt);
    ordered_json records = ordered_json::array();
    for (const Cell& c : cells)
        records.push_back({{"algorithm", c.algo},
                           {"photo", c.photo},
                           {"gt", c.gt},
                           {"syn", c.syn},
                           {"score", c.score}});
    report["records"] = records;
    emit(report);
    return 0;
}

int run_meta(const CliOptions& opt, const std::string& meta_id) {
    const std::string measure_id = apply_stats_flag(opt.measure, opt.stats);
    const scoot::ScootConfig base = base_config(opt);
    const scoot::Measure m = scoot::make_measure(measure_id, base);

    scoot::MetaResult result;
    if (meta_id == "mm4") {
        if (opt.pairs.empty())
            throw std::invalid_argument("meta mm4 requires --pairs");
        result = scoot::mm4_human_agreement(scoot::load_ranked_pairs(opt.pairs), m, opt.jobs);
    } else {
        if (opt.manifest.empty())
            throw std::invalid_argument("meta " + meta_id + " requires --manifest");
        const scoot::BenchmarkDataset ds = scoot::load_manifest(opt.manifest);
        if (meta_id == "mm1")
            result = scoot::mm1_resize_stability(ds, m, opt.jobs);
        else if (meta_id == "mm2")
            result = scoot::mm2_rotation_stability(ds, m, opt.jobs);
        else
            result = scoot::mm3_content_capture(ds, m, static_cast<std::uint8_t>(opt.threshold),
                                                opt.jobs);
    }

    if (opt.format == "csv") {
        std::cout << "meta,measure,item,value\n";
        for (const auto& [id, v] : result.per_item)
            std::cout << result.meta_id << "," << measure_id << "," << id << "," << fmt_score(v)
                      << "\n";
        std::cout << result.meta_id << "," << measure_id << ",aggregate,"
                  << fmt_score(result.aggregate) << "\n";
        return 0;
    }
    ordered_json report = report_header("meta");
    report["meta"] = result.meta_id;
    report["measure"] = measure_id;
    report["config"] = config_echo(measure_id, scoot::measure_config(measure_id, base), opt);
    report["aggregate"] = result.aggregate;
    ordered_json items = ordered_json::array();
    for (const auto& [id, v] : result.per_item) items.push_back({{"id", id}, {"value", v}});
    report["per_item"] = items;
    report["warnings"] = result.warnings;
    emit(report);
    return 0;
}

int run_features(const CliOptions& opt, const std::string& img_path) {
    const std::string measure_id = apply_stats_flag(opt.measure, opt.stats);
    if (!scoot::is_scoot_measure(measure_id))
        throw std::invalid_argument("features requires a scoot measure id");
    const scoot::ScootConfig cfg = scoot::measure_config(measure_id, base_config(opt));
    auto extractor = measure_id == "scoot-glrlm"   ? scoot::make_glrlm_extractor()
                     : measure_id == "scoot-sobel" ? scoot::make_sobel_extractor()
                                                   : scoot::make_glcm_extractor();
    const scoot::GrayImage img = scoot::load_gray(img_path);
    const scoot::StyleFeatureVector v = scoot::psi(img, cfg, *extractor);

    if (opt.format == "csv") {
        std::cout << "index,value\n";
        for (std::size_t i = 0; i < v.values.size(); ++i)
            std::cout << i << "," << fmt_score(v.values[i]) << "\n";
        return 0;
    }
    ordered_json report = report_header("features");
    report["path"] = img_path;
    report["measure"] = measure_id;
    report["layout"] = ordered_json{{"extractor", v.layout.extractor_id},
                                    {"per_block", v.layout.per_block},
                                    {"grid", v.layout.grid_k},
                                    {"levels", v.layout.n_levels}};
    report["values"] = v.values;
    report["warnings"] = v.warnings;
    emit(report);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Scoot style-similarity scoring and meta-measure benchmarks"};
    app.require_subcommand(1);

    CliOptions opt;
    std::string gt_path, syn_path, img_path, meta_id;

    CLI::App* score = app.add_subcommand("score", "score one GT/synthesis pair");
    score->add_option("gt", gt_path, "ground-truth sketch")->required();
    score->add_option("syn", syn_path, "synthesized sketch")->required();
    add_config_flags(score, opt);

    CLI::App* batch = app.add_subcommand("batch", "score every pair in a dataset manifest");
    batch->add_option("--manifest", opt.manifest, "dataset manifest JSON")->required();
    add_config_flags(batch, opt);

    CLI::App* meta = app.add_subcommand("meta", "run a meta-measure (mm1..mm4)");
    meta->add_option("id", meta_id, "meta-measure id")
        ->required()
        ->check(CLI::IsMember({"mm1", "mm2", "mm3", "mm4"}));
    meta->add_option("--manifest", opt.manifest, "dataset manifest JSON (mm1-mm3)");
    meta->add_option("--pairs", opt.pairs, "ranked pair set JSON (mm4)");
    meta->add_option("--threshold", opt.threshold, "stroke split threshold (mm3)")
        ->check(CLI::Range(0, 255));
    add_config_flags(meta, opt);

    CLI::App* features = app.add_subcommand("features", "dump the style feature vector");
    features->add_option("image", img_path, "input image")->required();
    add_config_flags(features, opt);

    CLI::App* list = app.add_subcommand("list", "list registered measure ids");

    CLI11_PARSE(app, argc, argv);

    try {
        if (score->parsed()) return run_score(opt, gt_path, syn_path);
        if (batch->parsed()) return run_batch(opt);
        if (meta->parsed()) return run_meta(opt, meta_id);
        if (features->parsed()) return run_features(opt, img_path);
        if (list->parsed()) {
            for (const auto& id : scoot::measure_ids()) std::cout << id << "\n";
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
