#include "scoot/measures.hpp"

#include <algorithm>
#include <stdexcept>

#include "scoot/baselines.hpp"

namespace scoot {

namespace {

const std::vector<std::string> kIds = {"scoot-ce", "scoot-h",     "scoot-e",     "scoot-c",
                                       "scoot-ch", "scoot-he",    "scoot-hec",   "scoot-ce-nq",
                                       "scoot-glrlm", "scoot-sobel", "ssim",     "gmsd"};

GrayImage fit_to(const GrayImage& img, const GrayImage& ref) {
    if (img.same_size(ref)) return img;
    return resize_nn(img, ref.width, ref.height);
}

}  // namespace

std::vector<std::string> measure_ids() { return kIds; }

bool is_scoot_measure(const std::string& id) { return id.rfind("scoot-", 0) == 0; }

ScootConfig measure_config(const std::string& id, const ScootConfig& base) {
    ScootConfig cfg = base;
    if (id == "scoot-ce" || id == "scoot-glrlm" || id == "scoot-sobel") {
        cfg.statistics = parse_statistics("ce");
    } else if (id == "scoot-ce-nq") {
        cfg.statistics = parse_statistics("ce");
        cfg.quantize_enabled = false;
    } else if (id.rfind("scoot-", 0) == 0) {
        cfg.statistics = parse_statistics(id.substr(6));
    }
    return cfg;
}

Measure make_measure(const std::string& id, const ScootConfig& base) {
    if (std::find(kIds.begin(), kIds.end(), id) == kIds.end()) {
        std::string valid;
        for (const auto& v : kIds) valid += (valid.empty() ? "" : ", ") + v;
        throw std::invalid_argument("unknown measure id \"" + id + "\" (valid: " + valid + ")");
    }

    Measure m;
    m.id = id;
    if (id == "ssim") {
        m.higher_is_better = true;
        m.score = [](const GrayImage& gt, const GrayImage& syn) {
            return ssim(gt, fit_to(syn, gt));
        };
        return m;
    }
    if (id == "gmsd") {
        m.higher_is_better = false;
        m.score = [](const GrayImage& gt, const GrayImage& syn) {
            return gmsd(gt, fit_to(syn, gt));
        };
        return m;
    }

    const ScootConfig cfg = measure_config(id, base);
    cfg.validate();
    auto extractor = id == "scoot-glrlm"   ? make_glrlm_extractor()
                     : id == "scoot-sobel" ? make_sobel_extractor()
                                           : make_glcm_extractor();
    m.higher_is_better = true;
    m.score = [cfg, extractor](const GrayImage& gt, const GrayImage& syn) {
        return scoot(gt, syn, cfg, *extractor);
    };
    return m;
}

}  // namespace scoot
