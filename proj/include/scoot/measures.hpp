#pragma once

#include <string>
#include <vector>

#include "scoot/meta.hpp"
#include "scoot/style.hpp"

namespace scoot {

// Registered ids: scoot-ce, scoot-h, scoot-e, scoot-c, scoot-ch, scoot-he,
// scoot-hec, scoot-ce-nq, scoot-glrlm, scoot-sobel, ssim, gmsd.
std::vector<std::string> measure_ids();

// Builds a measure from its id; grid/levels/directions come from `base`
// (the id fixes the statistic subset and the quantization toggle).
// Pixel-level baselines resize the synthesis to the GT's dimensions
// (nearest-neighbor) before scoring; Scoot variants never resize.
Measure make_measure(const std::string& id, const ScootConfig& base = {});

bool is_scoot_measure(const std::string& id);

// The effective config a measure id implies on top of `base`.
ScootConfig measure_config(const std::string& id, const ScootConfig& base = {});

}  // namespace scoot
