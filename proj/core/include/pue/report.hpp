#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pue/experiments.hpp"

namespace pue {

inline constexpr std::string_view kRocCsvHeader =
    "threshold,fpr,tpr,n_trials,scenario_id,detector";

/// %.6g
std::string format_sig6(double value);

/// Header plus one row per threshold per sweep.
std::string roc_csv(std::span<const RocSweep> sweeps, std::string_view scenario_id);

/// "auc,<detector>,<value>" per sweep.
std::string auc_summary(std::span<const RocSweep> sweeps);

std::string naive_sweep_csv(std::span<const NaiveSweepRow> rows, std::string_view scenario_id);

}  // namespace pue
