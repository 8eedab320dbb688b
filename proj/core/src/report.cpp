#include "pue/report.hpp"

#include <cstdio>
#include <sstream>

namespace pue {

std::string format_sig6(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", value);
  return buf;
}

std::string roc_csv(std::span<const RocSweep> sweeps, std::string_view scenario_id) {
  std::ostringstream out;
  out << kRocCsvHeader << '\n';
  for (const auto& sweep : sweeps)
    for (std::size_t k = 0; k < sweep.thresholds.size(); ++k)
      out << format_sig6(sweep.thresholds[k]) << ',' << format_sig6(sweep.rates[k].fpr) << ','
          << format_sig6(sweep.rates[k].tpr) << ',' << sweep.n_trials << ',' << scenario_id << ','
          << sweep.detector << '\n';
  return out.str();
}

std::string auc_summary(std::span<const RocSweep> sweeps) {
  std::ostringstream out;
  for (const auto& sweep : sweeps)
    out << "auc," << sweep.detector << ',' << format_sig6(sweep.curve.auc) << '\n';
  return out.str();
}

std::string naive_sweep_csv(std::span<const NaiveSweepRow> rows, std::string_view scenario_id) {
  std::ostringstream out;
  out << "n_crs,accuracy,std_error,n_trials,scenario_id,detector\n";
  for (const auto& row : rows)
    out << row.n_crs << ',' << format_sig6(row.result.rate()) << ','
        << format_sig6(row.result.standard_error()) << ',' << row.result.n_trials << ','
        << scenario_id << ",naive\n";
  return out.str();
}

}  // namespace pue
