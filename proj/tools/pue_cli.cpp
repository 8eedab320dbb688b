// Command-line front end: campaigns, presets, analytic bounds, BPNN
// comparison and the naive free-space sweep.
//
// Exit codes: 0 success, 2 configuration error, 3 numeric/validity error.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pue/detect.hpp"
#include "pue/error.hpp"
#include "pue/experiments.hpp"
#include "pue/report.hpp"
#include "pue/scenario.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitNumeric = 3;

struct CampaignFlags {
  std::string config;
  std::string preset;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> trials;
  std::string out;
  std::string detector = "rss";
  std::size_t workers = 1;
  std::optional<std::size_t> train_trials;
  std::string model_out;
};

void add_campaign_flags(CLI::App& cmd, CampaignFlags& f, const std::string& default_preset) {
  f.preset = default_preset;
  cmd.add_option("--config", f.config, "Scenario JSON file");
  cmd.add_option("--preset", f.preset, "Preset to use when no --config is given")
      ->capture_default_str();
  cmd.add_option("--seed", f.seed, "Override the campaign seed");
  cmd.add_option("--trials", f.trials, "Override the number of trials");
  cmd.add_option("--out", f.out, "Write CSV here instead of stdout");
  cmd.add_option("--workers", f.workers, "Worker threads")->capture_default_str();
}

pue::Scenario load(const CampaignFlags& f) {
  pue::Scenario s = f.config.empty() ? pue::preset_scenario(f.preset)
                                     : pue::load_scenario_file(f.config);
  if (f.seed) s.seed = *f.seed;
  if (f.trials) s.n_trials = *f.trials;
  s.validate();
  return s;
}

void emit(const CampaignFlags& f, const std::string& csv, const std::string& summary) {
  if (f.out.empty()) {
    std::cout << csv;
    std::cerr << summary;
    return;
  }
  std::ofstream out(f.out, std::ios::binary);
  if (!out) throw pue::ConfigError("cannot write '" + f.out + "'");
  out << csv;
  std::cout << summary;
}

void run_campaign(const CampaignFlags& f) {
  const pue::Scenario s = load(f);
  std::vector<pue::RocSweep> sweeps;
  if (f.detector == "rss") {
    const auto thresholds = s.thresholds.empty() ? pue::default_thresholds() : s.thresholds;
    sweeps.push_back(pue::sweep_roc(s, thresholds, f.workers));
  } else {
    const std::size_t train = f.train_trials.value_or(s.bpnn.train_trials);
    if (!f.model_out.empty()) {
      const auto detector = pue::train_bpnn_detector(s, train, s.seed);
      pue::bpnn::save_model_file(f.model_out, detector.model);
    }
    auto cmp = pue::run_bpnn_comparison(s, train, s.n_trials, s.seed, f.workers);
    if (f.detector == "both") sweeps.push_back(std::move(cmp.proposed));
    sweeps.push_back(std::move(cmp.bpnn));
  }
  emit(f, pue::roc_csv(sweeps, s.id), pue::auc_summary(sweeps));
}

struct BoundFlags {
  std::size_t n = 4;
  double r_crn = 500.0;
  std::optional<double> ratio_r;
  std::optional<double> f_db;
  double gamma = 31.8;
  double threshold = 1000.0;
  double eps_prime = 0.0;
  std::optional<double> max_dfc_sum;
};

void print_bounds(const BoundFlags& b) {
  pue::BoundParams p;
  p.n = b.n;
  p.r_crn = b.r_crn;
  p.gamma_coeff = b.gamma;
  p.threshold_t = b.threshold;
  p.eps_prime = b.eps_prime;
  if (b.ratio_r && b.f_db)
    throw pue::ConfigError("give either --ratio-r or --f-db, not both");
  p.f_db = b.f_db.value_or(b.ratio_r ? 10.0 * std::log10(*b.ratio_r) : 30.0);
  p.ratio_r = b.ratio_r.value_or(std::pow(10.0, p.f_db / 10.0));
  const double dfc = b.max_dfc_sum.value_or(2.0 * b.r_crn);

  std::cout << "n,r_crn,ratio_r,f_db,gamma,threshold,eps_prime,max_dfc_sum\n"
            << p.n << ',' << pue::format_sig6(p.r_crn) << ',' << pue::format_sig6(p.ratio_r)
            << ',' << pue::format_sig6(p.f_db) << ',' << pue::format_sig6(p.gamma_coeff) << ','
            << pue::format_sig6(p.threshold_t) << ',' << pue::format_sig6(p.eps_prime) << ','
            << pue::format_sig6(dfc) << '\n';
  std::cout << "fn_probability_bound," << pue::format_sig6(pue::fn_probability_bound(p)) << '\n';
  std::cout << "fp_probability_bound," << pue::format_sig6(pue::fp_probability_bound(p)) << '\n';
  std::cout << "naive_detection_rate_bound,"
            << pue::format_sig6(pue::naive_detection_rate_bound(p, dfc)) << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Primary-user-emulation attack detection toolkit"};
  app.require_subcommand(1);

  CampaignFlags run_flags;
  auto* run = app.add_subcommand("run", "ROC campaign from a scenario");
  add_campaign_flags(*run, run_flags, "table3-baseline");
  run->add_option("--detector", run_flags.detector, "Detector(s) to evaluate")
      ->check(CLI::IsMember({"rss", "bpnn", "both"}))
      ->capture_default_str();
  run->add_option("--train-trials", run_flags.train_trials, "BPNN training trials");
  run->add_option("--model-out", run_flags.model_out, "Dump trained BPNN weights here");

  CampaignFlags cmp_flags;
  cmp_flags.detector = "both";
  auto* compare = app.add_subcommand("compare", "RSS detector vs BPNN baseline");
  add_campaign_flags(*compare, cmp_flags, "table3-baseline");
  compare->add_option("--detector", cmp_flags.detector, "Detector(s) to report")
      ->check(CLI::IsMember({"bpnn", "both"}))
      ->capture_default_str();
  compare->add_option("--train-trials", cmp_flags.train_trials, "BPNN training trials");
  compare->add_option("--model-out", cmp_flags.model_out, "Dump trained BPNN weights here");

  std::string preset_name;
  std::string preset_out;
  auto* preset = app.add_subcommand("preset", "List presets, or print one as JSON");
  preset->add_option("name", preset_name, "Preset name");
  preset->add_option("--out", preset_out, "Write the JSON here");

  BoundFlags bound_flags;
  auto* bounds = app.add_subcommand("bounds", "Evaluate the analytic FN/FP/detection bounds");
  bounds->add_option("--n", bound_flags.n, "Number of CRs")->capture_default_str();
  bounds->add_option("--r-crn", bound_flags.r_crn, "CRN radius (m)")->capture_default_str();
  bounds->add_option("--ratio-r", bound_flags.ratio_r, "PU/attacker power ratio R");
  bounds->add_option("--f-db", bound_flags.f_db, "PU/attacker power gap F (dB)");
  bounds->add_option("--gamma", bound_flags.gamma, "Path-loss slope (dB/decade)")
      ->capture_default_str();
  bounds->add_option("--threshold", bound_flags.threshold, "Spread threshold T (m)")
      ->capture_default_str();
  bounds->add_option("--eps-prime", bound_flags.eps_prime, "Error term (dB)")
      ->capture_default_str();
  bounds->add_option("--max-dfc-sum", bound_flags.max_dfc_sum,
                     "max(d_i,fc + d_j,fc) for the naive bound (default 2 r_crn)");

  CampaignFlags fig4_flags;
  auto* fig4 = app.add_subcommand("fig4", "Naive free-space detection accuracy over N");
  add_campaign_flags(*fig4, fig4_flags, "fig4-naive");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    if (*run) {
      run_campaign(run_flags);
    } else if (*compare) {
      run_campaign(cmp_flags);
    } else if (*preset) {
      if (preset_name.empty()) {
        for (const auto& n : pue::preset_names()) std::cout << n << '\n';
      } else {
        const std::string json = pue::scenario_to_json(pue::preset_scenario(preset_name));
        if (preset_out.empty()) {
          std::cout << json;
        } else {
          std::ofstream out(preset_out, std::ios::binary);
          if (!out) throw pue::ConfigError("cannot write '" + preset_out + "'");
          out << json;
        }
      }
    } else if (*bounds) {
      print_bounds(bound_flags);
    } else if (*fig4) {
      const pue::Scenario s = load(fig4_flags);
      const auto rows = pue::run_naive_sweep(s, fig4_flags.workers);
      emit(fig4_flags, pue::naive_sweep_csv(rows, s.id), "");
    }
  } catch (const pue::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const pue::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitNumeric;
  }
  return 0;
}
