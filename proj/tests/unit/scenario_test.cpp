#include <gtest/gtest.h>

#include <cmath>
#include <string>

#include "pue/error.hpp"
#include "pue/scenario.hpp"

namespace pue {
namespace {

TEST(Presets, TableBaseline) {
  const Scenario s = preset_scenario("table3-baseline");
  EXPECT_EQ(s.id, "table3-baseline");
  EXPECT_DOUBLE_EQ(s.transmitter.p_pu_dbm, 80.0);
  EXPECT_DOUBLE_EQ(s.transmitter.power_gap_db(), 30.0);
  EXPECT_EQ(s.true_model, (LogShadowModel{111.76, 31.8, 8.0}));
  EXPECT_DOUBLE_EQ(s.field_side, 3000.0);
  EXPECT_DOUBLE_EQ(s.pu_mobility, 100.0);
  EXPECT_NO_THROW(s.validate());
}

TEST(Presets, NaiveFreeSpace) {
  const Scenario s = preset_scenario("fig4-naive");
  EXPECT_EQ(s.propagation, PropagationKind::kFreeSpace);
  EXPECT_NEAR(s.transmitter.power_ratio(), 1e6, 1e-3);
  EXPECT_EQ(s.n_sweep.size(), 10u);
  EXPECT_EQ(s.n_trials, 100000u);
}

TEST(Presets, UsrpEmulation) {
  const Scenario s = preset_scenario("usrp-emulation");
  EXPECT_NEAR(s.transmitter.p_pu_dbm, 85.37819095073274, 1e-9);
  EXPECT_NEAR(s.true_model.gamma_coeff, 28.8915065867366, 1e-9);
  EXPECT_DOUBLE_EQ(s.transmitter.power_gap_db(), 60.0);
}

TEST(Presets, AllNamesResolve) {
  for (const auto& name : preset_names()) EXPECT_NO_THROW(preset_scenario(name).validate());
  EXPECT_THROW(preset_scenario("nope"), ConfigError);
}

TEST(Thresholds, Defaults) {
  const auto t = default_thresholds(400);
  ASSERT_EQ(t.size(), 401u);
  EXPECT_EQ(t[0], 0.0);
  EXPECT_DOUBLE_EQ(t[1], 1.0);
  EXPECT_NEAR(t.back(), 1e9, 1e-3);
  for (std::size_t k = 1; k < t.size(); ++k) EXPECT_GT(t[k], t[k - 1]);
  const auto s = default_score_thresholds(201);
  EXPECT_DOUBLE_EQ(s.front(), -1.0);
  EXPECT_DOUBLE_EQ(s.back(), 1.0);
  EXPECT_NEAR(s[100], 0.0, 1e-15);
}

TEST(PowerGap, SetsAttackerPower) {
  const Scenario s = with_power_gap(preset_scenario("table3-baseline"), 45.0);
  EXPECT_DOUBLE_EQ(s.transmitter.p_attacker_dbm, 35.0);
}

TEST(Json, RoundTripPresets) {
  for (const auto& name : preset_names()) {
    Scenario s = preset_scenario(name);
    s.error_sigmas = {1.5, 0.25};
    s.thresholds = {0.0, 10.0, 1234.5};
    s.bpnn.loss = bpnn::Loss::kCrossEntropy;
    EXPECT_EQ(scenario_from_json(scenario_to_json(s)), s) << name;
  }
}

TEST(Json, PartialConfigKeepsDefaults) {
  const Scenario s = scenario_from_json(R"({"n_crs": 9, "true_model": {"shadow_sigma": 4}})");
  EXPECT_EQ(s.n_crs, 9u);
  EXPECT_DOUBLE_EQ(s.true_model.shadow_sigma, 4.0);
  EXPECT_DOUBLE_EQ(s.true_model.c, 111.76);
  EXPECT_EQ(s.n_trials, Scenario{}.n_trials);
}

TEST(Json, Rejections) {
  EXPECT_THROW(scenario_from_json("{"), ConfigError);
  EXPECT_THROW(scenario_from_json("[]"), ConfigError);
  EXPECT_THROW(scenario_from_json(R"({"n_crss": 4})"), ConfigError);
  EXPECT_THROW(scenario_from_json(R"({"n_crs": "four"})"), ConfigError);
  EXPECT_THROW(scenario_from_json(R"({"bpnn": {"loss": "hinge"}})"), ConfigError);
  EXPECT_THROW(scenario_from_json(R"({"propagation": "ray-tracing"})"), ConfigError);
  EXPECT_THROW(scenario_from_json(R"({"n_crs": 1})"), ConfigError);
  EXPECT_THROW(scenario_from_json(R"({"attacker_fraction": 1.5})"), ConfigError);
  EXPECT_THROW(scenario_from_json(R"({"transmitter": {"p_pu_dbm": 10, "p_attacker_dbm": 20}})"),
               ConfigError);
  EXPECT_THROW(load_scenario_file("/nonexistent/pue.json"), ConfigError);
}

}  // namespace
}  // namespace pue
