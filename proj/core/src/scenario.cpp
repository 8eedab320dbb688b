#include "pue/scenario.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "pue/error.hpp"

namespace pue {

using nlohmann::json;

void Scenario::validate() const {
  auto fail = [this](const std::string& msg) { throw ConfigError("scenario '" + id + "': " + msg); };
  auto finite = [](double v) { return std::isfinite(v); };

  const std::size_t min_crs = propagation == PropagationKind::kLogShadow ? 2 : 1;
  if (n_crs < min_crs) fail("n_crs must be at least " + std::to_string(min_crs));
  if (!(r_crn > 0.0) || !finite(r_crn)) fail("r_crn must be positive");
  if (!(field_side >= 2.0 * r_crn) || !finite(field_side)) fail("field_side must be >= 2 * r_crn");
  if (!(r_neighbor >= 0.0)) fail("r_neighbor must be non-negative");
  if (!(pu_mobility >= 0.0) || !finite(pu_mobility)) fail("pu_mobility must be non-negative");
  try {
    transmitter.validate();
    true_model.validate();
  } catch (const DomainError& e) {
    fail(e.what());
  }
  if (!(error_sigmas.sigma_eps_c >= 0.0) || !(error_sigmas.sigma_eps_gamma >= 0.0) ||
      !finite(error_sigmas.sigma_eps_c) || !finite(error_sigmas.sigma_eps_gamma))
    fail("error sigmas must be finite and non-negative");
  if (n_trials < 1) fail("n_trials must be at least 1");
  if (!(attacker_fraction >= 0.0 && attacker_fraction <= 1.0))
    fail("attacker_fraction must lie in [0, 1]");
  if (!finite(eps_prime)) fail("eps_prime must be finite");
  if (!(wavelength_m > 0.0) || !(antenna_product > 0.0))
    fail("wavelength_m and antenna_product must be positive");
  for (std::size_t n : n_sweep)
    if (n < 1) fail("n_sweep entries must be at least 1");
  for (double t : thresholds)
    if (!(t >= 0.0)) fail("thresholds must be non-negative");
  if (!(bpnn.learning_rate > 0.0)) fail("bpnn.learning_rate must be positive");
}

std::vector<double> default_thresholds(std::size_t count) {
  std::vector<double> out{0.0};
  for (std::size_t i = 0; i < count; ++i)
    out.push_back(std::pow(10.0, 9.0 * static_cast<double>(i) / static_cast<double>(count - 1)));
  return out;
}

std::vector<double> default_score_thresholds(std::size_t count) {
  std::vector<double> out;
  for (std::size_t i = 0; i < count; ++i)
    out.push_back(-1.0 + 2.0 * static_cast<double>(i) / static_cast<double>(count - 1));
  return out;
}

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names{"table3-baseline", "fig4-naive", "usrp-emulation"};
  return names;
}

Scenario with_power_gap(Scenario base, double f_db) {
  base.transmitter.p_attacker_dbm = base.transmitter.p_pu_dbm - f_db;
  return base;
}

Scenario preset_scenario(std::string_view name) {
  Scenario s;
  s.id = std::string(name);
  if (name == "table3-baseline") {
    // 3000 m field, C = 111.76, Gamma = 31.8, G ~ N(0, 8^2), P_pu = 50 dBW.
    s.transmitter = {dbw_to_dbm(50.0), dbw_to_dbm(50.0) - 30.0};
    s.true_model = {111.76, 31.8, 8.0};
    s.pu_mobility = s.field_side / 30.0;
    return s;
  }
  if (name == "fig4-naive") {
    s.propagation = PropagationKind::kFreeSpace;
    s.transmitter = {dbw_to_dbm(50.0), dbw_to_dbm(50.0) - 60.0};  // R = 1e6
    s.true_model = {111.76, 31.8, 0.0};
    s.n_trials = 100000;
    s.attacker_fraction = 1.0;
    s.pu_mobility = 0.0;
    s.n_sweep = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
    return s;
  }
  if (name == "usrp-emulation") {
    // DTV station at 590-596 MHz, 345 kW, 278 m mast; receivers at 10 m.
    s.true_model = make_hata_urban_model(593.0, 278.0, 10.0, 8.0);
    const double p_pu = watts_to_dbm(345e3);
    s.transmitter = {p_pu, p_pu - 60.0};
    s.n_crs = 6;
    s.wavelength_m = 299792458.0 / 593e6;
    s.pu_mobility = s.field_side / 30.0;
    return s;
  }
  throw ConfigError("unknown preset '" + std::string(name) + "'");
}

namespace {

std::string_view loss_name(bpnn::Loss loss) {
  return loss == bpnn::Loss::kMeanSquared ? "mse" : "cross-entropy";
}

bpnn::Loss parse_loss(const std::string& s) {
  if (s == "mse") return bpnn::Loss::kMeanSquared;
  if (s == "cross-entropy") return bpnn::Loss::kCrossEntropy;
  throw ConfigError("bpnn.loss must be 'mse' or 'cross-entropy', got '" + s + "'");
}

// Reads `key` into `out` if present; rejects keys not in `allowed`.
class ObjectReader {
 public:
  ObjectReader(const json& j, std::string path, std::initializer_list<std::string_view> allowed)
      : j_(j), path_(std::move(path)) {
    if (!j.is_object()) throw ConfigError(path_ + " must be a JSON object");
    for (const auto& [key, _] : j.items()) {
      bool known = false;
      for (auto a : allowed) known = known || key == a;
      if (!known) throw ConfigError("unknown key '" + key + "' in " + path_);
    }
  }

  template <typename T>
  void get(std::string_view key, T& out) const {
    const auto it = j_.find(key);
    if (it == j_.end()) return;
    try {
      out = it->template get<T>();
    } catch (const json::exception&) {
      throw ConfigError(path_ + "." + std::string(key) + " has the wrong type");
    }
  }

  const json* child(std::string_view key) const {
    const auto it = j_.find(key);
    return it == j_.end() ? nullptr : &*it;
  }

 private:
  const json& j_;
  std::string path_;
};

}  // namespace

Scenario scenario_from_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }

  Scenario s;
  ObjectReader root(j, "config",
                    {"id", "propagation", "n_crs", "r_crn", "field_side", "r_neighbor",
                     "pu_mobility", "transmitter", "true_model", "error_sigmas", "n_trials", "seed",
                     "attacker_fraction", "eps_prime", "wavelength_m", "antenna_product",
                     "n_sweep", "thresholds", "bpnn"});
  root.get("id", s.id);
  std::string propagation = "log-shadow";
  root.get("propagation", propagation);
  if (propagation == "log-shadow")
    s.propagation = PropagationKind::kLogShadow;
  else if (propagation == "free-space")
    s.propagation = PropagationKind::kFreeSpace;
  else
    throw ConfigError("propagation must be 'log-shadow' or 'free-space'");
  root.get("n_crs", s.n_crs);
  root.get("r_crn", s.r_crn);
  root.get("field_side", s.field_side);
  root.get("r_neighbor", s.r_neighbor);
  root.get("pu_mobility", s.pu_mobility);
  root.get("n_trials", s.n_trials);
  root.get("seed", s.seed);
  root.get("attacker_fraction", s.attacker_fraction);
  root.get("eps_prime", s.eps_prime);
  root.get("wavelength_m", s.wavelength_m);
  root.get("antenna_product", s.antenna_product);
  root.get("n_sweep", s.n_sweep);
  root.get("thresholds", s.thresholds);

  if (const json* t = root.child("transmitter")) {
    ObjectReader r(*t, "transmitter", {"p_pu_dbm", "p_attacker_dbm"});
    r.get("p_pu_dbm", s.transmitter.p_pu_dbm);
    r.get("p_attacker_dbm", s.transmitter.p_attacker_dbm);
  }
  if (const json* m = root.child("true_model")) {
    ObjectReader r(*m, "true_model", {"c", "gamma", "shadow_sigma"});
    r.get("c", s.true_model.c);
    r.get("gamma", s.true_model.gamma_coeff);
    r.get("shadow_sigma", s.true_model.shadow_sigma);
  }
  if (const json* e = root.child("error_sigmas")) {
    ObjectReader r(*e, "error_sigmas", {"sigma_eps_c", "sigma_eps_gamma"});
    r.get("sigma_eps_c", s.error_sigmas.sigma_eps_c);
    r.get("sigma_eps_gamma", s.error_sigmas.sigma_eps_gamma);
  }
  if (const json* b = root.child("bpnn")) {
    ObjectReader r(*b, "bpnn", {"train_trials", "epochs", "learning_rate", "loss"});
    r.get("train_trials", s.bpnn.train_trials);
    r.get("epochs", s.bpnn.epochs);
    r.get("learning_rate", s.bpnn.learning_rate);
    std::string loss(loss_name(s.bpnn.loss));
    r.get("loss", loss);
    s.bpnn.loss = parse_loss(loss);
  }
  s.validate();
  return s;
}

std::string scenario_to_json(const Scenario& s) {
  json j = json::object();
  j["id"] = s.id;
  j["propagation"] = s.propagation == PropagationKind::kLogShadow ? "log-shadow" : "free-space";
  j["n_crs"] = s.n_crs;
  j["r_crn"] = s.r_crn;
  j["field_side"] = s.field_side;
  j["r_neighbor"] = s.r_neighbor;
  j["pu_mobility"] = s.pu_mobility;
  j["transmitter"] = {{"p_pu_dbm", s.transmitter.p_pu_dbm},
                      {"p_attacker_dbm", s.transmitter.p_attacker_dbm}};
  j["true_model"] = {{"c", s.true_model.c},
                     {"gamma", s.true_model.gamma_coeff},
                     {"shadow_sigma", s.true_model.shadow_sigma}};
  j["error_sigmas"] = {{"sigma_eps_c", s.error_sigmas.sigma_eps_c},
                       {"sigma_eps_gamma", s.error_sigmas.sigma_eps_gamma}};
  j["n_trials"] = s.n_trials;
  j["seed"] = s.seed;
  j["attacker_fraction"] = s.attacker_fraction;
  j["eps_prime"] = s.eps_prime;
  j["wavelength_m"] = s.wavelength_m;
  j["antenna_product"] = s.antenna_product;
  j["n_sweep"] = s.n_sweep;
  j["thresholds"] = s.thresholds;
  j["bpnn"] = {{"train_trials", s.bpnn.train_trials},
               {"epochs", s.bpnn.epochs},
               {"learning_rate", s.bpnn.learning_rate},
               {"loss", loss_name(s.bpnn.loss)}};
  return j.dump(2) + "\n";
}

Scenario load_scenario_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return scenario_from_json(buf.str());
}

}  // namespace pue
