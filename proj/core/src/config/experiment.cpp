/*
 * (C) Copyright 2026 hda authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "hda/config/experiment.hpp"

#include <cstdio>
#include <cstdlib>
#include <sstream>

#include "hda/errors.hpp"

namespace hda::cfg {

namespace {

std::vector<int> to_ints(const std::vector<std::int64_t>& v) {
  std::vector<int> out;
  out.reserve(v.size());
  for (auto x : v) out.push_back(static_cast<int>(x));
  return out;
}

std::vector<std::int64_t> to_int64(const std::vector<int>& v) {
  return {v.begin(), v.end()};
}

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  std::string s(buf);
  // Keep floats recognizable as floats on re-parse.
  if (s.find_first_of(".eEn") == std::string::npos) s += ".0";
  return s;
}

}  // namespace

ExperimentConfig ExperimentConfig::from_toml(const TomlTable& t) {
  ExperimentConfig c;

  c.model.n_sites = static_cast<int>(t.get_int("model.n_sites", c.model.n_sites));
  c.model.n_fast = static_cast<int>(t.get_int("model.n_fast", c.model.n_fast));
  c.model.forcing = t.get_double("model.forcing", c.model.forcing);
  c.model.h = t.get_double("model.h", c.model.h);
  c.model.c = t.get_double("model.c", c.model.c);
  c.model.b = t.get_double("model.b", c.model.b);
  c.model.dt = t.get_double("model.dt", c.model.dt);
  c.model.steps_per_window =
      static_cast<int>(t.get_int("model.steps_per_window", c.model.steps_per_window));

  c.truth_windows = static_cast<int>(t.get_int("truth.n_windows", c.truth_windows));
  c.spinup_windows = static_cast<int>(t.get_int("truth.spinup_windows", c.spinup_windows));
  c.truth_seed = static_cast<std::uint64_t>(t.get_int("truth.seed", static_cast<std::int64_t>(c.truth_seed)));

  c.obs_steps = to_ints(t.get_ints("observations.steps", to_int64(c.obs_steps)));
  c.obs_site_stride = static_cast<int>(t.get_int("observations.site_stride", c.obs_site_stride));
  c.obs_sigma = t.get_double("observations.sigma", c.obs_sigma);
  c.obs_seed = static_cast<std::uint64_t>(t.get_int("observations.seed", static_cast<std::int64_t>(c.obs_seed)));

  const std::string bkind = t.get_string("covariance.kind", "gaussian");
  if (bkind == "gaussian")
    c.covs.b_kind = assim::BKind::GaussianRing;
  else if (bkind == "diagonal")
    c.covs.b_kind = assim::BKind::Diagonal;
  else
    throw ConfigError("covariance.kind must be 'gaussian' or 'diagonal'");
  c.covs.sigma_b = t.get_double("covariance.sigma_b", c.covs.sigma_b);
  c.covs.length_scale = t.get_double("covariance.length_scale", c.covs.length_scale);
  c.covs.sigma_obs = t.get_double("covariance.sigma_obs", c.obs_sigma);
  c.covs.p_std = t.get_double("covariance.p_std", c.covs.p_std);

  c.minimizer.n_outer = static_cast<int>(t.get_int("minimizer.n_outer", c.minimizer.n_outer));
  c.minimizer.max_inner = static_cast<int>(t.get_int("minimizer.max_inner", c.minimizer.max_inner));
  c.minimizer.inner_tol = t.get_double("minimizer.inner_tol", c.minimizer.inner_tol);

  c.hidden_dims = to_ints(t.get_ints("network.hidden", to_int64(c.hidden_dims)));
  c.stencil = static_cast<int>(t.get_int("network.stencil", c.stencil));
  c.t_cycle = t.get_double("network.t_cycle", c.t_cycle);
  c.net_init_seed =
      static_cast<std::uint64_t>(t.get_int("network.init_seed", static_cast<std::int64_t>(c.net_init_seed)));

  c.training.learning_rate = t.get_double("training.learning_rate", c.training.learning_rate);
  c.training.batch_size = static_cast<int>(t.get_int("training.batch_size", c.training.batch_size));
  c.training.max_epochs = static_cast<int>(t.get_int("training.max_epochs", c.training.max_epochs));
  c.training.dropout_rate = t.get_double("training.dropout", c.training.dropout_rate);
  c.training.patience = static_cast<int>(t.get_int("training.patience", c.training.patience));
  c.training.seed = static_cast<std::uint64_t>(t.get_int("training.seed", static_cast<std::int64_t>(c.training.seed)));

  c.dataset_mode = t.get_string("dataset.mode", c.dataset_mode);
  c.windows_per_day = static_cast<int>(t.get_int("dataset.windows_per_day", c.windows_per_day));
  c.train_days = static_cast<int>(t.get_int("dataset.train_days", c.train_days));
  c.size_strategy = t.get_string("dataset.size_strategy", c.size_strategy);
  c.size_days = static_cast<int>(t.get_int("dataset.size_days", c.size_days));

  c.cycle_windows = static_cast<int>(t.get_int("cycling.n_windows", c.cycle_windows));
  c.background_noise = t.get_double("cycling.background_noise", c.background_noise);
  c.background_seed =
      static_cast<std::uint64_t>(t.get_int("cycling.background_seed", static_cast<std::int64_t>(c.background_seed)));

  c.scratch_seed = static_cast<std::uint64_t>(t.get_int("online.scratch_seed", static_cast<std::int64_t>(c.scratch_seed)));
  c.early_p_std = t.get_double("online.early_p_std", c.early_p_std);
  c.early_windows = static_cast<int>(t.get_int("online.early_windows", c.early_windows));

  c.leads = to_ints(t.get_ints("diagnostics.leads", to_int64(c.leads)));
  c.significance.level = t.get_double("diagnostics.significance_level", c.significance.level);
  c.significance.inflation = t.get_double("diagnostics.inflation", c.significance.inflation);
  c.sidak_tests = static_cast<int>(t.get_int("diagnostics.sidak_tests", c.sidak_tests));
  c.spectra_max_wavenumber =
      static_cast<int>(t.get_int("diagnostics.spectra_max_wavenumber", c.spectra_max_wavenumber));
  c.eval_fraction = t.get_double("diagnostics.eval_fraction", c.eval_fraction);

  c.out_dir = t.get_string("paths.out_dir", c.out_dir);
  c.nature_path = t.get_string("paths.nature", c.nature_path);
  c.archive_path = t.get_string("paths.archive", c.archive_path);
  c.dataset_path = t.get_string("paths.dataset", c.dataset_path);
  c.net_path = t.get_string("paths.net", c.net_path);
  c.scorecard_experiments = t.get_strings("paths.scorecard_experiments", c.scorecard_experiments);
  c.scorecard_reference = t.get_string("paths.scorecard_reference", c.scorecard_reference);

  c.sweep_fractions = t.get_doubles("sweep.fractions", c.sweep_fractions);
  c.sweep_truncations = to_ints(t.get_ints("sweep.truncations", to_int64(c.sweep_truncations)));
  c.sweep_p_values = t.get_doubles("sweep.p_values", c.sweep_p_values);

  t.reject_unknown();
  c.validate();
  return c;
}

ExperimentConfig ExperimentConfig::from_file(const std::string& path) {
  return from_toml(TomlTable::parse_file(path));
}

void ExperimentConfig::validate() const {
  model.validate();
  covs.validate();
  minimizer.validate();
  significance.validate();
  if (dataset_mode != "prediction" && dataset_mode != "post-processing")
    throw ConfigError("dataset.mode must be 'prediction' or 'post-processing'");
  size_strategy_from_string(size_strategy);
  if (windows_per_day < 1) throw ConfigError("dataset.windows_per_day must be >= 1");
  if (obs_site_stride < 1) throw ConfigError("observations.site_stride must be >= 1");
  if (!(obs_sigma > 0.0)) throw ConfigError("observations.sigma must be positive");
  if (hidden_dims.empty()) throw ConfigError("network.hidden must not be empty");
  if (stencil < 0) throw ConfigError("network.stencil must be >= 0");
  if (!(eval_fraction > 0.0 && eval_fraction <= 1.0))
    throw ConfigError("diagnostics.eval_fraction must be in (0, 1]");
  if (training.dropout_rate < 0.0 || training.dropout_rate >= 1.0)
    throw ConfigError("training.dropout must be in [0, 1)");
  if (training.patience < 1) throw ConfigError("training.patience must be >= 1");
}

assim::ObsConfig ExperimentConfig::observations() const {
  return assim::ObsConfig::strided(model.n_sites, obs_steps, obs_site_stride, obs_sigma);
}

dyn::CorrectionMode ExperimentConfig::correction_mode() const {
  return dataset_mode == "prediction" ? dyn::CorrectionMode::Prediction
                                      : dyn::CorrectionMode::PostProcessing;
}

dyn::HybridConfig ExperimentConfig::hybrid(net::NetParams net) const {
  dyn::HybridConfig h;
  h.net = std::move(net);
  h.mode = correction_mode();
  h.forcing_scale = 1.0 / model.steps_per_window;
  h.stencil = stencil;
  h.t_cycle = t_cycle;
  return h;
}

int ExperimentConfig::spectra_wavenumber() const {
  return spectra_max_wavenumber > 0 ? spectra_max_wavenumber : (model.n_sites - 1) / 2;
}

std::string ExperimentConfig::resolve_path(const std::string& name) const {
  if (!name.empty() && name.front() == '/') return name;
  std::string root = out_dir;
  if (root.empty()) {
    if (const char* env = std::getenv("HDA_DATA_DIR")) root = env;
  }
  if (root.empty()) root = ".";
  if (root.back() != '/') root += '/';
  return root + name;
}

std::string ExperimentConfig::to_toml() const {
  std::ostringstream os;
  auto key_i = [&](const char* k, std::int64_t v) { os << k << " = " << v << "\n"; };
  auto key_d = [&](const char* k, double v) { os << k << " = " << fmt_double(v) << "\n"; };
  auto key_s = [&](const char* k, const std::string& v) { os << k << " = \"" << v << "\"\n"; };
  auto key_iv = [&](const char* k, const std::vector<int>& v) {
    os << k << " = [";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
    os << "]\n";
  };
  auto key_dv = [&](const char* k, const std::vector<double>& v) {
    os << k << " = [";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << fmt_double(v[i]);
    os << "]\n";
  };
  auto key_sv = [&](const char* k, const std::vector<std::string>& v) {
    os << k << " = [";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << '"' << v[i] << '"';
    os << "]\n";
  };

  os << "[model]\n";
  key_i("n_sites", model.n_sites);
  key_i("n_fast", model.n_fast);
  key_d("forcing", model.forcing);
  key_d("h", model.h);
  key_d("c", model.c);
  key_d("b", model.b);
  key_d("dt", model.dt);
  key_i("steps_per_window", model.steps_per_window);

  os << "\n[truth]\n";
  key_i("n_windows", truth_windows);
  key_i("spinup_windows", spinup_windows);
  key_i("seed", static_cast<std::int64_t>(truth_seed));

  os << "\n[observations]\n";
  key_iv("steps", obs_steps);
  key_i("site_stride", obs_site_stride);
  key_d("sigma", obs_sigma);
  key_i("seed", static_cast<std::int64_t>(obs_seed));

  os << "\n[covariance]\n";
  key_s("kind", covs.b_kind == assim::BKind::GaussianRing ? "gaussian" : "diagonal");
  key_d("sigma_b", covs.sigma_b);
  key_d("length_scale", covs.length_scale);
  key_d("sigma_obs", covs.sigma_obs);
  key_d("p_std", covs.p_std);

  os << "\n[minimizer]\n";
  key_i("n_outer", minimizer.n_outer);
  key_i("max_inner", minimizer.max_inner);
  key_d("inner_tol", minimizer.inner_tol);

  os << "\n[network]\n";
  key_iv("hidden", hidden_dims);
  key_i("stencil", stencil);
  key_d("t_cycle", t_cycle);
  key_i("init_seed", static_cast<std::int64_t>(net_init_seed));

  os << "\n[training]\n";
  key_d("learning_rate", training.learning_rate);
  key_i("batch_size", training.batch_size);
  key_i("max_epochs", training.max_epochs);
  key_d("dropout", training.dropout_rate);
  key_i("patience", training.patience);
  key_i("seed", static_cast<std::int64_t>(training.seed));

  os << "\n[dataset]\n";
  key_s("mode", dataset_mode);
  key_i("windows_per_day", windows_per_day);
  key_i("train_days", train_days);
  key_s("size_strategy", size_strategy);
  key_i("size_days", size_days);

  os << "\n[cycling]\n";
  key_i("n_windows", cycle_windows);
  key_d("background_noise", background_noise);
  key_i("background_seed", static_cast<std::int64_t>(background_seed));

  os << "\n[online]\n";
  key_i("scratch_seed", static_cast<std::int64_t>(scratch_seed));
  key_d("early_p_std", early_p_std);
  key_i("early_windows", early_windows);

  os << "\n[diagnostics]\n";
  key_iv("leads", leads);
  key_d("significance_level", significance.level);
  key_d("inflation", significance.inflation);
  key_i("sidak_tests", sidak_tests);
  key_i("spectra_max_wavenumber", spectra_max_wavenumber);
  key_d("eval_fraction", eval_fraction);

  os << "\n[paths]\n";
  key_s("out_dir", out_dir);
  key_s("nature", nature_path);
  key_s("archive", archive_path);
  key_s("dataset", dataset_path);
  key_s("net", net_path);
  key_sv("scorecard_experiments", scorecard_experiments);
  key_s("scorecard_reference", scorecard_reference);

  os << "\n[sweep]\n";
  key_dv("fractions", sweep_fractions);
  key_iv("truncations", sweep_truncations);
  key_dv("p_values", sweep_p_values);
  return os.str();
}

}  // namespace hda::cfg
