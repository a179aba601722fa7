/*
 * (C) Copyright 2026 hda authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "hda/assim/cycling.hpp"

#include "hda/dyn/rk4.hpp"
#include "hda/errors.hpp"

namespace hda::assim {

std::string to_string(CycleMode mode) {
  switch (mode) {
    case CycleMode::Sc: return "sc";
    case CycleMode::ScFixedNet: return "sc-fixed-net";
    case CycleMode::Nn4dvar: return "nn4dvar";
  }
  throw ConfigError("unknown cycle mode");
}

CycleMode cycle_mode_from_string(const std::string& s) {
  if (s == "sc") return CycleMode::Sc;
  if (s == "sc-fixed-net") return CycleMode::ScFixedNet;
  if (s == "nn4dvar") return CycleMode::Nn4dvar;
  throw ConfigError("unknown cycle mode '" + s + "' (expected sc, sc-fixed-net, nn4dvar)");
}

NatureRun generate_nature(const dyn::ModelConfig& cfg, const ObsConfig& obs_cfg, int n_windows,
                          int spinup_windows, std::uint64_t state_seed, std::uint64_t obs_seed) {
  cfg.validate();
  obs_cfg.validate(cfg.n_sites, cfg.steps_per_window);
  if (n_windows < 0) throw ConfigError("generate_nature: negative window count");

  const dyn::TwoScaleModel truth(cfg);
  Rng state_rng(state_seed);
  Vector state(truth.dim());
  for (int i = 0; i < cfg.n_sites; ++i) state[i] = cfg.forcing * (0.5 + 0.1 * state_rng.gaussian());
  for (int k = cfg.n_sites; k < truth.dim(); ++k) state[k] = 0.1 * state_rng.gaussian();
  state = dyn::integrate(truth, state, spinup_windows * cfg.steps_per_window, cfg.dt);

  NatureRun run;
  run.model = cfg;
  run.obs_cfg = obs_cfg;
  run.state_seed = state_seed;
  run.obs_seed = obs_seed;

  Rng obs_rng(obs_seed);
  for (int w = 0; w < n_windows; ++w) {
    run.window_starts.push_back(state.head(cfg.n_sites));
    std::vector<Vector> window_states;  // slow states at steps 0..K
    window_states.push_back(state.head(cfg.n_sites));
    for (int k = 0; k < cfg.steps_per_window; ++k) {
      state = dyn::rk4_step(truth, state, cfg.dt);
      window_states.push_back(state.head(cfg.n_sites));
    }
    run.obs.push_back(make_observations(window_states, obs_cfg, obs_rng));
  }
  run.window_starts.push_back(state.head(cfg.n_sites));
  return run;
}

CycleArchive run_cycles(CycleMode mode, const NatureRun& nature, int n_windows,
                        const CycleSetup& setup) {
  setup.model.validate();
  setup.covs.validate();
  setup.minimizer.validate();
  if (n_windows > nature.n_windows())
    throw ConfigError("run_cycles: nature run has only " + std::to_string(nature.n_windows()) +
                      " windows, requested " + std::to_string(n_windows));
  if (setup.model.n_sites != nature.model.n_sites)
    throw ConfigError("run_cycles: forecast and truth site counts differ");
  const bool has_net = mode != CycleMode::Sc;
  if (has_net && !setup.corr) throw ConfigError("run_cycles: mode requires a network correction");

  const dyn::OneScaleModel model(setup.model);
  const BackgroundCov bcov(setup.covs, setup.model.n_sites);
  const dyn::HybridConfig* corr = has_net ? &*setup.corr : nullptr;
  if (corr) corr->validate();

  CycleArchive archive;
  archive.mode = mode;
  archive.model = setup.model;
  if (has_net) archive.corr = *setup.corr;
  archive.seeds.emplace_back("background", setup.background_seed);
  archive.seeds.emplace_back("nature", nature.state_seed);
  archive.seeds.emplace_back("observations", nature.obs_seed);

  // First background: truth start plus seeded noise at the background scale,
  // unless a continuation state is supplied.
  Vector xb;
  if (setup.first_background) {
    xb = *setup.first_background;
    if (xb.size() != setup.model.n_sites)
      throw ConfigError("run_cycles: first_background length mismatch");
  } else {
    Rng bg_rng(setup.background_seed);
    xb = nature.window_starts[0];
    for (int i = 0; i < xb.size(); ++i) xb[i] += setup.background_noise * bg_rng.gaussian();
  }
  Vector pb = has_net ? setup.corr->net.flatten() : Vector();

  const int steps = setup.model.steps_per_window;
  const double window_len = setup.model.window_length();
  for (int w = 0; w < n_windows; ++w) {
    const double t0 = setup.t_start + w * window_len;
    try {
      VarWindow window;
      window.model = &model;
      window.corr = corr;
      window.params_in_control = mode == CycleMode::Nn4dvar;
      window.xb = xb;
      window.pb = pb;
      window.bcov = &bcov;
      window.p_std = setup.covs.p_std;
      window.sigma_obs = setup.covs.sigma_obs;
      window.obs = &nature.obs[w];
      window.t0 = t0;

      const MinimizeResult res = incremental_minimize(window, xb, pb, setup.minimizer);
      const Vector& pa = mode == CycleMode::Nn4dvar ? res.pa : pb;

      CycleRecord rec;
      rec.t0 = t0;
      rec.background = xb;
      rec.analysis = res.xa;
      rec.increment = res.xa - xb;
      rec.obs = nature.obs[w];
      if (mode == CycleMode::Nn4dvar) rec.params = pa;

      // Propagate the analysis with the window's model to the next background.
      const dyn::HybridTrajectory traj(model, corr, corr ? pa : Vector(), res.xa, steps, t0);
      rec.forcing = traj.forcing();
      xb = traj.states().back();
      if (mode == CycleMode::Nn4dvar) pb = pa;

      archive.records.push_back(std::move(rec));
    } catch (const NumericsError& e) {
      throw NumericsError("cycling aborted at window " + std::to_string(w) + ": " + e.what());
    }
  }
  return archive;
}

}  // namespace hda::assim
