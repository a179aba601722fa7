/*
 * (C) Copyright 2026 hda authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "hda/cli/commands.hpp"

#include <cmath>
#include <iostream>

#include "hda/diag/scores.hpp"
#include "hda/diag/sweeps.hpp"
#include "hda/errors.hpp"
#include "hda/io/archive.hpp"
#include "hda/io/dataset_io.hpp"
#include "hda/io/field_io.hpp"
#include "hda/io/reports.hpp"
#include "hda/net/serialize.hpp"
#include "hda/net/training.hpp"

namespace hda::cli {

namespace {

using cfg::ExperimentConfig;

std::string stem_of(const std::string& path) {
  const auto dot = path.rfind('.');
  const auto slash = path.rfind('/');
  if (dot == std::string::npos || (slash != std::string::npos && dot < slash)) return path;
  return path.substr(0, dot);
}

std::vector<int> net_dims(const ExperimentConfig& cfg) {
  std::vector<int> dims;
  dims.push_back(2 * cfg.stencil + 1 + 4);
  for (int h : cfg.hidden_dims) dims.push_back(h);
  dims.push_back(1);
  return dims;
}

assim::NatureRun load_nature_checked(const ExperimentConfig& cfg) {
  return io::load_nature(cfg.resolve_path(cfg.nature_path));
}

void note(const std::string& what, const std::string& path) {
  std::cout << what << ": " << path << "\n";
}

assim::CycleSetup base_setup(const ExperimentConfig& cfg) {
  assim::CycleSetup setup;
  setup.model = cfg.model;
  setup.covs = cfg.covs;
  setup.minimizer = cfg.minimizer;
  setup.background_noise = cfg.background_noise;
  setup.background_seed = cfg.background_seed;
  return setup;
}

int eval_first_window(const ExperimentConfig& cfg, int n_windows) {
  const int first = n_windows - static_cast<int>(std::lround(cfg.eval_fraction * n_windows));
  return std::min(std::max(first, 0), n_windows - 1);
}

io::Json rmse_summary(const ExperimentConfig& cfg, const assim::CycleArchive& archive,
                      const assim::NatureRun& nature) {
  const auto series = diag::analysis_rmse_series(archive, nature);
  const int first = eval_first_window(cfg, static_cast<int>(series.size()));
  io::Json j;
  j["mode"] = assim::to_string(archive.mode);
  j["n_windows"] = archive.n_windows();
  j["mean_analysis_rmse"] = diag::mean_over(series, 0, static_cast<int>(series.size()));
  j["eval_first_window"] = first;
  j["mean_analysis_rmse_eval"] = diag::mean_over(series, first, static_cast<int>(series.size()));
  return j;
}

}  // namespace

std::string mode_path(const std::string& path, const std::string& mode) {
  const auto dot = path.rfind('.');
  const auto slash = path.rfind('/');
  if (dot == std::string::npos || (slash != std::string::npos && dot < slash))
    return path + "." + mode;
  return path.substr(0, dot) + "." + mode + path.substr(dot);
}

void cmd_gen_truth(const ExperimentConfig& cfg) {
  assim::NatureRun run = assim::generate_nature(cfg.model, cfg.observations(), cfg.truth_windows,
                                                cfg.spinup_windows, cfg.truth_seed, cfg.obs_seed);
  run.config_text = cfg.to_toml();
  const std::string path = cfg.resolve_path(cfg.nature_path);
  io::save_nature(run, path);
  note("nature run", path);
}

void cmd_run_da(const ExperimentConfig& cfg, const std::string& mode) {
  const assim::CycleMode cycle_mode = assim::cycle_mode_from_string(mode);
  if (cycle_mode == assim::CycleMode::Nn4dvar)
    throw ConfigError("run-da handles sc and sc-fixed-net; use run-online for nn4dvar");
  const assim::NatureRun nature = load_nature_checked(cfg);

  assim::CycleSetup setup = base_setup(cfg);
  if (cycle_mode == assim::CycleMode::ScFixedNet) {
    const std::string net_file = cfg.resolve_path(mode_path(cfg.net_path, cfg.dataset_mode));
    setup.corr = cfg.hybrid(net::load_net(net_file));
  }

  assim::CycleArchive archive = assim::run_cycles(cycle_mode, nature, cfg.cycle_windows, setup);
  archive.config_text = cfg.to_toml();
  const std::string path = cfg.resolve_path(cfg.archive_path);
  io::save_archive(archive, path);
  note("cycle archive", path);
}

void cmd_build_dataset(const ExperimentConfig& cfg, const std::string& mode) {
  const std::string mode_name = mode.empty() ? cfg.dataset_mode : mode;
  const dyn::CorrectionMode pair_mode = mode_name == "prediction"
                                            ? dyn::CorrectionMode::Prediction
                                            : dyn::CorrectionMode::PostProcessing;
  if (mode_name != "prediction" && mode_name != "post-processing")
    throw ConfigError("dataset mode must be 'prediction' or 'post-processing'");

  const std::string archive_path = cfg.resolve_path(cfg.archive_path);
  const assim::CycleArchive archive = io::load_archive(archive_path);

  io::DatasetFile dataset;
  dataset.pairs = dataset::make_pairs(archive, pair_mode, cfg.stencil, cfg.t_cycle);
  dataset.pairs.source_hash = io::file_hash(archive_path);
  const int n_days = archive.n_windows() / cfg.windows_per_day;
  dataset.split = dataset::partition(n_days, cfg.train_days, cfg.windows_per_day);
  dataset.seeds = archive.seeds;
  dataset.config_text = cfg.to_toml();

  const std::string path = cfg.resolve_path(mode_path(cfg.dataset_path, mode_name));
  io::save_dataset(dataset, path);
  note("dataset (" + mode_name + ")", path);
}

void cmd_train_offline(const ExperimentConfig& cfg, const std::string& mode) {
  const std::string mode_name = mode.empty() ? cfg.dataset_mode : mode;
  const std::string data_path = cfg.resolve_path(mode_path(cfg.dataset_path, mode_name));
  const io::DatasetFile dataset = io::load_dataset(data_path);

  dataset::SplitSpec split = dataset.split;
  if (cfg.size_days > 0) {
    const auto days = dataset::select_train_days(split.count(dataset::Split::Train), cfg.size_days,
                                                 dataset::size_strategy_from_string(cfg.size_strategy));
    split = dataset::restrict_training(split, days);
  }

  net::NetParams params = net::NetParams::glorot(net_dims(cfg), cfg.net_init_seed);
  params.norm() = dataset::fit_norm_stats(dataset.pairs, split);
  const auto train = dataset::to_samples(dataset.pairs, split, dataset::Split::Train, params.norm());
  const auto valid = dataset::to_samples(dataset.pairs, split, dataset::Split::Valid, params.norm());
  const net::TrainResult result = net::train_offline(params, train, valid, cfg.training);

  const std::string net_file = cfg.resolve_path(mode_path(cfg.net_path, mode_name));
  net::save_net(result.params, net_file);
  note("trained network (" + mode_name + ")", net_file);

  io::CsvWriter history({"epoch", "train_loss", "valid_loss"});
  for (std::size_t e = 0; e < result.train_loss.size(); ++e)
    history.row({std::to_string(e), io::CsvWriter::num(result.train_loss[e]),
                 io::CsvWriter::num(result.valid_loss[e])});
  const std::string hist_path = stem_of(net_file) + ".history.csv";
  history.to_file(hist_path);
  note("training history", hist_path);
  std::cout << "best epoch " << result.best_epoch << " of " << result.epochs_run << "\n";
}

void cmd_eval_offline(const ExperimentConfig& cfg) {
  io::CsvWriter table({"correction_mode", "S_x"});
  table.row({"zero", io::CsvWriter::num(1.0)});

  for (const std::string mode_name : {std::string("prediction"), std::string("post-processing")}) {
    const std::string data_path = cfg.resolve_path(mode_path(cfg.dataset_path, mode_name));
    const std::string net_file = cfg.resolve_path(mode_path(cfg.net_path, mode_name));
    try {
      const io::DatasetFile dataset = io::load_dataset(data_path);
      const net::NetParams params = net::load_net(net_file);
      const double score = dataset::relative_wmse(params, dataset.pairs, dataset.split,
                                                  dataset::Split::Test);
      table.row({mode_name, io::CsvWriter::num(score)});
    } catch (const IoError&) {
      // Mode not built; leave the row out.
    }
  }
  const std::string path = cfg.resolve_path("offline_scores.csv");
  table.to_file(path);
  note("offline scores", path);
}

void cmd_run_online(const ExperimentConfig& cfg, const std::string& init) {
  if (init != "pretrained" && init != "scratch")
    throw ConfigError("run-online init must be 'pretrained' or 'scratch'");
  const assim::NatureRun nature = load_nature_checked(cfg);

  net::NetParams params;
  if (init == "pretrained") {
    params = net::load_net(cfg.resolve_path(mode_path(cfg.net_path, cfg.dataset_mode)));
  } else {
    params = net::NetParams::glorot(net_dims(cfg), cfg.scratch_seed);
    // Normalization is part of the network interface; take the statistics
    // from the offline dataset when it exists, identity otherwise.
    try {
      const io::DatasetFile dataset =
          io::load_dataset(cfg.resolve_path(mode_path(cfg.dataset_path, cfg.dataset_mode)));
      params.norm() = dataset::fit_norm_stats(dataset.pairs, dataset.split);
    } catch (const IoError&) {
    }
  }

  assim::CycleSetup setup = base_setup(cfg);
  setup.corr = cfg.hybrid(std::move(params));

  assim::CycleArchive archive;
  if (cfg.early_windows > 0 && cfg.early_p_std > cfg.covs.p_std) {
    // Looser parameter constraint over the first cycles, then the configured
    // p; realized as two consecutive cycling legs sharing state.
    assim::CycleSetup early = setup;
    early.covs.p_std = cfg.early_p_std;
    const int n_early = std::min(cfg.early_windows, cfg.cycle_windows);
    archive = assim::run_cycles(assim::CycleMode::Nn4dvar, nature, n_early, early);
    if (n_early < cfg.cycle_windows) {
      assim::CycleSetup rest = setup;
      rest.corr->net.unflatten(archive.records.back().params);
      assim::NatureRun tail = nature;
      tail.window_starts.erase(tail.window_starts.begin(), tail.window_starts.begin() + n_early);
      tail.obs.erase(tail.obs.begin(), tail.obs.begin() + n_early);
      // Continue from the propagated background rather than a fresh draw.
      const dyn::OneScaleModel model(setup.model);
      const dyn::HybridTrajectory traj(model, &*rest.corr, archive.records.back().params,
                                       archive.records.back().analysis,
                                       setup.model.steps_per_window, archive.records.back().t0);
      rest.first_background = traj.states().back();
      rest.t_start = n_early * setup.model.window_length();
      assim::CycleArchive tail_archive =
          assim::run_cycles(assim::CycleMode::Nn4dvar, tail, cfg.cycle_windows - n_early, rest);
      for (auto& rec : tail_archive.records) archive.records.push_back(std::move(rec));
    }
  } else {
    archive = assim::run_cycles(assim::CycleMode::Nn4dvar, nature, cfg.cycle_windows, setup);
  }
  archive.seeds.emplace_back(init == "scratch" ? "scratch_init" : "net_init",
                             init == "scratch" ? cfg.scratch_seed : cfg.net_init_seed);
  archive.config_text = cfg.to_toml();
  const std::string path = cfg.resolve_path(cfg.archive_path);
  io::save_archive(archive, path);
  note("online archive (" + init + ")", path);
}

void cmd_evaluate(const ExperimentConfig& cfg) {
  const assim::NatureRun nature = load_nature_checked(cfg);
  const std::string archive_path = cfg.resolve_path(cfg.archive_path);
  const assim::CycleArchive archive = io::load_archive(archive_path);

  const auto series = diag::analysis_rmse_series(archive, nature);
  io::CsvWriter csv({"window", "t0", "analysis_rmse"});
  for (std::size_t w = 0; w < series.size(); ++w)
    csv.row({std::to_string(w), io::CsvWriter::num(archive.records[w].t0),
             io::CsvWriter::num(series[w])});
  const std::string stem = stem_of(archive_path);
  csv.to_file(stem + ".analysis_rmse.csv");
  note("analysis RMSE series", stem + ".analysis_rmse.csv");

  io::save_json(rmse_summary(cfg, archive, nature), stem + ".summary.json");
  note("summary", stem + ".summary.json");
}

void cmd_scorecard(const ExperimentConfig& cfg) {
  if (cfg.scorecard_experiments.empty() || cfg.scorecard_reference.empty())
    throw ConfigError("scorecard needs paths.scorecard_experiments and paths.scorecard_reference");
  const assim::NatureRun nature = load_nature_checked(cfg);
  const assim::CycleArchive reference =
      io::load_archive(cfg.resolve_path(cfg.scorecard_reference));

  diag::ForecastConfig fcfg;
  fcfg.leads = cfg.leads;
  fcfg.first_window = eval_first_window(cfg, reference.n_windows());

  diag::SignificanceConfig scfg = cfg.significance;
  scfg.n_tests = cfg.sidak_test_count();

  for (const auto& exp_path : cfg.scorecard_experiments) {
    const std::string resolved = cfg.resolve_path(exp_path);
    const assim::CycleArchive experiment = io::load_archive(resolved);
    const std::string stem = stem_of(resolved);
    for (const auto against : {diag::VerifyAgainst::Truth, diag::VerifyAgainst::OwnAnalysis}) {
      const auto exp_curves = diag::forecast_rmse(experiment, nature, fcfg, against);
      const auto ref_curves = diag::forecast_rmse(reference, nature, fcfg, against);
      const diag::Scorecard card =
          diag::make_scorecard(exp_curves, ref_curves, exp_path, cfg.scorecard_reference, "x", scfg);
      const std::string tag = against == diag::VerifyAgainst::Truth ? "truth" : "own";
      io::save_scorecard_csv(card, stem + ".scorecard_" + tag + ".csv");
      io::save_json(io::scorecard_json(card), stem + ".scorecard_" + tag + ".json");
      note("scorecard (" + tag + ")", stem + ".scorecard_" + tag + ".csv");
    }
  }
}

void cmd_spectra(const ExperimentConfig& cfg) {
  const std::string data_path = cfg.resolve_path(mode_path(cfg.dataset_path, cfg.dataset_mode));
  const io::DatasetFile dataset = io::load_dataset(data_path);
  const net::NetParams params =
      net::load_net(cfg.resolve_path(mode_path(cfg.net_path, cfg.dataset_mode)));

  const auto backend = diag::ring_backend(dataset.pairs.n_sites, cfg.spectra_wavenumber());
  const auto report = diag::error_spectra(params, dataset.pairs, dataset.split,
                                          dataset::Split::Test, backend);
  const std::string path = stem_of(data_path) + ".spectra.csv";
  io::save_spectra_csv(report, path);
  note("spectra", path);
}

namespace {

void sweep_dataset_size(const ExperimentConfig& cfg, int jobs, io::Json& out) {
  const io::DatasetFile dataset =
      io::load_dataset(cfg.resolve_path(mode_path(cfg.dataset_path, cfg.dataset_mode)));
  const net::NetParams init = net::NetParams::glorot(net_dims(cfg), cfg.net_init_seed);
  const auto entries = diag::size_sweep(dataset.pairs, dataset.split, init, cfg.training,
                                        cfg.sweep_fractions,
                                        dataset::size_strategy_from_string(cfg.size_strategy), jobs);
  for (const auto& e : entries) {
    io::Json j;
    j["fraction"] = e.fraction;
    j["train_days"] = e.train_days;
    j["ok"] = e.ok;
    if (e.ok)
      j["test_rel_wmse"] = e.test_rel_wmse;
    else
      j["error"] = e.error;
    out["members"].push_back(std::move(j));
  }
}

void sweep_resolution(const ExperimentConfig& cfg, int jobs, io::Json& out) {
  const io::DatasetFile dataset =
      io::load_dataset(cfg.resolve_path(mode_path(cfg.dataset_path, cfg.dataset_mode)));
  const net::NetParams init = net::NetParams::glorot(net_dims(cfg), cfg.net_init_seed);
  const auto entries =
      diag::resolution_sweep(dataset.pairs, dataset.split, init, cfg.training,
                             cfg.sweep_truncations, cfg.spectra_wavenumber(), jobs);
  for (const auto& e : entries) {
    io::Json j;
    j["truncation"] = e.truncation;
    j["ok"] = e.ok;
    if (e.ok) {
      j["test_rel_wmse"] = e.test_rel_wmse;
      io::Json rel = io::Json::array();
      for (const auto& r : e.spectra.relative)
        rel.push_back(r ? io::Json(*r) : io::Json(nullptr));
      j["relative_error_spectrum"] = std::move(rel);
    } else {
      j["error"] = e.error;
    }
    out["members"].push_back(std::move(j));
  }
}

void sweep_p_value(const ExperimentConfig& cfg, io::Json& out) {
  const assim::NatureRun nature = load_nature_checked(cfg);
  const net::NetParams pretrained =
      net::load_net(cfg.resolve_path(mode_path(cfg.net_path, cfg.dataset_mode)));

  // Fixed-network baseline shared by all members.
  assim::CycleSetup fixed = base_setup(cfg);
  fixed.corr = cfg.hybrid(pretrained);
  const assim::CycleArchive baseline =
      assim::run_cycles(assim::CycleMode::ScFixedNet, nature, cfg.cycle_windows, fixed);
  const auto base_series = diag::analysis_rmse_series(baseline, nature);
  const int first = eval_first_window(cfg, static_cast<int>(base_series.size()));
  const double base_mean = diag::mean_over(base_series, first, static_cast<int>(base_series.size()));
  out["fixed_net_mean_rmse"] = base_mean;

  for (const double p : cfg.sweep_p_values) {
    io::Json j;
    j["p_std"] = p;
    try {
      assim::CycleSetup setup = base_setup(cfg);
      setup.corr = cfg.hybrid(pretrained);
      setup.covs.p_std = p;
      const assim::CycleArchive archive =
          assim::run_cycles(assim::CycleMode::Nn4dvar, nature, cfg.cycle_windows, setup);
      const auto series = diag::analysis_rmse_series(archive, nature);
      const double mean = diag::mean_over(series, first, static_cast<int>(series.size()));
      j["ok"] = true;
      j["mean_analysis_rmse"] = mean;
      j["change_vs_fixed_pct"] = 100.0 * (mean - base_mean) / base_mean;
    } catch (const std::exception& e) {
      j["ok"] = false;
      j["error"] = e.what();
    }
    out["members"].push_back(std::move(j));
  }
}

}  // namespace

void cmd_sweep(const ExperimentConfig& cfg, const std::string& kind, int jobs) {
  io::Json out;
  out["kind"] = kind;
  out["members"] = io::Json::array();
  if (kind == "dataset-size")
    sweep_dataset_size(cfg, jobs, out);
  else if (kind == "resolution")
    sweep_resolution(cfg, jobs, out);
  else if (kind == "p-value")
    sweep_p_value(cfg, out);
  else
    throw ConfigError("sweep kind must be dataset-size, resolution, or p-value");

  const std::string path = cfg.resolve_path("sweep_" + kind + ".json");
  io::save_json(out, path);
  note("sweep report", path);
}

}  // namespace hda::cli
