/*
 * (C) Copyright 2026 hda authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include <CLI11.hpp>
#include <iostream>

#include "hda/cli/commands.hpp"
#include "hda/errors.hpp"

namespace {

struct CommonArgs {
  std::string config_path;
  std::string out_dir;
  std::int64_t seed_override = -1;
};

void add_common(CLI::App* sub, CommonArgs& args) {
  sub->add_option("--config", args.config_path, "experiment TOML file")->required();
  sub->add_option("--out", args.out_dir, "output directory (defaults to $HDA_DATA_DIR)");
  sub->add_option("--seed", args.seed_override, "override every RNG seed in the config");
}

hda::cfg::ExperimentConfig load(const CommonArgs& args) {
  auto cfg = hda::cfg::ExperimentConfig::from_file(args.config_path);
  if (!args.out_dir.empty()) cfg.out_dir = args.out_dir;
  if (args.seed_override >= 0) {
    const auto seed = static_cast<std::uint64_t>(args.seed_override);
    cfg.truth_seed = seed + 1;
    cfg.obs_seed = seed + 2;
    cfg.net_init_seed = seed + 3;
    cfg.training.seed = seed + 4;
    cfg.background_seed = seed + 5;
    cfg.scratch_seed = seed + 6;
  }
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hda - desk-scale hybrid data assimilation experiments"};
  app.require_subcommand(1);

  CommonArgs args;
  std::string mode = "sc";
  std::string dataset_mode;
  std::string init = "pretrained";
  std::string sweep_kind;
  int jobs = 1;

  add_common(app.add_subcommand("gen-truth", "integrate the two-scale truth and draw observations"),
             args);
  {
    auto* sub = app.add_subcommand("run-da", "cycled 4D-Var with the forecast model");
    add_common(sub, args);
    sub->add_option("--mode", mode, "sc or sc-fixed-net")->default_val("sc");
  }
  {
    auto* sub = app.add_subcommand("build-dataset", "extract increment pairs from a cycle archive");
    add_common(sub, args);
    sub->add_option("--mode", dataset_mode, "prediction or post-processing (default: config)");
  }
  {
    auto* sub = app.add_subcommand("train-offline", "train the column network on increment pairs");
    add_common(sub, args);
    sub->add_option("--mode", dataset_mode, "prediction or post-processing (default: config)");
  }
  add_common(app.add_subcommand("eval-offline", "relative wMSE table over the test split"), args);
  {
    auto* sub = app.add_subcommand("run-online", "NN 4D-Var cycling");
    add_common(sub, args);
    sub->add_option("--init", init, "pretrained or scratch")->default_val("pretrained");
  }
  add_common(app.add_subcommand("evaluate", "analysis-error diagnostics of a cycle archive"), args);
  add_common(app.add_subcommand("scorecard", "forecast-RMSE scorecards against a reference"), args);
  add_common(app.add_subcommand("spectra", "power and error spectra of a trained network"), args);
  {
    auto* sub = app.add_subcommand("sweep", "sensitivity harnesses");
    add_common(sub, args);
    sub->add_option("--kind", sweep_kind, "dataset-size, resolution, or p-value")->required();
    sub->add_option("--jobs", jobs, "parallel sweep members")->default_val(1);
  }

  CLI11_PARSE(app, argc, argv);

  try {
    const auto cfg = load(args);
    if (app.got_subcommand("gen-truth")) hda::cli::cmd_gen_truth(cfg);
    else if (app.got_subcommand("run-da")) hda::cli::cmd_run_da(cfg, mode);
    else if (app.got_subcommand("build-dataset")) hda::cli::cmd_build_dataset(cfg, dataset_mode);
    else if (app.got_subcommand("train-offline")) hda::cli::cmd_train_offline(cfg, dataset_mode);
    else if (app.got_subcommand("eval-offline")) hda::cli::cmd_eval_offline(cfg);
    else if (app.got_subcommand("run-online")) hda::cli::cmd_run_online(cfg, init);
    else if (app.got_subcommand("evaluate")) hda::cli::cmd_evaluate(cfg);
    else if (app.got_subcommand("scorecard")) hda::cli::cmd_scorecard(cfg);
    else if (app.got_subcommand("spectra")) hda::cli::cmd_spectra(cfg);
    else if (app.got_subcommand("sweep")) hda::cli::cmd_sweep(cfg, sweep_kind, jobs);
  } catch (const hda::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const hda::NumericsError& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 3;
  } catch (const hda::IoError& e) {
    std::cerr << "i/o error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
