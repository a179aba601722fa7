/*
 * (C) Copyright 2026 hda authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

#pragma once

#include <string>

#include "hda/config/experiment.hpp"

namespace hda::cli {

/// Derived file name for a mode-specific artifact: "net.fnn" with mode
/// "prediction" becomes "net.prediction.fnn".
std::string mode_path(const std::string& path, const std::string& mode);

/// OSSE substrate: integrate the two-scale truth, archive states and
/// observation draws.
void cmd_gen_truth(const cfg::ExperimentConfig& cfg);

/// Cycled assimilation with the forecast model; mode is "sc" or
/// "sc-fixed-net" (the latter loads the mode-suffixed pre-trained network).
void cmd_run_da(const cfg::ExperimentConfig& cfg, const std::string& mode);

/// Increment pairing over the cycle archive; mode "prediction",
/// "post-processing", or "" for the configured default.
void cmd_build_dataset(const cfg::ExperimentConfig& cfg, const std::string& mode);

void cmd_train_offline(const cfg::ExperimentConfig& cfg, const std::string& mode = "");

/// Table of relative wMSE over the test split: zero correction plus each
/// trained mode.
void cmd_eval_offline(const cfg::ExperimentConfig& cfg);

/// NN 4D-Var cycling; init is "pretrained" or "scratch".
void cmd_run_online(const cfg::ExperimentConfig& cfg, const std::string& init);

/// Analysis-error diagnostics of a cycle archive against the OSSE truth.
void cmd_evaluate(const cfg::ExperimentConfig& cfg);

/// Forecast-RMSE scorecards of configured experiments against a reference,
/// verified against both truth and own analysis.
void cmd_scorecard(const cfg::ExperimentConfig& cfg);

/// Power/error spectra of a trained network over the test split.
void cmd_spectra(const cfg::ExperimentConfig& cfg);

/// Sensitivity harnesses; kind is "dataset-size", "resolution", or
/// "p-value".
void cmd_sweep(const cfg::ExperimentConfig& cfg, const std::string& kind, int jobs);

}  // namespace hda::cli
