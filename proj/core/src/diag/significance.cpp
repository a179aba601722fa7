/*
 * (C) Copyright 2026 hda authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "hda/diag/significance.hpp"

#include <boost/math/distributions/students_t.hpp>
#include <cmath>

#include "hda/errors.hpp"

namespace hda::diag {

void SignificanceConfig::validate() const {
  if (!(level > 0.0 && level < 1.0)) throw ConfigError("SignificanceConfig: level must be in (0,1)");
  if (!(inflation >= 1.0)) throw ConfigError("SignificanceConfig: inflation must be >= 1");
  if (n_tests < 1) throw ConfigError("SignificanceConfig: n_tests must be >= 1");
}

double sidak_alpha(double level, int n_tests) {
  return 1.0 - std::pow(level, 1.0 / n_tests);
}

SignificanceResult significance(std::span<const double> diffs, const SignificanceConfig& cfg) {
  cfg.validate();
  SignificanceResult result;
  result.corrected_alpha = sidak_alpha(cfg.level, cfg.n_tests);

  const auto n = static_cast<double>(diffs.size());
  if (diffs.size() < 2) return result;  // missing verdict

  double mean = 0.0;
  for (double d : diffs) mean += d;
  mean /= n;
  double ss = 0.0;
  for (double d : diffs) ss += (d - mean) * (d - mean);
  const double sd = std::sqrt(ss / (n - 1.0));
  result.mean = mean;

  if (sd == 0.0) {
    // All differences identical: a zero mean is a clean "not significant";
    // anything else has no usable variance estimate.
    if (mean == 0.0) {
      result.valid = true;
      result.significant = false;
      result.pvalue = 1.0;
    }
    return result;
  }

  const double se = sd / std::sqrt(n);
  const boost::math::students_t dist(n - 1.0);
  result.t_stat = mean / se;
  result.pvalue = 2.0 * boost::math::cdf(boost::math::complement(dist, std::abs(result.t_stat)));
  const double crit = boost::math::quantile(dist, 1.0 - result.corrected_alpha / 2.0);
  result.half_width = cfg.inflation * crit * se;
  result.significant = std::abs(mean) > result.half_width;
  result.valid = true;
  return result;
}

}  // namespace hda::diag
