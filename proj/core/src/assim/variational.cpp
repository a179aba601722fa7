/*
 * (C) Copyright 2026 hda authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "hda/assim/variational.hpp"

#include <cmath>

#include "hda/errors.hpp"

namespace hda::assim {

void VarWindow::validate() const {
  if (!model) throw ConfigError("VarWindow: missing model");
  if (!bcov) throw ConfigError("VarWindow: missing background covariance");
  if (!obs) throw ConfigError("VarWindow: missing observations");
  if (xb.size() != model->dim()) throw DimensionError("VarWindow: background length mismatch");
  if (corr) {
    if (pb.size() != corr->net.n_params())
      throw DimensionError("VarWindow: parameter background length mismatch");
  } else if (params_in_control) {
    throw ConfigError("VarWindow: parameters in control but no correction attached");
  }
  if (!(sigma_obs > 0.0)) throw ConfigError("VarWindow: sigma_obs must be positive");
  if (!(p_std > 0.0)) throw ConfigError("VarWindow: p_std must be positive");
}

namespace {

/// Observation-term cost over a stored trajectory.
double obs_cost(const VarWindow& w, const dyn::HybridTrajectory& traj) {
  double cost = 0.0;
  const double rinv = 1.0 / (w.sigma_obs * w.sigma_obs);
  for (const auto& batch : w.obs->batches) {
    const Vector& state = traj.state(batch.step);
    for (std::size_t k = 0; k < batch.sites.size(); ++k) {
      const double d = batch.values[static_cast<Eigen::Index>(k)] - state[batch.sites[k]];
      cost += 0.5 * rinv * d * d;
    }
  }
  return cost;
}

/// Cotangents of the observation term: dJ_obs/dx_k scattered per state.
std::vector<Vector> obs_cotangents(const VarWindow& w, const dyn::HybridTrajectory& traj) {
  std::vector<Vector> cots(traj.n_steps() + 1, Vector::Zero(w.model->dim()));
  const double rinv = 1.0 / (w.sigma_obs * w.sigma_obs);
  for (const auto& batch : w.obs->batches) {
    const Vector& state = traj.state(batch.step);
    for (std::size_t k = 0; k < batch.sites.size(); ++k) {
      const double d = state[batch.sites[k]] - batch.values[static_cast<Eigen::Index>(k)];
      cots[batch.step][batch.sites[k]] += rinv * d;
    }
  }
  return cots;
}

double full_cost(const VarWindow& w, const Vector& p, const Vector& x0, bool with_p_term) {
  const dyn::HybridTrajectory traj(*w.model, w.corr, p, x0, w.n_steps(), w.t0);
  double cost = 0.5 * w.bcov->quad_inv(x0 - w.xb) + obs_cost(w, traj);
  if (with_p_term) cost += 0.5 * (p - w.pb).squaredNorm() / (w.p_std * w.p_std);
  return cost;
}

}  // namespace

double sc4dvar_cost(const VarWindow& w, const Vector& x0) {
  w.validate();
  return full_cost(w, w.pb, x0, /*with_p_term=*/false);
}

double nn4dvar_cost(const VarWindow& w, const Vector& p, const Vector& x0) {
  w.validate();
  return full_cost(w, p, x0, /*with_p_term=*/w.params_in_control);
}

std::pair<Vector, Vector> nn4dvar_grad(const VarWindow& w, const Vector& p, const Vector& x0) {
  w.validate();
  const dyn::HybridTrajectory traj(*w.model, w.corr, p, x0, w.n_steps(), w.t0);
  auto [xbar, pbar] = traj.adjoint(obs_cotangents(w, traj));
  Vector grad_x = w.bcov->apply_inv(x0 - w.xb) + xbar;
  if (w.corr && w.params_in_control) pbar += (p - w.pb) / (w.p_std * w.p_std);
  return {std::move(grad_x), std::move(pbar)};
}

void MinimizerConfig::validate() const {
  if (n_outer < 1) throw ConfigError("MinimizerConfig: n_outer must be >= 1");
  if (max_inner < 1) throw ConfigError("MinimizerConfig: max_inner must be >= 1");
  if (!(inner_tol > 0.0)) throw ConfigError("MinimizerConfig: inner_tol must be positive");
}

MinimizeResult incremental_minimize(const VarWindow& w, const Vector& x_first,
                                    const Vector& p_first, const MinimizerConfig& cfg) {
  w.validate();
  cfg.validate();

  const int n = w.model->dim();
  const bool with_p = w.params_in_control;
  const int np = with_p ? static_cast<int>(w.pb.size()) : 0;
  const double rinv_sqrt = 1.0 / w.sigma_obs;

  MinimizeResult result;
  result.xa = x_first;
  result.pa = w.corr ? p_first : Vector();

  for (int outer = 0; outer < cfg.n_outer; ++outer) {
    const dyn::HybridTrajectory traj(*w.model, w.corr, result.pa, result.xa, w.n_steps(), w.t0);

    OuterTrace trace;
    trace.cost_before = nn4dvar_cost(w, result.pa, result.xa);

    // Control transform: dx0 = B^{1/2} u, dp = p_std * v. The background
    // term becomes the identity quadratic in z = (u, v).
    const Vector e_b = w.bcov->apply_inv_sqrt(result.xa - w.xb);
    Vector e(n + np);
    e.head(n) = e_b;
    if (with_p) e.tail(np) = (result.pa - w.pb) / w.p_std;

    // Ghat z = R^{-1/2} H TLM(B^{1/2} u, p_std v); matvec A z = z + Ghat^T Ghat z.
    auto apply_ghat_t = [&](const std::vector<Vector>& cots) {
      auto [xbar, pbar] = traj.adjoint(cots);
      Vector out(n + np);
      out.head(n) = w.bcov->apply_sqrt(xbar);
      if (with_p) out.tail(np) = w.p_std * pbar;
      return out;
    };

    auto matvec = [&](const Vector& z) {
      const Vector dx0 = w.bcov->apply_sqrt(z.head(n));
      Vector dp;
      if (with_p) dp = w.p_std * z.tail(np);
      const std::vector<Vector> tangents = traj.tlm(dx0, dp);
      std::vector<Vector> cots(traj.n_steps() + 1, Vector::Zero(n));
      const double rinv = rinv_sqrt * rinv_sqrt;
      for (const auto& batch : w.obs->batches)
        for (int site : batch.sites) cots[batch.step][site] += rinv * tangents[batch.step][site];
      return Vector(z + apply_ghat_t(cots));
    };

    // rhs b = Ghat^T (R^{-1/2} d) - e with d the innovations.
    std::vector<Vector> dcots(traj.n_steps() + 1, Vector::Zero(n));
    double dhat_sq = 0.0;
    {
      const double rinv = rinv_sqrt * rinv_sqrt;
      for (const auto& batch : w.obs->batches) {
        const Vector& state = traj.state(batch.step);
        for (std::size_t k = 0; k < batch.sites.size(); ++k) {
          const double innov = batch.values[static_cast<Eigen::Index>(k)] - state[batch.sites[k]];
          dcots[batch.step][batch.sites[k]] += rinv * innov;
          dhat_sq += rinv * innov * innov;
        }
      }
    }
    const Vector b = apply_ghat_t(dcots) - e;
    const double quad_const = 0.5 * (e.squaredNorm() + dhat_sq);

    // Conjugate gradients on (I + Ghat^T Ghat) z = b, quadratic cost traced
    // via J_q(z) = -z^T(b + r)/2 + const.
    Vector z = Vector::Zero(n + np);
    Vector r = b;
    Vector d = r;
    double rs = r.squaredNorm();
    const double rs0 = rs;
    trace.quad_cost.push_back(quad_const);
    int it = 0;
    while (it < cfg.max_inner && rs > cfg.inner_tol * cfg.inner_tol * rs0 && rs0 > 0.0) {
      const Vector ad = matvec(d);
      const double alpha = rs / d.dot(ad);
      z += alpha * d;
      r -= alpha * ad;
      const double rs_next = r.squaredNorm();
      d = r + (rs_next / rs) * d;
      rs = rs_next;
      ++it;
      trace.quad_cost.push_back(-0.5 * z.dot(b + r) + quad_const);
    }
    trace.iterations = it;
    trace.inner_converged = rs <= cfg.inner_tol * cfg.inner_tol * rs0 || rs0 == 0.0;

    result.xa += w.bcov->apply_sqrt(z.head(n));
    if (with_p) result.pa += w.p_std * z.tail(np);

    trace.cost_after = nn4dvar_cost(w, result.pa, result.xa);
    if (trace.cost_after > trace.cost_before) result.cost_decreased = false;
    result.outer.push_back(std::move(trace));
  }
  return result;
}

}  // namespace hda::assim
