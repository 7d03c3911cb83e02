// Copyright 2026 The estool Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <utility>

#include <Eigen/Core>

#include "estool/error.hpp"

namespace estool::snn {

template <typename Scalar>
using Vector = Eigen::Array<Scalar, Eigen::Dynamic, 1>;

/// Continuous membrane: tau_m dU/dt = -U + E_L + R_m I_e, reset to U_reset at U_thresh.
struct ContinuousLifParams {
  double tau_m = 1.0;
  double e_l = 0.0;
  double r_m = 1.0;
  double u_reset = 0.0;
  double u_thresh = 1.0;

  void validate() const {
    if (!(tau_m > 0.0)) throw InvalidInput("tau_m must be positive");
    if (!(u_reset < u_thresh)) throw InvalidInput("u_reset must lie below u_thresh");
  }
};

/// Closed-form free evolution U(t) = E_L + R_m I_e + (U0 - E_L - R_m I_e) exp(-t / tau_m).
/// Resets are not modelled.
inline double closed_form_u(const ContinuousLifParams& p, double u0, double current, double t) {
  p.validate();
  if (t < 0.0) throw InvalidInput("closed_form_u: negative time");
  const double steady = p.e_l + p.r_m * current;
  return steady + (u0 - steady) * std::exp(-t / p.tau_m);
}

enum class CellMode { kLif, kLiaf };

/// Analog output g(u0) of a LIAF cell. kSpike makes g identical to the firing function.
enum class Activation { kSpike, kIdentity, kRelu, kSigmoid, kTanh };

struct DiscreteCellConfig {
  double v_thresh = 0.5;
  double tau = 0.5;  // d(s) = tau * (1 - s)
  CellMode mode = CellMode::kLif;
  Activation analog_activation = Activation::kRelu;

  void validate() const {
    if (!(tau > 0.0 && tau <= 1.0)) throw InvalidInput("leak factor tau must lie in (0, 1]");
    if (!std::isfinite(v_thresh)) throw InvalidInput("v_thresh must be finite");
  }
};

template <typename Scalar>
struct CellState {
  Vector<Scalar> u;

  static CellState zeros(Eigen::Index n) { return {Vector<Scalar>::Zero(n)}; }
};

template <typename Scalar>
struct StepResult {
  CellState<Scalar> state;
  Vector<Scalar> output;
};

/// Heaviside firing: 1 where u0 >= threshold.
template <typename Derived>
auto fire(const Eigen::ArrayBase<Derived>& u0, double v_thresh) {
  using Scalar = typename Derived::Scalar;
  return (u0 >= Scalar(v_thresh)).template cast<Scalar>();
}

template <typename Scalar>
Vector<Scalar> activate(const Vector<Scalar>& u0, Activation g, double v_thresh) {
  switch (g) {
    case Activation::kSpike: return fire(u0, v_thresh);
    case Activation::kIdentity: return u0;
    case Activation::kRelu: return u0.max(Scalar(0));
    case Activation::kSigmoid: return Scalar(1) / (Scalar(1) + (-u0).exp());
    case Activation::kTanh: return u0.tanh();
  }
  return u0;
}

namespace detail {

template <typename Scalar>
Vector<Scalar> integrate(const CellState<Scalar>& state, const Vector<Scalar>& drive) {
  if (state.u.size() != drive.size()) throw InvalidInput("drive size does not match cell count");
  if (!drive.isFinite().all()) throw InvalidInput("non-finite drive");
  return state.u + drive;
}

}  // namespace detail

/// u0 = u + drive; s = [u0 >= thresh]; o = s; u' = u0 * tau * (1 - s).
template <typename Scalar>
StepResult<Scalar> lif_step(const CellState<Scalar>& state, const Vector<Scalar>& drive,
                            const DiscreteCellConfig& cfg) {
  cfg.validate();
  if (cfg.mode != CellMode::kLif) throw InvalidInput("lif_step requires LIF mode");
  const Vector<Scalar> u0 = detail::integrate(state, drive);
  const Vector<Scalar> s = fire(u0, cfg.v_thresh);
  return {{u0 * Scalar(cfg.tau) * (Scalar(1) - s)}, s};
}

/// Same membrane dynamics as lif_step, but the emitted value is g(u0).
template <typename Scalar>
StepResult<Scalar> liaf_step(const CellState<Scalar>& state, const Vector<Scalar>& drive,
                             const DiscreteCellConfig& cfg) {
  cfg.validate();
  if (cfg.mode != CellMode::kLiaf) throw InvalidInput("liaf_step requires LIAF mode");
  const Vector<Scalar> u0 = detail::integrate(state, drive);
  const Vector<Scalar> s = fire(u0, cfg.v_thresh);
  return {{u0 * Scalar(cfg.tau) * (Scalar(1) - s)}, activate(u0, cfg.analog_activation, cfg.v_thresh)};
}

/// Runs a T x N drive matrix through one cell layer from rest and returns the T x N outputs.
template <typename Derived>
Eigen::Array<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic> run_cells(
    const Eigen::ArrayBase<Derived>& drives, const DiscreteCellConfig& cfg) {
  using Scalar = typename Derived::Scalar;
  Eigen::Array<Scalar, Eigen::Dynamic, Eigen::Dynamic> out(drives.rows(), drives.cols());
  auto state = CellState<Scalar>::zeros(drives.cols());
  for (Eigen::Index t = 0; t < drives.rows(); ++t) {
    const Vector<Scalar> drive = drives.row(t).transpose();
    auto step = cfg.mode == CellMode::kLif ? lif_step(state, drive, cfg) : liaf_step(state, drive, cfg);
    out.row(t) = step.output.transpose();
    state = std::move(step.state);
  }
  return out;
}

/// Per-neuron mean over the time (row) axis of a T x N train.
template <typename Derived>
Vector<typename Derived::Scalar> rate_decode(const Eigen::ArrayBase<Derived>& train) {
  if (train.rows() < 1 || train.cols() < 1) throw InvalidInput("rate_decode: empty spike train");
  return train.colwise().mean().transpose();
}

}  // namespace estool::snn
