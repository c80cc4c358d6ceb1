#pragma once

#include <array>
#include <stdexcept>
#include <string>

#include "nsrom/mesh.hpp"

namespace nsrom::physics {

/// Thrown when a state stops being physically admissible (rho or p <= 0);
/// the solver turns this into an aborted run with diagnostics.
struct StateError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Calorically perfect gas. mu is the dynamic viscosity of the current
/// case (the sweep parameter); mu == 0 selects the inviscid path in the
/// solver, which is used by the Euler verification problems.
struct GasModel {
  double gamma = 1.4;
  double gas_constant = 1.0;
  double prandtl = 0.72;
  double mu = 1.0;

  /// lambda = mu_eff * gamma * R / ((gamma - 1) * Pr)
  double thermal_conductivity(double mu_eff) const {
    return mu_eff * gamma * gas_constant / ((gamma - 1.0) * prandtl);
  }
};

/// Conserved state (rho, rho*u, rho*v, rho*E).
struct ConservedState {
  double rho = 0.0;
  double mx = 0.0;
  double my = 0.0;
  double E = 0.0;  // total energy density rho*E
};

/// The variables the reduced-order pipeline works on: (1/rho, u1, u2, p).
struct TransformedState {
  double inv_rho;
  double u1;
  double u2;
  double p;
};

/// flux[var][dir] and grad[var][dir] layouts, dir 0 = x, 1 = y.
using FluxTensor = std::array<std::array<double, 2>, 4>;
using GradTensor = std::array<std::array<double, 2>, 4>;

double pressure(const ConservedState& w, const GasModel& gas);
double sound_speed(const ConservedState& w, const GasModel& gas);

ConservedState conserved_from_primitive(double rho, double u1, double u2,
                                        double p, const GasModel& gas);
TransformedState transformed_from_conserved(const ConservedState& w,
                                            const GasModel& gas);

FluxTensor convective_flux(const ConservedState& w, const GasModel& gas);

/// Navier-Stokes viscous flux from conserved gradients; velocity and
/// temperature gradients are recovered by the chain rule. mu_eff adds the
/// per-element artificial viscosity on top of gas.mu; the conductivity is
/// scaled consistently so the Prandtl number is preserved.
FluxTensor viscous_flux(const ConservedState& w, const GradTensor& grad,
                        const GasModel& gas, double mu_eff);

inline FluxTensor viscous_flux(const ConservedState& w, const GradTensor& grad,
                               const GasModel& gas) {
  return viscous_flux(w, grad, gas, gas.mu);
}

struct RoeOptions {
  bool entropy_fix = false;     // Harten fix on the acoustic waves
  double entropy_delta = 0.05;  // delta = entropy_delta * c_roe
};

/// Roe approximate Riemann flux in direction `normal` (|normal| = 1).
std::array<double, 4> roe_flux(const ConservedState& wl,
                               const ConservedState& wr,
                               const std::array<double, 2>& normal,
                               const GasModel& gas,
                               const RoeOptions& opts = {});

/// Interior-penalty viscous numerical flux in direction `normal` (left to
/// right): {F_v}.n - tau_ip (wl - wr) with tau_ip = c_ip (P+1)^2 mu_max / h.
/// The symmetrizing trace term enters the residual through the lifted
/// gradients used in the volume integral.
std::array<double, 4> interior_penalty_viscous_flux(
    const ConservedState& wl, const ConservedState& wr, const GradTensor& gl,
    const GradTensor& gr, const std::array<double, 2>& normal, double h,
    int order, const GasModel& gas, double mu_eff_l, double mu_eff_r,
    double c_ip);

/// Parabolic inflow profile, u_in at the axis and zero at the junctions.
double parabolic_inlet_velocity(double y, double u_in, double half_width);

struct BoundaryParams {
  double u_in = 20.0;
  double rho_in = 1.0;
  double p_out = 1.0;
  double inlet_half_width = 1.25;
  /// Verification mode: every tag returns the exact free-stream state
  /// (used by the free-stream preservation check).
  bool freestream_exact = false;
  ConservedState freestream{};
};

/// Ghost data for one boundary face node. The convective ghost feeds the
/// Roe flux; the viscous ghost (state + gradient) feeds the gradient
/// lifting and the interior-penalty flux.
struct GhostState {
  ConservedState convective;
  ConservedState viscous;
  GradTensor viscous_grad;
};

GhostState boundary_state(const ConservedState& w_int,
                          const GradTensor& grad_int, mesh::BoundaryTag tag,
                          const std::array<double, 2>& normal, double x,
                          double y, const BoundaryParams& bc,
                          const GasModel& gas);

/// State-only part of boundary_state (the gradient lifting needs the ghost
/// state before interior gradients exist).
ConservedState boundary_viscous_state(const ConservedState& w_int,
                                      mesh::BoundaryTag tag,
                                      const std::array<double, 2>& normal,
                                      double x, double y,
                                      const BoundaryParams& bc,
                                      const GasModel& gas);

}  // namespace nsrom::physics
