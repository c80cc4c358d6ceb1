#pragma once

#include <functional>
#include <string>
#include <vector>

#include "nsrom/dg.hpp"
#include "nsrom/mesh.hpp"
#include "nsrom/physics.hpp"

namespace nsrom::solver {

/// Modal-decay shock sensor parameters for the artificial viscosity.
struct AvParams {
  double s0 = -6.0;
  double kappa = 1.0;
  double c_max = 0.5;
};

struct SolverConfig {
  double cfl = 0.9;
  double steady_tol = 1e-6;   // relative residual vs the step-100 value
  double probe_tol = 1e-6;    // probe drift over the window, scaled by u_in
  long max_steps = 400000;
  double perturbation_eps = 1e-3;  // branch seed amplitude (fraction of u_in)
  int perturbation_sign = +1;
  bool av_enabled = false;
  AvParams av;
  unsigned long long rng_seed = 0;
  double c_ip = 4.0;
  bool roe_entropy_fix = false;
  double probe_x = 15.0;
  double probe_y = 0.0;
  int norm_step = 100;      // residual normalization step
  int probe_window = 1000;  // trailing steps for the probe-drift gate
};

enum class RunStatus { Converged, MaxSteps, Aborted };

struct ProbeSample {
  double t;
  double uy;
  double residual;
};

struct RunResult {
  dg::DGField final_field;
  std::vector<ProbeSample> history;
  bool converged = false;
  RunStatus status = RunStatus::MaxSteps;
  std::string abort_reason;
  long steps = 0;
  double time = 0.0;
  double wall_seconds = 0.0;
  double final_probe = 0.0;
};

enum class ProbeQuantity { Scalar, Density, U1, U2, Pressure, LocalMach };

/// Outlet pressure realizing a target outflow Mach number:
/// p_out = rho_in u_in^2 / (gamma Ma^2).
double p_out_from_mach(double mach, double u_in, double rho_in, double gamma);

struct InitParams {
  double u_in = 20.0;
  double rho_in = 1.0;
  double p_out = 1.0;
  double inlet_length = 10.0;
  double inlet_half_width = 1.25;
  double expansion_half_width = 3.75;
  double perturbation_eps = 1e-3;
  int perturbation_sign = +1;
};

/// Initial condition: half-speed parabolic flow masked to zero at the top
/// and bottom walls, uniform outlet pressure, plus a localized vertical
/// velocity bump just downstream of the expansion that seeds the branch.
dg::DGField initialize(const mesh::QuadMesh& mesh,
                       const dg::ReferenceElement& ref,
                       const physics::GasModel& gas, const InitParams& init);

/// Tensor-product Lagrange evaluation of a nodal quantity at (x, y); exact
/// for degree-<=P fields and bitwise-identical to storage at nodes.
double probe(const dg::DGField& field, const dg::ReferenceElement& ref,
             double x, double y, ProbeQuantity quantity,
             const physics::GasModel& gas = {});

/// Nodewise |u| / c of a conserved field.
dg::DGField local_mach_field(const dg::DGField& field,
                             const physics::GasModel& gas);

/// Three-stage strong-stability-preserving Runge-Kutta update of `u`.
void ssprk3_step(
    dg::DGField& u, double dt,
    const std::function<void(const dg::DGField&, dg::DGField&)>& rhs);

/// Semi-discrete DG operator for the compressible Navier-Stokes system on
/// one mesh: BR1-lifted gradients feed an interior-penalty viscous flux,
/// Roe fluxes carry the convective part, boundary conditions enter through
/// ghost states. Holds all work buffers, so one instance serves one
/// concurrent run.
class FlowSolver {
 public:
  FlowSolver(const mesh::QuadMesh& mesh, const dg::ReferenceElement& ref,
             const physics::GasModel& gas, const physics::BoundaryParams& bc,
             const SolverConfig& config);

  /// dudt = M^{-1} R(u). Throws physics::StateError on inadmissible states.
  void compute_residual(const dg::DGField& u, dg::DGField& dudt) const;

  dg::DGField residual(const dg::DGField& u) const {
    dg::DGField r(*mesh_, ref_->order(), 4);
    compute_residual(u, r);
    return r;
  }

  /// ||M dw/dt||_2 of the last compute_residual call.
  double last_residual_norm() const { return last_resnorm_; }

  /// cfl * min(h / ((P+1)^2 (|u|+c)), h^2 rho / ((P+1)^4 mu_eff)).
  double stable_dt(const dg::DGField& u) const;

  /// Per-element artificial viscosity from the modal-decay density sensor.
  std::vector<double> artificial_viscosity(const dg::DGField& u) const;

  /// Marches SSP-RK3 until the double steady gate (relative residual and
  /// probe drift) is met, max_steps is reached, or the state fails.
  RunResult run_to_steady(const dg::DGField& initial) const;

  const SolverConfig& config() const { return config_; }
  const physics::GasModel& gas() const { return gas_; }
  const physics::BoundaryParams& boundary_params() const { return bc_; }

 private:
  void sensor_pass(const double* u) const;
  void gradient_pass(const double* u) const;
  void flux_pass(const double* u) const;
  void volume_pass() const;
  void face_pass(const double* u) const;
  void boundary_pass(const double* u) const;

  const mesh::QuadMesh* mesh_;
  const dg::ReferenceElement* ref_;
  physics::GasModel gas_;
  physics::BoundaryParams bc_;
  SolverConfig config_;

  int np_, nn_;
  double h_, half_h_, lift_;
  bool viscous_;
  std::vector<double> weights_, diff_, wdiff_, inv_mass_;
  std::vector<double> node_x_, node_y_;

  mutable std::vector<double> grad_;   // [e][var][dir][node]
  mutable std::vector<double> flux_;   // [e][var][dir][node]
  mutable std::vector<double> resid_;  // [e][var][node], weak form
  mutable std::vector<double> mu_av_;
  mutable double last_resnorm_ = 0.0;
};

}  // namespace nsrom::solver
