#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "nsrom/dg.hpp"
#include "nsrom/mesh.hpp"
#include "nsrom/physics.hpp"
#include "nsrom/solver.hpp"

namespace nsrom::pipeline {

/// One point of the (mu, Ma) sweep. Reynolds and outlet pressure are
/// derived: Re = rho_in u_in L / mu and p_out = rho_in u_in^2/(gamma Ma^2).
struct CaseSpec {
  double mu = 1.0;
  double mach = 0.3;
  int n_y = 4;
  int order = 2;
  double p_out = 0.0;
  double reynolds = 0.0;

  static CaseSpec make(double mu, double mach, int n_y, int order,
                       double gamma, double u_in, double rho_in,
                       double inlet_width = 2.5);
};

inline bool case_less(const CaseSpec& a, const CaseSpec& b) {
  if (a.mach != b.mach) return a.mach < b.mach;
  return a.mu < b.mu;
}

inline const std::array<std::string, 4>& transformed_variable_names() {
  static const std::array<std::string, 4> names{"inv_rho", "u1", "u2", "p"};
  return names;
}

/// Nodewise (1/rho, u1, u2, p) DOF vectors of a conserved field,
/// element-major.
std::array<std::vector<double>, 4> transformed_fields(
    const dg::DGField& field, const physics::GasModel& gas);

/// Converged steady snapshots over the parameter set, all on one mesh.
struct SnapshotSet {
  std::string mesh_hash;
  int order = 0;
  int n_y = 0;

  struct Case {
    CaseSpec spec;
    double probe_uy = 0.0;
    bool converged = false;
    std::array<std::vector<double>, 4> fields;  // inv_rho, u1, u2, p
  };
  std::vector<Case> cases;  // strictly ordered by (mach, mu)

  size_t dof_len() const {
    return cases.empty() ? 0 : cases.front().fields[0].size();
  }
  int variable_index(const std::string& name) const;
  std::vector<double> machs() const;
  const Case* find(double mach, double mu) const;
};

struct DiagramPoint {
  double mach;
  double mu;
  double probe_uy;
  std::string source;  // FOM | ROM-RBF | ROM-ANN
};

struct BifurcationDiagram {
  std::vector<DiagramPoint> points;
};

enum class AvMode { Off, On, Auto };  // Auto: enabled for Ma >= 0.8

struct SweepSetup {
  mesh::ChannelGeometry geometry;
  physics::GasModel gas;  // gas.mu is overridden per case
  solver::SolverConfig solver;
  int n_y = 4;
  int order = 2;
  double u_in = 20.0;
  double rho_in = 1.0;
  AvMode av = AvMode::Auto;
  AvMode entropy_fix = AvMode::Auto;
};

solver::RunResult run_case(const CaseSpec& spec, const SweepSetup& setup,
                           const mesh::QuadMesh& mesh,
                           const dg::ReferenceElement& ref);

struct SweepOutcome {
  SnapshotSet snapshots;
  BifurcationDiagram diagram;
  std::vector<std::string> failures;  // per-case diagnostics, non-fatal
};

/// Runs all (mach, mu) cases with the configured branch seed on a worker
/// pool; collection order is deterministic (sorted cases, not completion).
SweepOutcome sweep(const std::vector<double>& machs,
                   const std::vector<double>& mus, const SweepSetup& setup,
                   int jobs);

struct CriticalBracket {
  double mach = 0.0;
  double mu_lo = 0.0;
  double mu_hi = 0.0;
  bool found = false;
  double midpoint() const { return 0.5 * (mu_lo + mu_hi); }
};

/// Tightest consecutive-mu bracket per Mach where |probe| crosses the
/// asymmetry threshold (scanning from the symmetric high-mu side).
std::vector<CriticalBracket> critical_viscosity(
    const BifurcationDiagram& diagram, double threshold);

/// NSROMv01 container persistence; round-trips bit-exactly.
void save_snapshots(const SnapshotSet& set, const std::string& path);
SnapshotSet load_snapshots(const std::string& path);
SnapshotSet load_snapshots(const std::string& path,
                           const mesh::QuadMesh& expected_mesh);

void save_diagram_csv(const BifurcationDiagram& diagram,
                      const std::string& path);

}  // namespace nsrom::pipeline
