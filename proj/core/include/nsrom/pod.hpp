#pragma once

#include <string>
#include <vector>

#include "nsrom/pipeline.hpp"

namespace nsrom::pod {

/// Truncation rule: either keep a fixed mode count or the smallest count
/// whose cumulative singular-value energy reaches 1 - energy_tol.
struct RankRule {
  enum class Kind { Fixed, Energy };
  Kind kind = Kind::Energy;
  int fixed_n = 0;
  double energy_tol = 1e-8;

  static RankRule fixed(int n) { return {Kind::Fixed, n, 0.0}; }
  static RankRule energy(double tol = 1e-8) { return {Kind::Energy, 0, tol}; }
  std::string describe() const;
};

/// Orthonormal POD basis of one transformed variable, computed with the
/// method of snapshots; modes are stored mode-major and sign-fixed so the
/// largest-magnitude entry of each mode is positive.
struct PODBasis {
  std::string variable;
  int n_snapshots = 0;
  size_t dof_len = 0;
  int n_modes = 0;
  std::vector<double> modes;  // [mode][dof]
  std::vector<double> singular_values;
  std::string rank_rule;

  const double* mode(int k) const { return modes.data() + k * dof_len; }
};

/// Method of snapshots on raw DOF columns (exposed for oracle tests).
PODBasis compute_pod_from_columns(const std::vector<std::vector<double>>& cols,
                                  const std::string& variable,
                                  const RankRule& rule);

/// POD of one transformed variable over every case in the snapshot set.
PODBasis compute_pod(const pipeline::SnapshotSet& snapshots,
                     const std::string& variable, const RankRule& rule);

/// Per-Mach variant used by the per-Mach ROM pipelines.
PODBasis compute_pod(const pipeline::SnapshotSet& snapshots, double mach,
                     const std::string& variable, const RankRule& rule);

std::vector<double> project(const PODBasis& basis,
                            const std::vector<double>& dof);
std::vector<double> reconstruct(const PODBasis& basis,
                                const std::vector<double>& coefficients);

/// Cumulative normalized energy sigma_k^2 / sum sigma_j^2; ends at 1.
std::vector<double> energy_spectrum(const PODBasis& basis);

void save_pod(const std::vector<PODBasis>& bases, const std::string& path);
std::vector<PODBasis> load_pod(const std::string& path);

}  // namespace nsrom::pod
