#include "nsrom/pod.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "container.hpp"

namespace nsrom::pod {

std::string RankRule::describe() const {
  if (kind == Kind::Fixed) return "fixed:" + std::to_string(fixed_n);
  char buf[48];
  std::snprintf(buf, sizeof(buf), "energy:%.3g", energy_tol);
  return buf;
}

PODBasis compute_pod_from_columns(const std::vector<std::vector<double>>& cols,
                                  const std::string& variable,
                                  const RankRule& rule) {
  const int ns = static_cast<int>(cols.size());
  if (ns < 2) throw std::invalid_argument("POD needs at least 2 snapshots");
  const size_t dof = cols.front().size();
  for (const auto& c : cols) {
    if (c.size() != dof) {
      throw std::invalid_argument("snapshot DOF lengths differ");
    }
  }

  // Gram matrix of the snapshot columns (method of snapshots)
  Eigen::MatrixXd gram(ns, ns);
  for (int i = 0; i < ns; ++i) {
    const Eigen::Map<const Eigen::VectorXd> vi(cols[i].data(), dof);
    for (int j = i; j < ns; ++j) {
      const Eigen::Map<const Eigen::VectorXd> vj(cols[j].data(), dof);
      gram(i, j) = gram(j, i) = vi.dot(vj);
    }
  }
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(gram);
  if (es.info() != Eigen::Success) {
    throw std::runtime_error("Gram-matrix eigendecomposition failed");
  }

  const double lam_max = es.eigenvalues().maxCoeff();
  if (!(lam_max > 0.0)) {
    throw std::runtime_error("POD of an all-zero snapshot matrix");
  }
  for (int i = 0; i < ns; ++i) {
    if (es.eigenvalues()(i) < -1e-12 * lam_max) {
      throw std::runtime_error("Gram matrix produced a negative eigenvalue");
    }
  }

  // eigenvalues ascending -> walk backwards, discard the rounding tail
  std::vector<int> keep;
  for (int i = ns - 1; i >= 0; --i) {
    if (es.eigenvalues()(i) > 1e-12 * lam_max) keep.push_back(i);
  }

  PODBasis basis;
  basis.variable = variable;
  basis.n_snapshots = ns;
  basis.dof_len = dof;
  basis.rank_rule = rule.describe();
  for (const int i : keep) {
    basis.singular_values.push_back(std::sqrt(es.eigenvalues()(i)));
  }

  int n_modes = static_cast<int>(keep.size());
  if (rule.kind == RankRule::Kind::Fixed) {
    n_modes = std::min(n_modes, std::max(1, rule.fixed_n));
  } else {
    double total = 0.0;
    for (const double s : basis.singular_values) total += s * s;
    double acc = 0.0;
    for (int k = 0; k < static_cast<int>(basis.singular_values.size()); ++k) {
      acc += basis.singular_values[k] * basis.singular_values[k];
      if (acc >= (1.0 - rule.energy_tol) * total) {
        n_modes = k + 1;
        break;
      }
    }
  }
  basis.n_modes = n_modes;

  basis.modes.assign(static_cast<size_t>(n_modes) * dof, 0.0);
  for (int k = 0; k < n_modes; ++k) {
    double* mode = basis.modes.data() + static_cast<size_t>(k) * dof;
    const double inv_sigma = 1.0 / basis.singular_values[k];
    for (int i = 0; i < ns; ++i) {
      const double c = es.eigenvectors()(i, keep[k]) * inv_sigma;
      if (c == 0.0) continue;
      const double* col = cols[i].data();
      for (size_t d = 0; d < dof; ++d) mode[d] += c * col[d];
    }
    // sign convention: largest-magnitude entry positive
    size_t arg = 0;
    for (size_t d = 1; d < dof; ++d) {
      if (std::abs(mode[d]) > std::abs(mode[arg])) arg = d;
    }
    if (mode[arg] < 0.0) {
      for (size_t d = 0; d < dof; ++d) mode[d] = -mode[d];
    }
  }
  return basis;
}

namespace {

PODBasis pod_over_cases(const pipeline::SnapshotSet& snapshots,
                        const std::string& variable, const RankRule& rule,
                        const double* mach_filter) {
  const int var = snapshots.variable_index(variable);
  std::vector<std::vector<double>> cols;
  for (const auto& c : snapshots.cases) {
    if (mach_filter && c.spec.mach != *mach_filter) continue;
    cols.push_back(c.fields[var]);
  }
  return compute_pod_from_columns(cols, variable, rule);
}

}  // namespace

PODBasis compute_pod(const pipeline::SnapshotSet& snapshots,
                     const std::string& variable, const RankRule& rule) {
  return pod_over_cases(snapshots, variable, rule, nullptr);
}

PODBasis compute_pod(const pipeline::SnapshotSet& snapshots, double mach,
                     const std::string& variable, const RankRule& rule) {
  return pod_over_cases(snapshots, variable, rule, &mach);
}

std::vector<double> project(const PODBasis& basis,
                            const std::vector<double>& dof) {
  if (dof.size() != basis.dof_len) {
    throw std::invalid_argument("DOF vector length does not match the basis");
  }
  std::vector<double> coeffs(basis.n_modes, 0.0);
  for (int k = 0; k < basis.n_modes; ++k) {
    const double* mode = basis.mode(k);
    double acc = 0.0;
    for (size_t d = 0; d < basis.dof_len; ++d) acc += mode[d] * dof[d];
    coeffs[k] = acc;
  }
  return coeffs;
}

std::vector<double> reconstruct(const PODBasis& basis,
                                const std::vector<double>& coefficients) {
  if (coefficients.size() != static_cast<size_t>(basis.n_modes)) {
    throw std::invalid_argument("coefficient count does not match the basis");
  }
  std::vector<double> out(basis.dof_len, 0.0);
  for (int k = 0; k < basis.n_modes; ++k) {
    const double c = coefficients[k];
    if (c == 0.0) continue;
    const double* mode = basis.mode(k);
    for (size_t d = 0; d < basis.dof_len; ++d) out[d] += c * mode[d];
  }
  return out;
}

std::vector<double> energy_spectrum(const PODBasis& basis) {
  double total = 0.0;
  for (const double s : basis.singular_values) total += s * s;
  std::vector<double> cum;
  double acc = 0.0;
  for (const double s : basis.singular_values) {
    acc += s * s;
    cum.push_back(acc / total);
  }
  return cum;
}

void save_pod(const std::vector<PODBasis>& bases, const std::string& path) {
  nlohmann::json header;
  header["kind"] = "pod";
  auto& sections = header["sections"] = nlohmann::json::array();
  std::vector<double> payload;
  for (const auto& b : bases) {
    sections.push_back({{"variable", b.variable},
                        {"n_snapshots", b.n_snapshots},
                        {"dof_len", b.dof_len},
                        {"n_modes", b.n_modes},
                        {"singular_values", b.singular_values},
                        {"rank_rule", b.rank_rule}});
    payload.insert(payload.end(), b.modes.begin(), b.modes.end());
  }
  container::write_file(path, header, payload);
}

std::vector<PODBasis> load_pod(const std::string& path) {
  const auto blob = container::read_file(path);
  std::vector<PODBasis> out;
  try {
    if (blob.header.at("kind").get<std::string>() != "pod") {
      throw std::runtime_error("container is not a POD file");
    }
    size_t cursor = 0;
    for (const auto& s : blob.header.at("sections")) {
      PODBasis b;
      b.variable = s.at("variable").get<std::string>();
      b.n_snapshots = s.at("n_snapshots").get<int>();
      b.dof_len = s.at("dof_len").get<size_t>();
      b.n_modes = s.at("n_modes").get<int>();
      b.singular_values = s.at("singular_values").get<std::vector<double>>();
      b.rank_rule = s.at("rank_rule").get<std::string>();
      const size_t count = static_cast<size_t>(b.n_modes) * b.dof_len;
      if (cursor + count > blob.payload.size()) {
        throw container::ParseError(
            blob.payload_offset + blob.payload.size() * sizeof(double),
            "POD payload truncated");
      }
      b.modes.assign(blob.payload.begin() + cursor,
                     blob.payload.begin() + cursor + count);
      cursor += count;
      out.push_back(std::move(b));
    }
  } catch (const container::ParseError&) {
    throw;
  } catch (const std::exception& err) {
    throw container::ParseError(12,
                                std::string("bad POD header: ") + err.what());
  }
  return out;
}

}  // namespace nsrom::pod
