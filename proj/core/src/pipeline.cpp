#include "nsrom/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "container.hpp"
#include "csv.hpp"

namespace nsrom::pipeline {

CaseSpec CaseSpec::make(double mu, double mach, int n_y, int order,
                        double gamma, double u_in, double rho_in,
                        double inlet_width) {
  if (!(mu > 0.0)) throw std::invalid_argument("case viscosity must be > 0");
  if (!(mach > 0.0 && mach < 1.0)) {
    throw std::invalid_argument("case Mach number must lie in (0, 1)");
  }
  CaseSpec spec;
  spec.mu = mu;
  spec.mach = mach;
  spec.n_y = n_y;
  spec.order = order;
  spec.p_out = solver::p_out_from_mach(mach, u_in, rho_in, gamma);
  spec.reynolds = rho_in * u_in * inlet_width / mu;
  return spec;
}

std::array<std::vector<double>, 4> transformed_fields(
    const dg::DGField& field, const physics::GasModel& gas) {
  const int nn = field.nodes_per_element();
  const int ne = field.mesh->n_elements();
  std::array<std::vector<double>, 4> out;
  for (auto& v : out) v.resize(static_cast<size_t>(ne) * nn);
  for (int e = 0; e < ne; ++e) {
    for (int n = 0; n < nn; ++n) {
      const physics::ConservedState w{field.data(e, 0)[n], field.data(e, 1)[n],
                                      field.data(e, 2)[n],
                                      field.data(e, 3)[n]};
      const auto t = physics::transformed_from_conserved(w, gas);
      const size_t i = static_cast<size_t>(e) * nn + n;
      out[0][i] = t.inv_rho;
      out[1][i] = t.u1;
      out[2][i] = t.u2;
      out[3][i] = t.p;
    }
  }
  return out;
}

int SnapshotSet::variable_index(const std::string& name) const {
  const auto& names = transformed_variable_names();
  for (size_t i = 0; i < names.size(); ++i) {
    if (names[i] == name) return static_cast<int>(i);
  }
  throw std::invalid_argument("unknown transformed variable '" + name + "'");
}

std::vector<double> SnapshotSet::machs() const {
  std::vector<double> out;
  for (const auto& c : cases) {
    if (out.empty() || out.back() != c.spec.mach) out.push_back(c.spec.mach);
  }
  return out;
}

const SnapshotSet::Case* SnapshotSet::find(double mach, double mu) const {
  for (const auto& c : cases) {
    if (c.spec.mach == mach && c.spec.mu == mu) return &c;
  }
  return nullptr;
}

solver::RunResult run_case(const CaseSpec& spec, const SweepSetup& setup,
                           const mesh::QuadMesh& mesh,
                           const dg::ReferenceElement& ref) {
  physics::GasModel gas = setup.gas;
  gas.mu = spec.mu;

  physics::BoundaryParams bc;
  bc.u_in = setup.u_in;
  bc.rho_in = setup.rho_in;
  bc.p_out = spec.p_out;
  bc.inlet_half_width = setup.geometry.inlet_half_width;

  solver::SolverConfig cfg = setup.solver;
  auto resolve = [&](AvMode mode) {
    return mode == AvMode::On || (mode == AvMode::Auto && spec.mach >= 0.8);
  };
  cfg.av_enabled = resolve(setup.av);
  cfg.roe_entropy_fix = resolve(setup.entropy_fix);

  solver::InitParams init;
  init.u_in = setup.u_in;
  init.rho_in = setup.rho_in;
  init.p_out = spec.p_out;
  init.inlet_length = setup.geometry.inlet_length;
  init.inlet_half_width = setup.geometry.inlet_half_width;
  init.expansion_half_width = setup.geometry.expansion_half_width;
  init.perturbation_eps = cfg.perturbation_eps;
  init.perturbation_sign = cfg.perturbation_sign;

  const solver::FlowSolver flow(mesh, ref, gas, bc, cfg);
  return flow.run_to_steady(solver::initialize(mesh, ref, gas, init));
}

SweepOutcome sweep(const std::vector<double>& machs,
                   const std::vector<double>& mus, const SweepSetup& setup,
                   int jobs) {
  std::vector<CaseSpec> cases;
  for (const double mach : machs) {
    for (const double mu : mus) {
      cases.push_back(CaseSpec::make(mu, mach, setup.n_y, setup.order,
                                     setup.gas.gamma, setup.u_in,
                                     setup.rho_in));
    }
  }
  std::sort(cases.begin(), cases.end(), case_less);

  const mesh::QuadMesh mesh =
      mesh::build_channel_mesh(setup.geometry, setup.n_y);
  const dg::ReferenceElement ref(setup.order);

  struct Slot {
    solver::RunResult result;
    bool ok = false;
    std::string error;
  };
  std::vector<Slot> slots(cases.size());
  std::atomic<size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      const size_t i = next.fetch_add(1);
      if (i >= cases.size()) return;
      try {
        slots[i].result = run_case(cases[i], setup, mesh, ref);
        slots[i].ok = true;
      } catch (const std::exception& err) {
        slots[i].error = err.what();
      }
    }
  };
  if (jobs <= 0) {
    jobs = static_cast<int>(std::thread::hardware_concurrency());
    if (jobs <= 0) jobs = 1;
  }
  if (jobs == 1 || cases.size() == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int j = 0; j < std::min<size_t>(jobs, cases.size()); ++j) {
      pool.emplace_back(worker);
    }
    for (auto& th : pool) th.join();
  }

  SweepOutcome outcome;
  outcome.snapshots.mesh_hash = mesh::mesh_fingerprint(mesh);
  outcome.snapshots.order = setup.order;
  outcome.snapshots.n_y = setup.n_y;
  physics::GasModel gas = setup.gas;

  size_t successes = 0;
  for (size_t i = 0; i < cases.size(); ++i) {
    if (!slots[i].ok) {
      std::ostringstream os;
      os << "case (mu = " << cases[i].mu << ", Ma = " << cases[i].mach
         << ") failed: " << slots[i].error;
      outcome.failures.push_back(os.str());
      continue;
    }
    ++successes;
    const auto& run = slots[i].result;
    if (run.status == solver::RunStatus::Aborted) {
      std::ostringstream os;
      os << "case (mu = " << cases[i].mu << ", Ma = " << cases[i].mach
         << ") aborted: " << run.abort_reason;
      outcome.failures.push_back(os.str());
      continue;
    }
    SnapshotSet::Case snap;
    snap.spec = cases[i];
    snap.probe_uy = run.final_probe;
    snap.converged = run.converged;
    gas.mu = cases[i].mu;
    snap.fields = transformed_fields(run.final_field, gas);
    outcome.snapshots.cases.push_back(std::move(snap));
    outcome.diagram.points.push_back(
        {cases[i].mach, cases[i].mu, run.final_probe, "FOM"});
  }
  if (successes == 0) {
    throw std::runtime_error("sweep produced no usable cases: " +
                             (outcome.failures.empty()
                                  ? std::string("no cases requested")
                                  : outcome.failures.front()));
  }
  return outcome;
}

std::vector<CriticalBracket> critical_viscosity(
    const BifurcationDiagram& diagram, double threshold) {
  std::vector<double> machs;
  for (const auto& p : diagram.points) {
    if (std::find(machs.begin(), machs.end(), p.mach) == machs.end()) {
      machs.push_back(p.mach);
    }
  }
  std::sort(machs.begin(), machs.end());

  std::vector<CriticalBracket> out;
  for (const double mach : machs) {
    std::vector<std::pair<double, double>> pts;  // (mu, |probe|)
    for (const auto& p : diagram.points) {
      if (p.mach == mach) pts.push_back({p.mu, std::abs(p.probe_uy)});
    }
    std::sort(pts.begin(), pts.end());
    CriticalBracket bracket;
    bracket.mach = mach;
    // first asymmetric-to-symmetric transition scanning down from high mu
    for (size_t i = pts.size(); i-- > 1;) {
      if (pts[i - 1].second > threshold && pts[i].second <= threshold) {
        bracket.mu_lo = pts[i - 1].first;
        bracket.mu_hi = pts[i].first;
        bracket.found = true;
        break;
      }
    }
    out.push_back(bracket);
  }
  return out;
}

void save_snapshots(const SnapshotSet& set, const std::string& path) {
  nlohmann::json header;
  header["mesh_hash"] = set.mesh_hash;
  header["P"] = set.order;
  header["n_y"] = set.n_y;
  header["variables"] = transformed_variable_names();
  auto& cases = header["cases"] = nlohmann::json::array();
  std::vector<double> payload;
  payload.reserve(set.cases.size() * 4 * set.dof_len());
  for (const auto& c : set.cases) {
    cases.push_back({{"mu", c.spec.mu},
                     {"mach", c.spec.mach},
                     {"p_out", c.spec.p_out},
                     {"probe_uy", c.probe_uy},
                     {"converged", c.converged}});
    for (const auto& field : c.fields) {
      payload.insert(payload.end(), field.begin(), field.end());
    }
  }
  container::write_file(path, header, payload);
}

SnapshotSet load_snapshots(const std::string& path) {
  const auto blob = container::read_file(path);
  SnapshotSet set;
  try {
    set.mesh_hash = blob.header.at("mesh_hash").get<std::string>();
    set.order = blob.header.at("P").get<int>();
    set.n_y = blob.header.at("n_y").get<int>();
    const auto vars =
        blob.header.at("variables").get<std::vector<std::string>>();
    if (vars != std::vector<std::string>(transformed_variable_names().begin(),
                                         transformed_variable_names().end())) {
      throw std::runtime_error("unexpected variable list");
    }
    const auto& cases = blob.header.at("cases");
    const size_t n_cases = cases.size();
    if (n_cases > 0) {
      if (blob.payload.size() % (4 * n_cases) != 0) {
        throw container::ParseError(
            blob.payload_offset + blob.payload.size() * sizeof(double),
            "payload length is not divisible by cases * variables");
      }
      const size_t dof = blob.payload.size() / (4 * n_cases);
      size_t cursor = 0;
      for (const auto& cj : cases) {
        SnapshotSet::Case c;
        c.spec = CaseSpec::make(cj.at("mu").get<double>(),
                                cj.at("mach").get<double>(), set.n_y,
                                set.order, 1.4, 20.0, 1.0);
        c.spec.p_out = cj.at("p_out").get<double>();
        c.probe_uy = cj.at("probe_uy").get<double>();
        c.converged = cj.at("converged").get<bool>();
        for (auto& field : c.fields) {
          field.assign(blob.payload.begin() + cursor,
                       blob.payload.begin() + cursor + dof);
          cursor += dof;
        }
        set.cases.push_back(std::move(c));
      }
    }
  } catch (const container::ParseError&) {
    throw;
  } catch (const std::exception& err) {
    throw container::ParseError(12, std::string("bad snapshot header: ") +
                                        err.what());
  }
  return set;
}

SnapshotSet load_snapshots(const std::string& path,
                           const mesh::QuadMesh& expected_mesh) {
  SnapshotSet set = load_snapshots(path);
  const std::string expected = mesh::mesh_fingerprint(expected_mesh);
  if (set.mesh_hash != expected) {
    throw std::runtime_error("snapshot mesh fingerprint " + set.mesh_hash +
                             " does not match the supplied mesh (" + expected +
                             ")");
  }
  return set;
}

void save_diagram_csv(const BifurcationDiagram& diagram,
                      const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << "mach,mu,probe_uy,source\n";
  for (const auto& p : diagram.points) {
    out << csv::format(p.mach) << ',' << csv::format(p.mu) << ','
        << csv::format(p.probe_uy) << ',' << p.source << '\n';
  }
}

}  // namespace nsrom::pipeline
