#include "nsrom/solver.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <deque>
#include <limits>
#include <sstream>

namespace nsrom::solver {

using physics::ConservedState;
using physics::GradTensor;

double p_out_from_mach(double mach, double u_in, double rho_in, double gamma) {
  return rho_in * u_in * u_in / (gamma * mach * mach);
}

dg::DGField initialize(const mesh::QuadMesh& mesh,
                       const dg::ReferenceElement& ref,
                       const physics::GasModel& gas, const InitParams& init) {
  dg::DGField field(mesh, ref.order(), 4);
  const int nn = ref.nodes_per_element();
  const double xc = init.inlet_length + 1.0;
  const double yc = 1.0;
  for (int e = 0; e < mesh.n_elements(); ++e) {
    const bool in_inlet = mesh.element_origin(e)[0] < init.inlet_length - 1e-12;
    const double width =
        in_inlet ? init.inlet_half_width : init.expansion_half_width;
    for (int n = 0; n < nn; ++n) {
      const auto pos = node_position(mesh, ref, e, n);
      const double s = pos[1] / width;
      const double u1 = 0.5 * init.u_in * std::max(0.0, 1.0 - s * s);
      const double r2 = (pos[0] - xc) * (pos[0] - xc) +
                        (pos[1] - yc) * (pos[1] - yc);
      const double u2 = init.perturbation_sign * init.perturbation_eps *
                        init.u_in * std::exp(-r2);
      const ConservedState w = physics::conserved_from_primitive(
          init.rho_in, u1, u2, init.p_out, gas);
      field.data(e, 0)[n] = w.rho;
      field.data(e, 1)[n] = w.mx;
      field.data(e, 2)[n] = w.my;
      field.data(e, 3)[n] = w.E;
    }
  }
  return field;
}

namespace {

double nodal_quantity(const dg::DGField& f, int e, int n, ProbeQuantity q,
                      const physics::GasModel& gas) {
  if (q == ProbeQuantity::Scalar) return f.data(e, 0)[n];
  const ConservedState w{f.data(e, 0)[n], f.data(e, 1)[n], f.data(e, 2)[n],
                         f.data(e, 3)[n]};
  switch (q) {
    case ProbeQuantity::Density: return w.rho;
    case ProbeQuantity::U1: return w.mx / w.rho;
    case ProbeQuantity::U2: return w.my / w.rho;
    case ProbeQuantity::Pressure: return physics::pressure(w, gas);
    default: {
      const double c = physics::sound_speed(w, gas);
      return std::sqrt(w.mx * w.mx + w.my * w.my) / (w.rho * c);
    }
  }
}

}  // namespace

double probe(const dg::DGField& field, const dg::ReferenceElement& ref,
             double x, double y, ProbeQuantity quantity,
             const physics::GasModel& gas) {
  const auto loc = mesh::locate_point(*field.mesh, x, y);
  const int np = ref.nodes_per_side();
  std::vector<double> bx(np), by(np);
  ref.lagrange_basis_at(loc.xi, bx);
  ref.lagrange_basis_at(loc.eta, by);
  double acc = 0.0;
  for (int b = 0; b < np; ++b) {
    if (by[b] == 0.0) continue;
    double row = 0.0;
    for (int a = 0; a < np; ++a) {
      if (bx[a] == 0.0) continue;
      row += bx[a] * nodal_quantity(field, loc.element, b * np + a, quantity,
                                    gas);
    }
    acc += by[b] * row;
  }
  return acc;
}

dg::DGField local_mach_field(const dg::DGField& field,
                             const physics::GasModel& gas) {
  dg::DGField out(*field.mesh, field.order, 1);
  const int nn = field.nodes_per_element();
  for (int e = 0; e < field.mesh->n_elements(); ++e) {
    for (int n = 0; n < nn; ++n) {
      out.data(e, 0)[n] =
          nodal_quantity(field, e, n, ProbeQuantity::LocalMach, gas);
    }
  }
  return out;
}

void ssprk3_step(
    dg::DGField& u, double dt,
    const std::function<void(const dg::DGField&, dg::DGField&)>& rhs) {
  const size_t n = u.values.size();
  dg::DGField k = u, s = u;
  rhs(u, k);
  for (size_t i = 0; i < n; ++i) s.values[i] = u.values[i] + dt * k.values[i];
  rhs(s, k);
  for (size_t i = 0; i < n; ++i) {
    s.values[i] =
        0.75 * u.values[i] + 0.25 * (s.values[i] + dt * k.values[i]);
  }
  rhs(s, k);
  for (size_t i = 0; i < n; ++i) {
    u.values[i] = (u.values[i] + 2.0 * (s.values[i] + dt * k.values[i])) / 3.0;
  }
}

FlowSolver::FlowSolver(const mesh::QuadMesh& mesh,
                       const dg::ReferenceElement& ref,
                       const physics::GasModel& gas,
                       const physics::BoundaryParams& bc,
                       const SolverConfig& config)
    : mesh_(&mesh), ref_(&ref), gas_(gas), bc_(bc), config_(config) {
  np_ = ref.nodes_per_side();
  nn_ = ref.nodes_per_element();
  h_ = mesh.h;
  half_h_ = 0.5 * h_;
  weights_ = ref.weights_1d();
  diff_ = ref.diff_1d();
  lift_ = 2.0 / (h_ * weights_[0]);
  viscous_ = gas.mu > 0.0 || config.av_enabled;

  wdiff_.assign(static_cast<size_t>(np_) * np_, 0.0);
  for (int a = 0; a < np_; ++a) {
    for (int m = 0; m < np_; ++m) {
      wdiff_[static_cast<size_t>(a) * np_ + m] =
          weights_[m] * diff_[static_cast<size_t>(m) * np_ + a];
    }
  }
  inv_mass_.assign(nn_, 0.0);
  const auto mass = dg::local_mass_matrix(ref, h_);
  for (int n = 0; n < nn_; ++n) inv_mass_[n] = 1.0 / mass[n];

  const int ne = mesh.n_elements();
  node_x_.resize(static_cast<size_t>(ne) * nn_);
  node_y_.resize(static_cast<size_t>(ne) * nn_);
  for (int e = 0; e < ne; ++e) {
    for (int n = 0; n < nn_; ++n) {
      const auto p = dg::node_position(mesh, ref, e, n);
      node_x_[static_cast<size_t>(e) * nn_ + n] = p[0];
      node_y_[static_cast<size_t>(e) * nn_ + n] = p[1];
    }
  }

  grad_.assign(static_cast<size_t>(ne) * 4 * 2 * nn_, 0.0);
  flux_.assign(static_cast<size_t>(ne) * 4 * 2 * nn_, 0.0);
  resid_.assign(static_cast<size_t>(ne) * 4 * nn_, 0.0);
  mu_av_.assign(ne, 0.0);
}

std::vector<double> FlowSolver::artificial_viscosity(
    const dg::DGField& u) const {
  sensor_pass(u.values.data());
  return mu_av_;
}

void FlowSolver::sensor_pass(const double* u) const {
  const int ne = mesh_->n_elements();
  if (!config_.av_enabled) {
    std::fill(mu_av_.begin(), mu_av_.end(), 0.0);
    return;
  }
  const double* vinv = ref_->nodal_to_modal_1d().data();
  std::vector<double> tmp(nn_), modal(nn_);
  const int p = ref_->order();
  for (int e = 0; e < ne; ++e) {
    const double* rho = u + (static_cast<size_t>(e) * 4) * nn_;
    // nodal -> modal along x, then along y
    for (int b = 0; b < np_; ++b) {
      for (int ja = 0; ja < np_; ++ja) {
        double acc = 0.0;
        for (int a = 0; a < np_; ++a) {
          acc += vinv[static_cast<size_t>(ja) * np_ + a] * rho[b * np_ + a];
        }
        tmp[b * np_ + ja] = acc;
      }
    }
    for (int ja = 0; ja < np_; ++ja) {
      for (int jb = 0; jb < np_; ++jb) {
        double acc = 0.0;
        for (int b = 0; b < np_; ++b) {
          acc += vinv[static_cast<size_t>(jb) * np_ + b] * tmp[b * np_ + ja];
        }
        modal[jb * np_ + ja] = acc;
      }
    }
    double e_tot = 0.0, e_high = 0.0;
    for (int jb = 0; jb < np_; ++jb) {
      for (int ja = 0; ja < np_; ++ja) {
        const double c2 = modal[jb * np_ + ja] * modal[jb * np_ + ja];
        e_tot += c2;
        if (std::max(ja, jb) == p) e_high += c2;
      }
    }
    double amount = 0.0;
    if (e_tot > 0.0 && e_high > 0.0) {
      const double s = std::log10(e_high / e_tot);
      double t = (s - config_.av.s0) / config_.av.kappa;
      t = std::clamp(t, 0.0, 1.0);
      amount = t * t * (3.0 - 2.0 * t);  // smoothstep
    }
    mu_av_[e] = config_.av.c_max * h_ / (p + 1.0) * amount;
  }
}

void FlowSolver::gradient_pass(const double* u) const {
  const int ne = mesh_->n_elements();
  std::fill(grad_.begin(), grad_.end(), 0.0);
  const double scale = 2.0 / h_;
  const double* d = diff_.data();

  for (int e = 0; e < ne; ++e) {
    for (int var = 0; var < 4; ++var) {
      const double* v = u + (static_cast<size_t>(e) * 4 + var) * nn_;
      double* gx = grad_.data() + ((static_cast<size_t>(e) * 4 + var) * 2) *
                                      nn_;
      double* gy = gx + nn_;
      for (int b = 0; b < np_; ++b) {
        for (int a = 0; a < np_; ++a) {
          double sx = 0.0, sy = 0.0;
          for (int m = 0; m < np_; ++m) {
            sx += d[a * np_ + m] * v[b * np_ + m];
            sy += d[b * np_ + m] * v[m * np_ + a];
          }
          gx[b * np_ + a] = scale * sx;
          gy[b * np_ + a] = scale * sy;
        }
      }
    }
  }

  // BR1 lifting: central star states on interior faces
  for (const auto& f : mesh_->interior_faces) {
    const auto n = mesh::face_normal(f.face_left);
    const auto& nl = ref_->face_nodes(f.face_left);
    const auto& nr = ref_->face_nodes(f.face_right);
    for (int var = 0; var < 4; ++var) {
      const double* vl = u + (static_cast<size_t>(f.elem_left) * 4 + var) * nn_;
      const double* vr =
          u + (static_cast<size_t>(f.elem_right) * 4 + var) * nn_;
      double* gl =
          grad_.data() +
          ((static_cast<size_t>(f.elem_left) * 4 + var) * 2) * nn_;
      double* gr =
          grad_.data() +
          ((static_cast<size_t>(f.elem_right) * 4 + var) * 2) * nn_;
      for (int k = 0; k < np_; ++k) {
        const double jump = 0.5 * (vr[nr[k]] - vl[nl[k]]);  // star - v_left
        const double cl = lift_ * jump;
        gl[nl[k]] += cl * n[0];
        gl[nn_ + nl[k]] += cl * n[1];
        const double cr = -lift_ * jump;  // (star - v_right) * (-n)
        gr[nr[k]] += -cr * n[0];
        gr[nn_ + nr[k]] += -cr * n[1];
      }
    }
  }

  // boundary faces: the star state is the viscous ghost
  for (const auto& f : mesh_->boundary_faces) {
    const auto n = mesh::face_normal(f.face);
    const auto& nodes = ref_->face_nodes(f.face);
    const size_t base = static_cast<size_t>(f.elem) * 4 * nn_;
    for (int k = 0; k < np_; ++k) {
      const int node = nodes[k];
      const ConservedState w{u[base + node], u[base + nn_ + node],
                             u[base + 2 * nn_ + node],
                             u[base + 3 * nn_ + node]};
      const double x = node_x_[static_cast<size_t>(f.elem) * nn_ + node];
      const double y = node_y_[static_cast<size_t>(f.elem) * nn_ + node];
      const ConservedState ghost =
          physics::boundary_viscous_state(w, f.tag, n, x, y, bc_, gas_);
      const double jump[4] = {ghost.rho - w.rho, ghost.mx - w.mx,
                              ghost.my - w.my, ghost.E - w.E};
      for (int var = 0; var < 4; ++var) {
        double* g = grad_.data() +
                    ((static_cast<size_t>(f.elem) * 4 + var) * 2) * nn_;
        const double c = lift_ * jump[var];
        g[node] += c * n[0];
        g[nn_ + node] += c * n[1];
      }
    }
  }
}

void FlowSolver::flux_pass(const double* u) const {
  const int ne = mesh_->n_elements();
  for (int e = 0; e < ne; ++e) {
    const double mu_eff = gas_.mu + mu_av_[e];
    const size_t ubase = static_cast<size_t>(e) * 4 * nn_;
    const size_t gbase = static_cast<size_t>(e) * 4 * 2 * nn_;
    for (int node = 0; node < nn_; ++node) {
      const ConservedState w{u[ubase + node], u[ubase + nn_ + node],
                             u[ubase + 2 * nn_ + node],
                             u[ubase + 3 * nn_ + node]};
      const double p = physics::pressure(w, gas_);
      if (!(w.rho > 0.0) || !(p > 0.0) || !std::isfinite(p)) {
        std::ostringstream os;
        os << "inadmissible state at element " << e << ", node " << node
           << " (x = " << node_x_[ubase / 4 + node]
           << ", y = " << node_y_[ubase / 4 + node] << "): rho = " << w.rho
           << ", p = " << p;
        throw physics::StateError(os.str());
      }
      const auto fc = physics::convective_flux(w, gas_);
      physics::FluxTensor fv{};
      if (viscous_) {
        GradTensor g;
        for (int var = 0; var < 4; ++var) {
          g[var][0] = grad_[gbase + (var * 2) * nn_ + node];
          g[var][1] = grad_[gbase + (var * 2 + 1) * nn_ + node];
        }
        fv = physics::viscous_flux(w, g, gas_, mu_eff);
      }
      for (int var = 0; var < 4; ++var) {
        flux_[gbase + (var * 2) * nn_ + node] = fc[var][0] - fv[var][0];
        flux_[gbase + (var * 2 + 1) * nn_ + node] = fc[var][1] - fv[var][1];
      }
    }
  }
}

void FlowSolver::volume_pass() const {
  const int ne = mesh_->n_elements();
  const double* wd = wdiff_.data();
  for (int e = 0; e < ne; ++e) {
    for (int var = 0; var < 4; ++var) {
      const double* fx =
          flux_.data() + ((static_cast<size_t>(e) * 4 + var) * 2) * nn_;
      const double* fy = fx + nn_;
      double* r = resid_.data() + (static_cast<size_t>(e) * 4 + var) * nn_;
      for (int b = 0; b < np_; ++b) {
        for (int a = 0; a < np_; ++a) {
          double ax = 0.0, ay = 0.0;
          for (int m = 0; m < np_; ++m) {
            ax += wd[a * np_ + m] * fx[b * np_ + m];
            ay += wd[b * np_ + m] * fy[m * np_ + a];
          }
          r[b * np_ + a] +=
              half_h_ * (weights_[b] * ax + weights_[a] * ay);
        }
      }
    }
  }
}

void FlowSolver::face_pass(const double* u) const {
  const physics::RoeOptions roe_opts{config_.roe_entropy_fix, 0.05};
  for (const auto& f : mesh_->interior_faces) {
    const auto n = mesh::face_normal(f.face_left);
    const auto& nl = ref_->face_nodes(f.face_left);
    const auto& nr = ref_->face_nodes(f.face_right);
    const size_t ubl = static_cast<size_t>(f.elem_left) * 4 * nn_;
    const size_t ubr = static_cast<size_t>(f.elem_right) * 4 * nn_;
    const size_t gbl = ubl * 2;
    const size_t gbr = ubr * 2;
    const double mu_l = gas_.mu + mu_av_[f.elem_left];
    const double mu_r = gas_.mu + mu_av_[f.elem_right];
    for (int k = 0; k < np_; ++k) {
      const int il = nl[k];
      const int ir = nr[k];
      const ConservedState wl{u[ubl + il], u[ubl + nn_ + il],
                              u[ubl + 2 * nn_ + il], u[ubl + 3 * nn_ + il]};
      const ConservedState wr{u[ubr + ir], u[ubr + nn_ + ir],
                              u[ubr + 2 * nn_ + ir], u[ubr + 3 * nn_ + ir]};
      auto fhat = physics::roe_flux(wl, wr, n, gas_, roe_opts);
      if (viscous_) {
        GradTensor gl, gr;
        for (int var = 0; var < 4; ++var) {
          gl[var][0] = grad_[gbl + (var * 2) * nn_ + il];
          gl[var][1] = grad_[gbl + (var * 2 + 1) * nn_ + il];
          gr[var][0] = grad_[gbr + (var * 2) * nn_ + ir];
          gr[var][1] = grad_[gbr + (var * 2 + 1) * nn_ + ir];
        }
        const auto fv = physics::interior_penalty_viscous_flux(
            wl, wr, gl, gr, n, h_, ref_->order(), gas_, mu_l, mu_r,
            config_.c_ip);
        for (int var = 0; var < 4; ++var) fhat[var] -= fv[var];
      }
      const double s = half_h_ * weights_[k];
      for (int var = 0; var < 4; ++var) {
        resid_[ubl + var * nn_ + il] -= s * fhat[var];
        resid_[ubr + var * nn_ + ir] += s * fhat[var];
      }
    }
  }
}

void FlowSolver::boundary_pass(const double* u) const {
  const physics::RoeOptions roe_opts{config_.roe_entropy_fix, 0.05};
  for (const auto& f : mesh_->boundary_faces) {
    const auto n = mesh::face_normal(f.face);
    const auto& nodes = ref_->face_nodes(f.face);
    const size_t ub = static_cast<size_t>(f.elem) * 4 * nn_;
    const size_t gb = ub * 2;
    const double mu_eff = gas_.mu + mu_av_[f.elem];
    for (int k = 0; k < np_; ++k) {
      const int node = nodes[k];
      const ConservedState w{u[ub + node], u[ub + nn_ + node],
                             u[ub + 2 * nn_ + node], u[ub + 3 * nn_ + node]};
      GradTensor g{};
      if (viscous_) {
        for (int var = 0; var < 4; ++var) {
          g[var][0] = grad_[gb + (var * 2) * nn_ + node];
          g[var][1] = grad_[gb + (var * 2 + 1) * nn_ + node];
        }
      }
      const double x = node_x_[static_cast<size_t>(f.elem) * nn_ + node];
      const double y = node_y_[static_cast<size_t>(f.elem) * nn_ + node];
      const auto ghost =
          physics::boundary_state(w, g, f.tag, n, x, y, bc_, gas_);
      auto fhat = physics::roe_flux(w, ghost.convective, n, gas_, roe_opts);
      if (viscous_) {
        const auto fv = physics::interior_penalty_viscous_flux(
            w, ghost.viscous, g, ghost.viscous_grad, n, h_, ref_->order(),
            gas_, mu_eff, mu_eff, config_.c_ip);
        for (int var = 0; var < 4; ++var) fhat[var] -= fv[var];
      }
      const double s = half_h_ * weights_[k];
      for (int var = 0; var < 4; ++var) {
        resid_[ub + var * nn_ + node] -= s * fhat[var];
      }
    }
  }
}

void FlowSolver::compute_residual(const dg::DGField& u,
                                  dg::DGField& dudt) const {
  const double* uv = u.values.data();
  sensor_pass(uv);
  if (viscous_) gradient_pass(uv);
  std::fill(resid_.begin(), resid_.end(), 0.0);
  flux_pass(uv);
  volume_pass();
  face_pass(uv);
  boundary_pass(uv);

  double norm2 = 0.0;
  for (const double r : resid_) norm2 += r * r;
  last_resnorm_ = std::sqrt(norm2);

  const int ne = mesh_->n_elements();
  for (int e = 0; e < ne; ++e) {
    for (int var = 0; var < 4; ++var) {
      const size_t base = (static_cast<size_t>(e) * 4 + var) * nn_;
      for (int node = 0; node < nn_; ++node) {
        dudt.values[base + node] = resid_[base + node] * inv_mass_[node];
      }
    }
  }
}

double FlowSolver::stable_dt(const dg::DGField& u) const {
  sensor_pass(u.values.data());
  const int ne = mesh_->n_elements();
  const double np2 = static_cast<double>(np_) * np_;
  double dt = std::numeric_limits<double>::infinity();
  for (int e = 0; e < ne; ++e) {
    const double mu_eff = gas_.mu + mu_av_[e];
    const size_t base = static_cast<size_t>(e) * 4 * nn_;
    for (int node = 0; node < nn_; ++node) {
      const ConservedState w{u.values[base + node],
                             u.values[base + nn_ + node],
                             u.values[base + 2 * nn_ + node],
                             u.values[base + 3 * nn_ + node]};
      const double c = physics::sound_speed(w, gas_);
      const double speed =
          std::sqrt(w.mx * w.mx + w.my * w.my) / w.rho + c;
      if (speed > 0.0) dt = std::min(dt, h_ / (np2 * speed));
      if (mu_eff > 0.0) {
        dt = std::min(dt, h_ * h_ * w.rho / (np2 * np2 * mu_eff));
      }
    }
  }
  return config_.cfl * dt;
}

RunResult FlowSolver::run_to_steady(const dg::DGField& initial) const {
  const auto t_start = std::chrono::steady_clock::now();
  RunResult result;
  result.final_field = initial;

  dg::DGField& u = result.final_field;
  dg::DGField k1(*mesh_, ref_->order(), 4);
  dg::DGField k(*mesh_, ref_->order(), 4);
  dg::DGField stage(*mesh_, ref_->order(), 4);
  const size_t nv = u.values.size();

  // cache the probe interpolation stencil
  const auto loc = mesh::locate_point(*mesh_, config_.probe_x, config_.probe_y);
  std::vector<double> bx(np_), by(np_);
  ref_->lagrange_basis_at(loc.xi, bx);
  ref_->lagrange_basis_at(loc.eta, by);
  auto probe_uy = [&](const dg::DGField& f) {
    double acc = 0.0;
    for (int b = 0; b < np_; ++b) {
      double row = 0.0;
      for (int a = 0; a < np_; ++a) {
        const int node = b * np_ + a;
        row += bx[a] * f.data(loc.element, 2)[node] /
               f.data(loc.element, 0)[node];
      }
      acc += by[b] * row;
    }
    return acc;
  };

  std::deque<double> window;
  double norm_ref = 0.0;
  double t = 0.0;
  long step = 0;
  result.history.reserve(
      static_cast<size_t>(std::min<long>(config_.max_steps, 1 << 20)));

  while (step < config_.max_steps) {
    try {
      compute_residual(u, k1);
    } catch (const physics::StateError& err) {
      result.status = RunStatus::Aborted;
      std::ostringstream os;
      os << "step " << step << ": " << err.what();
      result.abort_reason = os.str();
      break;
    }
    const double resnorm = last_resnorm_;
    const double pr = probe_uy(u);
    result.history.push_back({t, pr, resnorm});
    result.final_probe = pr;

    if (step == config_.norm_step) norm_ref = resnorm > 0.0 ? resnorm : 1.0;
    window.push_back(pr);
    if (static_cast<int>(window.size()) > config_.probe_window + 1) {
      window.pop_front();
    }
    if (step > config_.norm_step &&
        static_cast<int>(window.size()) == config_.probe_window + 1) {
      const auto [lo, hi] = std::minmax_element(window.begin(), window.end());
      const double drift = *hi - *lo;
      if (resnorm / norm_ref <= config_.steady_tol &&
          drift <= config_.probe_tol * bc_.u_in) {
        result.converged = true;
        result.status = RunStatus::Converged;
        break;
      }
    }

    const double dt = stable_dt(u);
    if (!std::isfinite(dt) || dt <= 0.0) {
      result.status = RunStatus::Aborted;
      result.abort_reason = "non-finite time step at step " +
                            std::to_string(step);
      break;
    }

    try {
      for (size_t i = 0; i < nv; ++i) {
        stage.values[i] = u.values[i] + dt * k1.values[i];
      }
      compute_residual(stage, k);
      for (size_t i = 0; i < nv; ++i) {
        stage.values[i] = 0.75 * u.values[i] +
                          0.25 * (stage.values[i] + dt * k.values[i]);
      }
      compute_residual(stage, k);
      for (size_t i = 0; i < nv; ++i) {
        u.values[i] =
            (u.values[i] + 2.0 * (stage.values[i] + dt * k.values[i])) / 3.0;
      }
    } catch (const physics::StateError& err) {
      result.status = RunStatus::Aborted;
      std::ostringstream os;
      os << "step " << step << " (stage): " << err.what();
      result.abort_reason = os.str();
      break;
    }
    t += dt;
    ++step;
  }

  result.steps = step;
  result.time = t;
  result.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start)
          .count();
  return result;
}

}  // namespace nsrom::solver
