#include "nsrom/physics.hpp"

#include <cmath>
#include <sstream>

namespace nsrom::physics {

namespace {

void check_admissible(const ConservedState& w, double p, const char* where) {
  if (!(w.rho > 0.0) || !(p > 0.0) || !std::isfinite(p)) {
    std::ostringstream os;
    os << "inadmissible state in " << where << ": rho = " << w.rho
       << ", p = " << p;
    throw StateError(os.str());
  }
}

}  // namespace

double pressure(const ConservedState& w, const GasModel& gas) {
  return (gas.gamma - 1.0) *
         (w.E - 0.5 * (w.mx * w.mx + w.my * w.my) / w.rho);
}

double sound_speed(const ConservedState& w, const GasModel& gas) {
  return std::sqrt(gas.gamma * pressure(w, gas) / w.rho);
}

ConservedState conserved_from_primitive(double rho, double u1, double u2,
                                        double p, const GasModel& gas) {
  ConservedState w;
  w.rho = rho;
  w.mx = rho * u1;
  w.my = rho * u2;
  w.E = p / (gas.gamma - 1.0) + 0.5 * rho * (u1 * u1 + u2 * u2);
  return w;
}

TransformedState transformed_from_conserved(const ConservedState& w,
                                            const GasModel& gas) {
  return {1.0 / w.rho, w.mx / w.rho, w.my / w.rho, pressure(w, gas)};
}

FluxTensor convective_flux(const ConservedState& w, const GasModel& gas) {
  const double p = pressure(w, gas);
  const double u = w.mx / w.rho;
  const double v = w.my / w.rho;
  FluxTensor f;
  f[0] = {w.mx, w.my};
  f[1] = {w.mx * u + p, w.mx * v};
  f[2] = {w.my * u, w.my * v + p};
  f[3] = {(w.E + p) * u, (w.E + p) * v};
  return f;
}

FluxTensor viscous_flux(const ConservedState& w, const GradTensor& g,
                        const GasModel& gas, double mu_eff) {
  const double inv_rho = 1.0 / w.rho;
  const double u = w.mx * inv_rho;
  const double v = w.my * inv_rho;

  // chain-rule recovery of velocity gradients
  const double dudx = (g[1][0] - u * g[0][0]) * inv_rho;
  const double dudy = (g[1][1] - u * g[0][1]) * inv_rho;
  const double dvdx = (g[2][0] - v * g[0][0]) * inv_rho;
  const double dvdy = (g[2][1] - v * g[0][1]) * inv_rho;
  const double divu = dudx + dvdy;

  const double p = pressure(w, gas);
  const double q2 = u * u + v * v;
  const double g1 = gas.gamma - 1.0;
  const double dpdx = g1 * (g[3][0] - u * g[1][0] - v * g[2][0] +
                            0.5 * q2 * g[0][0]);
  const double dpdy = g1 * (g[3][1] - u * g[1][1] - v * g[2][1] +
                            0.5 * q2 * g[0][1]);
  const double r_inv = 1.0 / (w.rho * gas.gas_constant);
  const double dTdx = (dpdx - p * inv_rho * g[0][0]) * r_inv;
  const double dTdy = (dpdy - p * inv_rho * g[0][1]) * r_inv;

  const double txx = 2.0 * mu_eff * (dudx - divu / 3.0);
  const double tyy = 2.0 * mu_eff * (dvdy - divu / 3.0);
  const double txy = mu_eff * (dudy + dvdx);
  const double lam = gas.thermal_conductivity(mu_eff);

  FluxTensor f;
  f[0] = {0.0, 0.0};
  f[1] = {txx, txy};
  f[2] = {txy, tyy};
  f[3] = {txx * u + txy * v - lam * dTdx, txy * u + tyy * v - lam * dTdy};
  return f;
}

std::array<double, 4> roe_flux(const ConservedState& wl,
                               const ConservedState& wr,
                               const std::array<double, 2>& n,
                               const GasModel& gas, const RoeOptions& opts) {
  const double pl = pressure(wl, gas);
  const double pr = pressure(wr, gas);
  check_admissible(wl, pl, "roe_flux (left)");
  check_admissible(wr, pr, "roe_flux (right)");

  const double ul = wl.mx / wl.rho, vl = wl.my / wl.rho;
  const double ur = wr.mx / wr.rho, vr = wr.my / wr.rho;
  const double hl = (wl.E + pl) / wl.rho;
  const double hr = (wr.E + pr) / wr.rho;

  // sqrt-rho weighted Roe averages
  const double sl = std::sqrt(wl.rho);
  const double sr = std::sqrt(wr.rho);
  const double inv = 1.0 / (sl + sr);
  const double u = (sl * ul + sr * ur) * inv;
  const double v = (sl * vl + sr * vr) * inv;
  const double hh = (sl * hl + sr * hr) * inv;
  const double q2 = u * u + v * v;
  const double c2 = (gas.gamma - 1.0) * (hh - 0.5 * q2);
  if (!(c2 > 0.0)) {
    throw StateError("roe_flux: non-positive Roe-average sound speed");
  }
  const double c = std::sqrt(c2);
  const double un = u * n[0] + v * n[1];
  const double rho_roe = sl * sr;

  // primitive jumps split into normal/tangential velocity parts
  const double drho = wr.rho - wl.rho;
  const double dp = pr - pl;
  const double dvn = (ur - ul) * n[0] + (vr - vl) * n[1];
  const double dvt = -(ur - ul) * n[1] + (vr - vl) * n[0];

  double lam1 = std::abs(un - c);
  const double lam2 = std::abs(un);
  double lam4 = std::abs(un + c);
  if (opts.entropy_fix) {
    const double delta = opts.entropy_delta * c;
    if (lam1 < delta) lam1 = 0.5 * (lam1 * lam1 / delta + delta);
    if (lam4 < delta) lam4 = 0.5 * (lam4 * lam4 / delta + delta);
  }

  const double a1 = (dp - rho_roe * c * dvn) / (2.0 * c2);
  const double a2 = drho - dp / c2;
  const double a3 = rho_roe * dvt;
  const double a4 = (dp + rho_roe * c * dvn) / (2.0 * c2);

  // right eigenvectors of the Roe matrix
  const double r1[4] = {1.0, u - c * n[0], v - c * n[1], hh - c * un};
  const double r2[4] = {1.0, u, v, 0.5 * q2};
  const double r3[4] = {0.0, -n[1], n[0], -u * n[1] + v * n[0]};
  const double r4[4] = {1.0, u + c * n[0], v + c * n[1], hh + c * un};

  const double unl = ul * n[0] + vl * n[1];
  const double unr = ur * n[0] + vr * n[1];
  const double fl[4] = {wl.rho * unl, wl.mx * unl + pl * n[0],
                        wl.my * unl + pl * n[1], (wl.E + pl) * unl};
  const double fr[4] = {wr.rho * unr, wr.mx * unr + pr * n[0],
                        wr.my * unr + pr * n[1], (wr.E + pr) * unr};

  std::array<double, 4> flux;
  for (int k = 0; k < 4; ++k) {
    const double diss = a1 * lam1 * r1[k] + a2 * lam2 * r2[k] +
                        a3 * lam2 * r3[k] + a4 * lam4 * r4[k];
    flux[k] = 0.5 * (fl[k] + fr[k]) - 0.5 * diss;
  }
  return flux;
}

std::array<double, 4> interior_penalty_viscous_flux(
    const ConservedState& wl, const ConservedState& wr, const GradTensor& gl,
    const GradTensor& gr, const std::array<double, 2>& n, double h, int order,
    const GasModel& gas, double mu_eff_l, double mu_eff_r, double c_ip) {
  const double mu_max = std::max(mu_eff_l, mu_eff_r);
  const double np = order + 1.0;
  const double tau = c_ip * np * np * mu_max / h;

  const FluxTensor fvl = viscous_flux(wl, gl, gas, mu_eff_l);
  const FluxTensor fvr = viscous_flux(wr, gr, gas, mu_eff_r);

  const double jump[4] = {wl.rho - wr.rho, wl.mx - wr.mx, wl.my - wr.my,
                          wl.E - wr.E};
  std::array<double, 4> flux;
  for (int k = 0; k < 4; ++k) {
    const double avg = 0.5 * ((fvl[k][0] + fvr[k][0]) * n[0] +
                              (fvl[k][1] + fvr[k][1]) * n[1]);
    flux[k] = avg - tau * jump[k];
  }
  return flux;
}

double parabolic_inlet_velocity(double y, double u_in, double half_width) {
  const double s = y / half_width;
  return u_in * std::max(0.0, 1.0 - s * s);
}

namespace {

// Mirror the normal component of the temperature gradient so the averaged
// heat flux through the wall vanishes (adiabatic), then rebuild the
// conserved-variable gradient at the no-slip ghost state.
GradTensor wall_viscous_gradient(const ConservedState& w, const GradTensor& g,
                                 const std::array<double, 2>& n,
                                 const GasModel& gas) {
  const double inv_rho = 1.0 / w.rho;
  const double u = w.mx * inv_rho;
  const double v = w.my * inv_rho;
  const double p = pressure(w, gas);
  const double q2 = u * u + v * v;
  const double g1 = gas.gamma - 1.0;

  const double dudx = (g[1][0] - u * g[0][0]) * inv_rho;
  const double dudy = (g[1][1] - u * g[0][1]) * inv_rho;
  const double dvdx = (g[2][0] - v * g[0][0]) * inv_rho;
  const double dvdy = (g[2][1] - v * g[0][1]) * inv_rho;
  const double dpdx =
      g1 * (g[3][0] - u * g[1][0] - v * g[2][0] + 0.5 * q2 * g[0][0]);
  const double dpdy =
      g1 * (g[3][1] - u * g[1][1] - v * g[2][1] + 0.5 * q2 * g[0][1]);
  const double r_inv = 1.0 / (w.rho * gas.gas_constant);
  double dT[2] = {(dpdx - p * inv_rho * g[0][0]) * r_inv,
                  (dpdy - p * inv_rho * g[0][1]) * r_inv};
  const double dTn = dT[0] * n[0] + dT[1] * n[1];
  dT[0] -= 2.0 * dTn * n[0];
  dT[1] -= 2.0 * dTn * n[1];

  // ghost state: same rho and T (hence same p), u = 0
  const double T = p * r_inv * inv_rho * w.rho;  // p / (rho R)
  GradTensor out;
  out[0] = {g[0][0], g[0][1]};
  out[1] = {w.rho * dudx, w.rho * dudy};
  out[2] = {w.rho * dvdx, w.rho * dvdy};
  const double dpgx = gas.gas_constant * (T * g[0][0] + w.rho * dT[0]);
  const double dpgy = gas.gas_constant * (T * g[0][1] + w.rho * dT[1]);
  out[3] = {dpgx / g1, dpgy / g1};
  return out;
}

}  // namespace

ConservedState boundary_viscous_state(const ConservedState& w,
                                      mesh::BoundaryTag tag,
                                      const std::array<double, 2>& n,
                                      double /*x*/, double y,
                                      const BoundaryParams& bc,
                                      const GasModel& gas) {
  if (bc.freestream_exact) return bc.freestream;
  const double p = pressure(w, gas);
  check_admissible(w, p, "boundary_viscous_state");
  switch (tag) {
    case mesh::BoundaryTag::Inlet: {
      const double up = parabolic_inlet_velocity(y, bc.u_in,
                                                 bc.inlet_half_width);
      return conserved_from_primitive(bc.rho_in, up, 0.0, p, gas);
    }
    case mesh::BoundaryTag::Outlet: {
      const double un = (w.mx * n[0] + w.my * n[1]) / w.rho;
      if (un >= sound_speed(w, gas)) return w;  // supersonic outflow
      return conserved_from_primitive(w.rho, w.mx / w.rho, w.my / w.rho,
                                      bc.p_out, gas);
    }
    default:  // wall: no-slip, temperature unchanged
      return conserved_from_primitive(w.rho, 0.0, 0.0, p, gas);
  }
}

GhostState boundary_state(const ConservedState& w, const GradTensor& g,
                          mesh::BoundaryTag tag,
                          const std::array<double, 2>& n, double x, double y,
                          const BoundaryParams& bc, const GasModel& gas) {
  GhostState ghost;
  if (bc.freestream_exact) {
    ghost.convective = bc.freestream;
    ghost.viscous = bc.freestream;
    ghost.viscous_grad = g;
    return ghost;
  }
  const double p = pressure(w, gas);
  check_admissible(w, p, "boundary_state");
  ghost.viscous = boundary_viscous_state(w, tag, n, x, y, bc, gas);
  switch (tag) {
    case mesh::BoundaryTag::Inlet:
      ghost.convective = ghost.viscous;
      ghost.viscous_grad = g;
      break;
    case mesh::BoundaryTag::Outlet:
      ghost.convective = ghost.viscous;
      ghost.viscous_grad = g;
      break;
    case mesh::BoundaryTag::Wall: {
      const double un = (w.mx * n[0] + w.my * n[1]) / w.rho;
      const double u = w.mx / w.rho - 2.0 * un * n[0];
      const double v = w.my / w.rho - 2.0 * un * n[1];
      ghost.convective = conserved_from_primitive(w.rho, u, v, p, gas);
      ghost.viscous_grad = wall_viscous_gradient(w, g, n, gas);
      break;
    }
    default:
      throw std::invalid_argument("unknown boundary tag");
  }
  return ghost;
}

}  // namespace nsrom::physics
