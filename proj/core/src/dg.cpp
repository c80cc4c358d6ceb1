#include "nsrom/dg.hpp"

#include <cmath>
#include <stdexcept>

namespace nsrom::dg {

namespace {

// Legendre P_n and its derivative at x by recurrence.
void legendre(int n, double x, double& pn, double& dpn) {
  double p0 = 1.0, p1 = x;
  double d0 = 0.0, d1 = 1.0;
  if (n == 0) {
    pn = p0;
    dpn = d0;
    return;
  }
  for (int k = 2; k <= n; ++k) {
    const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
    const double d2 = d0 + (2.0 * k - 1.0) * p1;
    p0 = p1;
    p1 = p2;
    d0 = d1;
    d1 = d2;
  }
  pn = p1;
  dpn = d1;
}

// Small dense inverse by Gauss-Jordan with partial pivoting.
std::vector<double> invert(std::vector<double> a, int n) {
  std::vector<double> inv(static_cast<size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) inv[static_cast<size_t>(i) * n + i] = 1.0;
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    for (int r = col + 1; r < n; ++r) {
      if (std::abs(a[static_cast<size_t>(r) * n + col]) >
          std::abs(a[static_cast<size_t>(pivot) * n + col])) {
        pivot = r;
      }
    }
    if (a[static_cast<size_t>(pivot) * n + col] == 0.0) {
      throw std::runtime_error("singular matrix in reference-element setup");
    }
    if (pivot != col) {
      for (int c = 0; c < n; ++c) {
        std::swap(a[static_cast<size_t>(col) * n + c],
                  a[static_cast<size_t>(pivot) * n + c]);
        std::swap(inv[static_cast<size_t>(col) * n + c],
                  inv[static_cast<size_t>(pivot) * n + c]);
      }
    }
    const double d = a[static_cast<size_t>(col) * n + col];
    for (int c = 0; c < n; ++c) {
      a[static_cast<size_t>(col) * n + c] /= d;
      inv[static_cast<size_t>(col) * n + c] /= d;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      const double f = a[static_cast<size_t>(r) * n + col];
      if (f == 0.0) continue;
      for (int c = 0; c < n; ++c) {
        a[static_cast<size_t>(r) * n + c] -=
            f * a[static_cast<size_t>(col) * n + c];
        inv[static_cast<size_t>(r) * n + c] -=
            f * inv[static_cast<size_t>(col) * n + c];
      }
    }
  }
  return inv;
}

}  // namespace

ReferenceElement::ReferenceElement(int order) : order_(order) {
  if (order < 1) throw std::invalid_argument("polynomial order must be >= 1");
  const int np = order + 1;
  nodes_.assign(np, 0.0);
  weights_.assign(np, 0.0);

  // GLL nodes: +-1 and the roots of P'_P, found by Newton iteration with
  // Chebyshev initial guesses; tolerance 1e-15.
  nodes_[0] = -1.0;
  nodes_[np - 1] = 1.0;
  const int p = order;
  for (int i = 1; i <= (np - 1) / 2; ++i) {
    double x = -std::cos(M_PI * i / p);
    for (int it = 0; it < 100; ++it) {
      double pn, dpn;
      legendre(p, x, pn, dpn);
      // P''_P from the Legendre ODE
      const double d2 = (2.0 * x * dpn - p * (p + 1.0) * pn) / (1.0 - x * x);
      const double dx = dpn / d2;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    nodes_[i] = x;
    nodes_[np - 1 - i] = -x;
  }
  if (np % 2 == 1) nodes_[np / 2] = 0.0;

  for (int i = 0; i < np; ++i) {
    double pn, dpn;
    legendre(p, nodes_[i], pn, dpn);
    weights_[i] = 2.0 / (p * (p + 1.0) * pn * pn);
  }
  for (int i = 0; i < np / 2; ++i) {
    weights_[np - 1 - i] = weights_[i];  // enforce exact symmetry
  }

  // barycentric weights and differentiation matrix (negative-sum diagonal
  // makes D * const vanish exactly)
  bary_.assign(np, 1.0);
  for (int j = 0; j < np; ++j) {
    for (int k = 0; k < np; ++k) {
      if (k != j) bary_[j] /= (nodes_[j] - nodes_[k]);
    }
  }
  diff_.assign(static_cast<size_t>(np) * np, 0.0);
  for (int i = 0; i < np; ++i) {
    double rowsum = 0.0;
    for (int j = 0; j < np; ++j) {
      if (i == j) continue;
      const double d = (bary_[j] / bary_[i]) / (nodes_[i] - nodes_[j]);
      diff_[static_cast<size_t>(i) * np + j] = d;
      rowsum += d;
    }
    diff_[static_cast<size_t>(i) * np + i] = -rowsum;
  }

  // normalized-Legendre Vandermonde inverse for the modal transform
  std::vector<double> v(static_cast<size_t>(np) * np);
  for (int i = 0; i < np; ++i) {
    for (int j = 0; j < np; ++j) {
      double pn, dpn;
      legendre(j, nodes_[i], pn, dpn);
      v[static_cast<size_t>(i) * np + j] = pn * std::sqrt(j + 0.5);
    }
  }
  vinv_ = invert(std::move(v), np);

  // face node index lists (0=bottom, 1=right, 2=top, 3=left)
  for (int k = 0; k < np; ++k) {
    face_nodes_[0].push_back(k);
    face_nodes_[1].push_back(k * np + (np - 1));
    face_nodes_[2].push_back((np - 1) * np + k);
    face_nodes_[3].push_back(k * np);
  }
}

void ReferenceElement::lagrange_basis_at(double xi,
                                         std::span<double> out) const {
  const int np = order_ + 1;
  for (int j = 0; j < np; ++j) {
    if (xi == nodes_[j]) {
      for (int k = 0; k < np; ++k) out[k] = (k == j) ? 1.0 : 0.0;
      return;
    }
  }
  double denom = 0.0;
  for (int j = 0; j < np; ++j) {
    out[j] = bary_[j] / (xi - nodes_[j]);
    denom += out[j];
  }
  for (int j = 0; j < np; ++j) out[j] /= denom;
}

const std::vector<int>& ReferenceElement::face_nodes(int local_face) const {
  if (local_face < 0 || local_face > 3) {
    throw std::invalid_argument("local face index must be in 0..3");
  }
  return face_nodes_[local_face];
}

std::vector<double> local_mass_matrix(const ReferenceElement& ref, double h) {
  if (h <= 0) throw std::invalid_argument("element size must be positive");
  const int np = ref.nodes_per_side();
  const double j2 = (h / 2.0) * (h / 2.0);
  std::vector<double> m(static_cast<size_t>(np) * np);
  for (int b = 0; b < np; ++b) {
    for (int a = 0; a < np; ++a) {
      m[static_cast<size_t>(b) * np + a] =
          j2 * ref.weights_1d()[a] * ref.weights_1d()[b];
    }
  }
  return m;
}

void gradient(const ReferenceElement& ref, std::span<const double> values,
              double h, std::span<double> ddx, std::span<double> ddy) {
  const int np = ref.nodes_per_side();
  const double scale = 2.0 / h;
  const double* d = ref.diff_1d().data();
  for (int b = 0; b < np; ++b) {
    for (int a = 0; a < np; ++a) {
      double sx = 0.0, sy = 0.0;
      for (int m = 0; m < np; ++m) {
        sx += d[a * np + m] * values[b * np + m];
        sy += d[b * np + m] * values[m * np + a];
      }
      ddx[b * np + a] = scale * sx;
      ddy[b * np + a] = scale * sy;
    }
  }
}

void trace(const ReferenceElement& ref, std::span<const double> values,
           int local_face, std::span<double> out) {
  const auto& idx = ref.face_nodes(local_face);
  for (size_t k = 0; k < idx.size(); ++k) out[k] = values[idx[k]];
}

std::array<double, 2> node_position(const mesh::QuadMesh& mesh,
                                    const ReferenceElement& ref, int e,
                                    int node) {
  const int np = ref.nodes_per_side();
  const auto o = mesh.element_origin(e);
  const int a = node % np;
  const int b = node / np;
  return {o[0] + 0.5 * (ref.nodes_1d()[a] + 1.0) * mesh.h,
          o[1] + 0.5 * (ref.nodes_1d()[b] + 1.0) * mesh.h};
}

DGField l2_project(const mesh::QuadMesh& mesh, const ReferenceElement& ref,
                   const std::function<double(double, double)>& f) {
  DGField field(mesh, ref.order(), 1);
  const int nn = ref.nodes_per_element();
  for (int e = 0; e < mesh.n_elements(); ++e) {
    double* v = field.data(e, 0);
    for (int n = 0; n < nn; ++n) {
      const auto p = node_position(mesh, ref, e, n);
      v[n] = f(p[0], p[1]);
    }
  }
  return field;
}

double l2_error(const DGField& field, const ReferenceElement& ref, int var,
                const std::function<double(double, double)>& f) {
  const auto& mesh = *field.mesh;
  const auto m = local_mass_matrix(ref, mesh.h);
  const int nn = ref.nodes_per_element();
  double acc = 0.0;
  for (int e = 0; e < mesh.n_elements(); ++e) {
    const double* v = field.data(e, var);
    for (int n = 0; n < nn; ++n) {
      const auto p = node_position(mesh, ref, e, n);
      const double d = v[n] - f(p[0], p[1]);
      acc += m[n] * d * d;
    }
  }
  return std::sqrt(acc);
}

double l2_norm(const DGField& field, const ReferenceElement& ref, int var) {
  return l2_error(field, ref, var, [](double, double) { return 0.0; });
}

}  // namespace nsrom::dg
