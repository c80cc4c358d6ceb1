#pragma once

#include <functional>
#include <span>
#include <vector>

#include "nsrom/mesh.hpp"

namespace nsrom::dg {

/// Nodal tensor-product reference element on [-1,1]^2: Gauss-Lobatto-Legendre
/// collocation nodes, quadrature weights and the 1D differentiation matrix of
/// the Lagrange basis. Local node numbering is n = j*(P+1) + i with i the
/// x-index, so face traces read off contiguous or strided slices.
class ReferenceElement {
 public:
  explicit ReferenceElement(int order);

  int order() const { return order_; }
  int nodes_per_side() const { return order_ + 1; }
  int nodes_per_element() const { return (order_ + 1) * (order_ + 1); }

  const std::vector<double>& nodes_1d() const { return nodes_; }
  const std::vector<double>& weights_1d() const { return weights_; }
  /// Row-major (P+1)x(P+1); diff_1d[i*(P+1)+j] = dL_j/dx at node i.
  const std::vector<double>& diff_1d() const { return diff_; }
  /// Row-major inverse of the normalized-Legendre Vandermonde; maps nodal
  /// values to modal coefficients (used by the smoothness sensor).
  const std::vector<double>& nodal_to_modal_1d() const { return vinv_; }

  /// Lagrange basis values at a reference coordinate. Exact unit vector when
  /// xi coincides with a node, so corner probes match nodal storage bitwise.
  void lagrange_basis_at(double xi, std::span<double> out) const;

  /// Node indices of a local face, ordered by increasing x (bottom/top
  /// faces) or increasing y (left/right faces).
  const std::vector<int>& face_nodes(int local_face) const;

 private:
  int order_;
  std::vector<double> nodes_, weights_, diff_, vinv_, bary_;
  std::vector<int> face_nodes_[4];
};

/// Nodal DG field over a mesh; values stored element-major, then variable,
/// then local node: values[(e*n_vars + var)*nn + node].
struct DGField {
  const mesh::QuadMesh* mesh = nullptr;
  int order = 0;
  int n_vars = 0;
  std::vector<double> values;

  DGField() = default;
  DGField(const mesh::QuadMesh& m, int p, int vars)
      : mesh(&m), order(p), n_vars(vars),
        values(static_cast<size_t>(m.n_elements()) * vars * (p + 1) * (p + 1),
               0.0) {}

  int nodes_per_element() const { return (order + 1) * (order + 1); }
  size_t offset(int e, int var) const {
    return (static_cast<size_t>(e) * n_vars + var) * nodes_per_element();
  }
  double* data(int e, int var) { return values.data() + offset(e, var); }
  const double* data(int e, int var) const {
    return values.data() + offset(e, var);
  }
};

/// Diagonal local mass matrix entries M_ii = (h/2)^2 w_a w_b, size (P+1)^2.
std::vector<double> local_mass_matrix(const ReferenceElement& ref, double h);

/// Nodal derivatives of one element's values on a square of side h; exact
/// for polynomials of degree <= P.
void gradient(const ReferenceElement& ref, std::span<const double> values,
              double h, std::span<double> ddx, std::span<double> ddy);

/// Face trace by index selection (GLL nodes include the endpoints).
void trace(const ReferenceElement& ref, std::span<const double> values,
           int local_face, std::span<double> out);

/// Physical coordinates of a local node in element e.
std::array<double, 2> node_position(const mesh::QuadMesh& mesh,
                                    const ReferenceElement& ref, int e,
                                    int node);

/// Collocation projection (interpolation at GLL nodes) of a scalar function.
DGField l2_project(const mesh::QuadMesh& mesh, const ReferenceElement& ref,
                   const std::function<double(double, double)>& f);

/// Global L2 norm of (field_var - f) computed with GLL quadrature.
double l2_error(const DGField& field, const ReferenceElement& ref, int var,
                const std::function<double(double, double)>& f);

double l2_norm(const DGField& field, const ReferenceElement& ref, int var);

}  // namespace nsrom::dg
