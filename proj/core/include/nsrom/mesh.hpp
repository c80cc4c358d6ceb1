#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace nsrom::mesh {

/// Boundary classification of the expansion channel.
enum class BoundaryTag { Inlet, Outlet, Wall };

const char* to_string(BoundaryTag tag);
BoundaryTag boundary_tag_from_string(const std::string& s);

/// Sudden-expansion channel, symmetric about y = 0. The narrow inlet duct
/// spans x in [0, inlet_length], |y| <= inlet_half_width; the expanded duct
/// spans x in [inlet_length, inlet_length + outlet_length],
/// |y| <= expansion_half_width.
struct ChannelGeometry {
  double inlet_length = 10.0;
  double inlet_half_width = 1.25;
  double outlet_length = 40.0;
  double expansion_half_width = 3.75;

  double total_length() const { return inlet_length + outlet_length; }
  double area() const {
    return 2.0 * (inlet_length * inlet_half_width +
                  outlet_length * expansion_half_width);
  }
};

/// Local face numbering on a quad element, counter-clockwise from the
/// bottom edge: 0 = bottom (y-), 1 = right (x+), 2 = top (y+), 3 = left (x-).
struct InteriorFace {
  std::int32_t elem_left;   // owner (always the lower element index)
  std::int32_t face_left;
  std::int32_t elem_right;
  std::int32_t face_right;
};

struct BoundaryFace {
  std::int32_t elem;
  std::int32_t face;
  BoundaryTag tag;
};

/// Conforming mesh of identical axis-aligned square elements. Element
/// vertices are listed counter-clockwise starting from the bottom-left
/// corner. Elements are ordered lexicographically by (x_min, y_min), so
/// the owner of every interior face is the element to the left of / below
/// the face.
struct QuadMesh {
  double h = 0.0;
  std::vector<std::array<double, 2>> vertices;
  std::vector<std::array<std::int32_t, 4>> elements;
  std::vector<InteriorFace> interior_faces;
  std::vector<BoundaryFace> boundary_faces;

  // lattice lookup for point location
  double grid_x0 = 0.0;
  double grid_y0 = 0.0;
  int grid_nx = 0;
  int grid_ny = 0;
  std::vector<std::int32_t> cell_to_elem;  // -1 where the cell is outside

  int n_elements() const { return static_cast<int>(elements.size()); }

  /// Bottom-left corner of element e.
  std::array<double, 2> element_origin(int e) const {
    return vertices[elements[e][0]];
  }

  /// Sum of element areas (n_elements * h^2).
  double total_area() const { return n_elements() * h * h; }

  void rebuild_lookup();
};

/// Outward unit normal of a local face, seen from the element that owns it.
inline std::array<double, 2> face_normal(int local_face) {
  switch (local_face) {
    case 0: return {0.0, -1.0};
    case 1: return {1.0, 0.0};
    case 2: return {0.0, 1.0};
    default: return {-1.0, 0.0};
  }
}

/// Builds the channel mesh with n_y square elements across the inlet.
/// All geometry extents must be integer multiples of h = 2.5 / n_y;
/// incommensurate extents are rejected.
QuadMesh build_channel_mesh(const ChannelGeometry& geometry, int n_y);

/// Doubly-periodic n x n square box of side `extent`. Every face is an
/// interior face (wrap faces pair opposite sides); used for verification
/// problems that need a boundary-free mesh.
QuadMesh build_periodic_box(double extent, int n);

struct LocateResult {
  int element;
  double xi;   // reference coordinates in [-1, 1]^2
  double eta;
};

/// Finds the element containing (x, y). Points on shared faces resolve to
/// the element with the lower index. Throws std::domain_error for points
/// outside the domain closure.
LocateResult locate_point(const QuadMesh& mesh, double x, double y);

/// FNV-1a hash of the full mesh description, as a 16-digit hex string.
std::string mesh_fingerprint(const QuadMesh& mesh);

void save_mesh_json(const QuadMesh& mesh, const std::string& path);
QuadMesh load_mesh_json(const std::string& path);

}  // namespace nsrom::mesh
