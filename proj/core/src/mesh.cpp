#include "nsrom/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace nsrom::mesh {

using json = nlohmann::json;

const char* to_string(BoundaryTag tag) {
  switch (tag) {
    case BoundaryTag::Inlet: return "inlet";
    case BoundaryTag::Outlet: return "outlet";
    default: return "wall";
  }
}

BoundaryTag boundary_tag_from_string(const std::string& s) {
  if (s == "inlet") return BoundaryTag::Inlet;
  if (s == "outlet") return BoundaryTag::Outlet;
  if (s == "wall") return BoundaryTag::Wall;
  throw std::runtime_error("unknown boundary tag '" + s + "'");
}

namespace {

// Number of h-sized cells in `extent`; rejects incommensurate extents.
int cell_count(double extent, double h, const char* what) {
  const double ratio = extent / h;
  const int k = static_cast<int>(std::lround(ratio));
  if (k < 1 || std::abs(ratio - k) > 1e-9 * std::max(1.0, ratio)) {
    std::ostringstream os;
    os << "geometry extent " << what << " = " << extent
       << " is not an integer multiple of the element size h = " << h;
    throw std::invalid_argument(os.str());
  }
  return k;
}

struct LatticeBuilder {
  double h;
  double x0, y0;
  int nvx, nvy;  // vertex lattice dimensions
  std::vector<std::int32_t> vertex_id;
  QuadMesh* out;

  LatticeBuilder(double h_, double x0_, double y0_, int ncx, int ncy,
                 QuadMesh* mesh)
      : h(h_), x0(x0_), y0(y0_), nvx(ncx + 1), nvy(ncy + 1),
        vertex_id(static_cast<size_t>(nvx) * nvy, -1), out(mesh) {}

  std::int32_t vertex(int vi, int vj) {
    auto& id = vertex_id[static_cast<size_t>(vj) * nvx + vi];
    if (id < 0) {
      id = static_cast<std::int32_t>(out->vertices.size());
      out->vertices.push_back({x0 + vi * h, y0 + vj * h});
    }
    return id;
  }

  std::int32_t add_element(int ci, int rj) {
    out->elements.push_back({vertex(ci, rj), vertex(ci + 1, rj),
                             vertex(ci + 1, rj + 1), vertex(ci, rj + 1)});
    return static_cast<std::int32_t>(out->elements.size()) - 1;
  }
};

}  // namespace

void QuadMesh::rebuild_lookup() {
  double xmin = 1e300, ymin = 1e300, xmax = -1e300, ymax = -1e300;
  for (const auto& v : vertices) {
    xmin = std::min(xmin, v[0]);
    ymin = std::min(ymin, v[1]);
    xmax = std::max(xmax, v[0]);
    ymax = std::max(ymax, v[1]);
  }
  grid_x0 = xmin;
  grid_y0 = ymin;
  grid_nx = static_cast<int>(std::lround((xmax - xmin) / h));
  grid_ny = static_cast<int>(std::lround((ymax - ymin) / h));
  cell_to_elem.assign(static_cast<size_t>(grid_nx) * grid_ny, -1);
  for (int e = 0; e < n_elements(); ++e) {
    const auto o = element_origin(e);
    const int ci = static_cast<int>(std::lround((o[0] - grid_x0) / h));
    const int rj = static_cast<int>(std::lround((o[1] - grid_y0) / h));
    cell_to_elem[static_cast<size_t>(rj) * grid_nx + ci] = e;
  }
}

QuadMesh build_channel_mesh(const ChannelGeometry& geometry, int n_y) {
  if (n_y < 2) {
    throw std::invalid_argument("n_y must be at least 2");
  }
  if (std::abs(2.0 * geometry.inlet_half_width - 2.5) > 1e-12) {
    throw std::invalid_argument(
        "inlet width 2*inlet_half_width must equal 2.5");
  }
  if (geometry.inlet_length <= 0 || geometry.outlet_length <= 0 ||
      geometry.expansion_half_width <= geometry.inlet_half_width) {
    throw std::invalid_argument("channel extents are not positive/nested");
  }

  const double h = 2.5 / n_y;
  const int cols_in = cell_count(geometry.inlet_length, h, "inlet_length");
  const int cols_out = cell_count(geometry.outlet_length, h, "outlet_length");
  const int rows_exp =
      cell_count(2.0 * geometry.expansion_half_width, h, "expansion width");
  const int rows_margin = cell_count(
      geometry.expansion_half_width - geometry.inlet_half_width, h,
      "expansion step height");
  if (rows_margin * 2 + n_y != rows_exp) {
    throw std::invalid_argument("channel is not symmetric about y = 0");
  }

  QuadMesh mesh;
  mesh.h = h;
  const int n_cols = cols_in + cols_out;
  // y lattice anchored so that mirrored rows produce bitwise-mirrored
  // coordinates: y_j = (j - rows/2) * h
  const double half_rows = rows_exp / 2.0;
  const int nvx = n_cols + 1;
  std::vector<std::int32_t> vertex_id(
      static_cast<size_t>(nvx) * (rows_exp + 1), -1);
  auto make_vertex = [&](int vi, int vj) {
    auto& id = vertex_id[static_cast<size_t>(vj) * nvx + vi];
    if (id < 0) {
      id = static_cast<std::int32_t>(mesh.vertices.size());
      mesh.vertices.push_back({vi * h, (vj - half_rows) * h});
    }
    return id;
  };

  auto in_domain = [&](int ci, int rj) {
    if (ci < 0 || ci >= n_cols || rj < 0 || rj >= rows_exp) return false;
    if (ci >= cols_in) return true;
    return rj >= rows_margin && rj < rows_margin + n_y;
  };

  std::vector<std::int32_t> cell_elem(static_cast<size_t>(n_cols) * rows_exp,
                                      -1);
  for (int ci = 0; ci < n_cols; ++ci) {
    for (int rj = 0; rj < rows_exp; ++rj) {
      if (!in_domain(ci, rj)) continue;
      mesh.elements.push_back({make_vertex(ci, rj), make_vertex(ci + 1, rj),
                               make_vertex(ci + 1, rj + 1),
                               make_vertex(ci, rj + 1)});
      cell_elem[static_cast<size_t>(ci) * rows_exp + rj] =
          static_cast<std::int32_t>(mesh.elements.size()) - 1;
    }
  }

  const double x_out = geometry.total_length();
  for (int ci = 0; ci < n_cols; ++ci) {
    for (int rj = 0; rj < rows_exp; ++rj) {
      const std::int32_t e = cell_elem[static_cast<size_t>(ci) * rows_exp + rj];
      if (e < 0) continue;
      // right neighbor: owner is always this element (smaller index)
      if (in_domain(ci + 1, rj)) {
        const std::int32_t nb =
            cell_elem[static_cast<size_t>(ci + 1) * rows_exp + rj];
        mesh.interior_faces.push_back({e, 1, nb, 3});
      } else {
        const double xf = (ci + 1) * h;
        const BoundaryTag tag = std::abs(xf - x_out) < 1e-12 * x_out
                                    ? BoundaryTag::Outlet
                                    : BoundaryTag::Wall;
        mesh.boundary_faces.push_back({e, 1, tag});
      }
      // top neighbor
      if (in_domain(ci, rj + 1)) {
        const std::int32_t nb =
            cell_elem[static_cast<size_t>(ci) * rows_exp + rj + 1];
        mesh.interior_faces.push_back({e, 2, nb, 0});
      } else {
        mesh.boundary_faces.push_back({e, 2, BoundaryTag::Wall});
      }
      // left/bottom sides only produce boundary faces (interior ones were
      // already created from the neighbor that owns them)
      if (!in_domain(ci - 1, rj)) {
        const BoundaryTag tag =
            ci == 0 ? BoundaryTag::Inlet : BoundaryTag::Wall;
        mesh.boundary_faces.push_back({e, 3, tag});
      }
      if (!in_domain(ci, rj - 1)) {
        mesh.boundary_faces.push_back({e, 0, BoundaryTag::Wall});
      }
    }
  }

  mesh.rebuild_lookup();
  return mesh;
}

QuadMesh build_periodic_box(double extent, int n) {
  if (n < 2 || extent <= 0) {
    throw std::invalid_argument("periodic box needs n >= 2 and extent > 0");
  }
  QuadMesh mesh;
  mesh.h = extent / n;
  LatticeBuilder lat(mesh.h, 0.0, 0.0, n, n, &mesh);

  std::vector<std::int32_t> cell_elem(static_cast<size_t>(n) * n, -1);
  for (int ci = 0; ci < n; ++ci) {
    for (int rj = 0; rj < n; ++rj) {
      cell_elem[static_cast<size_t>(ci) * n + rj] = lat.add_element(ci, rj);
    }
  }
  auto elem = [&](int ci, int rj) {
    return cell_elem[static_cast<size_t>(ci) * n + rj];
  };
  for (int ci = 0; ci < n; ++ci) {
    for (int rj = 0; rj < n; ++rj) {
      const std::int32_t e = elem(ci, rj);
      if (ci + 1 < n) {
        mesh.interior_faces.push_back({e, 1, elem(ci + 1, rj), 3});
      } else {
        // wrap: pair with the first column; owner is the lower index
        mesh.interior_faces.push_back({elem(0, rj), 3, e, 1});
      }
      if (rj + 1 < n) {
        mesh.interior_faces.push_back({e, 2, elem(ci, rj + 1), 0});
      } else {
        mesh.interior_faces.push_back({elem(ci, 0), 0, e, 2});
      }
    }
  }
  mesh.rebuild_lookup();
  return mesh;
}

LocateResult locate_point(const QuadMesh& mesh, double x, double y) {
  const double eps = 1e-12 * (1.0 + std::abs(x) + std::abs(y));
  const double fx = (x - mesh.grid_x0) / mesh.h;
  const double fy = (y - mesh.grid_y0) / mesh.h;
  // If the point sits on a lattice line, both adjacent cells are candidates.
  auto candidates = [](double f, int cand[2]) {
    const double r = std::round(f);
    if (std::abs(f - r) < 1e-9 * (1.0 + std::abs(f))) {
      cand[0] = static_cast<int>(r) - 1;
      cand[1] = static_cast<int>(r);
    } else {
      cand[0] = cand[1] = static_cast<int>(std::floor(f));
    }
  };
  int cand_x[2], cand_y[2];
  candidates(fx, cand_x);
  candidates(fy, cand_y);

  int best = -1;
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      const int ci = cand_x[a];
      const int rj = cand_y[b];
      if (ci < 0 || ci >= mesh.grid_nx || rj < 0 || rj >= mesh.grid_ny) {
        continue;
      }
      const std::int32_t e =
          mesh.cell_to_elem[static_cast<size_t>(rj) * mesh.grid_nx + ci];
      if (e < 0) continue;
      const auto o = mesh.element_origin(e);
      if (x < o[0] - eps || x > o[0] + mesh.h + eps || y < o[1] - eps ||
          y > o[1] + mesh.h + eps) {
        continue;
      }
      if (best < 0 || e < best) best = e;
    }
  }
  if (best < 0) {
    std::ostringstream os;
    os << "point (" << x << ", " << y << ") is outside the mesh domain";
    throw std::domain_error(os.str());
  }
  const auto o = mesh.element_origin(best);
  const double xi = std::clamp(2.0 * (x - o[0]) / mesh.h - 1.0, -1.0, 1.0);
  const double eta = std::clamp(2.0 * (y - o[1]) / mesh.h - 1.0, -1.0, 1.0);
  return {best, xi, eta};
}

namespace {

struct Fnv1a {
  std::uint64_t state = 1469598103934665603ull;
  void feed(const void* data, size_t n) {
    const auto* p = static_cast<const unsigned char*>(data);
    for (size_t i = 0; i < n; ++i) {
      state ^= p[i];
      state *= 1099511628211ull;
    }
  }
  void feed_double(double v) { feed(&v, sizeof(v)); }
  void feed_i32(std::int32_t v) { feed(&v, sizeof(v)); }
};

}  // namespace

std::string mesh_fingerprint(const QuadMesh& mesh) {
  Fnv1a hash;
  hash.feed_double(mesh.h);
  hash.feed_i32(mesh.n_elements());
  for (const auto& v : mesh.vertices) {
    hash.feed_double(v[0]);
    hash.feed_double(v[1]);
  }
  for (const auto& e : mesh.elements) {
    for (int k = 0; k < 4; ++k) hash.feed_i32(e[k]);
  }
  for (const auto& f : mesh.interior_faces) {
    hash.feed_i32(f.elem_left);
    hash.feed_i32(f.face_left);
    hash.feed_i32(f.elem_right);
    hash.feed_i32(f.face_right);
  }
  for (const auto& f : mesh.boundary_faces) {
    hash.feed_i32(f.elem);
    hash.feed_i32(f.face);
    hash.feed_i32(static_cast<std::int32_t>(f.tag));
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(hash.state));
  return std::string(buf);
}

void save_mesh_json(const QuadMesh& mesh, const std::string& path) {
  json j;
  j["h"] = mesh.h;
  auto& verts = j["vertices"] = json::array();
  for (const auto& v : mesh.vertices) verts.push_back({v[0], v[1]});
  auto& elems = j["elements"] = json::array();
  for (const auto& e : mesh.elements) {
    elems.push_back({e[0], e[1], e[2], e[3]});
  }
  auto& ifaces = j["interior_faces"] = json::array();
  for (const auto& f : mesh.interior_faces) {
    ifaces.push_back({f.elem_left, f.face_left, f.elem_right, f.face_right});
  }
  auto& bfaces = j["boundary_faces"] = json::array();
  for (const auto& f : mesh.boundary_faces) {
    bfaces.push_back({f.elem, f.face, to_string(f.tag)});
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << j.dump(1) << "\n";
}

QuadMesh load_mesh_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open mesh file '" + path + "'");
  json j = json::parse(in);
  QuadMesh mesh;
  mesh.h = j.at("h").get<double>();
  for (const auto& v : j.at("vertices")) {
    mesh.vertices.push_back({v.at(0).get<double>(), v.at(1).get<double>()});
  }
  for (const auto& e : j.at("elements")) {
    mesh.elements.push_back({e.at(0).get<std::int32_t>(),
                             e.at(1).get<std::int32_t>(),
                             e.at(2).get<std::int32_t>(),
                             e.at(3).get<std::int32_t>()});
  }
  for (const auto& f : j.at("interior_faces")) {
    mesh.interior_faces.push_back(
        {f.at(0).get<std::int32_t>(), f.at(1).get<std::int32_t>(),
         f.at(2).get<std::int32_t>(), f.at(3).get<std::int32_t>()});
  }
  for (const auto& f : j.at("boundary_faces")) {
    mesh.boundary_faces.push_back(
        {f.at(0).get<std::int32_t>(), f.at(1).get<std::int32_t>(),
         boundary_tag_from_string(f.at(2).get<std::string>())});
  }
  mesh.rebuild_lookup();
  return mesh;
}

}  // namespace nsrom::mesh
