#include "amcheck/topology.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <random>
#include <stdexcept>

namespace amcheck {

namespace {

std::complex<double> overlap(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  return (a.adjoint() * b)(0, 0);
}

// Plaquette flux with the reversed-cycle link convention: on the
// outward-oriented mesh this pairs helicity h with Chern number -2h,
// matching the holonomy convention exp(-i C Omega / 2) for loops.
// Locked by the regression suite.
double face_flux_rank1(const std::vector<Eigen::MatrixXcd>& at_vertex,
                       const std::array<int, 3>& f) {
  const std::complex<double> prod = overlap(at_vertex[f[0]], at_vertex[f[1]]) *
                                    overlap(at_vertex[f[1]], at_vertex[f[2]]) *
                                    overlap(at_vertex[f[2]], at_vertex[f[0]]);
  return -std::arg(prod);
}

std::vector<Eigen::MatrixXcd> frames_at_vertices(const FrameAtlas& frame,
                                                 const SphericalMesh& mesh) {
  std::vector<Eigen::MatrixXcd> out;
  out.reserve(mesh.vertices.size());
  for (const auto& v : mesh.vertices) out.push_back(frame.at(v));
  return out;
}

ChernResult accumulate_flux(const std::vector<double>& fluxes, int level) {
  ChernResult r;
  r.mesh_level = level;
  for (const double f : fluxes) {
    r.total_flux += f;
    r.max_plaquette_flux = std::max(r.max_plaquette_flux, std::abs(f));
  }
  if (r.max_plaquette_flux >= std::numbers::pi)
    throw std::runtime_error("chern_number: plaquette flux >= pi, refine the mesh");
  const double c = r.total_flux / (2.0 * std::numbers::pi);
  r.chern = static_cast<int>(std::lround(c));
  if (std::abs(c - r.chern) >= 0.01)
    throw std::runtime_error("chern_number: total flux too far from an integer");
  return r;
}

}  // namespace

ChernResult chern_number(const FrameAtlas& frame, const SphericalMesh& mesh) {
  if (frame.rank() != 1)
    throw std::invalid_argument("chern_number: rank-1 frames only");
  const auto at_vertex = frames_at_vertices(frame, mesh);
  std::vector<double> fluxes;
  fluxes.reserve(mesh.faces.size());
  for (const auto& f : mesh.faces)
    fluxes.push_back(face_flux_rank1(at_vertex, f));
  return accumulate_flux(fluxes, mesh.level);
}

ChernResult whitney_sum_chern(std::span<const FrameAtlas> frames,
                              const SphericalMesh& mesh) {
  if (frames.empty()) throw std::invalid_argument("whitney_sum_chern: no frames");
  const int n = static_cast<int>(frames.size());
  // stacked frame: columns of all summands at each vertex
  std::vector<Eigen::MatrixXcd> stacked(mesh.vertices.size());
  for (size_t v = 0; v < mesh.vertices.size(); ++v) {
    for (int i = 0; i < n; ++i) {
      const Eigen::MatrixXcd e = frames[i].at(mesh.vertices[v]);
      if (i == 0) {
        stacked[v] = Eigen::MatrixXcd::Zero(e.rows(), n);
      }
      stacked[v].col(i) = e;
    }
  }
  std::vector<double> fluxes;
  fluxes.reserve(mesh.faces.size());
  for (const auto& f : mesh.faces) {
    const Eigen::MatrixXcd u01 = stacked[f[0]].adjoint() * stacked[f[1]];
    const Eigen::MatrixXcd u12 = stacked[f[1]].adjoint() * stacked[f[2]];
    const Eigen::MatrixXcd u20 = stacked[f[2]].adjoint() * stacked[f[0]];
    fluxes.push_back(-std::arg((u01 * u12 * u20).determinant()));
  }
  return accumulate_flux(fluxes, mesh.level);
}

std::complex<double> berry_holonomy(const FrameAtlas& frame, const LoopPath& loop) {
  if (frame.rank() != 1)
    throw std::invalid_argument("berry_holonomy: rank-1 frames only");
  if (!loop.step_valid())
    throw std::invalid_argument("berry_holonomy: loop step too coarse or not closed");
  std::complex<double> phase(1.0, 0.0);
  for (size_t i = 0; i + 1 < loop.points.size(); ++i) {
    const std::complex<double> ov =
        overlap(frame.at(loop.points[i]), frame.at(loop.points[i + 1]));
    const double mag = std::abs(ov);
    if (mag < 1e-12)
      throw std::runtime_error("berry_holonomy: orthogonal consecutive frames");
    phase *= ov / mag;
  }
  return phase;
}

MeshRegion select_region(const SphericalMesh& mesh,
                         const std::function<bool(const Eigen::Vector3d&)>& pred) {
  MeshRegion region;
  std::vector<bool> in_region(mesh.faces.size(), false);
  for (size_t i = 0; i < mesh.faces.size(); ++i) {
    const auto& f = mesh.faces[i];
    const Eigen::Vector3d centroid =
        (mesh.vertices[f[0]] + mesh.vertices[f[1]] + mesh.vertices[f[2]]) / 3.0;
    if (pred(centroid)) {
      in_region[i] = true;
      region.faces.push_back(static_cast<int>(i));
    }
  }
  // boundary: directed edges of region faces whose reverse belongs to a
  // face outside the region
  std::map<std::pair<int, int>, bool> directed;  // edge -> owner in region
  for (size_t i = 0; i < mesh.faces.size(); ++i)
    for (int e = 0; e < 3; ++e) {
      const auto& f = mesh.faces[i];
      directed[{f[e], f[(e + 1) % 3]}] = in_region[i];
    }
  std::map<int, int> next;  // boundary edge chain
  for (const auto& [edge, inside] : directed) {
    if (!inside) continue;
    const auto rev = directed.find({edge.second, edge.first});
    if (rev == directed.end() || !rev->second) {
      if (next.count(edge.first))
        throw std::runtime_error("select_region: boundary is not a single cycle");
      next[edge.first] = edge.second;
    }
  }
  if (next.empty()) throw std::runtime_error("select_region: empty boundary");
  LoopPath loop;
  const int start = next.begin()->first;
  int cur = start;
  do {
    loop.points.push_back(mesh.vertices[cur]);
    const auto it = next.find(cur);
    if (it == next.end())
      throw std::runtime_error("select_region: boundary chain broken");
    cur = it->second;
  } while (cur != start);
  loop.points.push_back(mesh.vertices[start]);
  if (loop.points.size() != next.size() + 1)
    throw std::runtime_error("select_region: boundary is not a single cycle");
  region.boundary = std::move(loop);
  return region;
}

double region_flux(const FrameAtlas& frame, const SphericalMesh& mesh,
                   std::span<const int> faces) {
  const auto at_vertex = frames_at_vertices(frame, mesh);
  double total = 0.0;
  for (const int i : faces) total += face_flux_rank1(at_vertex, mesh.faces[i]);
  return total;
}

BundleRotationAction BundleRotationAction::from_frame(const FiberFrame& frame) {
  BundleRotationAction a;
  a.ambient_dim = frame.ambient_dim();
  a.rank = frame.rank();
  a.apply = [frame](const Rotation& r, const Eigen::Vector3d&,
                    const Eigen::MatrixXcd& v) -> Eigen::MatrixXcd {
    return frame.ambient_rotation(r) * v;
  };
  return a;
}

BundleRotationAction BundleRotationAction::trivial_line() {
  BundleRotationAction a;
  a.ambient_dim = 1;
  a.rank = 1;
  a.apply = [](const Rotation&, const Eigen::Vector3d&,
               const Eigen::MatrixXcd& v) { return v; };
  return a;
}

BundleRotationAction BundleRotationAction::ambient_vector() {
  BundleRotationAction a;
  a.ambient_dim = 3;
  a.rank = 3;
  a.apply = [](const Rotation& r, const Eigen::Vector3d&,
               const Eigen::MatrixXcd& v) -> Eigen::MatrixXcd {
    return r.matrix().cast<std::complex<double>>() * v;
  };
  return a;
}

BundleRotationAction BundleRotationAction::ambient_constant() {
  BundleRotationAction a;
  a.ambient_dim = 3;
  a.rank = 3;
  a.apply = [](const Rotation&, const Eigen::Vector3d&,
               const Eigen::MatrixXcd& v) { return v; };
  return a;
}

std::vector<double> default_stabilizer_angles(std::uint64_t seed, int extra) {
  std::vector<double> angles{std::numbers::pi, std::numbers::pi / 2.0,
                             2.0 * std::numbers::pi / 3.0};
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-std::numbers::pi, std::numbers::pi);
  for (int i = 0; i < extra; ++i) angles.push_back(u(rng));
  return angles;
}

FrameConstructionResult external_frame_construction(
    const BundleRotationAction& action, const Eigen::Vector3d& k0,
    const Eigen::MatrixXcd& basis, const SphericalMesh& mesh,
    std::span<const double> stabilizer_angles) {
  if (basis.cols() != action.rank)
    throw std::invalid_argument("external_frame_construction: basis/rank mismatch");
  FrameConstructionResult out;
  out.sections.resize(mesh.vertices.size());
  out.min_gram_det = std::numeric_limits<double>::infinity();
  const Eigen::Vector3d base = k0.normalized();
  for (size_t i = 0; i < mesh.vertices.size(); ++i) {
    const Eigen::Vector3d k = mesh.vertices[i];
    if (base.dot(k) < -1.0 + 1e-9) {
      out.excluded_vertices.push_back(static_cast<int>(i));
      continue;
    }
    const Rotation g = Rotation::minimal(base, k);
    const Eigen::MatrixXcd section = action.apply(g, base, basis);
    out.sections[i] = section;
    ++out.vertices_used;
    const Eigen::MatrixXcd gram = section.adjoint() * section;
    out.min_gram_det = std::min(out.min_gram_det, std::abs(gram.determinant()));
    // the same vertex reached through stabilizer-twisted group elements
    for (const double theta : stabilizer_angles) {
      const Rotation twisted = g * Rotation::from_axis_angle(base, theta);
      const Eigen::MatrixXcd other = action.apply(twisted, base, basis);
      out.residual = std::max(out.residual, (other - section).norm());
    }
  }
  if (out.vertices_used == 0)
    throw std::runtime_error("external_frame_construction: no usable vertices");
  return out;
}

}  // namespace amcheck
