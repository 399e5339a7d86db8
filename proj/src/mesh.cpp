#include "amcheck/mesh.hpp"

#include <cmath>
#include <map>
#include <ostream>
#include <set>
#include <stdexcept>

namespace amcheck {

int SphericalMesh::edge_count() const {
  std::set<std::pair<int, int>> edges;
  for (const auto& f : faces)
    for (int e = 0; e < 3; ++e) {
      const int a = f[e], b = f[(e + 1) % 3];
      edges.insert({std::min(a, b), std::max(a, b)});
    }
  return static_cast<int>(edges.size());
}

int SphericalMesh::euler_characteristic() const {
  return static_cast<int>(vertices.size()) - edge_count() +
         static_cast<int>(faces.size());
}

bool SphericalMesh::orientation_consistent() const {
  // every directed edge must appear exactly once
  std::set<std::pair<int, int>> directed;
  for (const auto& f : faces)
    for (int e = 0; e < 3; ++e) {
      const auto edge = std::make_pair(f[e], f[(e + 1) % 3]);
      if (!directed.insert(edge).second) return false;
    }
  for (const auto& [a, b] : directed)
    if (!directed.count({b, a})) return false;
  return true;
}

SphericalMesh SphericalMesh::reversed() const {
  SphericalMesh m = *this;
  for (auto& f : m.faces) std::swap(f[1], f[2]);
  return m;
}

SphericalMesh icosphere(int level) {
  if (level < 0) throw std::invalid_argument("icosphere: negative level");
  if (level > 8) throw std::runtime_error("icosphere: level > 8 refused (resource guard)");

  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  SphericalMesh m;
  m.vertices = {
      {-1, phi, 0}, {1, phi, 0},   {-1, -phi, 0}, {1, -phi, 0},
      {0, -1, phi}, {0, 1, phi},   {0, -1, -phi}, {0, 1, -phi},
      {phi, 0, -1}, {phi, 0, 1},   {-phi, 0, -1}, {-phi, 0, 1},
  };
  for (auto& v : m.vertices) v.normalize();
  m.faces = {{0, 11, 5}, {0, 5, 1},  {0, 1, 7},   {0, 7, 10}, {0, 10, 11},
             {1, 5, 9},  {5, 11, 4}, {11, 10, 2}, {10, 7, 6}, {7, 1, 8},
             {3, 9, 4},  {3, 4, 2},  {3, 2, 6},   {3, 6, 8},  {3, 8, 9},
             {4, 9, 5},  {2, 4, 11}, {6, 2, 10},  {8, 6, 7},  {9, 8, 1}};

  for (int l = 0; l < level; ++l) {
    std::map<std::pair<int, int>, int> midpoint;
    auto mid = [&](int a, int b) {
      const auto key = std::make_pair(std::min(a, b), std::max(a, b));
      const auto it = midpoint.find(key);
      if (it != midpoint.end()) return it->second;
      const int idx = static_cast<int>(m.vertices.size());
      m.vertices.push_back((m.vertices[a] + m.vertices[b]).normalized());
      midpoint.emplace(key, idx);
      return idx;
    };
    std::vector<std::array<int, 3>> next;
    next.reserve(m.faces.size() * 4);
    for (const auto& f : m.faces) {
      const int ab = mid(f[0], f[1]), bc = mid(f[1], f[2]), ca = mid(f[2], f[0]);
      next.push_back({f[0], ab, ca});
      next.push_back({f[1], bc, ab});
      next.push_back({f[2], ca, bc});
      next.push_back({ab, bc, ca});
    }
    m.faces = std::move(next);
  }
  m.level = level;
  return m;
}

void write_mesh(const SphericalMesh& mesh, std::ostream& os) {
  for (const auto& v : mesh.vertices)
    os << "v " << v.x() << " " << v.y() << " " << v.z() << "\n";
  for (const auto& f : mesh.faces)
    os << "f " << f[0] << " " << f[1] << " " << f[2] << "\n";
}

double spherical_triangle_excess(const Eigen::Vector3d& a, const Eigen::Vector3d& b,
                                 const Eigen::Vector3d& c) {
  // Van Oosterom-Strackee: signed solid angle of the triangle
  const double num = a.dot(b.cross(c));
  const double den = 1.0 + a.dot(b) + b.dot(c) + c.dot(a);
  return 2.0 * std::atan2(num, den);
}

double LoopPath::enclosed_solid_angle() const {
  if (points.size() < 3) return 0.0;
  double omega = 0.0;
  const Eigen::Vector3d& base = points.front();
  for (size_t i = 1; i + 1 < points.size(); ++i)
    omega += spherical_triangle_excess(base, points[i], points[i + 1]);
  return omega;
}

bool LoopPath::step_valid(double max_step_rad) const {
  if (points.size() < 2) return true;
  if ((points.front() - points.back()).norm() > 1e-12) return false;
  for (size_t i = 0; i + 1 < points.size(); ++i) {
    const double c = std::clamp(points[i].dot(points[i + 1]), -1.0, 1.0);
    if (std::acos(c) > max_step_rad) return false;
  }
  return true;
}

LoopPath LoopPath::geodesic_polygon(const std::vector<Eigen::Vector3d>& corners,
                                    int subdivisions_per_edge) {
  if (corners.size() < 2)
    throw std::invalid_argument("geodesic_polygon: need at least two corners");
  if (subdivisions_per_edge < 1)
    throw std::invalid_argument("geodesic_polygon: need at least one arc per edge");
  LoopPath loop;
  const size_t n = corners.size();
  for (size_t i = 0; i < n; ++i) {
    const Eigen::Vector3d a = corners[i].normalized();
    const Eigen::Vector3d b = corners[(i + 1) % n].normalized();
    const double angle = std::acos(std::clamp(a.dot(b), -1.0, 1.0));
    for (int s = 0; s < subdivisions_per_edge; ++s) {
      const double t = static_cast<double>(s) / subdivisions_per_edge;
      Eigen::Vector3d p;
      if (angle < 1e-12) {
        p = a;
      } else {
        // slerp along the great circle
        p = (std::sin((1.0 - t) * angle) * a + std::sin(t * angle) * b) /
            std::sin(angle);
      }
      loop.points.push_back(p.normalized());
    }
  }
  loop.points.push_back(loop.points.front());
  return loop;
}

}  // namespace amcheck
