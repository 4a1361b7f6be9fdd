#include "clawdec/rotation.hpp"

#include <algorithm>
#include <cmath>

namespace clawdec {

void validate_rotation(const Graph& g, const RotationSystem& rot) {
  if (static_cast<int>(rot.size()) != g.order())
    throw Error(Errc::InvalidRotation, "rotation covers " + std::to_string(rot.size()) + " of " +
                                           std::to_string(g.order()) + " vertices");
  for (int v = 0; v < g.order(); ++v) {
    std::vector<int> listed = rot[v];
    std::sort(listed.begin(), listed.end());
    if (listed != g.incident_edges(v))
      throw Error(Errc::InvalidRotation, "rotation at vertex " + std::to_string(v) +
                                             " is not a permutation of its edge-ends", v);
  }
}

EmbeddingGenus genus_from_rotation(const Graph& g, const RotationSystem& rot) {
  validate_rotation(g, rot);
  if (!g.is_connected()) throw Error(Errc::Disconnected, "genus needs a connected graph");
  const int m = g.size();
  // successor[2e+s]: next edge after e in the rotation at endpoint s (0 = u, 1 = v).
  std::vector<int> successor(2 * m);
  for (int v = 0; v < g.order(); ++v) {
    const auto& order = rot[v];
    for (std::size_t i = 0; i < order.size(); ++i) {
      const int e = order[i];
      const int end = g.edge(e).u == v ? 0 : 1;
      successor[2 * e + end] = order[(i + 1) % order.size()];
    }
  }
  // Dart 2e+s leaves endpoint s of edge e.
  std::vector<bool> seen(2 * m, false);
  int faces = 0;
  for (int start = 0; start < 2 * m; ++start) {
    if (seen[start]) continue;
    ++faces;
    int dart = start;
    do {
      if (seen[dart]) throw Error(Errc::InvalidRotation, "edge-end visited twice while tracing a face", dart / 2);
      seen[dart] = true;
      const int e = dart / 2;
      const int arrive = 1 - dart % 2;  // endpoint index the dart enters
      const int w = arrive == 0 ? g.edge(e).u : g.edge(e).v;
      const int next = successor[2 * e + arrive];
      dart = 2 * next + (g.edge(next).u == w ? 0 : 1);
    } while (dart != start);
  }
  const int euler = g.order() - m + faces;
  return {faces, (2 - euler) / 2};
}

RotationSystem rotation_from_coordinates(const Graph& g, std::span<const double> x,
                                         std::span<const double> y) {
  RotationSystem rot(g.order());
  for (int v = 0; v < g.order(); ++v) {
    std::vector<std::pair<double, int>> by_angle;
    for (int e : g.incident_edges(v)) {
      const int w = g.edge(e).other(v);
      // Clockwise from the positive x axis.
      by_angle.push_back({-std::atan2(y[w] - y[v], x[w] - x[v]), e});
    }
    std::sort(by_angle.begin(), by_angle.end());
    for (const auto& [angle, e] : by_angle) rot[v].push_back(e);
  }
  return rot;
}

RotationSystem relabel_rotation(const RotationSystem& rot, std::span<const int> perm) {
  RotationSystem out(rot.size());
  for (std::size_t v = 0; v < rot.size(); ++v) out[perm[v]] = rot[v];
  return out;
}

}  // namespace clawdec
