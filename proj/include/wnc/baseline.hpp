#pragma once

// Routing comparator: shortest paths on the radius-sqrt(d) broadcast graph.
//
// Every session runs along one axis over distance K. The longest axis-aligned
// hop within range is floor(sqrt(d)), so a session needs ceil(K/floor(sqrt d))
// hops. Summing per-session shortest paths is taken as the routing optimum.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <deque>
#include <limits>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "wnc/topology.hpp"

namespace wnc {

using BigInt = boost::multiprecision::cpp_int;

inline int hop_stride(int d) { return detail::isqrt(d); }

inline int hops_per_session(int d, int K) {
  const int stride = hop_stride(d);
  return (K + stride - 1) / stride;
}

struct RoutingPlan {
  std::vector<std::vector<Coord>> paths;  // one per session, source first

  std::uint64_t total_hops() const {
    std::uint64_t h = 0;
    for (const auto& p : paths) h += p.size() - 1;
    return h;
  }
};

// Axis-aligned monotone paths, full-stride hops first, final hop possibly shorter.
inline RoutingPlan build_plan(const GridConfig& cfg, const std::vector<Session>& sessions) {
  const int stride = hop_stride(cfg.dim);
  RoutingPlan plan;
  plan.paths.reserve(sessions.size());
  for (const auto& s : sessions) {
    const auto axis = static_cast<std::size_t>(s.axis - 1);
    const int step = s.receiver[axis] > s.source[axis] ? 1 : -1;
    std::vector<Coord> path{s.source};
    Coord at = s.source;
    while (at != s.receiver) {
      const int left = std::abs(s.receiver[axis] - at[axis]);
      at[axis] += step * std::min(stride, left);
      path.push_back(at);
    }
    plan.paths.push_back(std::move(path));
  }
  return plan;
}

inline BigInt routing_total(const GridConfig& cfg) {
  BigInt per_axis = 1;
  for (int k = 0; k < cfg.dim - 1; ++k) per_axis *= (cfg.side + 1);
  return BigInt(hops_per_session(cfg.dim, cfg.side)) * 2 * cfg.dim * per_axis;
}

// Breadth-first hop count over the broadcast graph; -1 when unreachable.
inline int bfs_hop_oracle(const GridConfig& cfg, const Coord& src, const Coord& dst) {
  require_in_grid(cfg, src);
  require_in_grid(cfg, dst);
  const auto n = static_cast<std::size_t>(cfg.node_count());
  std::vector<int> dist(n, -1);
  std::deque<NodeIndex> frontier;
  const NodeIndex start = node_index(cfg, src);
  const NodeIndex goal = node_index(cfg, dst);
  dist[start] = 0;
  frontier.push_back(start);
  while (!frontier.empty()) {
    const NodeIndex at = frontier.front();
    frontier.pop_front();
    if (at == goal) return dist[at];
    for (const auto& u : range_neighbors(cfg, node_coord(cfg, at))) {
      const NodeIndex ui = node_index(cfg, u);
      if (dist[ui] >= 0) continue;
      dist[ui] = dist[at] + 1;
      frontier.push_back(ui);
    }
  }
  return -1;
}

}  // namespace wnc
