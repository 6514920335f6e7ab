#pragma once

// Grid lattice Z_K^d with broadcast radius sqrt(d): nodes, neighborhoods,
// unicast sessions and coordinate helpers.
//
// Axes are 1-based throughout the public API (axis i in [1, d]); storage in
// Coord is 0-based. Nodes are enumerated lexicographically, first component
// most significant, so the point reflection w -> (K,...,K) - w maps node index
// n to node_count - 1 - n.

#include <algorithm>
#include <cmath>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace wnc {

using Coord = std::vector<int>;
using NodeIndex = std::size_t;
using SessionIndex = std::uint32_t;

enum class Direction : std::uint8_t { forward = 0, backward = 1 };

constexpr Direction flip(Direction dir) noexcept {
  return dir == Direction::forward ? Direction::backward : Direction::forward;
}

inline const char* to_string(Direction dir) noexcept {
  return dir == Direction::forward ? "forward" : "backward";
}

namespace detail {

inline std::uint64_t ipow(std::uint64_t base, int exp) {
  std::uint64_t r = 1;
  for (int e = 0; e < exp; ++e) r *= base;
  return r;
}

inline int isqrt(int n) {
  int r = 0;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

}  // namespace detail

struct GridConfig {
  int dim = 1;   // d
  int side = 2;  // K

  double range() const { return std::sqrt(static_cast<double>(dim)); }
  // Squared range; Euclidean tests are done on integers against this.
  int range_squared() const { return dim; }

  std::uint64_t node_count() const { return detail::ipow(side + 1, dim); }
  std::uint64_t internal_count() const { return detail::ipow(side - 1, dim); }
  std::uint64_t border_count() const { return node_count() - internal_count(); }
  std::uint64_t session_count() const {
    return 2ull * static_cast<std::uint64_t>(dim) * detail::ipow(side + 1, dim - 1);
  }

  friend bool operator==(const GridConfig&, const GridConfig&) = default;
};

inline GridConfig build_grid(int d, int K) {
  if (d < 1) throw std::invalid_argument("grid dimension must be >= 1, got " + std::to_string(d));
  if (K < 2) throw std::invalid_argument("grid side K must be > 1, got " + std::to_string(K));
  return GridConfig{d, K};
}

inline bool in_grid(const GridConfig& cfg, const Coord& v) {
  if (static_cast<int>(v.size()) != cfg.dim) return false;
  return std::all_of(v.begin(), v.end(), [&](int c) { return c >= 0 && c <= cfg.side; });
}

inline void require_in_grid(const GridConfig& cfg, const Coord& v) {
  if (!in_grid(cfg, v)) throw std::invalid_argument("coordinate outside the grid");
}

inline bool is_border(const GridConfig& cfg, const Coord& v) {
  require_in_grid(cfg, v);
  return std::any_of(v.begin(), v.end(), [&](int c) { return c == 0 || c == cfg.side; });
}

inline int manhattan_dist(const Coord& u, const Coord& v) {
  if (u.size() != v.size()) throw std::invalid_argument("manhattan_dist: dimension mismatch");
  int s = 0;
  for (std::size_t k = 0; k < u.size(); ++k) s += std::abs(u[k] - v[k]);
  return s;
}

inline int squared_dist(const Coord& u, const Coord& v) {
  int s = 0;
  for (std::size_t k = 0; k < u.size(); ++k) s += (u[k] - v[k]) * (u[k] - v[k]);
  return s;
}

// v with axis i (1-based) removed.
inline Coord drop_axis(const Coord& v, int axis) {
  Coord out;
  out.reserve(v.size() - 1);
  for (std::size_t k = 0; k < v.size(); ++k)
    if (static_cast<int>(k) != axis - 1) out.push_back(v[k]);
  return out;
}

// v with axis i (1-based) replaced by value.
inline Coord replace_axis(Coord v, int axis, int value) {
  v[static_cast<std::size_t>(axis - 1)] = value;
  return v;
}

// Inverse of drop_axis: insert value at axis i.
inline Coord insert_axis(const Coord& transverse, int axis, int value) {
  Coord out(transverse.begin(), transverse.end());
  out.insert(out.begin() + (axis - 1), value);
  return out;
}

inline Coord mirror(const GridConfig& cfg, const Coord& v) {
  require_in_grid(cfg, v);
  Coord out(v.size());
  std::transform(v.begin(), v.end(), out.begin(), [&](int c) { return cfg.side - c; });
  return out;
}

inline NodeIndex node_index(const GridConfig& cfg, const Coord& v) {
  NodeIndex idx = 0;
  for (int c : v) idx = idx * static_cast<NodeIndex>(cfg.side + 1) + static_cast<NodeIndex>(c);
  return idx;
}

inline Coord node_coord(const GridConfig& cfg, NodeIndex idx) {
  Coord v(static_cast<std::size_t>(cfg.dim));
  for (int k = cfg.dim - 1; k >= 0; --k) {
    v[static_cast<std::size_t>(k)] = static_cast<int>(idx % static_cast<NodeIndex>(cfg.side + 1));
    idx /= static_cast<NodeIndex>(cfg.side + 1);
  }
  return v;
}

// Calls fn(coord) for every point of {0..side}^dim in lexicographic order.
template <typename Fn>
void for_each_point(int dim, int side, Fn&& fn) {
  Coord v(static_cast<std::size_t>(dim), 0);
  if (dim == 0) {
    fn(static_cast<const Coord&>(v));
    return;
  }
  while (true) {
    fn(static_cast<const Coord&>(v));
    int k = dim - 1;
    while (k >= 0 && v[static_cast<std::size_t>(k)] == side) {
      v[static_cast<std::size_t>(k)] = 0;
      --k;
    }
    if (k < 0) return;
    ++v[static_cast<std::size_t>(k)];
  }
}

inline std::vector<Coord> range_neighbors(const GridConfig& cfg, const Coord& v) {
  require_in_grid(cfg, v);
  const int reach = detail::isqrt(cfg.dim);
  std::vector<Coord> out;
  for_each_point(cfg.dim, 2 * reach, [&](const Coord& off) {
    Coord u(v.size());
    for (std::size_t k = 0; k < v.size(); ++k) u[k] = v[k] + off[k] - reach;
    if (u != v && in_grid(cfg, u) && squared_dist(u, v) <= cfg.range_squared()) out.push_back(std::move(u));
  });
  return out;
}

// L-infinity ball of radius 1 around v clipped to the grid, v included.
inline std::vector<Coord> coding_neighborhood(const GridConfig& cfg, const Coord& v) {
  require_in_grid(cfg, v);
  std::vector<Coord> out;
  for_each_point(cfg.dim, 2, [&](const Coord& off) {
    Coord u(v.size());
    for (std::size_t k = 0; k < v.size(); ++k) u[k] = v[k] + off[k] - 1;
    if (in_grid(cfg, u)) out.push_back(std::move(u));
  });
  return out;
}

struct Session {
  int axis = 1;
  Coord transverse;
  Direction direction = Direction::forward;
  Coord source;
  Coord receiver;

  friend bool operator==(const Session&, const Session&) = default;
};

// Canonical order: axis, then lexicographic transverse, then forward < backward.
inline SessionIndex session_index(const GridConfig& cfg, int axis, const Coord& transverse, Direction dir) {
  NodeIndex t = 0;
  for (int c : transverse) t = t * static_cast<NodeIndex>(cfg.side + 1) + static_cast<NodeIndex>(c);
  const auto per_axis = detail::ipow(cfg.side + 1, cfg.dim - 1);
  return static_cast<SessionIndex>(((static_cast<std::uint64_t>(axis - 1) * per_axis + t) << 1) |
                                   static_cast<std::uint64_t>(dir));
}

inline Session make_session(const GridConfig& cfg, int axis, Coord transverse, Direction dir) {
  Session s;
  s.axis = axis;
  s.direction = dir;
  Coord low = insert_axis(transverse, axis, 0);
  Coord high = insert_axis(transverse, axis, cfg.side);
  s.transverse = std::move(transverse);
  if (dir == Direction::forward) {
    s.source = std::move(low);
    s.receiver = std::move(high);
  } else {
    s.source = std::move(high);
    s.receiver = std::move(low);
  }
  return s;
}

inline std::vector<Session> build_sessions(const GridConfig& cfg) {
  std::vector<Session> out;
  out.reserve(cfg.session_count());
  for (int axis = 1; axis <= cfg.dim; ++axis) {
    for_each_point(cfg.dim - 1, cfg.side, [&](const Coord& tr) {
      out.push_back(make_session(cfg, axis, tr, Direction::forward));
      out.push_back(make_session(cfg, axis, tr, Direction::backward));
    });
  }
  return out;
}

// Precomputed, immutable lookup tables for one grid. Neighborhood lists hold
// node indices in lexicographic order.
class Topology {
 public:
  struct CodingNeighbor {
    NodeIndex node;
    int dist;  // Manhattan distance to the centre node
  };

  explicit Topology(GridConfig cfg) : cfg_(cfg), sessions_(build_sessions(cfg)) {
    const auto n = static_cast<NodeIndex>(cfg_.node_count());
    coords_.reserve(n);
    border_.reserve(n);
    coding_.resize(n);
    range_.resize(n);
    for (NodeIndex idx = 0; idx < n; ++idx) {
      Coord v = node_coord(cfg_, idx);
      border_.push_back(is_border(cfg_, v));
      for (const auto& u : coding_neighborhood(cfg_, v))
        coding_[idx].push_back({node_index(cfg_, u), manhattan_dist(u, v)});
      for (const auto& u : range_neighbors(cfg_, v)) range_[idx].push_back(node_index(cfg_, u));
      coords_.push_back(std::move(v));
    }
  }

  const GridConfig& config() const noexcept { return cfg_; }
  int dim() const noexcept { return cfg_.dim; }
  int side() const noexcept { return cfg_.side; }
  NodeIndex node_count() const noexcept { return coords_.size(); }

  const Coord& coord(NodeIndex n) const { return coords_.at(n); }
  NodeIndex index(const Coord& v) const {
    require_in_grid(cfg_, v);
    return node_index(cfg_, v);
  }
  bool border(NodeIndex n) const { return border_.at(n); }
  NodeIndex mirror(NodeIndex n) const noexcept { return node_count() - 1 - n; }

  const std::vector<CodingNeighbor>& coding(NodeIndex n) const { return coding_.at(n); }
  const std::vector<NodeIndex>& range(NodeIndex n) const { return range_.at(n); }
  bool hears(NodeIndex receiver, NodeIndex sender) const {
    if (receiver == sender) return true;
    const auto& r = range_.at(receiver);
    return std::binary_search(r.begin(), r.end(), sender);
  }

  const std::vector<Session>& sessions() const noexcept { return sessions_; }
  const Session& session(SessionIndex s) const { return sessions_.at(s); }
  SessionIndex session_of(NodeIndex n, int axis, Direction dir) const {
    return session_index(cfg_, axis, drop_axis(coords_.at(n), axis), dir);
  }
  SessionIndex mirror_session(SessionIndex s) const {
    const Session& ses = sessions_.at(s);
    Coord tr(ses.transverse.size());
    std::transform(ses.transverse.begin(), ses.transverse.end(), tr.begin(), [&](int c) { return cfg_.side - c; });
    return session_index(cfg_, ses.axis, tr, flip(ses.direction));
  }

 private:
  GridConfig cfg_;
  std::vector<Coord> coords_;
  std::vector<bool> border_;
  std::vector<std::vector<CodingNeighbor>> coding_;
  std::vector<std::vector<NodeIndex>> range_;
  std::vector<Session> sessions_;
};

}  // namespace wnc
