#pragma once

// Receiver-side recovery of x_{t-K}(i, v\i) at the end of slot t-1.
//
// The forward rule runs at nodes with v_i = K. The backward rule is the same
// rule evaluated in the reflected frame w -> (K,...,K) - w, where forward and
// backward components trade places; the construction is invariant under that
// reflection.

#include <cstdint>
#include <stdexcept>
#include <string>

#include "wnc/history.hpp"
#include "wnc/symbols.hpp"
#include "wnc/theta.hpp"
#include "wnc/topology.hpp"

namespace wnc {

template <Symbol S>
struct DecodeRecord {
  NodeIndex node = 0;
  SessionIndex session = 0;
  Generation generation = 0;
  S payload{};
  Slot slot_completed = 0;
};

namespace detail {

// Reads history in the node's own frame.
template <Symbol S>
class DirectFrame {
 public:
  explicit DirectFrame(const NodeHistory<S>& h) : h_(h) {}
  const S& component(NodeIndex u, Slot slot, int axis, Direction dir) const { return h_.component(u, slot, axis, dir); }
  S aggregate(NodeIndex u, Slot slot) const { return h_.aggregate(u, slot); }

 private:
  const NodeHistory<S>& h_;
};

// Reads history through the point reflection with directions swapped.
template <Symbol S>
class MirroredFrame {
 public:
  explicit MirroredFrame(const NodeHistory<S>& h) : h_(h), topo_(h.topology()) {}
  const S& component(NodeIndex u, Slot slot, int axis, Direction dir) const {
    return h_.component(topo_.mirror(u), slot, axis, flip(dir));
  }
  S aggregate(NodeIndex u, Slot slot) const { return h_.aggregate(topo_.mirror(u), slot); }

 private:
  const NodeHistory<S>& h_;
  const Topology& topo_;
};

inline bool on_rib(const Coord& c, int axis, int side) {
  for (std::size_t j = 0; j < c.size(); ++j)
    if (static_cast<int>(j) != axis - 1 && (c[j] == 0 || c[j] == side)) return true;
  return false;
}

// Forward decode at node v (in the frame's coordinates) with v_axis = K.
template <Symbol S, typename Frame>
S decode_in_frame(const Topology& topo, NodeIndex v, int axis, Slot t, const ThetaTable& theta, const Frame& frame) {
  const int K = topo.side();
  const int d = topo.dim();
  const Coord& c = topo.coord(v);

  if (on_rib(c, axis, K))
    return frame.component(topo.index(replace_axis(c, axis, K - 1)), t - 1, axis, Direction::forward);

  S acc{};
  // Coding neighbors' aggregates.
  for (const auto& nb : topo.coding(v)) {
    if (nb.node == v) continue;
    for (int tau : theta[nb.dist]) acc ^= frame.aggregate(nb.node, t - tau);
  }
  for (int j = 1; j <= d; ++j) {
    if (j == axis) continue;
    // Own transverse components.
    for (int tau : theta[0]) {
      acc ^= frame.component(v, t - tau, j, Direction::forward);
      acc ^= frame.component(v, t - tau, j, Direction::backward);
    }
    // Transverse relay inputs heard last slot.
    const int vj = c[static_cast<std::size_t>(j - 1)];
    acc ^= frame.component(topo.index(replace_axis(c, j, vj - 1)), t - 1, j, Direction::forward);
    acc ^= frame.component(topo.index(replace_axis(c, j, vj + 1)), t - 1, j, Direction::backward);
  }
  // Facet neighbors sharing u_axis = K.
  for (const auto& nb : topo.coding(v)) {
    if (nb.dist == 0 || nb.dist >= d) continue;
    if (topo.coord(nb.node)[static_cast<std::size_t>(axis - 1)] != K) continue;
    for (int tau : theta[nb.dist + 1]) {
      acc ^= frame.component(nb.node, t - tau - 1, axis, Direction::forward);
      acc ^= frame.component(nb.node, t - tau + 1, axis, Direction::backward);
    }
  }
  // Own components along the session axis.
  for (int tau : theta[1]) {
    if (tau != 1) acc ^= frame.component(v, t - tau + 1, axis, Direction::forward);
    acc ^= frame.component(v, t - tau - 1, axis, Direction::backward);
  }
  return acc;
}

inline void require_receiver(const Topology& topo, NodeIndex v, int axis, int required) {
  if (axis < 1 || axis > topo.dim()) throw std::invalid_argument("axis out of range");
  if (topo.coord(v)[static_cast<std::size_t>(axis - 1)] != required)
    throw std::invalid_argument("node is not the receiver on axis " + std::to_string(axis));
}

}  // namespace detail

// Decodes x_{t-K}(i, v\i) at v with v_i = K, from history through slot t-1.
template <Symbol S>
S decode_forward(const Topology& topo, NodeIndex v, int axis, Slot t, const ThetaTable& theta,
                 const NodeHistory<S>& history) {
  detail::require_receiver(topo, v, axis, topo.side());
  if (t < 1) throw std::invalid_argument("decode slot must be >= 1");
  return detail::decode_in_frame<S>(topo, v, axis, t, theta, detail::DirectFrame<S>(history));
}

// Decodes xbar_{t-K}(i, v\i) at v with v_i = 0.
template <Symbol S>
S decode_backward(const Topology& topo, NodeIndex v, int axis, Slot t, const ThetaTable& theta,
                  const NodeHistory<S>& history) {
  detail::require_receiver(topo, v, axis, 0);
  if (t < 1) throw std::invalid_argument("decode slot must be >= 1");
  return detail::decode_in_frame<S>(topo, topo.mirror(v), axis, t, theta, detail::MirroredFrame<S>(history));
}

}  // namespace wnc
