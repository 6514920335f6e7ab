#pragma once

// Transmit rules for slot t.
//
// Border node v, axis i, forward component:
//   v_i = 0      fresh source symbol of x(i, v\i)
//   0 < v_i < K  forward component i heard from v{i <- v_i - 1} at t-1
//   v_i = K      x_{t-K}(i, v\i), decoded here at the end of t-1
// The backward component is the same with the axis reversed.
//
// Internal node v:
//   v_t = sum over u in N_v, tau in Theta_{dist(u,v)} of u_{t-tau}
// where u_{t-tau} is u's aggregate broadcast.

#include <cstdint>
#include <span>
#include <stdexcept>

#include "wnc/history.hpp"
#include "wnc/symbols.hpp"
#include "wnc/theta.hpp"
#include "wnc/topology.hpp"

namespace wnc {

namespace detail {

inline void require_border(const Topology& topo, NodeIndex v, int axis) {
  if (!topo.border(v)) throw std::invalid_argument("border rule applied to an internal node");
  if (axis < 1 || axis > topo.dim()) throw std::invalid_argument("axis out of range");
}

}  // namespace detail

template <Symbol S>
S border_forward_component(const Topology& topo, NodeIndex v, int axis, Slot t, std::uint64_t seed,
                           const NodeHistory<S>& history) {
  detail::require_border(topo, v, axis);
  if (t <= 0) return S{};
  const Coord& c = topo.coord(v);
  const int vi = c[static_cast<std::size_t>(axis - 1)];
  const SessionIndex session = topo.session_of(v, axis, Direction::forward);
  if (vi == 0) return source_symbol<S>(seed, session, t);
  if (vi == topo.side()) return history.decoded(session, t - topo.side());
  return history.component(topo.index(replace_axis(c, axis, vi - 1)), t - 1, axis, Direction::forward);
}

template <Symbol S>
S border_backward_component(const Topology& topo, NodeIndex v, int axis, Slot t, std::uint64_t seed,
                            const NodeHistory<S>& history) {
  detail::require_border(topo, v, axis);
  if (t <= 0) return S{};
  const Coord& c = topo.coord(v);
  const int vi = c[static_cast<std::size_t>(axis - 1)];
  const SessionIndex session = topo.session_of(v, axis, Direction::backward);
  if (vi == topo.side()) return source_symbol<S>(seed, session, t);
  if (vi == 0) return history.decoded(session, t - topo.side());
  return history.component(topo.index(replace_axis(c, axis, vi + 1)), t - 1, axis, Direction::backward);
}

template <Symbol S>
S border_aggregate(std::span<const S> components) {
  S acc{};
  for (const auto& s : components) acc ^= s;
  return acc;
}

template <Symbol S>
S internal_transmit(const Topology& topo, NodeIndex v, Slot t, const ThetaTable& theta,
                    const NodeHistory<S>& history) {
  if (topo.border(v)) throw std::invalid_argument("internal rule applied to a border node");
  S acc{};
  if (t <= 1) return acc;
  for (const auto& nb : topo.coding(v))
    for (int tau : theta[nb.dist]) acc ^= history.aggregate(nb.node, t - tau);
  return acc;
}

// Closed-form content of a border component: forward component i carries
// x_{t-v_i}(i, v\i), backward carries xbar_{t-K+v_i}(i, v\i).
template <Symbol S>
S steady_state_component(const Topology& topo, NodeIndex v, int axis, Direction dir, Slot t, std::uint64_t seed) {
  const int vi = topo.coord(v)[static_cast<std::size_t>(axis - 1)];
  const Generation g = dir == Direction::forward ? t - vi : t - topo.side() + vi;
  return source_symbol<S>(seed, topo.session_of(v, axis, dir), g);
}

// Closed-form aggregate: sum over axes of both component forms. Holds for
// border aggregates and internal transmissions alike.
template <Symbol S>
S steady_state_aggregate(const Topology& topo, NodeIndex v, Slot t, std::uint64_t seed) {
  S acc{};
  for (int axis = 1; axis <= topo.dim(); ++axis) {
    acc ^= steady_state_component<S>(topo, v, axis, Direction::forward, t, seed);
    acc ^= steady_state_component<S>(topo, v, axis, Direction::backward, t, seed);
  }
  return acc;
}

}  // namespace wnc
