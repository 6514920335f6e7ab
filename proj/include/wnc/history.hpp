#pragma once

// Broadcast history shared by all nodes, and the per-node view through which
// coding and decoding rules read it.
//
// Every slot each border node broadcasts 2d component symbols, laid out as
// [forward axis 1..d, backward axis 1..d]; every internal node broadcasts one
// symbol. The log keeps the last 2d+1 slots. Slots <= 0 read as zero.

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "wnc/symbols.hpp"
#include "wnc/topology.hpp"

namespace wnc {

using Slot = std::int64_t;

// Lookback request outside what the rules may legally read.
class HistoryAccessError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

template <Symbol S>
class BroadcastLog {
 public:
  explicit BroadcastLog(const Topology& topo) : dim_(topo.dim()), depth_(2 * topo.dim() + 1) {
    offsets_.reserve(topo.node_count() + 1);
    std::size_t off = 0;
    for (NodeIndex n = 0; n < topo.node_count(); ++n) {
      offsets_.push_back(off);
      off += topo.border(n) ? static_cast<std::size_t>(2 * dim_) : 1u;
    }
    offsets_.push_back(off);
    frames_.assign(static_cast<std::size_t>(depth_), std::vector<S>(off));
  }

  int depth() const noexcept { return depth_; }
  Slot latest() const noexcept { return latest_; }
  std::size_t frame_size() const noexcept { return offsets_.back(); }
  std::size_t width(NodeIndex n) const { return offsets_.at(n + 1) - offsets_.at(n); }

  static std::size_t component_entry(int dim, int axis, Direction dir) {
    return static_cast<std::size_t>(dir == Direction::forward ? 0 : dim) + static_cast<std::size_t>(axis - 1);
  }
  std::size_t offset(NodeIndex n) const { return offsets_.at(n); }

  // All symbols node n broadcast in a slot; empty span (meaning zeros) for slot <= 0.
  std::span<const S> sent(NodeIndex n, Slot slot) const {
    if (slot <= 0) return {};
    const auto& f = frame(slot);
    return std::span<const S>(f).subspan(offsets_.at(n), width(n));
  }

  const S& component(NodeIndex n, Slot slot, int axis, Direction dir) const {
    if (width(n) == 1) throw std::logic_error("component read of an internal node");
    if (slot <= 0) return zero_;
    return frame(slot)[offsets_.at(n) + component_entry(dim_, axis, dir)];
  }

  S aggregate(NodeIndex n, Slot slot) const {
    S acc{};
    for (const auto& s : sent(n, slot)) acc ^= s;
    return acc;
  }

  void commit(Slot slot, std::vector<S> symbols) {
    if (slot != latest_ + 1) throw std::logic_error("slots must be committed in order");
    if (symbols.size() != frame_size()) throw std::logic_error("frame size mismatch");
    frames_[static_cast<std::size_t>(slot % depth_)] = std::move(symbols);
    latest_ = slot;
  }

  std::span<const S> frame_symbols(Slot slot) const { return frame(slot); }

 private:
  const std::vector<S>& frame(Slot slot) const {
    if (slot > latest_)
      throw HistoryAccessError("read of slot " + std::to_string(slot) + " before it was broadcast");
    if (slot <= latest_ - depth_)
      throw HistoryAccessError("read of slot " + std::to_string(slot) + " beyond history depth " +
                               std::to_string(depth_) + " (latest " + std::to_string(latest_) + ")");
    return frames_[static_cast<std::size_t>(slot % depth_)];
  }

  int dim_;
  int depth_;
  Slot latest_ = 0;
  std::vector<std::size_t> offsets_;
  std::vector<std::vector<S>> frames_;
  S zero_{};
};

// Latest decoded symbol of every session, held at the session's receiver.
template <Symbol S>
class DecodedStore {
 public:
  struct Entry {
    Generation generation;
    S symbol;
  };

  explicit DecodedStore(std::size_t sessions) : entries_(sessions) {}

  void put(SessionIndex s, Generation g, S symbol) { entries_.at(s) = Entry{g, std::move(symbol)}; }
  const std::optional<Entry>& get(SessionIndex s) const { return entries_.at(s); }

 private:
  std::vector<std::optional<Entry>> entries_;
};

// What one node may observe: its own broadcasts, broadcasts of nodes within
// range, and symbols it decoded itself.
template <Symbol S>
class NodeHistory {
 public:
  NodeHistory(const Topology& topo, const BroadcastLog<S>& log, const DecodedStore<S>& decoded, NodeIndex self)
      : topo_(&topo), log_(&log), decoded_(&decoded), self_(self) {}

  NodeIndex self() const noexcept { return self_; }
  const Topology& topology() const noexcept { return *topo_; }

  const S& component(NodeIndex from, Slot slot, int axis, Direction dir) const {
    require_heard(from);
    return log_->component(from, slot, axis, dir);
  }
  const S& own_component(Slot slot, int axis, Direction dir) const { return component(self_, slot, axis, dir); }

  // Border senders: XOR of the 2d components. Internal senders: the one symbol.
  S aggregate(NodeIndex from, Slot slot) const {
    require_heard(from);
    return log_->aggregate(from, slot);
  }

  // Symbol of the given generation decoded here for a session this node receives.
  S decoded(SessionIndex session, Generation generation) const {
    if (topo_->index(topo_->session(session).receiver) != self_)
      throw HistoryAccessError("node does not receive session " + std::to_string(session));
    if (generation <= 0) return S{};
    const auto& entry = decoded_->get(session);
    if (!entry || entry->generation != generation)
      throw std::runtime_error("session " + std::to_string(session) + " generation " + std::to_string(generation) +
                               " was not decoded upstream");
    return entry->symbol;
  }

 private:
  void require_heard(NodeIndex from) const {
    if (!topo_->hears(self_, from))
      throw HistoryAccessError("node " + std::to_string(self_) + " cannot hear node " + std::to_string(from));
  }

  const Topology* topo_;
  const BroadcastLog<S>* log_;
  const DecodedStore<S>* decoded_;
  NodeIndex self_;
};

}  // namespace wnc
