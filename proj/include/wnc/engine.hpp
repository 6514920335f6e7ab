#pragma once

// Phase-synchronous slot loop. Slot t: every node computes its broadcasts from
// history through t-1, the frame is committed, then every receiver decodes
// generation t+1-K. In verification the per-slot closed forms of border
// components, aggregates and decoded symbols are checked against the seeded
// sources.

#include <algorithm>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "wnc/decoder.hpp"
#include "wnc/encoder.hpp"
#include "wnc/history.hpp"
#include "wnc/symbols.hpp"
#include "wnc/theta.hpp"
#include "wnc/topology.hpp"

namespace wnc {

enum class Strictness : std::uint8_t { strict, permissive };

struct Violation {
  Slot slot = 0;
  NodeIndex node = 0;
  std::string what;
};

class ConstructionError : public std::runtime_error {
 public:
  explicit ConstructionError(Violation v)
      : std::runtime_error("slot " + std::to_string(v.slot) + ", node " + std::to_string(v.node) + ": " + v.what),
        violation_(std::move(v)) {}
  const Violation& violation() const noexcept { return violation_; }

 private:
  Violation violation_;
};

template <Symbol S>
struct SlotLog {
  Slot slot = 0;
  std::uint64_t internal_tx = 0;
  std::uint64_t border_tx = 0;
  std::vector<DecodeRecord<S>> decodes;
  std::vector<Violation> violations;

  std::uint64_t total_tx() const noexcept { return internal_tx + border_tx; }
};

struct SessionDelivery {
  Generation first = 0;
  Generation last = 0;
  std::uint64_t count = 0;
  bool contiguous = true;  // generations arrived as 1, 2, 3, ... with no gaps
  bool on_time = true;     // every generation g completed at slot g + K - 1
};

struct RunSummary {
  GridConfig config;
  Slot slots = 0;
  std::uint64_t total_tx = 0;
  std::uint64_t per_slot_tx = 0;  // transmissions in the most recent slot
  bool constant_slot_tx = true;
  std::vector<SessionDelivery> deliveries;  // indexed by SessionIndex
  std::size_t violations = 0;
  std::vector<Violation> violation_log;
};

template <Symbol S>
class Engine {
 public:
  explicit Engine(GridConfig cfg, std::uint64_t seed = 0, Strictness strictness = Strictness::strict)
      : Engine(cfg, seed, strictness, cached_theta(cfg.dim)) {}

  // Runs with a caller-supplied offset table, which must outlive the engine.
  Engine(GridConfig cfg, std::uint64_t seed, Strictness strictness, const ThetaTable& theta)
      : topo_(cfg),
        theta_(theta),
        seed_(seed),
        strictness_(strictness),
        log_(topo_),
        decoded_(topo_.sessions().size()),
        deliveries_(topo_.sessions().size()) {}

  const Topology& topology() const noexcept { return topo_; }
  const ThetaTable& theta() const noexcept { return theta_; }
  std::uint64_t seed() const noexcept { return seed_; }
  Slot clock() const noexcept { return log_.latest(); }
  const BroadcastLog<S>& broadcasts() const noexcept { return log_; }

  // Everything node n broadcast in the latest slot.
  std::span<const S> sent(NodeIndex n) const { return log_.sent(n, clock()); }

  // Node n's view of history as of the end of the latest slot.
  NodeHistory<S> history(NodeIndex n) const { return NodeHistory<S>(topo_, log_, decoded_, n); }

  SlotLog<S> step() {
    const Slot t = clock() + 1;
    const int d = topo_.dim();
    SlotLog<S> slot_log;
    slot_log.slot = t;

    std::vector<S> frame(log_.frame_size());
    for (NodeIndex n = 0; n < topo_.node_count(); ++n) {
      const NodeHistory<S> history(topo_, log_, decoded_, n);
      const std::size_t base = log_.offset(n);
      if (topo_.border(n)) {
        for (int axis = 1; axis <= d; ++axis) {
          for (Direction dir : {Direction::forward, Direction::backward}) {
            S sym = dir == Direction::forward ? border_forward_component<S>(topo_, n, axis, t, seed_, history)
                                              : border_backward_component<S>(topo_, n, axis, t, seed_, history);
            const S expected = steady_state_component<S>(topo_, n, axis, dir, t, seed_);
            if (sym != expected)
              flag(slot_log, n,
                   std::string(to_string(dir)) + " component on axis " + std::to_string(axis) + " is " +
                       sym.describe() + ", expected " + expected.describe());
            frame[base + BroadcastLog<S>::component_entry(d, axis, dir)] = std::move(sym);
          }
        }
        slot_log.border_tx += static_cast<std::uint64_t>(2 * d);
      } else {
        S sym = internal_transmit<S>(topo_, n, t, theta_, history);
        const S expected = steady_state_aggregate<S>(topo_, n, t, seed_);
        if (sym != expected)
          flag(slot_log, n, "internal transmission is " + sym.describe() + ", expected " + expected.describe());
        frame[base] = std::move(sym);
        slot_log.internal_tx += 1;
      }
    }
    log_.commit(t, std::move(frame));
    total_tx_ += slot_log.total_tx();
    if (last_slot_tx_ != 0 && last_slot_tx_ != slot_log.total_tx()) constant_slot_tx_ = false;
    last_slot_tx_ = slot_log.total_tx();

    decode_all(slot_log, t);
    return slot_log;
  }

  RunSummary run(Slot slots) {
    if (slots < 1) throw std::invalid_argument("run needs at least one slot");
    for (Slot k = 0; k < slots; ++k) step();
    return summary();
  }

  RunSummary summary() const {
    RunSummary s;
    s.config = topo_.config();
    s.slots = clock();
    s.total_tx = total_tx_;
    s.per_slot_tx = last_slot_tx_;
    s.constant_slot_tx = constant_slot_tx_;
    s.deliveries = deliveries_;
    s.violations = violations_.size();
    s.violation_log = violations_;
    return s;
  }

 private:
  // End of slot t: decode the generation needed by the slot t+1 rules.
  void decode_all(SlotLog<S>& slot_log, Slot t) {
    const Slot next = t + 1;
    const Generation g = next - topo_.side();
    for (SessionIndex s = 0; s < topo_.sessions().size(); ++s) {
      const Session& ses = topo_.session(s);
      const NodeIndex receiver = topo_.index(ses.receiver);
      const NodeHistory<S> history(topo_, log_, decoded_, receiver);
      S sym = ses.direction == Direction::forward
                  ? decode_forward<S>(topo_, receiver, ses.axis, next, theta_, history)
                  : decode_backward<S>(topo_, receiver, ses.axis, next, theta_, history);
      const S expected = source_symbol<S>(seed_, s, g);
      if (sym != expected)
        flag(slot_log, receiver,
             "decode of session " + std::to_string(s) + " generation " + std::to_string(g) + " gave " +
                 sym.describe() + ", expected " + expected.describe());
      if (g < 1) continue;
      auto& del = deliveries_[s];
      if (del.count == 0 ? g != 1 : g != del.last + 1) del.contiguous = false;
      if (t != g + topo_.side() - 1) del.on_time = false;
      if (del.count == 0) del.first = g;
      del.last = g;
      ++del.count;
      decoded_.put(s, g, sym);
      slot_log.decodes.push_back(DecodeRecord<S>{receiver, s, g, std::move(sym), t});
    }
  }

  void flag(SlotLog<S>& slot_log, NodeIndex n, std::string what) {
    Violation v{slot_log.slot, n, std::move(what)};
    slot_log.violations.push_back(v);
    violations_.push_back(v);
    if (strictness_ == Strictness::strict) throw ConstructionError(std::move(v));
  }

  Topology topo_;
  const ThetaTable& theta_;
  std::uint64_t seed_;
  Strictness strictness_;
  BroadcastLog<S> log_;
  DecodedStore<S> decoded_;
  std::vector<SessionDelivery> deliveries_;
  std::vector<Violation> violations_;
  std::uint64_t total_tx_ = 0;
  std::uint64_t last_slot_tx_ = 0;
  bool constant_slot_tx_ = true;
};

// Runtime-dispatched run; strict-mode violations surface as ConstructionError.
inline RunSummary simulate(GridConfig cfg, PayloadMode mode, std::uint64_t seed, Slot slots,
                           Strictness strictness = Strictness::strict) {
  if (mode == PayloadMode::bit) return Engine<BitSymbol>(cfg, seed, strictness).run(slots);
  return Engine<CoeffSymbol>(cfg, seed, strictness).run(slots);
}

}  // namespace wnc
