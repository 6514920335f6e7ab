#pragma once

// Command layer behind the `wnc` tool: validates a RunSpec, runs it and renders
// JSON (single runs) or CSV (sweeps). Exit status: 0 ok, 1 invariant
// violation, 2 usage error.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <future>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "json.hpp"

#include "wnc/analysis.hpp"
#include "wnc/baseline.hpp"
#include "wnc/engine.hpp"
#include "wnc/theta.hpp"
#include "wnc/topology.hpp"

namespace wnc {

using Json = nlohmann::ordered_json;

enum class Command : std::uint8_t { theta, simulate, counts, benefit, sweep };

enum ExitStatus : int { exit_ok = 0, exit_violation = 1, exit_usage = 2 };

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct RunSpec {
  Command command = Command::simulate;
  int d = 0;
  std::optional<int> K;
  int k_min = 0;
  int k_max = 0;
  int k_step = 1;
  Slot slots = 0;
  PayloadMode payload = PayloadMode::coeff;
  std::uint64_t seed = 0;
  std::optional<double> alpha;
  RangeModel model = RangeModel::fixed_range;
  std::string out;  // empty: standard output
  bool strict = true;
};

namespace detail {

inline Json big_json(const BigInt& v) {
  if (v >= 0 && v <= std::numeric_limits<std::uint64_t>::max()) return Json(v.convert_to<std::uint64_t>());
  return Json(v.str());
}

inline Json rational_json(const Rational& q) { return Json(q.convert_to<double>()); }

inline void require_dim(const RunSpec& spec) {
  if (spec.d < 1) throw UsageError("--dim must be >= 1");
}

inline int require_k(const RunSpec& spec) {
  if (!spec.K) throw UsageError("--k is required");
  if (*spec.K < 2) throw UsageError("--k must be >= 2");
  return *spec.K;
}

}  // namespace detail

inline Json theta_json(int d) {
  const ThetaTable& table = cached_theta(d);
  Json sets = Json::array();
  for (int delta = 0; delta <= d; ++delta) sets.push_back(table[delta]);
  Json identities = Json::array();
  for (int delta = 0; delta < d; ++delta) identities.push_back(check_theta_identity(table, delta));
  return Json{{"dim", d}, {"theta", sets}, {"identities_hold", identities}};
}

inline Json simulate_json(const RunSummary& s, PayloadMode mode, std::uint64_t seed, bool strict,
                          const std::optional<std::string>& abort_reason = std::nullopt) {
  const GridConfig& cfg = s.config;
  Generation first = 0;
  Generation last = 0;
  bool uniform = !s.deliveries.empty();
  for (std::size_t k = 0; k < s.deliveries.size(); ++k) {
    const auto& del = s.deliveries[k];
    if (k == 0) {
      first = del.first;
      last = del.last;
    }
    if (del.first != first || del.last != last || !del.contiguous || !del.on_time) uniform = false;
  }
  Json messages = Json::array();
  for (std::size_t k = 0; k < std::min<std::size_t>(s.violation_log.size(), 10); ++k) {
    const auto& v = s.violation_log[k];
    messages.push_back("slot " + std::to_string(v.slot) + ", node " + std::to_string(v.node) + ": " + v.what);
  }
  Json j{{"command", "simulate"},
         {"d", cfg.dim},
         {"K", cfg.side},
         {"slots", s.slots},
         {"payload", mode == PayloadMode::bit ? "bits" : "coeffs"},
         {"seed", seed},
         {"strict", strict},
         {"total_tx", s.total_tx},
         {"per_slot_tx", s.per_slot_tx},
         {"expected_per_slot_tx", detail::big_json(nc_tx_per_slot(cfg.dim, cfg.side))},
         {"sessions", s.deliveries.size()},
         {"delivered_generations", {{"first", first}, {"last", last}, {"uniform", uniform}}},
         {"violations", s.violations},
         {"violation_messages", messages}};
  if (abort_reason) j["aborted"] = *abort_reason;
  return j;
}

inline Json counts_json(int d, int K) {
  const GridConfig cfg = build_grid(d, K);
  Json j{{"command", "counts"},
         {"d", d},
         {"K", K},
         {"range", cfg.range()},
         {"nodes", cfg.node_count()},
         {"internal_nodes", cfg.internal_count()},
         {"border_nodes", cfg.border_count()},
         {"sessions", cfg.session_count()},
         {"nc_tx_per_slot", detail::big_json(nc_tx_per_slot(d, K))},
         {"routing_hops_per_session", hops_per_session(d, K)},
         {"routing_tx", detail::big_json(routing_tx(d, K))}};
  // Breadth-first cross-check of every session's hop count on small grids.
  if (cfg.node_count() <= 20000) {
    bool ok = true;
    for (const auto& s : build_sessions(cfg))
      ok = ok && bfs_hop_oracle(cfg, s.source, s.receiver) == hops_per_session(d, K);
    j["bfs_hops_verified"] = ok;
  } else {
    j["bfs_hops_verified"] = nullptr;
  }
  return j;
}

inline Json benefit_json(RangeModel model, int d, std::optional<int> K, std::optional<double> alpha) {
  if (d < 1) throw UsageError("--dim must be >= 1");
  if (K && *K < 2) throw UsageError("--k must be >= 2");
  Json j{{"model", to_string(model)}, {"d", d}};
  if (K) j["K"] = *K;
  if (model == RangeModel::fixed_range) {
    const Rational limit = benefit_limit(d);
    const Rational ratio = K ? benefit_at(d, *K) : limit;
    j["ratio"] = detail::rational_json(ratio);
    j["ratio_exact"] = ratio.str();
    j["limit"] = detail::rational_json(limit);
    j["limit_exact"] = limit.str();
    return j;
  }
  if (!alpha) throw UsageError("--alpha is required for the optimized range model");
  if (*alpha < 2) throw UsageError("--alpha must be >= 2");
  j["alpha"] = *alpha;
  const double limit = alt_model_benefit(d, *alpha);
  j["ratio"] = K ? alt_model_benefit_at(d, *K, *alpha) : limit;
  j["limit"] = limit;
  return j;
}

inline std::string sweep_row(int d, int K) {
  const BenefitReport r = fixed_range_report(d, K);
  std::ostringstream os;
  os << d << ',' << K << ',' << r.routing_tx.str() << ',' << r.nc_tx.str() << ',' << to_fixed(r.ratio, 6) << ','
     << to_fixed(r.limit, 6) << '\n';
  return os.str();
}

// Rows are computed on worker threads and joined in K order.
inline std::string sweep_csv(int d, int k_min, int k_max, int k_step) {
  if (d < 1) throw UsageError("--dim must be >= 1");
  if (k_min < 2 || k_max < k_min || k_step < 1) throw UsageError("need 2 <= --k-min <= --k-max and --k-step >= 1");
  std::vector<int> ks;
  for (long long k = k_min; k <= k_max; k += k_step) ks.push_back(static_cast<int>(k));
  std::vector<std::string> rows(ks.size());
  const std::size_t workers = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
  std::vector<std::future<void>> jobs;
  for (std::size_t w = 0; w < workers; ++w)
    jobs.push_back(std::async(std::launch::async, [&, w] {
      for (std::size_t r = w; r < ks.size(); r += workers) rows[r] = sweep_row(d, ks[r]);
    }));
  for (auto& j : jobs) j.get();
  std::string out = "d,K,routing_tx,nc_tx,ratio,limit\n";
  for (const auto& r : rows) out += r;
  return out;
}

struct CommandResult {
  int status = exit_ok;
  std::string output;
};

inline CommandResult run_command(const RunSpec& spec) {
  switch (spec.command) {
    case Command::theta:
      detail::require_dim(spec);
      return {exit_ok, theta_json(spec.d).dump(2) + "\n"};
    case Command::counts:
      detail::require_dim(spec);
      return {exit_ok, counts_json(spec.d, detail::require_k(spec)).dump(2) + "\n"};
    case Command::benefit:
      return {exit_ok, benefit_json(spec.model, spec.d, spec.K, spec.alpha).dump(2) + "\n"};
    case Command::sweep:
      return {exit_ok, sweep_csv(spec.d, spec.k_min, spec.k_max, spec.k_step)};
    case Command::simulate: {
      detail::require_dim(spec);
      const int K = detail::require_k(spec);
      if (spec.slots < 1) throw UsageError("--slots must be >= 1");
      const GridConfig cfg = build_grid(spec.d, K);
      const Strictness strictness = spec.strict ? Strictness::strict : Strictness::permissive;
      auto go = [&]<typename S>(Engine<S> engine) -> CommandResult {
        std::optional<std::string> abort_reason;
        try {
          for (Slot k = 0; k < spec.slots; ++k) engine.step();
        } catch (const ConstructionError& e) {
          abort_reason = e.what();
        }
        const RunSummary s = engine.summary();
        const int status = s.violations > 0 ? exit_violation : exit_ok;
        return {status, simulate_json(s, spec.payload, spec.seed, spec.strict, abort_reason).dump(2) + "\n"};
      };
      if (spec.payload == PayloadMode::bit) return go(Engine<BitSymbol>(cfg, spec.seed, strictness));
      return go(Engine<CoeffSymbol>(cfg, spec.seed, strictness));
    }
  }
  throw UsageError("unknown command");
}

// Runs the spec and writes its output to spec.out (or `out` when empty).
// Errors go to `err`; the return value is the process exit status.
inline int execute(const RunSpec& spec, std::ostream& out, std::ostream& err) {
  CommandResult result;
  try {
    result = run_command(spec);
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << '\n';
    return exit_usage;
  }
  if (spec.out.empty()) {
    out << result.output;
  } else {
    std::ofstream file(spec.out, std::ios::binary | std::ios::trunc);
    file << result.output;
    if (!file) {
      err << "error: cannot write " << spec.out << '\n';
      return exit_usage;
    }
  }
  return result.status;
}

}  // namespace wnc
