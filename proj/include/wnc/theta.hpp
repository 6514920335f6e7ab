#pragma once

// Delay-offset sets Theta_0..Theta_d over {1, ..., 2d}.
//
// Theta_d = {d}. Going down, the indicator vector of Theta_delta is the GF(2)
// sum of the left and right shift of Theta_{delta+1}'s indicator; entries
// shifted past index 1 or 2d are dropped. Left moves toward index 1.

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

namespace wnc {

class ThetaTable {
 public:
  ThetaTable() = default;
  ThetaTable(int dim, std::vector<std::vector<int>> sets) : dim_(dim), sets_(std::move(sets)) {}

  int dim() const noexcept { return dim_; }
  // Sorted members of Theta_delta.
  const std::vector<int>& operator[](int delta) const { return sets_.at(static_cast<std::size_t>(delta)); }
  const std::vector<std::vector<int>>& sets() const noexcept { return sets_; }

  friend bool operator==(const ThetaTable&, const ThetaTable&) = default;

 private:
  int dim_ = 0;
  std::vector<std::vector<int>> sets_;
};

inline ThetaTable build_theta(int d) {
  if (d < 1) throw std::invalid_argument("theta dimension must be >= 1, got " + std::to_string(d));
  const int width = 2 * d;
  // indicator[k] for k in 1..2d; index 0 unused.
  std::vector<std::vector<bool>> ind(static_cast<std::size_t>(d + 1), std::vector<bool>(width + 1, false));
  ind[static_cast<std::size_t>(d)][static_cast<std::size_t>(d)] = true;
  for (int delta = d - 1; delta >= 0; --delta) {
    const auto& up = ind[static_cast<std::size_t>(delta + 1)];
    auto& cur = ind[static_cast<std::size_t>(delta)];
    for (int k = 1; k <= width; ++k) {
      const bool from_right = k + 1 <= width && up[static_cast<std::size_t>(k + 1)];  // shift left
      const bool from_left = k - 1 >= 1 && up[static_cast<std::size_t>(k - 1)];       // shift right
      cur[static_cast<std::size_t>(k)] = from_right != from_left;
    }
  }
  std::vector<std::vector<int>> sets(static_cast<std::size_t>(d + 1));
  for (int delta = 0; delta <= d; ++delta)
    for (int k = 1; k <= width; ++k)
      if (ind[static_cast<std::size_t>(delta)][static_cast<std::size_t>(k)]) sets[static_cast<std::size_t>(delta)].push_back(k);
  return ThetaTable(d, std::move(sets));
}

// Shared per-dimension cache.
inline const ThetaTable& cached_theta(int d) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<ThetaTable>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[d];
  if (!slot) slot = std::make_unique<ThetaTable>(build_theta(d));
  return *slot;
}

// Offsets k with odd multiplicity in
//   {tau+1 : tau in Theta_{delta+1}} + Theta_delta + {tau-1 : tau in Theta_{delta+1}},
// i.e. the surviving terms y_{t-k} of the telescoping sum. Sorted.
inline std::vector<int> theta_identity_residual(const ThetaTable& table, int delta) {
  if (delta < 0 || delta > table.dim() - 1)
    throw std::out_of_range("theta identity needs 0 <= delta <= d-1, got " + std::to_string(delta));
  std::map<int, int> count;
  for (int tau : table[delta + 1]) {
    ++count[tau + 1];
    ++count[tau - 1];
  }
  for (int tau : table[delta]) ++count[tau];
  std::vector<int> out;
  for (auto [k, n] : count)
    if (n % 2 == 1) out.push_back(k);
  return out;
}

// Residual must be empty for delta > 0 and exactly y_t (offset 0) for delta = 0.
inline bool check_theta_identity(const ThetaTable& table, int delta) {
  const auto residual = theta_identity_residual(table, delta);
  if (delta == 0) return residual == std::vector<int>{0};
  return residual.empty();
}

}  // namespace wnc
