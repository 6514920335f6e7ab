#pragma once

// Closed-form transmission counts, energy models and benefit ratios.
// Ratios are exact rationals until they are printed.

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "wnc/baseline.hpp"
#include "wnc/topology.hpp"

namespace wnc {

using Rational = boost::multiprecision::cpp_rational;

namespace detail {

inline BigInt big_pow(int base, int exp) {
  BigInt r = 1;
  for (int k = 0; k < exp; ++k) r *= base;
  return r;
}

inline void require_dk(int d, int K) {
  if (d < 1 || K < 2) throw std::invalid_argument("need d >= 1 and K >= 2");
}

}  // namespace detail

// (K-1)^d internal single transmissions plus 2d per border node.
inline BigInt nc_tx_per_slot(int d, int K) {
  detail::require_dk(d, K);
  const BigInt all = detail::big_pow(K + 1, d);
  const BigInt inner = detail::big_pow(K - 1, d);
  return inner + 2 * d * (all - inner);
}

inline BigInt routing_tx(int d, int K) {
  detail::require_dk(d, K);
  return routing_total(GridConfig{d, K});
}

inline Rational benefit_at(int d, int K) { return Rational(routing_tx(d, K), nc_tx_per_slot(d, K)); }

inline Rational benefit_limit(int d) {
  if (d < 1) throw std::invalid_argument("need d >= 1");
  return Rational(2 * d, hop_stride(d));
}

// Routing at range 1 (K hops, unit cost) against coding at range sqrt(d)
// (cost d^{alpha/2}); the K -> infinity limit is 2 d^{1 - alpha/2}.
inline double alt_model_benefit(int d, double alpha) {
  if (d < 1) throw std::invalid_argument("need d >= 1");
  if (alpha < 2) throw std::invalid_argument("path-loss exponent must be >= 2");
  return 2.0 * std::pow(static_cast<double>(d), 1.0 - alpha / 2.0);
}

inline double alt_model_benefit_at(int d, int K, double alpha) {
  if (alpha < 2) throw std::invalid_argument("path-loss exponent must be >= 2");
  const Rational hops(BigInt(2) * d * K * detail::big_pow(K + 1, d - 1), nc_tx_per_slot(d, K));
  return hops.convert_to<double>() / std::pow(static_cast<double>(d), alpha / 2.0);
}

struct EnergyModel {
  double c = 1.0;
  double alpha = 2.0;
  double range = 1.0;

  double per_transmission() const { return c * std::pow(range, alpha); }
};

inline EnergyModel make_energy_model(double c, double alpha, double range) {
  if (!(c > 0)) throw std::invalid_argument("energy constant must be positive");
  if (!(alpha >= 2)) throw std::invalid_argument("path-loss exponent must be >= 2");
  if (!(range > 0)) throw std::invalid_argument("range must be positive");
  return EnergyModel{c, alpha, range};
}

inline double energy_total(const EnergyModel& model, std::uint64_t tx_count) {
  return static_cast<double>(tx_count) * model.per_transmission();
}

enum class RangeModel : std::uint8_t { fixed_range, optimized_range };

inline const char* to_string(RangeModel m) noexcept {
  return m == RangeModel::fixed_range ? "fixed_range" : "optimized_range";
}

struct BenefitReport {
  int d = 1;
  int K = 2;
  BigInt routing_tx;
  BigInt nc_tx;
  Rational ratio;
  Rational limit;
  RangeModel model = RangeModel::fixed_range;
};

// Both solutions use range sqrt(d), so the energy constants cancel.
inline BenefitReport fixed_range_report(int d, int K) {
  BenefitReport r;
  r.d = d;
  r.K = K;
  r.routing_tx = routing_tx(d, K);
  r.nc_tx = nc_tx_per_slot(d, K);
  r.ratio = Rational(r.routing_tx, r.nc_tx);
  r.limit = benefit_limit(d);
  return r;
}

// Decimal string of a rational rounded half-up to `places` digits.
inline std::string to_fixed(const Rational& q, int places) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  BigInt scale = detail::big_pow(10, places);
  BigInt num = numerator(q);
  const BigInt den = denominator(q);
  const bool negative = num < 0;
  if (negative) num = -num;
  const BigInt scaled = (2 * num * scale + den) / (2 * den);
  const BigInt whole = scaled / scale;
  std::string frac = BigInt(scaled % scale).str();
  if (static_cast<int>(frac.size()) < places) frac.insert(0, static_cast<std::size_t>(places) - frac.size(), '0');
  std::string out = (negative && scaled != 0 ? "-" : "") + whole.str();
  if (places > 0) out += "." + frac;
  return out;
}

}  // namespace wnc
