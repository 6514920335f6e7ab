#pragma once

// GF(2) symbol algebra.
//
// Two representations share one interface (the Symbol concept):
//   BitSymbol   - the actual transmitted bit, sources drawn from a seeded PRF;
//   CoeffSymbol - the exact coefficient vector, a set of (session, generation)
//                 source tags. Addition is symmetric difference.
// Generations <= 0 are the zero symbol and never appear as tags.

#include <algorithm>
#include <compare>
#include <concepts>
#include <cstdint>
#include <iterator>
#include <ostream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "wnc/topology.hpp"

namespace wnc {

using Generation = std::int64_t;

struct SourceTag {
  SessionIndex session = 0;
  Generation generation = 1;

  friend auto operator<=>(const SourceTag&, const SourceTag&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const SourceTag& tag) {
  return os << "(s" << tag.session << ",g" << tag.generation << ")";
}

// Pseudorandom source bit for (seed, session, generation); splitmix64 finalizer
// over a mixed key.
inline bool source_bit(std::uint64_t seed, SessionIndex session, Generation generation) {
  std::uint64_t z = seed * 0x9e3779b97f4a7c15ull;
  z ^= (static_cast<std::uint64_t>(session) << 32) ^ static_cast<std::uint64_t>(generation);
  z += 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  z ^= z >> 31;
  return (z & 1u) != 0;
}

class BitSymbol {
 public:
  BitSymbol() = default;
  explicit BitSymbol(bool bit) : bit_(bit) {}

  static BitSymbol source(std::uint64_t seed, SessionIndex session, Generation generation) {
    if (generation <= 0) return BitSymbol{};
    return BitSymbol{source_bit(seed, session, generation)};
  }

  bool bit() const noexcept { return bit_; }
  bool is_zero() const noexcept { return !bit_; }

  BitSymbol& operator^=(const BitSymbol& other) noexcept {
    bit_ = bit_ != other.bit_;
    return *this;
  }
  friend BitSymbol operator^(BitSymbol a, const BitSymbol& b) noexcept { return a ^= b; }
  friend bool operator==(const BitSymbol&, const BitSymbol&) = default;

  std::string describe() const { return bit_ ? "1" : "0"; }

 private:
  bool bit_ = false;
};

class CoeffSymbol {
 public:
  CoeffSymbol() = default;
  explicit CoeffSymbol(SourceTag tag) : tags_{tag} {}

  // Builds a symbol from an arbitrary tag list; repeated tags cancel in pairs.
  static CoeffSymbol from_tags(std::vector<SourceTag> tags) {
    std::sort(tags.begin(), tags.end());
    CoeffSymbol out;
    for (std::size_t k = 0; k < tags.size();) {
      std::size_t j = k;
      while (j < tags.size() && tags[j] == tags[k]) ++j;
      if ((j - k) % 2 == 1) out.tags_.push_back(tags[k]);
      k = j;
    }
    return out;
  }

  static CoeffSymbol source(std::uint64_t /*seed*/, SessionIndex session, Generation generation) {
    if (generation <= 0) return CoeffSymbol{};
    return CoeffSymbol{SourceTag{session, generation}};
  }

  std::span<const SourceTag> tags() const noexcept { return tags_; }
  std::size_t size() const noexcept { return tags_.size(); }
  bool is_zero() const noexcept { return tags_.empty(); }
  bool is_exactly(const SourceTag& tag) const noexcept { return tags_.size() == 1 && tags_.front() == tag; }

  CoeffSymbol& operator^=(const CoeffSymbol& other) {
    if (other.tags_.empty()) return *this;
    if (tags_.empty()) {
      tags_ = other.tags_;
      return *this;
    }
    std::vector<SourceTag> out;
    out.reserve(tags_.size() + other.tags_.size());
    std::set_symmetric_difference(tags_.begin(), tags_.end(), other.tags_.begin(), other.tags_.end(),
                                  std::back_inserter(out));
    tags_ = std::move(out);
    return *this;
  }
  friend CoeffSymbol operator^(CoeffSymbol a, const CoeffSymbol& b) { return a ^= b; }
  friend bool operator==(const CoeffSymbol&, const CoeffSymbol&) = default;

  // Value of the combination under an assignment of bits to tags.
  template <typename BitOf>
  bool evaluate(BitOf&& bit_of) const {
    bool acc = false;
    for (const auto& tag : tags_) acc = acc != static_cast<bool>(bit_of(tag));
    return acc;
  }

  // Applies a tag -> tag map (e.g. mirror session relabeling).
  template <typename Map>
  CoeffSymbol relabeled(Map&& map) const {
    std::vector<SourceTag> out;
    out.reserve(tags_.size());
    for (const auto& tag : tags_) out.push_back(map(tag));
    return from_tags(std::move(out));
  }

  std::string describe() const {
    std::ostringstream os;
    os << '{';
    for (std::size_t k = 0; k < tags_.size(); ++k) os << (k ? "," : "") << tags_[k];
    os << '}';
    return os.str();
  }

 private:
  std::vector<SourceTag> tags_;  // sorted, unique
};

inline std::ostream& operator<<(std::ostream& os, const CoeffSymbol& s) { return os << s.describe(); }
inline std::ostream& operator<<(std::ostream& os, const BitSymbol& s) { return os << s.describe(); }

template <typename S>
concept Symbol = std::regular<S> && requires(S a, const S b, std::uint64_t seed, SessionIndex s, Generation g) {
  { a ^= b } -> std::same_as<S&>;
  { b.is_zero() } -> std::convertible_to<bool>;
  { S::source(seed, s, g) } -> std::same_as<S>;
  { b.describe() } -> std::convertible_to<std::string>;
};

static_assert(Symbol<BitSymbol>);
static_assert(Symbol<CoeffSymbol>);

// Seeded source stream: x_t of a session, zero for t <= 0.
template <Symbol S>
S source_symbol(std::uint64_t seed, SessionIndex session, Generation t) {
  return S::source(seed, session, t);
}

enum class PayloadMode : std::uint8_t { bit, coeff };

// Runtime-tagged symbol for callers that pick the mode dynamically.
class Payload {
 public:
  Payload() = default;
  Payload(BitSymbol b) : value_(b) {}
  Payload(CoeffSymbol c) : value_(std::move(c)) {}

  static Payload zero(PayloadMode mode) {
    return mode == PayloadMode::bit ? Payload{BitSymbol{}} : Payload{CoeffSymbol{}};
  }
  static Payload source(PayloadMode mode, std::uint64_t seed, SessionIndex session, Generation t) {
    if (mode == PayloadMode::bit) return Payload{BitSymbol::source(seed, session, t)};
    return Payload{CoeffSymbol::source(seed, session, t)};
  }

  PayloadMode mode() const noexcept {
    return std::holds_alternative<BitSymbol>(value_) ? PayloadMode::bit : PayloadMode::coeff;
  }
  bool is_zero() const {
    return std::visit([](const auto& s) { return s.is_zero(); }, value_);
  }
  const BitSymbol& as_bit() const { return std::get<BitSymbol>(value_); }
  const CoeffSymbol& as_coeff() const { return std::get<CoeffSymbol>(value_); }

  bool is_exactly(const SourceTag& tag) const {
    if (mode() != PayloadMode::coeff) throw std::logic_error("is_exactly needs a coefficient-mode payload");
    return as_coeff().is_exactly(tag);
  }

  friend Payload operator^(const Payload& a, const Payload& b) {
    if (a.mode() != b.mode()) throw std::invalid_argument("xor of payloads with different modes");
    if (a.mode() == PayloadMode::bit) return Payload{a.as_bit() ^ b.as_bit()};
    return Payload{a.as_coeff() ^ b.as_coeff()};
  }
  friend bool operator==(const Payload&, const Payload&) = default;

 private:
  std::variant<BitSymbol, CoeffSymbol> value_;
};

}  // namespace wnc
