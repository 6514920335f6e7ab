#include <gtest/gtest.h>

#include <random>

#include "wnc/symbols.hpp"

namespace wnc {
namespace {

const SourceTag A{0, 1}, B{1, 1}, C{0, 2};

TEST(Xor, Examples) {
  EXPECT_TRUE((CoeffSymbol{A} ^ CoeffSymbol{A}).is_zero());
  EXPECT_EQ(CoeffSymbol::from_tags({A, B}) ^ CoeffSymbol::from_tags({B, C}), CoeffSymbol::from_tags({A, C}));
  EXPECT_EQ(BitSymbol{true} ^ BitSymbol{true}, BitSymbol{false});
}

TEST(Xor, FromTagsCancelsPairs) {
  EXPECT_TRUE(CoeffSymbol::from_tags({A, A}).is_zero());
  EXPECT_EQ(CoeffSymbol::from_tags({A, B, A, A}), CoeffSymbol::from_tags({A, B}));
}

CoeffSymbol random_symbol(std::mt19937& rng) {
  std::uniform_int_distribution<int> size(0, 6), session(0, 4), gen(1, 5);
  std::vector<SourceTag> tags;
  for (int k = size(rng); k > 0; --k)
    tags.push_back({static_cast<SessionIndex>(session(rng)), static_cast<Generation>(gen(rng))});
  return CoeffSymbol::from_tags(tags);
}

TEST(Xor, GroupLaws) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    const auto a = random_symbol(rng), b = random_symbol(rng), c = random_symbol(rng);
    EXPECT_EQ((a ^ b) ^ c, a ^ (b ^ c));
    EXPECT_EQ(a ^ b, b ^ a);
    EXPECT_TRUE((a ^ a).is_zero());
    EXPECT_EQ(a ^ CoeffSymbol{}, a);
  }
}

TEST(Xor, EvaluationIsAHomomorphism) {
  std::mt19937 rng(11);
  auto bit_of = [](const SourceTag& t) { return source_bit(3, t.session, t.generation); };
  for (int trial = 0; trial < 500; ++trial) {
    const auto a = random_symbol(rng), b = random_symbol(rng);
    EXPECT_EQ((a ^ b).evaluate(bit_of), a.evaluate(bit_of) != b.evaluate(bit_of));
  }
}

TEST(SourceSymbol, ZeroBeforeFirstGeneration) {
  EXPECT_TRUE(source_symbol<CoeffSymbol>(0, 0, 0).is_zero());
  EXPECT_TRUE(source_symbol<CoeffSymbol>(0, 0, -3).is_zero());
  EXPECT_TRUE(source_symbol<BitSymbol>(9, 2, 0).is_zero());
}

TEST(SourceSymbol, CoeffSingleton) {
  const auto s = source_symbol<CoeffSymbol>(0, 4, 5);
  EXPECT_TRUE(s.is_exactly(SourceTag{4, 5}));
}

TEST(SourceSymbol, BitsDeterministicAndSeeded) {
  int ones = 0, seed_diffs = 0;
  for (Generation g = 1; g <= 2000; ++g) {
    EXPECT_EQ(source_symbol<BitSymbol>(5, 3, g), source_symbol<BitSymbol>(5, 3, g));
    ones += source_symbol<BitSymbol>(5, 3, g).bit();
    seed_diffs += source_symbol<BitSymbol>(5, 3, g) != source_symbol<BitSymbol>(6, 3, g);
  }
  // Roughly balanced and seed-dependent; loose bounds, 2000 draws.
  EXPECT_GT(ones, 850);
  EXPECT_LT(ones, 1150);
  EXPECT_GT(seed_diffs, 850);
}

TEST(IsExactly, Examples) {
  EXPECT_TRUE(CoeffSymbol{A}.is_exactly(A));
  EXPECT_FALSE(CoeffSymbol{}.is_exactly(A));
  EXPECT_FALSE(CoeffSymbol::from_tags({A, B}).is_exactly(A));
}

TEST(Payload, ModeChecks) {
  const Payload a{CoeffSymbol{A}}, b{CoeffSymbol{B}}, bit{BitSymbol{true}};
  EXPECT_EQ((a ^ b).as_coeff(), CoeffSymbol::from_tags({A, B}));
  EXPECT_THROW(a ^ bit, std::invalid_argument);
  EXPECT_TRUE(a.is_exactly(A));
  EXPECT_THROW(bit.is_exactly(A), std::logic_error);
  EXPECT_TRUE(Payload::zero(PayloadMode::bit).is_zero());
  EXPECT_TRUE(Payload::source(PayloadMode::coeff, 0, 1, 0).is_zero());
  EXPECT_EQ(Payload::source(PayloadMode::bit, 2, 1, 4).as_bit(), BitSymbol::source(2, 1, 4));
}

}  // namespace
}  // namespace wnc
