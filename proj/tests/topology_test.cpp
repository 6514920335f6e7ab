#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "wnc/topology.hpp"

namespace wnc {
namespace {

// Brute-force enumeration of {0..K}^d, independent of for_each_point.
std::vector<Coord> all_points(int d, int K) {
  std::vector<Coord> out{Coord{}};
  for (int k = 0; k < d; ++k) {
    std::vector<Coord> next;
    for (const auto& p : out)
      for (int c = 0; c <= K; ++c) {
        Coord q = p;
        q.push_back(c);
        next.push_back(q);
      }
    out = std::move(next);
  }
  return out;
}

TEST(BuildGrid, CountsMatchEnumeration) {
  for (auto [d, K] : {std::pair{2, 3}, {1, 2}, {3, 4}, {4, 2}}) {
    const auto cfg = build_grid(d, K);
    const auto pts = all_points(d, K);
    const auto internal = std::count_if(pts.begin(), pts.end(), [&](const Coord& v) {
      return std::all_of(v.begin(), v.end(), [&](int c) { return 0 < c && c < K; });
    });
    EXPECT_EQ(cfg.node_count(), pts.size());
    EXPECT_EQ(cfg.internal_count(), static_cast<std::uint64_t>(internal));
    EXPECT_EQ(cfg.border_count(), pts.size() - static_cast<std::size_t>(internal));
  }
}

TEST(BuildGrid, Examples) {
  auto g = build_grid(2, 3);
  EXPECT_EQ(g.node_count(), 16u);
  EXPECT_DOUBLE_EQ(g.range(), std::sqrt(2.0));
  EXPECT_EQ(g.internal_count(), 4u);

  g = build_grid(1, 2);
  EXPECT_EQ(g.node_count(), 3u);
  EXPECT_DOUBLE_EQ(g.range(), 1.0);
  EXPECT_EQ(g.internal_count(), 1u);

  g = build_grid(3, 4);
  EXPECT_EQ(g.node_count(), 125u);
  EXPECT_EQ(g.internal_count(), 27u);
  EXPECT_EQ(g.border_count(), 98u);
}

TEST(BuildGrid, RejectsBadParameters) {
  EXPECT_THROW(build_grid(0, 3), std::invalid_argument);
  EXPECT_THROW(build_grid(2, 1), std::invalid_argument);
  EXPECT_THROW(build_grid(-1, 5), std::invalid_argument);
}

TEST(IsBorder, Examples) {
  EXPECT_FALSE(is_border(build_grid(2, 3), {1, 1}));
  EXPECT_TRUE(is_border(build_grid(2, 3), {0, 2}));
  EXPECT_TRUE(is_border(build_grid(3, 4), {4, 2, 1}));
  EXPECT_THROW(is_border(build_grid(2, 3), {4, 0}), std::invalid_argument);
}

TEST(IsBorder, MatchesDefinitionEverywhere) {
  for (auto [d, K] : {std::pair{1, 4}, {2, 3}, {3, 2}, {3, 5}}) {
    const auto cfg = build_grid(d, K);
    for (const auto& v : all_points(d, K)) {
      bool inside = true;
      for (int c : v) inside = inside && 0 < c && c < K;
      EXPECT_EQ(is_border(cfg, v), !inside);
    }
  }
}

TEST(RangeNeighbors, Examples) {
  const auto g2 = build_grid(2, 3);
  EXPECT_EQ(range_neighbors(g2, {0, 0}), (std::vector<Coord>{{0, 1}, {1, 0}, {1, 1}}));
  EXPECT_EQ(range_neighbors(g2, {1, 1}).size(), 8u);
  EXPECT_EQ(range_neighbors(build_grid(3, 4), {2, 2, 2}).size(), 26u);
}

TEST(RangeNeighbors, MatchesEuclideanBruteForce) {
  for (auto [d, K] : {std::pair{1, 3}, {2, 3}, {3, 3}, {4, 4}}) {
    const auto cfg = build_grid(d, K);
    const auto pts = all_points(d, K);
    for (const auto& v : pts) {
      std::vector<Coord> expected;
      for (const auto& u : pts) {
        double s = 0;
        for (int k = 0; k < d; ++k) s += (u[k] - v[k]) * (u[k] - v[k]);
        if (u != v && std::sqrt(s) <= std::sqrt(static_cast<double>(d)) + 1e-12) expected.push_back(u);
      }
      ASSERT_EQ(range_neighbors(cfg, v), expected);
    }
  }
}

TEST(CodingNeighborhood, Examples) {
  const auto g = build_grid(2, 3);
  EXPECT_EQ(coding_neighborhood(g, {1, 1}).size(), 9u);
  EXPECT_EQ(coding_neighborhood(g, {1, 3}),
            (std::vector<Coord>{{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 2}, {2, 3}}));
  EXPECT_EQ(coding_neighborhood(build_grid(1, 5), {3}), (std::vector<Coord>{{2}, {3}, {4}}));
}

TEST(CodingNeighborhood, SizeProductAndContainment) {
  for (auto [d, K] : {std::pair{1, 2}, {2, 3}, {3, 3}, {4, 2}}) {
    const auto cfg = build_grid(d, K);
    for (const auto& v : all_points(d, K)) {
      std::size_t expected = 1;
      for (int c : v) expected *= 1 + (c > 0 ? 1 : 0) + (c < K ? 1 : 0);
      const auto nb = coding_neighborhood(cfg, v);
      EXPECT_EQ(nb.size(), expected);
      if (!is_border(cfg, v)) {
        std::size_t full = 1;
        for (int k = 0; k < d; ++k) full *= 3;
        EXPECT_EQ(nb.size(), full);
      }
      auto range = range_neighbors(cfg, v);
      range.push_back(v);
      const std::set<Coord> reach(range.begin(), range.end());
      for (const auto& u : nb) EXPECT_TRUE(reach.count(u));
    }
  }
}

TEST(ManhattanDist, Examples) {
  EXPECT_EQ(manhattan_dist({0, 0}, {1, 1}), 2);
  EXPECT_EQ(manhattan_dist({1, 3}, {1, 3}), 0);
  EXPECT_EQ(manhattan_dist({2, 0, 4}, {1, 1, 4}), 2);
  EXPECT_THROW(manhattan_dist({1}, {1, 2}), std::invalid_argument);
}

TEST(BuildSessions, CountsAndEndpoints) {
  EXPECT_EQ(build_sessions(build_grid(2, 3)).size(), 16u);
  EXPECT_EQ(build_sessions(build_grid(3, 3)).size(), 96u);

  const auto line = build_sessions(build_grid(1, 5));
  ASSERT_EQ(line.size(), 2u);
  EXPECT_EQ(line[0].source, Coord{0});
  EXPECT_EQ(line[0].receiver, Coord{5});
  EXPECT_EQ(line[0].direction, Direction::forward);
  EXPECT_EQ(line[1].source, Coord{5});
  EXPECT_EQ(line[1].receiver, Coord{0});
}

TEST(BuildSessions, ForwardAxisOneRunsAlongRows) {
  // Axis 1 forward sessions on the 4x4 grid: (0,v) -> (3,v) for every v.
  const auto cfg = build_grid(2, 3);
  int seen = 0;
  for (const auto& s : build_sessions(cfg)) {
    if (s.axis != 1 || s.direction != Direction::forward) continue;
    EXPECT_EQ(s.source, (Coord{0, s.transverse[0]}));
    EXPECT_EQ(s.receiver, (Coord{3, s.transverse[0]}));
    ++seen;
  }
  EXPECT_EQ(seen, 4);
}

TEST(BuildSessions, EndpointsDifferInOneAxisByK) {
  for (auto [d, K] : {std::pair{1, 2}, {2, 4}, {3, 3}}) {
    const auto cfg = build_grid(d, K);
    const auto sessions = build_sessions(cfg);
    EXPECT_EQ(sessions.size(), cfg.session_count());
    for (const auto& s : sessions) {
      int differing = 0;
      for (int k = 0; k < d; ++k)
        if (s.source[k] != s.receiver[k]) {
          ++differing;
          EXPECT_EQ(k, s.axis - 1);
          EXPECT_EQ(std::abs(s.source[k] - s.receiver[k]), K);
        }
      EXPECT_EQ(differing, 1);
      EXPECT_EQ(drop_axis(s.source, s.axis), s.transverse);
      const int want_source = s.direction == Direction::forward ? 0 : K;
      EXPECT_EQ(s.source[s.axis - 1], want_source);
    }
  }
}

TEST(BuildSessions, CanonicalOrderAndIndex) {
  const auto cfg = build_grid(3, 2);
  const auto sessions = build_sessions(cfg);
  for (std::size_t k = 0; k < sessions.size(); ++k) {
    const auto& s = sessions[k];
    EXPECT_EQ(session_index(cfg, s.axis, s.transverse, s.direction), k);
    if (k > 0) {
      const auto& p = sessions[k - 1];
      EXPECT_TRUE(std::tie(p.axis, p.transverse, p.direction) < std::tie(s.axis, s.transverse, s.direction));
    }
  }
}

TEST(Mirror, Examples) {
  const auto cfg = build_grid(2, 3);
  EXPECT_EQ(mirror(cfg, {0, 2}), (Coord{3, 1}));
  // Source of x(1,(2)) maps to the source of xbar(1,(1)).
  const auto sessions = build_sessions(cfg);
  const auto fwd = std::find_if(sessions.begin(), sessions.end(), [](const Session& s) {
    return s.axis == 1 && s.transverse == Coord{2} && s.direction == Direction::forward;
  });
  const auto bwd = std::find_if(sessions.begin(), sessions.end(), [](const Session& s) {
    return s.axis == 1 && s.transverse == Coord{1} && s.direction == Direction::backward;
  });
  EXPECT_EQ(fwd->source, (Coord{0, 2}));
  EXPECT_EQ(mirror(cfg, fwd->source), bwd->source);
  EXPECT_EQ(mirror(cfg, fwd->receiver), bwd->receiver);
}

TEST(Mirror, InvolutionAndSessionMapping) {
  for (auto [d, K] : {std::pair{1, 4}, {2, 3}, {3, 2}}) {
    const auto cfg = build_grid(d, K);
    const Topology topo(cfg);
    for (const auto& v : all_points(d, K)) {
      EXPECT_EQ(mirror(cfg, mirror(cfg, v)), v);
      EXPECT_EQ(topo.mirror(topo.index(v)), topo.index(mirror(cfg, v)));
    }
    std::set<std::tuple<int, Coord, Direction, Coord, Coord>> all;
    for (const auto& s : topo.sessions()) all.insert({s.axis, s.transverse, s.direction, s.source, s.receiver});
    for (SessionIndex k = 0; k < topo.sessions().size(); ++k) {
      const auto& s = topo.session(k);
      const auto& m = topo.session(topo.mirror_session(k));
      EXPECT_EQ(m.direction, flip(s.direction));
      EXPECT_EQ(m.source, mirror(cfg, s.source));
      EXPECT_EQ(m.receiver, mirror(cfg, s.receiver));
      EXPECT_TRUE(all.count({m.axis, m.transverse, m.direction, m.source, m.receiver}));
    }
  }
}

TEST(Topology, IndexRoundTripAndLexicographicOrder) {
  const auto cfg = build_grid(3, 3);
  const Topology topo(cfg);
  const auto pts = all_points(3, 3);
  ASSERT_EQ(topo.node_count(), pts.size());
  for (NodeIndex n = 0; n < pts.size(); ++n) {
    EXPECT_EQ(topo.coord(n), pts[n]);
    EXPECT_EQ(topo.index(pts[n]), n);
  }
}

}  // namespace
}  // namespace wnc
