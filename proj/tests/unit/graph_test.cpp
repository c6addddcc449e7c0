// Copyright 2026 The cycsub Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"

#include "builders.hpp"
#include "cycsub/generate.hpp"
#include "cycsub/graph.hpp"
#include "cycsub/io.hpp"

namespace cs = cycsub;
using cs::Graph;
using cs::VertexPair;
using cs::VertexSet;

TEST_SUITE_BEGIN("graph");

TEST_CASE("vertex pair normalizes and rejects equal endpoints") {
  VertexPair p(4, 1);
  CHECK(p.first() == 1);
  CHECK(p.second() == 4);
  CHECK(p == VertexPair(1, 4));
  CHECK(p.contains(4));
  CHECK(p.other(4) == 1);
  CHECK_THROWS_AS(VertexPair(2, 2), cs::InputError);
}

TEST_CASE("vertex set canonicalizes to sorted unique members") {
  VertexSet s(std::vector<int>{3, 1, 3, 0});
  CHECK(s.members() == std::vector<int>{0, 1, 3});
  CHECK(s.size() == 3);
  CHECK(s.contains(1));
  CHECK_FALSE(s.contains(2));
  CHECK(s == VertexSet::of({0, 1, 3}));

  CHECK(VertexSet::of({0, 1}).subset_of(s));
  CHECK(s.subset_of(s));
  CHECK_FALSE(VertexSet::of({0, 2}).subset_of(s));
  CHECK(s.united_with(VertexSet::of({2, 3})) == VertexSet::of({0, 1, 2, 3}));
  CHECK(s.contains_pair(VertexPair(0, 3)));
  CHECK_FALSE(s.contains_pair(VertexPair(0, 2)));
}

TEST_CASE("graph construction deduplicates edges and rejects bad input") {
  Graph g(3, {{0, 1}, {1, 0}, {1, 2}});
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 2);
  CHECK(g.adjacent(0, 1));
  CHECK(g.adjacent(1, 0));
  CHECK_FALSE(g.adjacent(0, 2));
  CHECK(g.degree(1) == 2);

  CHECK_THROWS_AS(Graph(3, {{0, 0}}), cs::InputError);
  CHECK_THROWS_AS(Graph(3, {{0, 3}}), cs::InputError);
  CHECK_THROWS_AS(Graph(2, {{-1, 0}}), cs::InputError);
}

TEST_CASE("edge list parsing") {
  Graph k3 = cs::parse_edge_list("n 3\n0 1\n1 2\n0 2\n");
  CHECK(k3.vertex_count() == 3);
  CHECK(k3.edge_count() == 3);

  Graph c4 = cs::parse_edge_list("# a square\nn 4\n0 1\n1 2\n2 3\n3 0\n");
  CHECK(c4.edge_count() == 4);
  CHECK(c4.adjacent(3, 0));
  CHECK_FALSE(c4.adjacent(0, 2));

  SUBCASE("errors carry the offending line number") {
    CHECK_THROWS_WITH_AS(cs::parse_edge_list("n 2\n0 0\n"),
                         doctest::Contains("line 2"), cs::ParseError);
    CHECK_THROWS_WITH_AS(cs::parse_edge_list("n 2\n0 5\n"),
                         doctest::Contains("line 2"), cs::ParseError);
    CHECK_THROWS_WITH_AS(cs::parse_edge_list("n 2\n\n# x\n0 one\n"),
                         doctest::Contains("line 4"), cs::ParseError);
    CHECK_THROWS_AS(cs::parse_edge_list("3\n0 1\n"), cs::ParseError);
    CHECK_THROWS_AS(cs::parse_edge_list("n 2\n0 1 9\n"), cs::ParseError);
  }

  SUBCASE("duplicate edges collapse") {
    Graph g = cs::parse_edge_list("n 3\n0 1\n0 1\n1 0\n");
    CHECK(g.edge_count() == 1);
  }
}

TEST_CASE("dimacs parsing and format detection") {
  const char* dimacs = "c comment\np edge 4 2\ne 1 2\ne 3 4\n";
  Graph g = cs::parse_dimacs(dimacs);
  CHECK(g.vertex_count() == 4);
  CHECK(g.adjacent(0, 1));
  CHECK(g.adjacent(2, 3));
  CHECK(g.edge_count() == 2);

  // parse_graph picks the format from the first data line.
  CHECK(cs::parse_graph(dimacs).edge_count() == 2);
  CHECK(cs::parse_graph("n 3\n0 1\n").edge_count() == 1);

  CHECK_THROWS_AS(cs::parse_dimacs("p edge 2 1\ne 0 1\n"), cs::ParseError);
  CHECK_THROWS_AS(cs::parse_dimacs("e 1 2\n"), cs::ParseError);
}

TEST_CASE("edge list writing round-trips") {
  Graph g = cs::test::make_petersen();
  std::ostringstream os;
  cs::write_edge_list(os, g);
  Graph back = cs::parse_edge_list(os.str());
  CHECK(back.vertex_count() == g.vertex_count());
  CHECK(back.edges() == g.edges());
}

TEST_CASE("induced edges and complement pairs") {
  Graph k4 = cs::test::make_complete(4);
  auto ie = cs::induced_edges(k4, VertexSet::of({0, 1, 2}));
  CHECK(ie == std::vector<VertexPair>{{0, 1}, {0, 2}, {1, 2}});

  Graph c4 = cs::test::make_cycle(4);
  CHECK(cs::induced_edges(c4, VertexSet::of({0, 1, 2})) ==
        std::vector<VertexPair>{{0, 1}, {1, 2}});
  CHECK(cs::complement_pairs(c4, VertexSet::of({0, 1, 2})) ==
        std::vector<VertexPair>{{0, 2}});
  CHECK(cs::complement_pairs(k4, VertexSet::of({0, 1, 2})).empty());
  CHECK(cs::induced_edges(cs::test::make_edgeless(5), VertexSet::of({0, 3}))
            .empty());

  CHECK_THROWS_AS(cs::induced_edges(c4, VertexSet::of({0, 9})),
                  cs::InputError);
}

TEST_CASE("induced edges and complement pairs partition all pairs") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    Graph g = cs::gen_gnp(9, 0.4, rng());
    std::vector<int> vs;
    for (int v = 0; v < 9; ++v)
      if (rng() & 1) vs.push_back(v);
    VertexSet s(vs);
    auto ie = cs::induced_edges(g, s);
    auto cp = cs::complement_pairs(g, s);
    CHECK(ie.size() + cp.size() == s.size() * (s.size() - 1) / 2);
    std::set<VertexPair> seen(ie.begin(), ie.end());
    for (const VertexPair& p : cp) CHECK(seen.insert(p).second);
  }
}

TEST_CASE("induced cycle test") {
  CHECK(cs::induced_is_cycle(cs::test::make_cycle(5),
                             VertexSet::of({0, 1, 2, 3, 4})));
  CHECK_FALSE(cs::induced_is_cycle(cs::test::make_complete(4),
                                   VertexSet::of({0, 1, 2, 3})));
  CHECK_FALSE(
      cs::induced_is_cycle(cs::test::make_cycle(4), VertexSet::of({0, 1, 2})));
  CHECK_FALSE(cs::induced_is_cycle(cs::test::make_cycle(4),
                                   VertexSet::of({0, 1})));
  CHECK(cs::induced_is_cycle(cs::test::make_complete(3),
                             VertexSet::of({0, 1, 2})));

  // Two disjoint triangles: each is a cycle, their union is not.
  Graph two(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  CHECK(cs::induced_is_cycle(two, VertexSet::of({0, 1, 2})));
  CHECK_FALSE(cs::induced_is_cycle(two, VertexSet::of({0, 1, 2, 3, 4, 5})));
}

TEST_CASE("induced cycles have as many edges as vertices") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    Graph g = cs::gen_gnp(8, 0.5, rng());
    for (std::uint64_t mask = 0; mask < (1u << 8); ++mask) {
      std::vector<int> vs;
      for (int v = 0; v < 8; ++v)
        if (mask >> v & 1) vs.push_back(v);
      VertexSet s(vs);
      if (cs::induced_is_cycle(g, s))
        CHECK(cs::induced_edges(g, s).size() == s.size());
    }
  }
}

TEST_CASE("random graph generation") {
  CHECK(cs::gen_gnp(5, 0.0, 1).edge_count() == 0);
  CHECK(cs::gen_gnp(5, 1.0, 1).edge_count() == 10);

  Graph a = cs::gen_gnp(10, 0.3, 42);
  Graph b = cs::gen_gnp(10, 0.3, 42);
  CHECK(a.edges() == b.edges());
  // Pinned draw mapping: this sample is stable across platforms.
  CHECK(a.edge_count() == 15);
  CHECK(a.adjacent(0, 4));
  CHECK(a.adjacent(8, 9));

  CHECK(cs::gen_gnp(10, 0.3, 43).edges() != a.edges());
  CHECK_THROWS_AS(cs::gen_gnp(5, -0.1, 0), cs::InputError);
  CHECK_THROWS_AS(cs::gen_gnp(5, 1.5, 0), cs::InputError);
}

TEST_CASE("labeled graph enumeration") {
  CHECK(cs::labeled_graph_count(3) == 8);
  CHECK(cs::labeled_graph_count(4) == 64);
  CHECK(cs::labeled_graph_count(6) == 32768);

  std::set<std::vector<VertexPair>> seen;
  std::uint64_t expect_index = 0;
  cs::enumerate_labeled_graphs(4, [&](const Graph& g, std::uint64_t index) {
    CHECK(index == expect_index++);
    CHECK(g.vertex_count() == 4);
    CHECK(seen.insert(g.edges()).second);  // no duplicates
  });
  CHECK(seen.size() == 64);

  // Mask bit i toggles the i-th pair in lexicographic order.
  Graph g1 = cs::labeled_graph(4, 0b1);
  CHECK(g1.edges() == std::vector<VertexPair>{{0, 1}});
  Graph g2 = cs::labeled_graph(4, 0b100000);
  CHECK(g2.edges() == std::vector<VertexPair>{{2, 3}});

  CHECK_THROWS_AS(cs::enumerate_labeled_graphs(7, [](const Graph&,
                                                     std::uint64_t) {}),
                  cs::InputError);
  std::size_t count = 0;
  cs::enumerate_labeled_graphs(
      4, [&](const Graph&, std::uint64_t) { ++count; }, 4);
  CHECK(count == 64);
}

TEST_SUITE_END();
