#include <random>
#include <stdexcept>

#include "doctest.h"
#include "oracles.hpp"
#include "testutil.hpp"
#include "treelike/generators.hpp"
#include "treelike/median.hpp"

using namespace treelike;
using testutil::bits;

TEST_CASE("6-cycle is rejected with the least witness") {
  auto cert = check_median(testutil::cycle_graph(6));
  REQUIRE_FALSE(cert.accepted);
  REQUIRE(cert.witness.has_value());
  CHECK(cert.witness->x == 0);
  CHECK(cert.witness->y == 2);
  CHECK(cert.witness->z == 4);
  CHECK(cert.witness->intersection.none());
}

TEST_CASE("K_2_3 is rejected") {
  // parts {0,1} and {2,3,4}; the first failing triple is the far part,
  // whose pairwise intervals all pass through both near vertices
  auto cert = check_median(testutil::complete_bipartite(2, 3));
  REQUIRE_FALSE(cert.accepted);
  REQUIRE(cert.witness.has_value());
  CHECK(cert.witness->x == 2);
  CHECK(cert.witness->y == 3);
  CHECK(cert.witness->z == 4);
  CHECK(cert.witness->intersection == bits(5, {0, 1}));
}

TEST_CASE("Q_3 is accepted") {
  CHECK(check_median(hypercube_graph(3)).accepted);
}

TEST_CASE("single edge is accepted") {
  CHECK(check_median(testutil::path_graph(2)).accepted);
}

TEST_CASE("check_median rejects disconnected input") {
  CHECK_THROWS_AS(check_median(Graph::from_edges(3, {{0, 1}})), std::invalid_argument);
}

TEST_CASE("recognition agrees with the independent triple check") {
  std::mt19937 gen(21);
  for (int trial = 0; trial < 40; ++trial) {
    Graph g = oracles::random_connected_graph(9, static_cast<int>(gen() % 8), gen());
    auto cert = check_median(g);
    auto ref = oracles::median_triple_check(g);
    CHECK(cert.accepted == ref.accepted);
    if (!cert.accepted) {
      CHECK(cert.witness->x == ref.x);
      CHECK(cert.witness->y == ref.y);
      CHECK(cert.witness->z == ref.z);
    }
  }
}

TEST_CASE("MedianGraph::verify throws with the witness") {
  try {
    MedianGraph::verify(testutil::cycle_graph(6));
    FAIL("expected NotMedianError");
  } catch (const NotMedianError& e) {
    CHECK(e.witness.x == 0);
    CHECK(e.witness.y == 2);
    CHECK(e.witness.z == 4);
  }
}

TEST_CASE("median is idempotent in two arguments") {
  MedianGraph m = MedianGraph::verify(grid_graph(3, 3));
  for (int x = 0; x < 9; ++x)
    for (int y = 0; y < 9; ++y) CHECK(median_vertex(m, x, x, y) == x);
}

TEST_CASE("median of grid corners") {
  // id = row * 3 + col: median of (0,1), (1,0), (2,2) is (1,1)
  MedianGraph m = MedianGraph::verify(grid_graph(3, 3));
  CHECK(median_vertex(m, 1, 3, 8) == 4);
}

TEST_CASE("median on a tree path is the middle vertex") {
  MedianGraph m = MedianGraph::verify(testutil::path_graph(3));
  CHECK(median_vertex(m, 0, 1, 2) == 1);
}

TEST_CASE("cone on a path") {
  Graph g = testutil::path_graph(3);
  CHECK(cone(g, 0, 1) == bits(3, {1, 2}));
}

TEST_CASE("cone at x away from x is the whole component") {
  Graph g = Graph::from_edges(4, {{0, 1}, {1, 2}});
  CHECK(cone(g, 1, 1) == bits(4, {0, 1, 2}));
  CHECK(cone(g, 0, 3).none());
}

TEST_CASE("cone on a square") {
  Graph g = testutil::cycle_graph(4);
  CHECK(cone(g, 0, 1) == bits(4, {1, 2}));
}

TEST_CASE("gate projection fixes members") {
  MedianGraph m = MedianGraph::verify(grid_graph(3, 3));
  Bitset a = bits(9, {2, 5, 8});
  for (int x = a.first(); x >= 0; x = a.next(x)) CHECK(gate_projection(m, a, x) == x);
}

TEST_CASE("gate projection onto a grid column") {
  // projection of mid-left (1,0) onto the right column lands at (1,2)
  MedianGraph m = MedianGraph::verify(grid_graph(3, 3));
  CHECK(gate_projection(m, bits(9, {2, 5, 8}), 3) == 5);
}

TEST_CASE("gate projection onto a singleton") {
  MedianGraph m = MedianGraph::verify(random_tree_graph(12, 4));
  for (int x = 0; x < 12; ++x) CHECK(gate_projection(m, bits(12, {7}), x) == 7);
}

TEST_CASE("gate projection rejects the empty set") {
  MedianGraph m = MedianGraph::verify(testutil::path_graph(3));
  CHECK_THROWS_AS(gate_projection(m, Bitset(3), 0), std::invalid_argument);
}

TEST_CASE("gate characterization: projection lies in every interval") {
  MedianGraph m = MedianGraph::verify(hypercube_graph(4));
  const Graph& g = m.graph();
  std::mt19937 gen(8);
  for (int trial = 0; trial < 20; ++trial) {
    Bitset seedset(16);
    for (int k = 0; k < 3; ++k) seedset.set(static_cast<int>(gen() % 16));
    Bitset a = convex_hull(m, seedset);
    for (int x = 0; x < 16; ++x) {
      int p = gate_projection(m, a, x);
      for (int v = a.first(); v >= 0; v = a.next(v)) CHECK(interval(g, x, v).test(p));
    }
  }
}

TEST_CASE("projection is a median homomorphism") {
  MedianGraph m = MedianGraph::verify(grid_graph(3, 4));
  Bitset a = convex_hull(m, bits(12, {1, 6}));
  std::mt19937 gen(17);
  for (int trial = 0; trial < 60; ++trial) {
    int x = static_cast<int>(gen() % 12), y = static_cast<int>(gen() % 12), z = static_cast<int>(gen() % 12);
    int lhs = gate_projection(m, a, median_vertex(m, x, y, z));
    int rhs = median_vertex(m, gate_projection(m, a, x), gate_projection(m, a, y), gate_projection(m, a, z));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("meet law for intervals") {
  MedianGraph m = MedianGraph::verify(hypercube_graph(3));
  const Graph& g = m.graph();
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y)
      for (int z = 0; z < 8; ++z) {
        Bitset lhs = interval(g, x, y) & interval(g, x, z);
        CHECK(lhs == interval(g, x, median_vertex(m, x, y, z)));
      }
}

TEST_CASE("projections onto intersecting convex sets commute") {
  MedianGraph m = MedianGraph::verify(grid_graph(4, 4));
  // two overlapping bands of columns
  Bitset a(16), b(16);
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) {
      if (c <= 2) a.set(r * 4 + c);
      if (c >= 2) b.set(r * 4 + c);
    }
  Bitset both = a & b;
  for (int x = 0; x < 16; ++x) {
    int ab = gate_projection(m, a, gate_projection(m, b, x));
    int ba = gate_projection(m, b, gate_projection(m, a, x));
    int meet = gate_projection(m, both, x);
    CHECK(ab == meet);
    CHECK(ba == meet);
  }
}

TEST_CASE("Helly property via brute intersection") {
  MedianGraph m = MedianGraph::verify(grid_graph(4, 4));
  std::mt19937 gen(31);
  int found = 0;
  while (found < 10) {
    Bitset sets[3];
    for (auto& s : sets) {
      Bitset seeds(16);
      seeds.set(static_cast<int>(gen() % 16));
      seeds.set(static_cast<int>(gen() % 16));
      s = convex_hull(m, seeds);
    }
    bool pairwise = sets[0].intersects(sets[1]) && sets[1].intersects(sets[2]) && sets[0].intersects(sets[2]);
    if (!pairwise) continue;
    ++found;
    CHECK((sets[0] & sets[1] & sets[2]).any());
  }
}

TEST_CASE("hull of a singleton") {
  MedianGraph m = MedianGraph::verify(testutil::path_graph(4));
  CHECK(convex_hull(m, bits(4, {2})) == bits(4, {2}));
}

TEST_CASE("hull of opposite square corners") {
  MedianGraph m = MedianGraph::verify(testutil::cycle_graph(4));
  CHECK(convex_hull(m, bits(4, {0, 2})) == Bitset::full(4));
}

TEST_CASE("hull is idempotent") {
  MedianGraph m = MedianGraph::verify(grid_graph(3, 3));
  std::mt19937 gen(41);
  for (int trial = 0; trial < 20; ++trial) {
    Bitset a(9);
    for (int v = 0; v < 9; ++v)
      if (gen() & 1) a.set(v);
    Bitset h = convex_hull(m, a);
    CHECK(convex_hull(m, h) == h);
    CHECK(is_convex(m.graph(), h).convex);
    CHECK(a.is_subset_of(h));
  }
}

TEST_CASE("gate projection result is order independent") {
  // uniqueness: nearest point of the convex set, cross-checked by distance
  MedianGraph m = MedianGraph::verify(grid_graph(4, 3));
  const Graph& g = m.graph();
  Bitset a = convex_hull(m, bits(12, {0, 7}));
  for (int x = 0; x < 12; ++x) {
    int p = gate_projection(m, a, x);
    for (int v = a.first(); v >= 0; v = a.next(v)) {
      if (v != p) CHECK(g.dist(x, v) > g.dist(x, p));
    }
  }
}
