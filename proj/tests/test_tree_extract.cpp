#include <algorithm>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "testutil.hpp"
#include "treelike/generators.hpp"
#include "treelike/tree_extract.hpp"

using namespace treelike;

namespace {

Arrangement arr_of(Graph g) { return Arrangement::build(MedianGraph::verify(std::move(g))); }

// first closure from the seed scan that passes recognition
Graph closure_sample(int dim, int seeds) {
  for (uint32_t s = 1000;; ++s) {
    try {
      Graph g = median_closure_graph(dim, seeds, s);
      MedianGraph::verify(g);
      return g;
    } catch (const std::exception&) {
    }
  }
}

bool proper(const Arrangement& arr, const HalfspaceColoring& c) {
  for (int i = 0; i < arr.pair_count(); ++i) {
    for (int j = i + 1; j < arr.pair_count(); ++j) {
      if (arr.classes()[i].total_boundary.intersects(arr.classes()[j].total_boundary) &&
          c.color_of_pair[i] == c.color_of_pair[j]) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace

TEST_CASE("greedy coloring separates touching hyperplanes") {
  Arrangement path = arr_of(testutil::path_graph(5));
  HalfspaceColoring c = color_halfspaces(path);
  CHECK(c.color_of_pair == std::vector<int>{0, 1, 0, 1});
  CHECK(c.color_count == 2);

  Arrangement cube = arr_of(hypercube_graph(3));
  HalfspaceColoring cc = color_halfspaces(cube);
  CHECK(cc.color_count == 3);  // all three boundaries meet

  CHECK(color_halfspaces(arr_of(Graph::from_edges(1, {}))).color_count == 0);

  for (Graph g : {grid_graph(3, 4), staircase_graph(4), closure_sample(6, 6)}) {
    Arrangement arr = arr_of(std::move(g));
    CHECK(proper(arr, color_halfspaces(arr)));
  }
}

TEST_CASE("bounded coloring checks its premises") {
  Arrangement square = arr_of(testutil::cycle_graph(4));
  HalfspaceColoring c = color_halfspaces_bounded(square, 2, 2);
  CHECK(c.color_of_pair == color_halfspaces(square).color_of_pair);
  CHECK_THROWS_AS(color_halfspaces_bounded(square, 1, 2), std::invalid_argument);
  CHECK_THROWS_AS(color_halfspaces_bounded(square, 2, 1), std::invalid_argument);
}

TEST_CASE("square extraction stages are frozen") {
  Arrangement arr = arr_of(testutil::cycle_graph(4));
  StagedForest sf = extract_spanning_tree(arr, color_halfspaces(arr));
  REQUIRE(sf.stage_edges.size() == 2);
  CHECK(sf.stage_edges[0] == std::vector<Edge>{{0, 1}, {2, 3}});
  CHECK(sf.stage_edges[1] == std::vector<Edge>{{0, 1}, {0, 3}, {2, 3}});
  REQUIRE(sf.stage_blocks.size() == 3);
  CHECK(sf.stage_blocks[0] == std::vector<int>{0, 1, 2, 3});
  CHECK(sf.stage_blocks[1] == std::vector<int>{0, 0, 2, 2});
  CHECK(sf.stage_blocks[2] == std::vector<int>{0, 0, 0, 0});
}

TEST_CASE("extraction ends in a spanning tree with nested stages") {
  for (Graph g : {grid_graph(3, 3), hypercube_graph(3), staircase_graph(4),
                  random_tree_graph(20, 3), testutil::star_graph(4)}) {
    int n = g.vertex_count();
    Arrangement arr = arr_of(std::move(g));
    HalfspaceColoring c = color_halfspaces(arr);
    StagedForest sf = extract_spanning_tree(arr, c);
    REQUIRE(sf.stage_edges.size() == static_cast<size_t>(c.color_count));
    REQUIRE(sf.stage_blocks.size() == static_cast<size_t>(c.color_count) + 1);

    for (int v = 0; v < n; ++v) CHECK(sf.stage_blocks[0][v] == v);
    CHECK(sf.stage_blocks.back() == std::vector<int>(n, 0));

    Graph final_forest = Graph::from_edges(n, sf.stage_edges.back());
    CHECK(oracles::is_tree(final_forest));
    for (auto [u, v] : sf.stage_edges.back()) CHECK(arr.graph().has_edge(u, v));

    for (size_t s = 0; s + 1 < sf.stage_edges.size(); ++s) {
      CHECK(std::includes(sf.stage_edges[s + 1].begin(), sf.stage_edges[s + 1].end(),
                          sf.stage_edges[s].begin(), sf.stage_edges[s].end()));
      CHECK(std::is_sorted(sf.stage_edges[s].begin(), sf.stage_edges[s].end()));
    }

    // stage blocks coarsen and match forest components stage by stage
    for (size_t s = 0; s + 1 < sf.stage_blocks.size(); ++s) {
      CHECK(testutil::refines(sf.stage_blocks[s], sf.stage_blocks[s + 1]));
    }
  }
}

TEST_CASE("repeated extraction is identical") {
  Arrangement arr = arr_of(grid_graph(4, 4));
  HalfspaceColoring c = color_halfspaces(arr);
  StagedForest a = extract_spanning_tree(arr, c);
  StagedForest b = extract_spanning_tree(arr, c);
  CHECK(a.stage_edges == b.stage_edges);
  CHECK(a.stage_blocks == b.stage_blocks);
}

TEST_CASE("stage distance bounds follow the recurrence") {
  CHECK(stage_distance_bounds(3, 2) == std::vector<uint64_t>{0, 1, 5, 21});
  CHECK(stage_distance_bounds(3, 1) == std::vector<uint64_t>{0, 1, 3, 7});
  CHECK(stage_distance_bounds(0, 5) == std::vector<uint64_t>{0});
  std::vector<uint64_t> deep = stage_distance_bounds(70, 2);
  CHECK(deep.back() == UINT64_MAX);
  CHECK(std::is_sorted(deep.begin(), deep.end()));
}

TEST_CASE("square forest distances stay within the bound") {
  Arrangement arr = arr_of(testutil::cycle_graph(4));
  StagedForest sf = extract_spanning_tree(arr, color_halfspaces(arr));
  QuasiIsometryReport rep = verify_quasi_isometry(arr, sf, 2);
  CHECK(rep.bound == std::vector<uint64_t>{0, 1, 5});
  CHECK(rep.observed_max == std::vector<int>{0, 1, 3});
  CHECK(rep.within);
  CHECK_THROWS_AS(verify_quasi_isometry(arr, sf, 1), std::invalid_argument);
}

TEST_CASE("quasi-isometry bound holds across shapes") {
  for (Graph g : {grid_graph(3, 4), hypercube_graph(4), staircase_graph(5),
                  closure_sample(6, 10)}) {
    Arrangement arr = arr_of(std::move(g));
    StagedForest sf = extract_spanning_tree(arr, color_halfspaces(arr));
    int r = 0;
    for (const auto& cls : arr.classes()) r = std::max(r, cls.boundary_diameter);
    QuasiIsometryReport rep = verify_quasi_isometry(arr, sf, r);
    CHECK(rep.within);
    for (size_t s = 0; s < rep.observed_max.size(); ++s) {
      CHECK(static_cast<uint64_t>(rep.observed_max[s]) <= rep.bound[s]);
    }
  }
}

TEST_CASE("partition witness by cardinality on a chain") {
  std::vector<Bitset> chain = {testutil::bits(4, {0}), testutil::bits(4, {0, 1}),
                               testutil::bits(4, {0, 1, 2}), testutil::bits(4, {0, 1, 2, 3})};
  FerWitness w = oneended_fer_witness(4, chain);
  CHECK(w.cofinal);
  CHECK(w.max_size == 4);
  REQUIRE(w.seq.class_of.size() == 5);
  CHECK(w.seq.class_of[0] == std::vector<int>{0, 1, 2, 3});
  CHECK(w.seq.class_of[1] == std::vector<int>{0, 0, 2, 3});
  CHECK(w.seq.class_of[2] == std::vector<int>{0, 0, 0, 3});
  CHECK(w.seq.class_of[3] == std::vector<int>{0, 0, 0, 0});
  CHECK(w.seq.class_of[4] == std::vector<int>{0, 0, 0, 0});
}

TEST_CASE("partition witness on an antichain collapses at level one") {
  std::vector<Bitset> singles;
  for (int i = 0; i < 4; ++i) singles.push_back(testutil::bits(4, {i}));
  FerWitness w = oneended_fer_witness(4, singles);
  CHECK_FALSE(w.cofinal);  // no member covers the ground set
  CHECK(w.max_size == 1);
  REQUIRE(w.seq.class_of.size() == 2);
  CHECK(w.seq.class_of[0] == std::vector<int>{0, 1, 2, 3});
  CHECK(w.seq.class_of[1] == std::vector<int>{0, 0, 0, 0});
}

TEST_CASE("rank witness peels minimal members") {
  std::vector<Bitset> chain = {testutil::bits(4, {0}), testutil::bits(4, {0, 1}),
                               testutil::bits(4, {0, 1, 2}), testutil::bits(4, {0, 1, 2, 3})};
  FerWitness w = oneended_fer_witness_rank(4, chain);
  CHECK(w.cofinal);
  REQUIRE(w.seq.class_of.size() == 5);
  CHECK(w.seq.class_of[0] == std::vector<int>{0, 1, 2, 3});
  CHECK(w.seq.class_of[1] == std::vector<int>{0, 0, 2, 3});
  CHECK(w.seq.class_of[3] == std::vector<int>{0, 0, 0, 0});
  CHECK(w.seq.class_of[4] == std::vector<int>{0, 0, 0, 0});
}

TEST_CASE("witness levels only coarsen") {
  std::mt19937 gen(11);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<Bitset> family;
    for (int member = 0; member < 6; ++member) {
      Bitset b(8);
      while (b.none()) {
        for (int v = 0; v < 8; ++v) {
          if (gen() & 1) b.set(v);
        }
      }
      family.push_back(std::move(b));
    }
    for (FerWitness w : {oneended_fer_witness(8, family), oneended_fer_witness_rank(8, family)}) {
      for (size_t s = 0; s + 1 < w.seq.class_of.size(); ++s) {
        CHECK(testutil::refines(w.seq.class_of[s], w.seq.class_of[s + 1]));
      }
      CHECK(w.seq.class_of.back() == std::vector<int>(8, 0));
    }
  }
}

TEST_CASE("witness input validation") {
  CHECK_THROWS_AS(oneended_fer_witness(4, {Bitset(4)}), std::invalid_argument);
  CHECK_THROWS_AS(oneended_fer_witness(4, {testutil::bits(3, {0})}), std::invalid_argument);
  CHECK_THROWS_AS(oneended_fer_witness_rank(4, {Bitset(4)}), std::invalid_argument);
}

TEST_CASE("axiom report on a chain") {
  std::vector<Bitset> chain = {testutil::bits(4, {0}), testutil::bits(4, {0, 1}),
                               testutil::bits(4, {0, 1, 2}), testutil::bits(4, {0, 1, 2, 3})};
  OneEndedAxiomReport r = oneended_axiom_check(4, chain);
  CHECK(r.cofinal);
  CHECK(r.max_pair_separating == 3);  // 0 against 3
  CHECK(r.max_split == 3);            // the full set is split by every proper member
  CHECK(r.max_non_nested == 0);
  CHECK(r.non_nested_within_split);
}

TEST_CASE("axiom report counts crossings") {
  std::vector<Bitset> crossing = {testutil::bits(4, {0, 1}), testutil::bits(4, {1, 2})};
  OneEndedAxiomReport r = oneended_axiom_check(4, crossing);
  CHECK_FALSE(r.cofinal);
  CHECK(r.max_pair_separating == 2);  // 1 against 3
  CHECK(r.max_non_nested == 1);
  CHECK(r.max_split == 1);
  CHECK(r.non_nested_within_split);
}

TEST_CASE("leaf pruning walks a path into its target") {
  Arrangement arr = arr_of(testutil::path_graph(5));
  LeafPruneResult r = leaf_prune(arr, 4);
  CHECK(r.root == 4);
  REQUIRE(r.deleted_per_stage.size() == 4);
  for (int s = 0; s < 4; ++s) CHECK(r.deleted_per_stage[s].to_vector() == std::vector<int>{s});
  CHECK(r.links == std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {3, 4}});
  CHECK(r.seq.class_of.front() == std::vector<int>{0, 1, 2, 3, 4});
  CHECK(r.seq.class_of.back() == std::vector<int>(5, 0));
}

TEST_CASE("leaf pruning collapses a grid corner by corner") {
  Arrangement arr = arr_of(grid_graph(3, 3));
  LeafPruneResult r = leaf_prune(arr, 8);
  REQUIRE(r.deleted_per_stage.size() == 2);
  CHECK(r.deleted_per_stage[0].to_vector() == std::vector<int>{0, 1, 2, 3, 6});
  CHECK(r.deleted_per_stage[1].to_vector() == std::vector<int>{4, 5, 7});
  CHECK(r.links == std::vector<Edge>{{0, 4}, {1, 4}, {2, 5}, {3, 4}, {6, 7}, {4, 8}, {5, 8}, {7, 8}});
  CHECK(r.seq.class_of[1] == std::vector<int>{0, 0, 2, 0, 0, 2, 6, 6, 8});
  CHECK(r.seq.class_of[2] == std::vector<int>(9, 0));

  // links connect every vertex to the root
  Graph link_graph = Graph::from_edges(9, r.links);
  CHECK(oracles::is_tree(link_graph));

  CHECK_THROWS_AS(leaf_prune(arr, 99), std::invalid_argument);
}

TEST_CASE("leaf pruning keeps the target side on every corpus shape") {
  for (Graph g : {grid_graph(2, 4), hypercube_graph(3), staircase_graph(3)}) {
    int n = g.vertex_count();
    Arrangement arr = arr_of(std::move(g));
    for (int target : {0, n / 2, n - 1}) {
      LeafPruneResult r = leaf_prune(arr, target);
      CHECK(r.links.size() == static_cast<size_t>(n) - 1);
      CHECK(oracles::is_tree(Graph::from_edges(n, r.links)));
      CHECK(r.seq.class_of.back() == std::vector<int>(n, 0));
      Bitset all_deleted(n);
      for (const Bitset& stage : r.deleted_per_stage) {
        CHECK_FALSE(all_deleted.intersects(stage));  // stages are disjoint
        all_deleted |= stage;
      }
      CHECK_FALSE(all_deleted.test(target));
    }
  }
}
