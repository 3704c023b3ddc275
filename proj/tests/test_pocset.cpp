#include <algorithm>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "testutil.hpp"
#include "treelike/generators.hpp"
#include "treelike/pocset.hpp"

using namespace treelike;
using testutil::bits;

namespace {

// single nontrivial pair: elements 0,1 trivial, 2,3 complementary
const int kPairN = 4;
const std::vector<std::pair<int, int>> kPairInv = {{0, 1}, {2, 3}};
const std::vector<std::pair<int, int>> kPairOrder = {{0, 1}, {0, 2}, {0, 3}, {2, 1}, {3, 1}};

Pocset must_validate(int n, const std::vector<std::pair<int, int>>& order,
                     const std::vector<std::pair<int, int>>& inv) {
  auto result = validate_pocset(n, order, inv);
  REQUIRE(std::holds_alternative<Pocset>(result));
  return std::get<Pocset>(result);
}

PocsetViolation::Kind violation_of(int n, const std::vector<std::pair<int, int>>& order,
                                   const std::vector<std::pair<int, int>>& inv) {
  auto result = validate_pocset(n, order, inv);
  REQUIRE(std::holds_alternative<PocsetViolation>(result));
  return std::get<PocsetViolation>(result).kind;
}

// two independent nontrivial pairs
Pocset two_pairs() {
  return must_validate(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {2, 1}, {3, 1}, {4, 1}, {5, 1}},
                       {{0, 1}, {2, 3}, {4, 5}});
}

// chain 2 <= 4 (so 5 <= 3)
Pocset chain_pairs() {
  return must_validate(
      6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {2, 1}, {3, 1}, {4, 1}, {5, 1}, {2, 4}, {5, 3}},
      {{0, 1}, {2, 3}, {4, 5}});
}

}  // namespace

TEST_CASE("a single-pair presentation validates") {
  Pocset p = must_validate(kPairN, kPairOrder, kPairInv);
  CHECK(p.size() == 4);
  CHECK(p.zero() == 0);
  CHECK(p.one() == 1);
  CHECK(p.complement(2) == 3);
  CHECK(p.leq(0, 2));
  CHECK(p.leq(2, 1));
  CHECK_FALSE(p.leq(2, 3));
  CHECK(p.leq(2, 2));
}

TEST_CASE("violations are reported by kind") {
  CHECK(violation_of(2, {{0, 5}}, {{0, 1}}) == PocsetViolation::Kind::bad_index);
  CHECK(violation_of(2, {}, {{0, 0}, {1, 1}}) == PocsetViolation::Kind::involution_fixpoint);
  CHECK(violation_of(4, {}, {{0, 1}, {0, 2}, {2, 3}}) == PocsetViolation::Kind::involution_ill_formed);
  CHECK(violation_of(4, {}, {{0, 1}}) == PocsetViolation::Kind::involution_ill_formed);

  auto anti = kPairOrder;
  anti.emplace_back(2, 3);
  anti.emplace_back(3, 2);
  CHECK(violation_of(kPairN, anti, kPairInv) == PocsetViolation::Kind::antisymmetry);

  CHECK(violation_of(4, {{0, 1}, {0, 2}, {0, 3}, {2, 1}}, kPairInv) ==
        PocsetViolation::Kind::not_order_reversing);

  CHECK(violation_of(2, {}, {{0, 1}}) == PocsetViolation::Kind::no_least_element);

  // 4 sits below both 2 and its complement 3
  auto v = violation_of(6,
                        {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {2, 1}, {3, 1}, {4, 1}, {5, 1},
                         {4, 2}, {3, 5}, {4, 3}, {2, 5}},
                        {{0, 1}, {2, 3}, {4, 5}});
  CHECK(v == PocsetViolation::Kind::lower_bound);
}

TEST_CASE("order pairs close transitively before checking") {
  // 2 <= 4 and 4 <= 2 only via transitivity through a middle element
  auto v = validate_pocset(
      8, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {0, 6}, {0, 7}, {2, 1}, {3, 1}, {4, 1}, {5, 1},
          {6, 1}, {7, 1}, {2, 6}, {7, 3}, {6, 4}, {5, 7}, {4, 2}, {3, 5}},
      {{0, 1}, {2, 3}, {4, 5}, {6, 7}});
  REQUIRE(std::holds_alternative<PocsetViolation>(v));
  CHECK(std::get<PocsetViolation>(v).kind == PocsetViolation::Kind::antisymmetry);
}

TEST_CASE("orientation counts of the small shapes") {
  CHECK(orientations(must_validate(kPairN, kPairOrder, kPairInv)).size() == 2);
  CHECK(orientations(two_pairs()).size() == 4);
  CHECK(orientations(chain_pairs()).size() == 3);
}

TEST_CASE("orientations are canonically sorted and well formed") {
  Pocset p = chain_pairs();
  auto oris = orientations(p);
  CHECK(std::is_sorted(oris.begin(), oris.end(), BitsetLexLess{}));
  for (const Bitset& u : oris) {
    for (int e = 0; e < p.size(); ++e) {
      CHECK(u.test(e) != u.test(p.complement(e)));
      if (u.test(e)) CHECK(p.up(e).is_subset_of(u));
    }
  }
}

TEST_CASE("orientation enumeration respects the cap") {
  CHECK_THROWS_AS(orientations(two_pairs(), 2), CapExceededError);
}

TEST_CASE("dual graphs of the small shapes") {
  DualGraph single = dual_median_graph(must_validate(kPairN, kPairOrder, kPairInv));
  CHECK(single.graph.vertex_count() == 2);
  CHECK(single.graph.edge_count() == 1);

  DualGraph square = dual_median_graph(two_pairs());
  CHECK(square.graph.vertex_count() == 4);
  CHECK(square.graph.edge_count() == 4);
  for (int v = 0; v < 4; ++v) CHECK(square.graph.degree(v) == 2);

  DualGraph path = dual_median_graph(chain_pairs());
  CHECK(path.graph.vertex_count() == 3);
  CHECK(path.graph.edge_count() == 2);
  CHECK(path.graph.connected());
}

TEST_CASE("dual graphs are median") {
  for (Pocset p : {two_pairs(), chain_pairs()}) {
    DualGraph d = dual_median_graph(p);
    CHECK(check_median(d.graph).accepted);
  }
}

TEST_CASE("half-space pocset of a 3-path is two chains") {
  Arrangement arr = Arrangement::build(MedianGraph::verify(testutil::path_graph(3)));
  Pocset p = halfspace_pocset(arr);
  REQUIRE(p.size() == 6);
  CHECK(p.zero() == 0);
  CHECK(p.one() == 1);
  int strict = 0;
  for (int e = 2; e < 6; ++e)
    for (int f = 2; f < 6; ++f)
      if (e != f && p.leq(e, f)) ++strict;
  CHECK(strict == 2);
  for (int h = 0; h < arr.halfspace_count(); ++h)
    CHECK(p.complement(2 + h) == 2 + arr.halfspace(h).complement_id);
}

TEST_CASE("graph roundtrip restores the corpus shapes") {
  for (Graph g : {grid_graph(3, 3), hypercube_graph(3), staircase_graph(3), random_tree_graph(12, 4),
                  testutil::path_graph(6)}) {
    Arrangement arr = Arrangement::build(MedianGraph::verify(std::move(g)));
    GraphRoundtrip rt = roundtrip_graph(arr);
    REQUIRE(static_cast<int>(rt.vertex_to_dual.size()) == arr.graph().vertex_count());
    std::set<int> image(rt.vertex_to_dual.begin(), rt.vertex_to_dual.end());
    CHECK(static_cast<int>(image.size()) == arr.graph().vertex_count());
    CHECK(rt.dual.graph.edge_count() == arr.graph().edge_count());
  }
}

TEST_CASE("pocset roundtrip is an isomorphism on the small shapes") {
  for (Pocset p : {must_validate(kPairN, kPairOrder, kPairInv), two_pairs(), chain_pairs()}) {
    PocsetRoundtrip rt = roundtrip_pocset(p);
    std::set<int> image(rt.element_to_element.begin(), rt.element_to_element.end());
    CHECK(static_cast<int>(image.size()) == p.size());
  }
}

TEST_CASE("pocset roundtrip on random presentations") {
  int done = 0;
  for (uint32_t seed = 0; done < 20 && seed < 4000; ++seed) {
    auto raw = oracles::random_pocset_raw(4 + seed % 3, 4, seed);
    auto result = validate_pocset(raw.elements, raw.order, raw.involution);
    if (!std::holds_alternative<Pocset>(result)) continue;
    ++done;
    const Pocset& p = std::get<Pocset>(result);
    PocsetRoundtrip rt = roundtrip_pocset(p);
    std::set<int> image(rt.element_to_element.begin(), rt.element_to_element.end());
    CHECK(static_cast<int>(image.size()) == p.size());
  }
  CHECK(done == 20);
}

TEST_CASE("walling closure adds complements and trivials") {
  Walling w = Walling::close(5, {bits(5, {0}), bits(5, {0, 1}), bits(5, {0, 1, 2}), bits(5, {0, 1, 2, 3})});
  CHECK(w.added_complements());
  CHECK(w.added_trivials());
  CHECK(w.walls().size() == 10);
  for (int i = 0; i < static_cast<int>(w.walls().size()); ++i) {
    CHECK(w.walls()[w.complement_wall(i)] == ~w.walls()[i]);
  }
  CHECK(std::is_sorted(w.walls().begin(), w.walls().end(), BitsetLexLess{}));

  Walling again = Walling::close(5, w.walls());
  CHECK_FALSE(again.added_complements());
  CHECK_FALSE(again.added_trivials());
  CHECK(again.walls() == w.walls());
}

TEST_CASE("walling closure validates input") {
  CHECK_THROWS_AS(Walling::close(0, {}), std::invalid_argument);
  CHECK_THROWS_AS(Walling::close(3, {bits(4, {0})}), std::invalid_argument);
}

TEST_CASE("blocks group points with equal wall membership") {
  Walling w = Walling::close(4, {bits(4, {0, 1})});
  BlockPartition part = blocks(w);
  CHECK(part.block_of == std::vector<int>{0, 0, 2, 2});
  REQUIRE(part.blocks.size() == 2);
  CHECK(part.blocks[0] == bits(4, {0, 1}));
  CHECK(part.blocks[1] == bits(4, {2, 3}));
}

TEST_CASE("wall dual of nested prefixes is a path") {
  Walling w = Walling::close(4, {bits(4, {0}), bits(4, {0, 1}), bits(4, {0, 1, 2})});
  WallDual wd = wall_dual(w);
  CHECK(wd.dual.graph.vertex_count() == 4);
  CHECK(wd.dual.graph.edge_count() == 3);
  CHECK(wd.dual.graph.connected());
  CHECK(wd.dual.graph.max_degree() == 2);
  std::set<int> image(wd.principal.begin(), wd.principal.end());
  CHECK(image.size() == 4);
  // ground order is preserved along the path
  CHECK(wd.dual.graph.dist(wd.principal[0], wd.principal[3]) == 3);
  CHECK(wd.dual.graph.dist(wd.principal[0], wd.principal[1]) == 1);
}

TEST_CASE("wall dual of two crossing walls is a square") {
  Walling w = Walling::close(4, {bits(4, {0, 1}), bits(4, {0, 2})});
  WallDual wd = wall_dual(w);
  CHECK(wd.dual.graph.vertex_count() == 4);
  CHECK(wd.dual.graph.edge_count() == 4);
  for (int v = 0; v < 4; ++v) CHECK(wd.dual.graph.degree(v) == 2);
  std::set<int> image(wd.principal.begin(), wd.principal.end());
  CHECK(image.size() == 4);
}

TEST_CASE("wall dual principal map collapses blocks") {
  Walling w = Walling::close(4, {bits(4, {0, 1})});
  WallDual wd = wall_dual(w);
  CHECK(wd.principal[0] == wd.principal[1]);
  CHECK(wd.principal[2] == wd.principal[3]);
  CHECK(wd.principal[0] != wd.principal[2]);
}

TEST_CASE("proper report on the prefix walling") {
  Walling w = Walling::close(5, {bits(5, {0}), bits(5, {0, 1}), bits(5, {0, 1, 2}), bits(5, {0, 1, 2, 3})});
  ProperWallingReport r = proper_walling_report(w);
  CHECK(r.wall_count == 10);
  CHECK(r.nontrivial_wall_count == 8);
  CHECK(r.max_block_size == 1);
  CHECK(r.max_non_nested == 0);
  CHECK(r.max_successors == 1);
  CHECK(r.max_separating == 4);
}

TEST_CASE("proper report sees crossings") {
  Walling w = Walling::close(4, {bits(4, {0, 1}), bits(4, {0, 2})});
  ProperWallingReport r = proper_walling_report(w);
  CHECK(r.nontrivial_wall_count == 4);
  CHECK(r.max_non_nested == 2);
  CHECK(r.max_block_size == 1);
}

TEST_CASE("halfspace pocset roundtrips through its dual") {
  Arrangement arr = Arrangement::build(MedianGraph::verify(grid_graph(2, 3)));
  Pocset p = halfspace_pocset(arr);
  PocsetRoundtrip rt = roundtrip_pocset(p);
  CHECK(rt.dual.graph.vertex_count() == 6);
  CHECK(rt.dual.graph.edge_count() == 7);
}
