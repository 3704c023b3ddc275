#include <algorithm>
#include <map>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "testutil.hpp"
#include "treelike/end_flow.hpp"
#include "treelike/generators.hpp"

using namespace treelike;
using testutil::bits;

namespace {

Arrangement arr_of(Graph g) { return Arrangement::build(MedianGraph::verify(std::move(g))); }

std::set<std::vector<int>> sides_of(const Arrangement& a, const std::vector<int>& ids) {
  std::set<std::vector<int>> out;
  for (int id : ids) out.insert(a.halfspace(id).side.to_vector());
  return out;
}

}  // namespace

TEST_CASE("principal target orients every half-space") {
  Arrangement a = arr_of(grid_graph(3, 3));
  EndTarget u = principal_target(a, 8);
  CHECK(u.target == 8);
  REQUIRE(static_cast<int>(u.in_u.size()) == a.halfspace_count());
  for (const HalfSpace& h : a.halfspaces()) {
    CHECK((u.in_u[h.id] != 0) == h.side.test(8));
    CHECK(u.in_u[h.id] + u.in_u[h.complement_id] == 1);
  }
}

TEST_CASE("A-set at the far grid corner is the two bands") {
  Arrangement a = arr_of(grid_graph(3, 3));
  EndTarget u = principal_target(a, 8);
  auto ids = a_set(a, u, 0);
  CHECK(sides_of(a, ids) ==
        std::set<std::vector<int>>{{1, 2, 4, 5, 7, 8}, {3, 4, 5, 6, 7, 8}});
}

TEST_CASE("A-set is empty exactly at the target") {
  Arrangement a = arr_of(grid_graph(3, 3));
  EndTarget u = principal_target(a, 8);
  for (int x = 0; x < 9; ++x) CHECK(a_set(a, u, x).empty() == (x == 8));
}

TEST_CASE("A-set on a path is the single suffix") {
  Arrangement a = arr_of(testutil::path_graph(5));
  EndTarget u = principal_target(a, 4);
  for (int x = 0; x < 4; ++x) {
    auto ids = a_set(a, u, x);
    REQUIRE(ids.size() == 1);
    Bitset expect(5);
    for (int v = x + 1; v < 5; ++v) expect.set(v);
    CHECK(a.halfspace(ids[0]).side == expect);
  }
}

TEST_CASE("the flow step moves diagonally across the grid") {
  Arrangement a = arr_of(grid_graph(3, 3));
  EndTarget u = principal_target(a, 8);
  CHECK(t_u_step(a, u, 0) == 4);
  CHECK(t_u_step(a, u, 4) == 8);
  CHECK(t_u_step(a, u, 8) == 8);
  CHECK(t_u_step(a, u, 2) == 5);
  CHECK(t_u_step(a, u, 6) == 7);
}

TEST_CASE("the single-crossing step variant moves one edge") {
  Arrangement a = arr_of(grid_graph(3, 3));
  EndTarget u = principal_target(a, 8);
  for (int x = 0; x < 8; ++x) {
    int y = t_u_step_single(a, u, x);
    CHECK(a.graph().dist(x, y) == 1);
    // the crossed half-space belongs to the A-set
    auto ids = a_set(a, u, x);
    CHECK(std::find(ids.begin(), ids.end(), a.crossing(x, y)) != ids.end());
  }
}

TEST_CASE("step distance law and separating half-spaces") {
  std::vector<std::pair<Graph, int>> cases;
  cases.emplace_back(grid_graph(3, 3), 8);
  cases.emplace_back(hypercube_graph(3), 5);
  cases.emplace_back(staircase_graph(4), 0);
  cases.emplace_back(random_tree_graph(20, 11), 7);
  for (auto& [g, target] : cases) {
    Arrangement a = arr_of(std::move(g));
    EndTarget u = principal_target(a, target);
    for (int x = 0; x < a.graph().vertex_count(); ++x) {
      auto ids = a_set(a, u, x);
      int y = t_u_step(a, u, x);
      CHECK(a.graph().dist(x, y) == static_cast<int>(ids.size()));
      auto sep = separating_halfspaces(a, x, y);
      std::sort(ids.begin(), ids.end());
      CHECK(sep == ids);
    }
  }
}

TEST_CASE("iteration reaches the target within the distance") {
  Arrangement a = arr_of(grid_graph(4, 5));
  EndTarget u = principal_target(a, 19);
  for (int x = 0; x < 20; ++x) {
    int cur = x, steps = 0;
    while (cur != 19) {
      cur = t_u_step(a, u, cur);
      ++steps;
      REQUIRE(steps <= 20);
    }
    CHECK(steps <= a.graph().dist(x, 19));
  }
}

TEST_CASE("flow forest on the grid flows into one orbit") {
  Arrangement a = arr_of(grid_graph(3, 3));
  EndTarget u = principal_target(a, 8);
  FlowForest ff = flow_forest(a, u);
  CHECK(ff.step == std::vector<int>{4, 5, 5, 7, 8, 8, 7, 8, 8});
  CHECK(ff.fixed == std::vector<int>{8});
  for (int v = 0; v < 9; ++v) CHECK(ff.orbit[v] == 0);
}

TEST_CASE("flow forest on a path walks to the end") {
  Arrangement a = arr_of(testutil::path_graph(5));
  EndTarget u = principal_target(a, 4);
  FlowForest ff = flow_forest(a, u);
  CHECK(ff.step == std::vector<int>{1, 2, 3, 4, 4});
  CHECK(ff.fixed == std::vector<int>{4});
}

TEST_CASE("flow roots of the grid example") {
  Arrangement a = arr_of(grid_graph(3, 3));
  EndTarget u = principal_target(a, 8);
  CHECK(t_u_root(a, u, bits(9, {0, 6}), *a.find_by_side(bits(9, {0, 3, 6}))) == 8);
}

TEST_CASE("root of a singleton is the vertex itself") {
  Arrangement a = arr_of(grid_graph(3, 3));
  EndTarget u = principal_target(a, 8);
  int h = *a.find_by_side(bits(9, {0, 3, 6}));
  CHECK(t_u_root(a, u, bits(9, {3}), h) == 3);
}

TEST_CASE("root of two vertices on one orbit is the deeper one") {
  Arrangement a = arr_of(testutil::path_graph(5));
  EndTarget u = principal_target(a, 4);
  int h = *a.find_by_side(bits(5, {0, 1, 2, 3}));
  CHECK(t_u_root(a, u, bits(5, {1, 3}), h) == 3);
}

TEST_CASE("root arguments are validated") {
  Arrangement a = arr_of(grid_graph(3, 3));
  EndTarget u = principal_target(a, 8);
  int left = *a.find_by_side(bits(9, {0, 3, 6}));
  int right = *a.find_by_side(bits(9, {2, 5, 8}));
  CHECK_THROWS_AS(t_u_root(a, u, Bitset(9), left), std::invalid_argument);
  CHECK_THROWS_AS(t_u_root(a, u, bits(9, {1}), left), std::invalid_argument);
  CHECK_THROWS_AS(t_u_root(a, u, bits(9, {2}), right), std::invalid_argument);
}

TEST_CASE("roots agree with the forward-orbit oracle") {
  std::vector<std::pair<Graph, int>> cases;
  cases.emplace_back(grid_graph(3, 4), 11);
  cases.emplace_back(hypercube_graph(3), 0);
  for (auto& [g, target] : cases) {
    Arrangement a = arr_of(std::move(g));
    EndTarget u = principal_target(a, target);
    FlowForest ff = flow_forest(a, u);
    for (const HalfSpace& h : a.halfspaces()) {
      if (u.in_u[h.id]) continue;
      std::vector<int> members = h.side.to_vector();
      if (members.empty()) continue;
      int expect = oracles::root_by_orbit_intersection(ff.step, members);
      REQUIRE(expect >= 0);
      CHECK(t_u_root(a, u, h.side, h.id) == expect);
    }
  }
}

TEST_CASE("level sequence on a path") {
  Arrangement a = arr_of(testutil::path_graph(5));
  EndTarget u = principal_target(a, 4);
  EnReport rep = e_n_sequence(a, u, 2);
  CHECK(rep.orbit_count == 1);
  CHECK(rep.finitely_many_orbits);
  REQUIRE(rep.classes.size() == 3);
  // every prefix separates at level 0; each meets only the single orbit,
  // so levels 1 and 2 relate everything
  CHECK(rep.classes[0] == std::vector<int>{0, 1, 2, 3, 4});
  CHECK(rep.classes[1] == std::vector<int>{0, 0, 0, 0, 0});
  CHECK(rep.classes[2] == rep.classes[1]);
  CHECK(rep.roots[1].at(0) == std::vector<int>{4});
}

TEST_CASE("level sequence separates then merges") {
  Arrangement a = arr_of(grid_graph(3, 3));
  EndTarget u = principal_target(a, 8);
  EnReport rep = e_n_sequence(a, u, 1);
  REQUIRE(rep.classes.size() == 2);
  // level 0: every off-target half-space is active, so classes are singletons
  for (int v = 0; v < 9; ++v) CHECK(rep.classes[0][v] == v);
  // level 1: the single orbit deactivates everything
  for (int v = 0; v < 9; ++v) CHECK(rep.classes[1][v] == 0);
  REQUIRE(rep.roots[1].count(0) == 1);
  CHECK(rep.roots[1].at(0) == std::vector<int>{8});
}

TEST_CASE("window kinds parse and print") {
  CHECK(parse_window_kind("quadrant-staircase") == WindowFamilyKind::quadrant_staircase);
  CHECK(parse_window_kind("grid-quadrant") == WindowFamilyKind::grid_quadrant);
  CHECK(to_string(WindowFamilyKind::ladder) == "ladder");
  CHECK(to_string(parse_window_kind("regular-tree")) == "regular-tree");
  CHECK_THROWS_AS(parse_window_kind("moebius"), std::invalid_argument);
}

TEST_CASE("window construction validates arguments") {
  CHECK_THROWS_AS(make_window(WindowFamilyKind::ladder, 0), std::invalid_argument);
  CHECK_THROWS_AS(make_window(WindowFamilyKind::regular_tree, 3, 1), std::invalid_argument);
}

TEST_CASE("the staircase window matches its shape") {
  WindowedFamily w = make_window(WindowFamilyKind::quadrant_staircase, 8);
  for (auto [a, b] : w.coords) {
    CHECK(b - a >= -2);
    CHECK(b - a <= 3);
  }
  CHECK(w.coords[w.horizon] == std::pair{8, 8});
  std::set<std::pair<int, int>> frontier;
  w.frontier.for_each([&](int v) { frontier.insert(w.coords[v]); });
  CHECK(frontier == std::set<std::pair<int, int>>{{6, 8}, {7, 8}, {8, 7}, {8, 8}});
  CHECK_FALSE(w.certified.intersects(w.frontier));
}

TEST_CASE("certified staircase steps follow the diagonal pattern") {
  WindowedFamily w = make_window(WindowFamilyKind::quadrant_staircase, 8);
  int seen[6] = {0, 0, 0, 0, 0, 0};
  for (int x = w.certified.first(); x >= 0; x = w.certified.next(x)) {
    auto [a, b] = w.coords[x];
    int d = b - a;
    ++seen[d + 2];
    auto [sa, sb] = w.coords[windowed_step(w, x)];
    if (d == -2) {
      CHECK(std::pair{sa, sb} == std::pair{a, b + 1});
    } else if (d == 3) {
      CHECK(std::pair{sa, sb} == std::pair{a + 1, b});
    } else {
      CHECK(std::pair{sa, sb} == std::pair{a + 1, b + 1});
    }
  }
  for (int d = 0; d < 6; ++d) CHECK(seen[d] > 0);
}

TEST_CASE("certified staircase orbits are the four diagonal families") {
  WindowedFamily w = make_window(WindowFamilyKind::quadrant_staircase, 8);
  auto family = [](int d) {  // -2 feeds -1, 3 feeds 2
    if (d <= -1) return 0;
    if (d == 0) return 1;
    if (d == 1) return 2;
    return 3;
  };
  // union-find over certified step edges
  int n = w.arr.graph().vertex_count();
  std::vector<int> parent(n);
  for (int v = 0; v < n; ++v) parent[v] = v;
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (int x = w.certified.first(); x >= 0; x = w.certified.next(x)) {
    int y = windowed_step(w, x);
    parent[find(std::max(find(x), find(y)))] = std::min(find(x), find(y));
  }
  for (int x = w.certified.first(); x >= 0; x = w.certified.next(x)) {
    for (int y = w.certified.next(x); y >= 0; y = w.certified.next(y)) {
      auto [ax, bx] = w.coords[x];
      auto [ay, by] = w.coords[y];
      if (find(x) == find(y)) {
        CHECK(family(bx - ax) == family(by - ay));
      }
    }
  }
}

TEST_CASE("uncertified vertices are rejected by the windowed wrappers") {
  WindowedFamily w = make_window(WindowFamilyKind::quadrant_staircase, 8);
  CHECK_THROWS_AS(windowed_step(w, w.horizon), std::invalid_argument);
  CHECK_THROWS_AS(windowed_a_set(w, w.horizon), std::invalid_argument);
}

TEST_CASE("ladder steps converge onto the spine") {
  WindowedFamily w = make_window(WindowFamilyKind::ladder, 6);
  CHECK(w.coords[w.horizon] == std::pair{0, 6});
  for (int x = w.certified.first(); x >= 0; x = w.certified.next(x)) {
    auto [a, b] = w.coords[x];
    auto [sa, sb] = w.coords[windowed_step(w, x)];
    CHECK(sa == 0);
    CHECK(sb == b + 1);
  }
}

TEST_CASE("grid quadrant steps are always diagonal") {
  WindowedFamily w = make_window(WindowFamilyKind::grid_quadrant, 6);
  CHECK(w.certified.any());
  for (int x = w.certified.first(); x >= 0; x = w.certified.next(x)) {
    auto [a, b] = w.coords[x];
    auto [sa, sb] = w.coords[windowed_step(w, x)];
    CHECK(std::pair{sa, sb} == std::pair{a + 1, b + 1});
  }
}

TEST_CASE("tree window steps descend toward the horizon") {
  WindowedFamily w = make_window(WindowFamilyKind::regular_tree, 4, 3);
  CHECK(check_median(w.arr.graph()).accepted);
  const Graph& g = w.arr.graph();
  for (int x = w.certified.first(); x >= 0; x = w.certified.next(x)) {
    if (x == w.horizon) continue;
    int y = windowed_step(w, x);
    CHECK(g.dist(x, y) == 1);
    CHECK(g.dist(y, w.horizon) == g.dist(x, w.horizon) - 1);
  }
}

TEST_CASE("the staircase window is median and certified away from the frontier") {
  WindowedFamily w = make_window(WindowFamilyKind::quadrant_staircase, 5);
  CHECK(check_median(w.arr.graph()).accepted);
  for (int v = 0; v < w.arr.graph().vertex_count(); ++v) {
    if (!w.certified.test(v)) continue;
    for (int y : w.arr.graph().neighbors(v)) CHECK_FALSE(w.frontier.test(y));
  }
}
