#include "treelike/end_flow.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace treelike {

EndTarget principal_target(const Arrangement& arr, int u) {
  arr.graph().check_vertex(u);
  EndTarget t;
  t.target = u;
  t.in_u.resize(arr.halfspace_count());
  for (const HalfSpace& h : arr.halfspaces()) t.in_u[h.id] = h.side.test(u) ? 1 : 0;
  return t;
}

std::vector<int> a_set(const Arrangement& arr, const EndTarget& u, int x) {
  arr.graph().check_vertex(x);
  if (static_cast<int>(u.in_u.size()) != arr.halfspace_count()) {
    throw std::invalid_argument("target does not match the arrangement");
  }
  // maximal elements lie among the half-spaces with x on the outer boundary,
  // because an upward witness can be taken maximal, hence incident
  std::vector<int> cand;
  for (const HalfSpace& h : arr.halfspaces()) {
    if (u.in_u[h.id] && !h.side.test(x) && h.boundary.outer_vertex.test(x)) cand.push_back(h.id);
  }
  std::vector<int> out;
  for (int h : cand) {
    bool maximal = true;
    for (int k : cand) {
      if (k != h && arr.halfspace(h).side.is_subset_of(arr.halfspace(k).side) &&
          !(arr.halfspace(h).side == arr.halfspace(k).side)) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(h);
  }
  for (size_t i = 0; i < out.size(); ++i) {
    for (size_t j = i + 1; j < out.size(); ++j) {
      if (nested(arr.halfspace(out[i]).side, arr.halfspace(out[j]).side)) {
        throw std::logic_error("nested pair in a maximal separating set");
      }
    }
  }
  return out;
}

int t_u_step(const Arrangement& arr, const EndTarget& u, int x) {
  std::vector<int> a = a_set(arr, u, x);
  if (a.empty()) return x;
  Bitset meet = arr.halfspace(a[0]).side;
  for (size_t i = 1; i < a.size(); ++i) meet &= arr.halfspace(a[i]).side;
  return gate_projection(arr.median(), meet, x);
}

int t_u_step_single(const Arrangement& arr, const EndTarget& u, int x) {
  std::vector<int> a = a_set(arr, u, x);
  if (a.empty()) return x;
  const HalfSpace& h = arr.halfspace(a.front());
  for (int y : arr.graph().neighbors(x)) {
    if (h.side.test(y)) return y;
  }
  throw std::logic_error("outer boundary vertex has no neighbor inside");
}

FlowForest flow_forest(const Arrangement& arr, const EndTarget& u) {
  int n = arr.graph().vertex_count();
  FlowForest ff;
  ff.step.resize(n);

  std::vector<int> missing(n, 0);  // |{H in U : x not in H}|
  for (const HalfSpace& h : arr.halfspaces()) {
    if (!u.in_u[h.id]) continue;
    for (int v = 0; v < n; ++v) {
      if (!h.side.test(v)) ++missing[v];
    }
  }
  for (int x = 0; x < n; ++x) {
    int y = t_u_step(arr, u, x);
    ff.step[x] = y;
    if (y == x) {
      ff.fixed.push_back(x);
      continue;
    }
    for (const HalfSpace& h : arr.halfspaces()) {
      if (u.in_u[h.id] && !h.side.test(y) && h.side.test(x)) {
        throw std::logic_error("flow step left a target half-space");
      }
    }
    if (missing[y] >= missing[x]) throw std::logic_error("flow step did not make progress");
  }

  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&parent](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (int x = 0; x < n; ++x) {
    int a = find(x), b = find(ff.step[x]);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  ff.orbit.resize(n);
  for (int v = 0; v < n; ++v) ff.orbit[v] = find(v);
  return ff;
}

namespace {

std::vector<int> forward_orbit(const std::vector<int>& step, int x) {
  std::vector<int> out{x};
  while (step[out.back()] != out.back()) out.push_back(step[out.back()]);
  return out;
}

// The vertex whose forward orbit is the intersection of the members'
// forward orbits; -1 when the members flow to different fixed points.
int orbit_meet(const std::vector<int>& step, const Bitset& c) {
  int n = static_cast<int>(step.size());
  std::vector<int> hits(n, 0);
  int members = 0;
  std::vector<int> first_orbit;
  for (int x = c.first(); x >= 0; x = c.next(x)) {
    std::vector<int> orb = forward_orbit(step, x);
    if (members == 0) first_orbit = orb;
    for (int v : orb) ++hits[v];
    ++members;
  }
  for (int v : first_orbit) {
    if (hits[v] == members) return v;
  }
  return -1;
}

}  // namespace

int t_u_root(const Arrangement& arr, const EndTarget& u, const Bitset& c, int h) {
  if (c.none()) throw std::invalid_argument("empty vertex set");
  const HalfSpace& hs = arr.halfspace(h);
  if (u.in_u[h]) throw std::invalid_argument("half-space must not contain the target");
  if (!c.is_subset_of(hs.side)) throw std::invalid_argument("vertex set must lie inside the half-space");

  FlowForest ff = flow_forest(arr, u);
  for (int x = c.first(); x >= 0; x = c.next(x)) {
    std::vector<int> orb = forward_orbit(ff.step, x);
    size_t exit = 0;
    while (exit < orb.size() && hs.side.test(orb[exit])) ++exit;
    if (exit == orb.size()) throw std::logic_error("orbit never leaves the half-space");
    if (!hs.boundary.outer_vertex.test(orb[exit])) {
      throw std::logic_error("first step outside missed the outer boundary");
    }
  }
  int root = orbit_meet(ff.step, c);
  if (root < 0) throw std::invalid_argument("vertex set spans multiple orbits");
  return root;
}

EnReport e_n_sequence(const Arrangement& arr, const EndTarget& u, int n_max) {
  if (n_max < 0) throw std::invalid_argument("negative level count");
  int n = arr.graph().vertex_count();
  FlowForest ff = flow_forest(arr, u);

  std::vector<int> orbit_ids;
  for (int v = 0; v < n; ++v) orbit_ids.push_back(ff.orbit[v]);
  std::sort(orbit_ids.begin(), orbit_ids.end());
  orbit_ids.erase(std::unique(orbit_ids.begin(), orbit_ids.end()), orbit_ids.end());

  // per half-space off the target side: how many orbits it meets
  std::vector<int> meets(arr.halfspace_count(), 0);
  for (const HalfSpace& h : arr.halfspaces()) {
    if (u.in_u[h.id]) continue;
    std::vector<char> seen(n, 0);
    int m = 0;
    for (int v = h.side.first(); v >= 0; v = h.side.next(v)) {
      int o = ff.orbit[v];
      if (!seen[o]) {
        seen[o] = 1;
        ++m;
      }
    }
    meets[h.id] = m;
  }

  EnReport rep;
  rep.orbit_count = static_cast<int>(orbit_ids.size());
  for (int level = 0; level <= n_max; ++level) {
    std::vector<int> active;
    for (const HalfSpace& h : arr.halfspaces()) {
      if (!u.in_u[h.id] && meets[h.id] > level) active.push_back(h.id);
    }
    std::vector<int> cls(n, -1);
    for (int x = 0; x < n; ++x) {
      if (cls[x] >= 0) continue;
      cls[x] = x;
      for (int y = x + 1; y < n; ++y) {
        if (cls[y] >= 0) continue;
        bool same = true;
        for (int h : active) {
          if (arr.halfspace(h).side.test(x) != arr.halfspace(h).side.test(y)) {
            same = false;
            break;
          }
        }
        if (same) cls[y] = x;
      }
    }

    std::map<int, std::vector<int>> class_roots;
    for (int rep_id : cls) class_roots.try_emplace(rep_id);
    for (auto& [rep_id, roots] : class_roots) {
      for (int o : orbit_ids) {
        Bitset slice(n);
        for (int v = 0; v < n; ++v) {
          if (cls[v] == rep_id && ff.orbit[v] == o) slice.set(v);
        }
        if (slice.none()) continue;
        int r = orbit_meet(ff.step, slice);
        if (r < 0) throw std::logic_error("orbit slice has no root");
        roots.push_back(r);
      }
    }
    rep.classes.push_back(std::move(cls));
    rep.roots.push_back(std::move(class_roots));
  }
  return rep;
}

WindowFamilyKind parse_window_kind(const std::string& name) {
  if (name == "quadrant-staircase") return WindowFamilyKind::quadrant_staircase;
  if (name == "regular-tree") return WindowFamilyKind::regular_tree;
  if (name == "ladder") return WindowFamilyKind::ladder;
  if (name == "grid-quadrant") return WindowFamilyKind::grid_quadrant;
  throw std::invalid_argument("unknown window family: " + name);
}

std::string to_string(WindowFamilyKind kind) {
  switch (kind) {
    case WindowFamilyKind::quadrant_staircase: return "quadrant-staircase";
    case WindowFamilyKind::regular_tree: return "regular-tree";
    case WindowFamilyKind::ladder: return "ladder";
    case WindowFamilyKind::grid_quadrant: return "grid-quadrant";
  }
  throw std::invalid_argument("unknown window family");
}

namespace {

struct WindowData {
  std::vector<std::pair<int, int>> coords;
  std::vector<Edge> edges;
  std::vector<char> truncated;  // has a family neighbor beyond the window
  int horizon = -1;
};

// Grid-like families live on integer points; membership is a predicate.
template <typename InFamily>
WindowData grid_window(int radius, InFamily in_family, std::pair<int, int> horizon) {
  WindowData w;
  std::vector<std::vector<int>> id(radius + 1, std::vector<int>(radius + 1, -1));
  for (int a = 0; a <= radius; ++a) {
    for (int b = 0; b <= radius; ++b) {
      if (!in_family(a, b)) continue;
      id[a][b] = static_cast<int>(w.coords.size());
      w.coords.emplace_back(a, b);
    }
  }
  w.truncated.assign(w.coords.size(), 0);
  const int da[4] = {1, -1, 0, 0};
  const int db[4] = {0, 0, 1, -1};
  for (size_t v = 0; v < w.coords.size(); ++v) {
    auto [a, b] = w.coords[v];
    for (int k = 0; k < 4; ++k) {
      int na = a + da[k], nb = b + db[k];
      if (na < 0 || nb < 0 || !in_family(na, nb)) continue;
      if (na > radius || nb > radius) {
        w.truncated[v] = 1;
        continue;
      }
      if (na > a || nb > b) w.edges.emplace_back(static_cast<int>(v), id[na][nb]);
    }
  }
  w.horizon = id[horizon.first][horizon.second];
  return w;
}

WindowData tree_window(int radius, int degree) {
  if (degree < 2) throw std::invalid_argument("tree degree must be at least 2");
  WindowData w;
  w.coords.emplace_back(0, -1);  // (depth, parent)
  size_t head = 0;
  while (head < w.coords.size()) {
    auto [depth, parent] = w.coords[head];
    if (depth < radius) {
      int children = depth == 0 ? degree : degree - 1;
      for (int c = 0; c < children; ++c) {
        int child = static_cast<int>(w.coords.size());
        w.coords.emplace_back(depth + 1, static_cast<int>(head));
        w.edges.emplace_back(static_cast<int>(head), child);
      }
    }
    ++head;
  }
  w.truncated.assign(w.coords.size(), 0);
  for (size_t v = 0; v < w.coords.size(); ++v) {
    if (w.coords[v].first == radius) {
      w.truncated[v] = 1;
      if (w.horizon < 0) w.horizon = static_cast<int>(v);
    }
  }
  return w;
}

}  // namespace

WindowedFamily make_window(WindowFamilyKind kind, int radius, int degree) {
  if (radius < 1) throw std::invalid_argument("window radius must be at least 1");
  WindowData w;
  switch (kind) {
    case WindowFamilyKind::quadrant_staircase:
      w = grid_window(
          radius, [](int a, int b) { return b - a >= -2 && b - a <= 3; }, {radius, radius});
      break;
    case WindowFamilyKind::grid_quadrant:
      w = grid_window(radius, [](int, int) { return true; }, {radius, radius});
      break;
    case WindowFamilyKind::ladder:
      w = grid_window(radius, [](int a, int) { return a <= 1; }, {0, radius});
      break;
    case WindowFamilyKind::regular_tree:
      w = tree_window(radius, degree);
      break;
  }
  int n = static_cast<int>(w.coords.size());
  Graph g = Graph::from_edges(n, w.edges);
  MedianGraph m = MedianGraph::verify(std::move(g));
  Arrangement arr = Arrangement::build(m);
  EndTarget target = principal_target(arr, w.horizon);

  Bitset frontier(n);
  for (int v = 0; v < n; ++v) {
    if (w.truncated[v]) frontier.set(v);
  }
  Bitset certified(n);
  for (int v = 0; v < n; ++v) {
    if (frontier.test(v)) continue;
    bool near = false;
    for (int y : arr.graph().neighbors(v)) {
      if (frontier.test(y)) {
        near = true;
        break;
      }
    }
    if (!near) certified.set(v);
  }
  return WindowedFamily{kind,
                        radius,
                        kind == WindowFamilyKind::regular_tree ? degree : 0,
                        std::move(arr),
                        std::move(target),
                        w.horizon,
                        std::move(frontier),
                        std::move(certified),
                        std::move(w.coords)};
}

std::vector<int> windowed_a_set(const WindowedFamily& w, int x) {
  if (!w.certified.test(x)) throw std::invalid_argument("vertex is not certified in this window");
  return a_set(w.arr, w.target, x);
}

int windowed_step(const WindowedFamily& w, int x) {
  if (!w.certified.test(x)) throw std::invalid_argument("vertex is not certified in this window");
  return t_u_step(w.arr, w.target, x);
}

}  // namespace treelike
