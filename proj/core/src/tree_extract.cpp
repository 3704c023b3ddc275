#include "treelike/tree_extract.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace treelike {

namespace {

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    // keep the least vertex as representative
    if (a > b) std::swap(a, b);
    parent[b] = a;
    return true;
  }
};

std::vector<int> canonical_blocks(Dsu& dsu, int n) {
  std::vector<int> out(n);
  for (int v = 0; v < n; ++v) out[v] = dsu.find(v);
  return out;
}

}  // namespace

HalfspaceColoring color_halfspaces(const Arrangement& arr) {
  int p = arr.pair_count();
  HalfspaceColoring c;
  c.color_of_pair.assign(p, -1);
  for (int i = 0; i < p; ++i) {
    std::vector<char> used(p, 0);
    for (int j = 0; j < i; ++j) {
      if (arr.classes()[i].total_boundary.intersects(arr.classes()[j].total_boundary)) {
        used[c.color_of_pair[j]] = 1;
      }
    }
    int col = 0;
    while (used[col]) ++col;
    c.color_of_pair[i] = col;
    c.color_count = std::max(c.color_count, col + 1);
  }
  return c;
}

namespace {

// saturating integer power
uint64_t sat_pow(uint64_t base, uint64_t exp) {
  uint64_t r = 1;
  for (uint64_t i = 0; i < exp; ++i) {
    if (r > UINT64_MAX / (base ? base : 1)) return UINT64_MAX;
    r *= base;
  }
  return r;
}

}  // namespace

HalfspaceColoring color_halfspaces_bounded(const Arrangement& arr, int max_degree, int max_diam) {
  const Graph& g = arr.graph();
  if (g.max_degree() > max_degree) {
    throw std::invalid_argument("degree bound violated");
  }
  for (const auto& cls : arr.classes()) {
    if (cls.boundary_diameter > max_diam) throw std::invalid_argument("boundary diameter bound violated");
  }
  HalfspaceColoring c = color_halfspaces(arr);
  uint64_t d = static_cast<uint64_t>(std::max(max_degree, 0));
  uint64_t inner = sat_pow(d, 2 * static_cast<uint64_t>(std::max(max_diam, 0)) + 1);
  uint64_t budget = inner >= 64 ? UINT64_MAX : sat_pow(3, inner);
  if (static_cast<uint64_t>(c.color_count) > budget) {
    throw std::logic_error("color count exceeded the degree/diameter budget");
  }
  return c;
}

StagedForest extract_spanning_tree(const Arrangement& arr, const HalfspaceColoring& coloring) {
  const Graph& g = arr.graph();
  int n = g.vertex_count();
  int colors = coloring.color_count;

  StagedForest sf;
  Dsu blocks(n);  // blocks of stage k: edges of color < k contracted
  {
    std::vector<int> ids(n);
    std::iota(ids.begin(), ids.end(), 0);
    sf.stage_blocks.push_back(ids);  // stage 0: singletons
  }

  std::vector<Edge> tree_edges;
  Dsu forest(n);
  for (int stage = 0; stage < colors; ++stage) {
    // next coarser blocks
    Dsu coarser(n);
    for (auto [u, v] : g.edges()) {
      if (coloring.color_of_pair[arr.pair_of_edge(u, v)] <= stage) coarser.unite(u, v);
    }
    // one least edge per adjacent pair of current blocks within a coarser block
    std::map<std::pair<int, int>, Edge> chosen;
    for (auto [u, v] : g.edges()) {
      if (coloring.color_of_pair[arr.pair_of_edge(u, v)] != stage) continue;
      int bu = blocks.find(u), bv = blocks.find(v);
      if (bu == bv) throw std::logic_error("same-block edge with current stage color");
      auto key = std::minmax(bu, bv);
      Edge cand{std::min(u, v), std::max(u, v)};
      auto [it, fresh] = chosen.try_emplace(key, cand);
      if (!fresh && cand < it->second) it->second = cand;
    }
    for (auto& [key, e] : chosen) {
      tree_edges.push_back(e);
      if (!forest.unite(e.first, e.second)) {
        throw std::logic_error("stage edge closed a cycle");
      }
    }
    std::sort(tree_edges.begin(), tree_edges.end());
    sf.stage_edges.push_back(tree_edges);

    // stage blocks must match the forest components
    for (auto [u, v] : g.edges()) {
      if (coloring.color_of_pair[arr.pair_of_edge(u, v)] <= stage) blocks.unite(u, v);
    }
    std::vector<int> ids = canonical_blocks(blocks, n);
    for (int v = 0; v < n; ++v) {
      if (forest.find(v) != ids[v]) {
        throw std::logic_error("forest components diverge from hyperplane blocks");
      }
    }
    sf.stage_blocks.push_back(std::move(ids));
  }

  return sf;
}

std::vector<uint64_t> stage_distance_bounds(int stages, int r) {
  std::vector<uint64_t> m(static_cast<size_t>(stages) + 1, 0);
  for (int i = 1; i <= stages; ++i) {
    uint64_t prev = m[i - 1];
    uint64_t scaled = (r > 0 && prev > UINT64_MAX / (2 * static_cast<uint64_t>(r)))
                          ? UINT64_MAX
                          : 2 * static_cast<uint64_t>(r) * prev;
    m[i] = scaled == UINT64_MAX ? UINT64_MAX : scaled + 1;
  }
  return m;
}

QuasiIsometryReport verify_quasi_isometry(const Arrangement& arr, const StagedForest& sf, int r) {
  const Graph& g = arr.graph();
  for (const auto& cls : arr.classes()) {
    if (cls.boundary_diameter > r) throw std::invalid_argument("boundary diameter bound violated");
  }
  int stages = static_cast<int>(sf.stage_edges.size());
  QuasiIsometryReport rep;
  rep.bound = stage_distance_bounds(stages, r);
  rep.observed_max.assign(static_cast<size_t>(stages) + 1, 0);

  for (int stage = 1; stage <= stages; ++stage) {
    Graph forest = Graph::from_edges(g.vertex_count(), sf.stage_edges[stage - 1]);
    const auto& block = sf.stage_blocks[stage];
    for (auto [u, v] : g.edges()) {
      if (block[u] != block[v]) continue;
      int d = forest.dist(u, v);
      if (d < 0) throw std::logic_error("same-block vertices not connected in the stage forest");
      rep.observed_max[stage] = std::max(rep.observed_max[stage], d);
      if (static_cast<uint64_t>(d) > rep.bound[stage]) rep.within = false;
    }
  }
  return rep;
}

FerWitness oneended_fer_witness(int ground, const std::vector<Bitset>& family) {
  for (const Bitset& b : family) {
    if (b.universe() != ground) throw std::invalid_argument("family universe mismatch");
    if (b.none()) throw std::invalid_argument("family members must be nonempty");
  }
  FerWitness w;
  Bitset all = Bitset::full(ground);
  for (const Bitset& b : family) {
    w.max_size = std::max(w.max_size, b.count());
    if (b == all) w.cofinal = true;
  }
  for (int level = 0; level <= w.max_size; ++level) {
    // signature: membership in members of size > level
    std::vector<int> cls(ground, -1);
    for (int x = 0; x < ground; ++x) {
      if (cls[x] >= 0) continue;
      cls[x] = x;
      for (int y = x + 1; y < ground; ++y) {
        if (cls[y] >= 0) continue;
        bool same = true;
        for (const Bitset& b : family) {
          if (b.count() > level && b.test(x) != b.test(y)) {
            same = false;
            break;
          }
        }
        if (same) cls[y] = x;
      }
    }
    w.seq.class_of.push_back(std::move(cls));
  }
  return w;
}

FerWitness oneended_fer_witness_rank(int ground, const std::vector<Bitset>& family) {
  for (const Bitset& b : family) {
    if (b.universe() != ground) throw std::invalid_argument("family universe mismatch");
    if (b.none()) throw std::invalid_argument("family members must be nonempty");
  }
  FerWitness w;
  Bitset all = Bitset::full(ground);
  for (const Bitset& b : family) {
    w.max_size = std::max(w.max_size, b.count());
    if (b == all) w.cofinal = true;
  }

  std::vector<Bitset> current = family;
  std::sort(current.begin(), current.end(), BitsetLexLess{});
  current.erase(std::unique(current.begin(), current.end()), current.end());
  for (;;) {
    std::vector<int> cls(ground, -1);
    for (int x = 0; x < ground; ++x) {
      if (cls[x] >= 0) continue;
      cls[x] = x;
      for (int y = x + 1; y < ground; ++y) {
        if (cls[y] >= 0) continue;
        bool same = true;
        for (const Bitset& b : current) {
          if (b.test(x) != b.test(y)) {
            same = false;
            break;
          }
        }
        if (same) cls[y] = x;
      }
    }
    w.seq.class_of.push_back(std::move(cls));
    if (current.empty()) break;
    // peel minimal members
    std::vector<Bitset> next;
    for (const Bitset& b : current) {
      bool minimal = true;
      for (const Bitset& c : current) {
        if (!(c == b) && c.is_subset_of(b)) {
          minimal = false;
          break;
        }
      }
      if (!minimal) next.push_back(b);
    }
    current = std::move(next);
  }
  return w;
}

OneEndedAxiomReport oneended_axiom_check(int ground, const std::vector<Bitset>& family) {
  OneEndedAxiomReport r;
  Bitset all = Bitset::full(ground);
  for (const Bitset& b : family) {
    if (b.universe() != ground) throw std::invalid_argument("family universe mismatch");
    if (b == all) r.cofinal = true;
  }
  for (int x = 0; x < ground; ++x) {
    for (int y = 0; y < ground; ++y) {
      if (x == y) continue;
      int c = 0;
      for (const Bitset& b : family) {
        if (b.test(x) && !b.test(y)) ++c;
      }
      r.max_pair_separating = std::max(r.max_pair_separating, c);
    }
  }
  for (const Bitset& i : family) {
    int split = 0, nn = 0;
    for (const Bitset& j : family) {
      if (j == i) continue;
      bool splits = i.intersects(j) && (i - j).any();
      if (splits) ++split;
      if (!nested(i, j)) {
        ++nn;
        if (!splits) r.non_nested_within_split = false;
      }
    }
    r.max_split = std::max(r.max_split, split);
    r.max_non_nested = std::max(r.max_non_nested, nn);
  }
  return r;
}

LeafPruneResult leaf_prune(const Arrangement& arr, int target) {
  const Graph& g = arr.graph();
  g.check_vertex(target);
  int n = g.vertex_count();

  // half-spaces avoiding the target, to be peeled from minimal upwards
  std::vector<int> pending;
  for (const HalfSpace& h : arr.halfspaces()) {
    if (!h.side.test(target)) pending.push_back(h.id);
  }

  LeafPruneResult out;
  out.root = target;
  Dsu classes(n);
  std::vector<int> level0(n);
  std::iota(level0.begin(), level0.end(), 0);
  out.seq.class_of.push_back(level0);

  Bitset survivors = Bitset::full(n);
  while (!pending.empty()) {
    std::vector<int> minimal, rest;
    for (int h : pending) {
      bool is_min = true;
      for (int k : pending) {
        if (k != h && arr.halfspace(k).side.is_subset_of(arr.halfspace(h).side) &&
            !(arr.halfspace(k).side == arr.halfspace(h).side)) {
          is_min = false;
          break;
        }
      }
      (is_min ? minimal : rest).push_back(h);
    }
    Bitset doomed(n);
    for (int h : minimal) doomed |= arr.halfspace(h).side;
    doomed &= survivors;
    survivors -= doomed;
    if (survivors.none()) throw std::logic_error("leaf pruning deleted the target side");

    for (int x = doomed.first(); x >= 0; x = doomed.next(x)) {
      int p = gate_projection(arr.median(), survivors, x);
      out.links.emplace_back(x, p);
      classes.unite(x, p);
    }
    out.deleted_per_stage.push_back(std::move(doomed));

    std::vector<int> lvl(n);
    for (int v = 0; v < n; ++v) lvl[v] = classes.find(v);
    out.seq.class_of.push_back(std::move(lvl));
    pending = std::move(rest);
  }
  return out;
}

}  // namespace treelike
