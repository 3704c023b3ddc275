#include "treelike/halfspace.hpp"

#include <algorithm>
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
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

Arrangement Arrangement::build(const MedianGraph& m) {
  Arrangement arr(m);
  const Graph& g = m.graph();
  const auto& edges = g.edges();
  int ec = g.edge_count();

  // Oriented edge id: 2 * edge_index, pointing at the larger endpoint;
  // 2 * edge_index + 1 for the reversal.
  auto oriented_id = [&](int tail, int head) {
    int e = g.edge_index(tail, head);
    return 2 * e + (tail < head ? 0 : 1);
  };

  Dsu dsu(2 * ec);
  for (int a = 0; a < g.vertex_count(); ++a) {
    auto nb = g.neighbors(a);
    for (size_t i = 0; i < nb.size(); ++i) {
      for (size_t j = i + 1; j < nb.size(); ++j) {
        int u = nb[i], w = nb[j];
        // common neighbors t != a complete the square a-u-t-w
        auto nu = g.neighbors(u);
        auto nw = g.neighbors(w);
        size_t pi = 0, pj = 0;
        while (pi < nu.size() && pj < nw.size()) {
          if (nu[pi] < nw[pj]) {
            ++pi;
          } else if (nu[pi] > nw[pj]) {
            ++pj;
          } else {
            int t = nu[pi];
            if (t != a) {
              dsu.unite(oriented_id(a, u), oriented_id(w, t));
              dsu.unite(oriented_id(u, a), oriented_id(t, w));
              dsu.unite(oriented_id(a, w), oriented_id(u, t));
              dsu.unite(oriented_id(w, a), oriented_id(t, u));
            }
            ++pi;
            ++pj;
          }
        }
      }
    }
  }

  // Gather oriented classes; member lists stay sorted because oriented ids
  // are enumerated in lexicographic order of (tail, head).
  std::vector<std::vector<int>> members(2 * ec);
  std::vector<std::pair<Edge, int>> class_keys;  // (least oriented edge, root)
  {
    std::vector<std::pair<Edge, int>> oriented(2 * ec);
    for (int e = 0; e < ec; ++e) {
      oriented[2 * e] = {edges[e], 2 * e};
      oriented[2 * e + 1] = {{edges[e].second, edges[e].first}, 2 * e + 1};
    }
    std::sort(oriented.begin(), oriented.end());
    for (auto& [oe, oid] : oriented) {
      int root = dsu.find(oid);
      if (members[root].empty()) class_keys.push_back({oe, root});
      members[root].push_back(oid);
    }
  }
  std::sort(class_keys.begin(), class_keys.end());

  std::vector<int> id_of_root(2 * ec, -1);
  for (size_t i = 0; i < class_keys.size(); ++i) id_of_root[class_keys[i].second] = static_cast<int>(i);

  int hcount = static_cast<int>(class_keys.size());
  arr.halfspaces_.resize(hcount);
  arr.crossing_of_oriented_.assign(2 * ec, -1);

  for (int h = 0; h < hcount; ++h) {
    auto [least, root] = class_keys[h];
    Bitset side = cone(g, least.first, least.second);
    BoundaryBundle bundle = boundaries(g, side);

    // The class must be exactly the inward edge boundary of its side.
    std::vector<Edge> class_edges;
    class_edges.reserve(members[root].size());
    for (int oid : members[root]) {
      int e = oid / 2;
      Edge oe = (oid % 2 == 0) ? edges[e] : Edge{edges[e].second, edges[e].first};
      class_edges.push_back(oe);
      arr.crossing_of_oriented_[oid] = h;
    }
    std::sort(class_edges.begin(), class_edges.end());
    if (class_edges != bundle.inner_edges) {
      throw std::logic_error("hyperplane class does not match the edge boundary of its side");
    }

    arr.halfspaces_[h] = HalfSpace{h, -1, -1, std::move(side), std::move(bundle)};
  }

  for (int h = 0; h < hcount; ++h) {
    auto [least, root] = class_keys[h];
    int rev = dsu.find(oriented_id(least.second, least.first));
    int comp = id_of_root[rev];
    arr.halfspaces_[h].complement_id = comp;
    if ((arr.halfspaces_[h].side & arr.halfspaces_[comp].side).any() ||
        (arr.halfspaces_[h].side | arr.halfspaces_[comp].side) != Bitset::full(g.vertex_count())) {
      throw std::logic_error("complement half-space does not partition the vertices");
    }
  }

  // Unoriented classes ranked by least canonical member edge.
  std::vector<std::pair<Edge, int>> pair_keys;  // (least canonical edge, halfspace id a)
  for (int h = 0; h < hcount; ++h) {
    if (h < arr.halfspaces_[h].complement_id) {
      pair_keys.push_back({arr.halfspaces_[h].boundary.inner_edges.empty()
                               ? Edge{-1, -1}
                               : [&] {
                                   Edge least_canon{INT32_MAX, INT32_MAX};
                                   for (auto [u, v] : arr.halfspaces_[h].boundary.inner_edges) {
                                     Edge c{std::min(u, v), std::max(u, v)};
                                     least_canon = std::min(least_canon, c);
                                   }
                                   return least_canon;
                                 }(),
                           h});
    }
  }
  std::sort(pair_keys.begin(), pair_keys.end());
  arr.classes_.resize(pair_keys.size());
  for (size_t p = 0; p < pair_keys.size(); ++p) {
    int ha = pair_keys[p].second;
    int hb = arr.halfspaces_[ha].complement_id;
    HyperplaneClass cls;
    cls.pair_id = static_cast<int>(p);
    for (auto [u, v] : arr.halfspaces_[ha].boundary.inner_edges) {
      cls.edges.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(cls.edges.begin(), cls.edges.end());
    cls.halfspace_a = std::min(ha, hb);
    cls.halfspace_b = std::max(ha, hb);
    cls.total_boundary = arr.halfspaces_[ha].boundary.total_vertex();
    auto bverts = cls.total_boundary.to_vector();
    int diam = bverts.empty() ? -1 : 0;
    for (size_t i = 0; i < bverts.size(); ++i) {
      for (size_t j = i + 1; j < bverts.size(); ++j) {
        diam = std::max(diam, g.dist(bverts[i], bverts[j]));
      }
    }
    cls.boundary_diameter = diam;
    arr.halfspaces_[cls.halfspace_a].pair_id = static_cast<int>(p);
    arr.halfspaces_[cls.halfspace_b].pair_id = static_cast<int>(p);
    arr.classes_[p] = std::move(cls);
  }

  for (const auto& h : arr.halfspaces_) arr.by_side_[h.side] = h.id;
  return arr;
}

int Arrangement::crossing(int u, int v) const {
  int e = graph().edge_index(u, v);
  if (e < 0) throw std::invalid_argument("crossing requires an edge");
  return crossing_of_oriented_[2 * e + (u < v ? 0 : 1)];
}

int Arrangement::pair_of_edge(int u, int v) const { return halfspaces_[crossing(u, v)].pair_id; }

std::optional<int> Arrangement::find_by_side(const Bitset& side) const {
  auto it = by_side_.find(side);
  if (it == by_side_.end()) return std::nullopt;
  return it->second;
}

Corners corners(const Bitset& h, const Bitset& k) {
  return Corners{h & k, h - k, k - h, ~(h | k)};
}

bool nested(const Bitset& h, const Bitset& k) {
  Corners c = corners(h, k);
  return c.both.none() || c.only_first.none() || c.only_second.none() || c.neither.none();
}

std::vector<int> successors(const Arrangement& arr, int halfspace_id) {
  const HalfSpace& h = arr.halfspace(halfspace_id);
  std::vector<int> out;
  for (const HalfSpace& k : arr.halfspaces()) {
    if (k.id == h.id) continue;
    if (!h.side.is_subset_of(k.side)) continue;
    if (k.boundary.inner_vertex.intersects(h.boundary.outer_vertex)) out.push_back(k.id);
  }
  return out;
}

Graph hyperplane_adjacency(const Arrangement& arr) {
  int p = arr.pair_count();
  auto is_successor = [&](int a, int b) {
    const HalfSpace& ha = arr.halfspace(a);
    const HalfSpace& hb = arr.halfspace(b);
    return hb.side.is_subset_of(ha.side) && a != b &&
           ha.boundary.inner_vertex.intersects(hb.boundary.outer_vertex);
  };
  std::vector<Edge> out;
  for (int i = 0; i < p; ++i) {
    for (int j = i + 1; j < p; ++j) {
      const auto& ci = arr.classes()[i];
      const auto& cj = arr.classes()[j];
      bool boundary_touch = ci.total_boundary.intersects(cj.total_boundary);
      const Bitset& si = arr.halfspace(ci.halfspace_a).side;
      const Bitset& sj = arr.halfspace(cj.halfspace_a).side;
      bool order_adjacent = !nested(si, sj);
      if (!order_adjacent) {
        for (int a : {ci.halfspace_a, ci.halfspace_b}) {
          for (int b : {cj.halfspace_a, cj.halfspace_b}) {
            if (is_successor(a, b) || is_successor(b, a)) order_adjacent = true;
          }
        }
      }
      if (order_adjacent != boundary_touch) {
        throw std::logic_error("hyperplane adjacency characterizations disagree");
      }
      if (boundary_touch) out.emplace_back(i, j);
    }
  }
  return Graph::from_edges(p, std::move(out));
}

std::vector<int> separating_halfspaces(const Arrangement& arr, int x, int y) {
  arr.graph().check_vertex(x);
  arr.graph().check_vertex(y);
  std::vector<int> out;
  for (const HalfSpace& h : arr.halfspaces()) {
    if (h.side.test(y) && !h.side.test(x)) out.push_back(h.id);
  }
  return out;
}

int separate_convex(const Arrangement& arr, const Bitset& a, const Bitset& b) {
  const Graph& g = arr.graph();
  if (a.none() || b.none()) throw std::invalid_argument("separate_convex requires nonempty sets");
  if (a.intersects(b)) throw std::invalid_argument("separate_convex requires disjoint sets");
  if (!is_convex(g, a).convex || !is_convex(g, b).convex) {
    throw std::invalid_argument("separate_convex requires convex sets");
  }

  int best_a = -1, best_b = -1, best_d = -1;
  for (int x = a.first(); x >= 0; x = a.next(x)) {
    auto row = g.dist_row(x);
    for (int y = b.first(); y >= 0; y = b.next(y)) {
      if (row[y] < 0) continue;
      if (best_d < 0 || row[y] < best_d) {
        best_d = row[y];
        best_a = x;
        best_b = y;
      }
    }
  }
  if (best_d < 0) throw std::invalid_argument("separate_convex requires sets in one component");

  auto row_b = g.dist_row(best_b);
  int u = -1;
  for (int w : g.neighbors(best_a)) {
    if (row_b[w] == best_d - 1) {
      u = w;
      break;
    }
  }
  Bitset side = cone(g, u, best_a);
  auto id = arr.find_by_side(side);
  if (!id) throw std::logic_error("separating cone is not a half-space");
  if (!a.is_subset_of(side) || side.intersects(b)) {
    throw std::logic_error("separating half-space does not separate");
  }
  return *id;
}

CubeEmbedding cube_embedding(const Arrangement& arr, const std::vector<int>& halfspace_ids) {
  const Graph& g = arr.graph();
  int k = static_cast<int>(halfspace_ids.size());
  if (k > 20) throw std::invalid_argument("cube_embedding family too large");
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      if (nested(arr.halfspace(halfspace_ids[i]).side, arr.halfspace(halfspace_ids[j]).side)) {
        throw std::invalid_argument("cube_embedding requires a pairwise non-nested family");
      }
    }
  }

  auto corner_set = [&](unsigned mask) {
    Bitset s = Bitset::full(g.vertex_count());
    for (int i = 0; i < k; ++i) {
      const Bitset& side = arr.halfspace(halfspace_ids[i]).side;
      s &= (mask >> i) & 1u ? side : ~side;
    }
    return s;
  };

  Bitset outside = corner_set(0);
  int x = outside.first();
  if (x < 0) throw std::logic_error("corner intersection empty despite non-nestedness");

  Bitset inside = corner_set((1u << k) - 1);
  if (inside.none()) throw std::logic_error("corner intersection empty despite non-nestedness");
  int x1 = gate_projection(arr.median(), inside, x);

  CubeEmbedding emb;
  emb.halfspace_ids = halfspace_ids;
  emb.corner_vertex.assign(size_t{1} << k, -1);
  for (unsigned mask = 0; mask < (1u << k); ++mask) {
    Bitset s = corner_set(mask);
    if (s.none()) throw std::logic_error("corner intersection empty despite non-nestedness");
    emb.corner_vertex[mask] = gate_projection(arr.median(), s, x1);
  }

  for (unsigned p = 0; p < (1u << k); ++p) {
    for (unsigned q = p; q < (1u << k); ++q) {
      int want = __builtin_popcount(p ^ q);
      if (g.dist(emb.corner_vertex[p], emb.corner_vertex[q]) != want) {
        throw std::logic_error("cube embedding is not isometric");
      }
    }
  }
  return emb;
}

}  // namespace treelike
