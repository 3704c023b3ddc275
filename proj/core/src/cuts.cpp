#include "treelike/cuts.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace treelike {

std::string to_string(CutProvenance p) {
  switch (p) {
    case CutProvenance::radial: return "radial";
    case CutProvenance::diam: return "diam";
    case CutProvenance::card: return "card";
    case CutProvenance::treedec: return "treedec";
    case CutProvenance::brute: return "brute";
    case CutProvenance::custom: return "custom";
  }
  return "custom";
}

Cut make_cut(const Graph& g, Bitset side) {
  BoundaryBundle b = boundaries(g, side);
  Bitset total = b.total_vertex();
  auto verts = total.to_vector();
  int diam = verts.empty() ? -1 : 0;
  for (size_t i = 0; i < verts.size(); ++i) {
    for (size_t j = i + 1; j < verts.size(); ++j) {
      int d = g.dist(verts[i], verts[j]);
      // a boundary spanning several components has infinite diameter
      if (d < 0) d = INT32_MAX;
      diam = std::max(diam, d);
    }
  }
  int inner = b.inner_vertex.count();
  int outer = b.outer_vertex.count();
  return Cut{std::move(side), std::move(b), diam, inner, outer};
}

bool complement_closed(const CutFamily& f) {
  std::unordered_set<Bitset, BitsetHash> have;
  for (const Cut& c : f.cuts) have.insert(c.side);
  for (const Cut& c : f.cuts) {
    if (!have.count(~c.side)) return false;
  }
  return true;
}

namespace {

CutFamily from_sides(const Graph& g, std::vector<Bitset> sides, CutProvenance prov) {
  std::sort(sides.begin(), sides.end(), BitsetLexLess{});
  sides.erase(std::unique(sides.begin(), sides.end()), sides.end());
  CutFamily f;
  f.provenance = prov;
  for (Bitset& s : sides) f.cuts.push_back(make_cut(g, std::move(s)));
  f.closed_under_complement = complement_closed(f);
  return f;
}

}  // namespace

CutFamily radial_cuts(const Graph& g, int center, int radius) {
  g.check_vertex(center);
  if (radius < 0) throw std::invalid_argument("negative radius");
  auto row = g.bfs_row(center);
  Bitset outside(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (row[v] < 0 || row[v] > radius) outside.set(v);
  }
  CutFamily f;
  f.provenance = CutProvenance::radial;
  for (Bitset& comp : components(g, outside)) f.cuts.push_back(make_cut(g, std::move(comp)));
  f.closed_under_complement = complement_closed(f);
  return f;
}

CutFamily all_radial_cuts(const Graph& g, bool close_complements) {
  std::vector<Bitset> sides;
  for (int center = 0; center < g.vertex_count(); ++center) {
    int reach = g.ecc(center);
    for (int r = 0; r < reach; ++r) {
      for (const Cut& c : radial_cuts(g, center, r).cuts) sides.push_back(c.side);
    }
  }
  if (close_complements) {
    size_t base = sides.size();
    for (size_t i = 0; i < base; ++i) sides.push_back(~sides[i]);
  }
  return from_sides(g, std::move(sides), CutProvenance::radial);
}

CutFamily filter_diam(const CutFamily& f, int r) {
  CutFamily out;
  out.provenance = CutProvenance::diam;
  for (const Cut& c : f.cuts) {
    if (c.boundary_diameter <= r) out.cuts.push_back(c);
  }
  out.closed_under_complement = complement_closed(out);
  return out;
}

CutFamily filter_card(const CutFamily& f, int n, bool one_sided) {
  CutFamily out;
  out.provenance = CutProvenance::card;
  for (const Cut& c : f.cuts) {
    int measure = one_sided ? c.inner_size : std::min(c.inner_size, c.outer_size);
    if (measure <= n) out.cuts.push_back(c);
  }
  out.closed_under_complement = complement_closed(out);
  return out;
}

namespace {

bool connected_or_empty(const Graph& g, const Bitset& s) {
  if (s.none()) return true;
  return components(g, s).size() == 1;
}

}  // namespace

CutFamily filter_connected(const Graph& g, const CutFamily& f) {
  CutFamily out;
  out.provenance = f.provenance;
  for (const Cut& c : f.cuts) {
    if (connected_or_empty(g, c.side) && connected_or_empty(g, ~c.side)) out.cuts.push_back(c);
  }
  out.closed_under_complement = complement_closed(out);
  return out;
}

CutFamily connectify(const Graph& g, const CutFamily& f) {
  if (!complement_closed(f)) {
    throw std::invalid_argument("connectify requires a complement-closed family");
  }
  int n = g.vertex_count();
  std::vector<Bitset> sides;
  std::vector<std::vector<Edge>> witness_inner;  // input inner boundaries, for the containment check
  for (const Cut& c : f.cuts) {
    int cnt = c.side.count();
    if (cnt == 0 || cnt == n) {
      sides.push_back(c.side);
      continue;
    }
    for (const Bitset& comp : components(g, c.side)) {
      for (const Bitset& d : components(g, ~comp)) {
        sides.push_back(~d);
      }
    }
  }

  CutFamily out = from_sides(g, std::move(sides), CutProvenance::custom);
  out.provenance = f.provenance;

  // each output's inward edge boundary must lie in some input's
  std::vector<std::unordered_set<uint64_t>> inputs;
  for (const Cut& c : f.cuts) {
    std::unordered_set<uint64_t> es;
    for (auto [u, v] : c.boundary.inner_edges) es.insert(static_cast<uint64_t>(u) << 32 | static_cast<uint32_t>(v));
    inputs.push_back(std::move(es));
  }
  for (const Cut& c : out.cuts) {
    if (!connected_or_empty(g, c.side) || !connected_or_empty(g, ~c.side)) {
      throw std::logic_error("connectify produced a disconnected side");
    }
    bool contained = false;
    for (const auto& es : inputs) {
      bool ok = true;
      for (auto [u, v] : c.boundary.inner_edges) {
        if (!es.count(static_cast<uint64_t>(u) << 32 | static_cast<uint32_t>(v))) {
          ok = false;
          break;
        }
      }
      if (ok) {
        contained = true;
        break;
      }
    }
    if (!contained) throw std::logic_error("connectify output boundary not contained in an input");
  }
  return out;
}

FinitenessReport walling_finiteness_check(const Graph& g, const CutFamily& f) {
  FinitenessReport r;
  r.boundary_count.assign(g.vertex_count(), 0);
  for (const Cut& c : f.cuts) {
    Bitset total = c.boundary.total_vertex();
    total.for_each([&](int v) { ++r.boundary_count[v]; });
  }
  for (int c : r.boundary_count) r.max_count = std::max(r.max_count, c);
  return r;
}

SuccessorDistanceReport successor_distance_report(const Graph& g, const CutFamily& f) {
  SuccessorDistanceReport rep;
  int n = g.vertex_count();
  std::vector<const Cut*> nontrivial;
  for (const Cut& c : f.cuts) {
    int cnt = c.side.count();
    if (cnt > 0 && cnt < n) nontrivial.push_back(&c);
  }
  for (const Cut* h : nontrivial) {
    for (const Cut* k : nontrivial) {
      if (h == k || h->side == k->side) continue;
      if (!h->side.is_subset_of(k->side)) continue;
      bool between = false;
      for (const Cut* l : nontrivial) {
        if (l->side == h->side || l->side == k->side) continue;
        if (h->side.is_subset_of(l->side) && l->side.is_subset_of(k->side)) {
          between = true;
          break;
        }
      }
      if (between) continue;
      ++rep.successor_pairs;
      // Hausdorff distance between the total vertex boundaries.
      auto bh = h->boundary.total_vertex().to_vector();
      auto bk = k->boundary.total_vertex().to_vector();
      if (bh.empty() || bk.empty()) continue;
      int haus = 0;
      auto one_way = [&](const std::vector<int>& from, const std::vector<int>& to) {
        for (int u : from) {
          auto row = g.dist_row(u);
          int best = -1;
          for (int v : to) {
            if (row[v] >= 0 && (best < 0 || row[v] < best)) best = row[v];
          }
          haus = std::max(haus, best);
        }
      };
      one_way(bh, bk);
      one_way(bk, bh);
      rep.max_boundary_distance = std::max(rep.max_boundary_distance, haus);
    }
  }
  return rep;
}

CutFamily brute_force_cuts(const Graph& g, int max_vertices) {
  int n = g.vertex_count();
  if (n > max_vertices) throw std::invalid_argument("brute_force_cuts vertex cap exceeded");
  if (n > 28) throw std::invalid_argument("brute_force_cuts supports at most 28 vertices");

  std::vector<uint32_t> adj(n, 0);
  for (auto [u, v] : g.edges()) {
    adj[u] |= uint32_t{1} << v;
    adj[v] |= uint32_t{1} << u;
  }
  uint32_t full = n == 32 ? ~uint32_t{0} : (uint32_t{1} << n) - 1;
  auto connected_mask = [&](uint32_t s) {
    if (!s) return true;
    uint32_t seen = s & (~s + 1);  // lowest bit
    for (;;) {
      uint32_t grow = seen;
      uint32_t rest = seen;
      while (rest) {
        int v = __builtin_ctz(rest);
        rest &= rest - 1;
        grow |= adj[v] & s;
      }
      if (grow == seen) break;
      seen = grow;
    }
    return seen == s;
  };

  std::vector<Bitset> sides;
  for (uint32_t s = 0; s <= full; ++s) {
    if (connected_mask(s) && connected_mask(full & ~s)) {
      Bitset b(n);
      for (int v = 0; v < n; ++v) {
        if ((s >> v) & 1u) b.set(v);
      }
      sides.push_back(std::move(b));
    }
    if (s == full) break;
  }
  return from_sides(g, std::move(sides), CutProvenance::brute);
}

}  // namespace treelike
