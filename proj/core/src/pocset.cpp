#include "treelike/pocset.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>
#include <unordered_set>

namespace treelike {

Pocset Pocset::unchecked(std::vector<Bitset> up_rows, std::vector<int> comp, int zero) {
  Pocset p;
  int n = static_cast<int>(up_rows.size());
  p.up_ = std::move(up_rows);
  p.comp_ = std::move(comp);
  p.zero_ = zero;
  p.down_.assign(n, Bitset(n));
  for (int a = 0; a < n; ++a) {
    p.up_[a].for_each([&](int b) { p.down_[b].set(a); });
  }
  return p;
}

std::variant<Pocset, PocsetViolation> validate_pocset(int n, const std::vector<std::pair<int, int>>& order_pairs,
                                                      const std::vector<std::pair<int, int>>& involution_pairs) {
  using V = PocsetViolation;
  auto fail = [](V::Kind k, int a, int b, std::string msg) {
    return V{k, a, b, std::move(msg)};
  };
  if (n <= 0) return fail(V::Kind::bad_index, -1, -1, "pocset needs at least the trivial pair");

  std::vector<int> comp(n, -1);
  for (auto [p, q] : involution_pairs) {
    if (p < 0 || p >= n || q < 0 || q >= n)
      return fail(V::Kind::bad_index, p, q, "involution index out of range");
    if (p == q) return fail(V::Kind::involution_fixpoint, p, q, "involution has a fixed point");
    for (auto [a, b] : {std::pair{p, q}, std::pair{q, p}}) {
      if (comp[a] != -1 && comp[a] != b)
        return fail(V::Kind::involution_ill_formed, a, b, "conflicting involution images");
      comp[a] = b;
    }
  }
  for (int p = 0; p < n; ++p) {
    if (comp[p] == -1)
      return fail(V::Kind::involution_ill_formed, p, -1, "element without involution image");
  }

  std::vector<Bitset> up(n, Bitset(n));
  for (int p = 0; p < n; ++p) up[p].set(p);
  for (auto [p, q] : order_pairs) {
    if (p < 0 || p >= n || q < 0 || q >= n)
      return fail(V::Kind::bad_index, p, q, "order index out of range");
    up[p].set(q);
  }
  // transitive closure
  for (int k = 0; k < n; ++k) {
    for (int p = 0; p < n; ++p) {
      if (up[p].test(k)) up[p] |= up[k];
    }
  }

  for (int p = 0; p < n; ++p) {
    for (int q = p + 1; q < n; ++q) {
      if (up[p].test(q) && up[q].test(p))
        return fail(V::Kind::antisymmetry, p, q, "distinct elements below each other");
    }
  }
  for (int p = 0; p < n; ++p) {
    for (int q = up[p].first(); q >= 0; q = up[p].next(q)) {
      if (!up[comp[q]].test(comp[p]))
        return fail(V::Kind::not_order_reversing, p, q,
                    "p <= q without complement(q) <= complement(p)");
    }
  }

  int zero = -1;
  for (int p = 0; p < n; ++p) {
    if (up[p].count() == n) {
      zero = p;
      break;
    }
  }
  if (zero < 0) return fail(V::Kind::no_least_element, -1, -1, "no least element");

  for (int p = 0; p < n; ++p) {
    if (p == zero || comp[p] == zero) continue;
    for (int q = 0; q < n; ++q) {
      if (q != zero && up[q].test(p) && up[q].test(comp[p]))
        return fail(V::Kind::lower_bound, p, q,
                    "complementary pair with a nonzero common lower bound");
    }
  }

  return Pocset::unchecked(std::move(up), std::move(comp), zero);
}

std::vector<Bitset> orientations(const Pocset& p, uint64_t cap) {
  int n = p.size();
  int one = p.one();

  // deterministic greedy seed: decide pairs in ascending element order
  Bitset seed(n);
  seed |= p.up(one);
  for (int e = 0; e < n; ++e) {
    if (seed.test(e) || seed.test(p.complement(e))) continue;
    // adding the up-closure of e fails iff something chosen sits below ¬e
    if (!seed.intersects(p.down(p.complement(e)))) {
      seed |= p.up(e);
    } else if (!seed.intersects(p.down(e))) {
      seed |= p.up(p.complement(e));
    } else {
      throw std::logic_error("orientation seed extension failed on a valid pocset");
    }
  }

  auto minimal_flips = [&](const Bitset& u) {
    std::vector<int> out;
    u.for_each([&](int e) {
      if (e == one) return;
      if ((p.down(e) & u).count() == 1) out.push_back(e);  // only e itself below
    });
    return out;
  };

  std::unordered_set<Bitset, BitsetHash> seen;
  std::deque<Bitset> queue;
  seen.insert(seed);
  queue.push_back(seed);
  while (!queue.empty()) {
    Bitset u = std::move(queue.front());
    queue.pop_front();
    for (int e : minimal_flips(u)) {
      Bitset v = u;
      v.reset(e);
      v.set(p.complement(e));
      if (seen.insert(v).second) {
        if (seen.size() > cap) {
          throw CapExceededError("orientation enumeration exceeded cap", cap);
        }
        queue.push_back(v);
      }
    }
  }

  std::vector<Bitset> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), BitsetLexLess{});
  return out;
}

DualGraph dual_median_graph(const Pocset& p, uint64_t cap) {
  std::vector<Bitset> oris = orientations(p, cap);
  std::unordered_map<Bitset, int, BitsetHash> index;
  for (size_t i = 0; i < oris.size(); ++i) index[oris[i]] = static_cast<int>(i);

  int one = p.one();
  std::vector<Edge> edges;
  for (size_t i = 0; i < oris.size(); ++i) {
    const Bitset& u = oris[i];
    u.for_each([&](int e) {
      if (e == one) return;
      if ((p.down(e) & u).count() != 1) return;
      Bitset v = u;
      v.reset(e);
      v.set(p.complement(e));
      auto it = index.find(v);
      if (it == index.end()) throw std::logic_error("orientation flip left the enumerated set");
      int j = it->second;
      if (static_cast<int>(i) < j) edges.emplace_back(static_cast<int>(i), j);
    });
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return DualGraph{Graph::from_edges(static_cast<int>(oris.size()), std::move(edges)), std::move(oris)};
}

Pocset halfspace_pocset(const Arrangement& arr) {
  int hc = arr.halfspace_count();
  int n = hc + 2;
  int nv = arr.graph().vertex_count();
  auto side_of = [&](int e) {
    if (e == 0) return Bitset(nv);
    if (e == 1) return Bitset::full(nv);
    return arr.halfspace(e - 2).side;
  };
  std::vector<Bitset> up(n, Bitset(n));
  for (int e = 0; e < n; ++e) {
    Bitset se = side_of(e);
    for (int f = 0; f < n; ++f) {
      if (se.is_subset_of(side_of(f))) up[e].set(f);
    }
  }
  std::vector<int> comp(n);
  comp[0] = 1;
  comp[1] = 0;
  for (int h = 0; h < hc; ++h) comp[2 + h] = 2 + arr.halfspace(h).complement_id;
  return Pocset::unchecked(std::move(up), std::move(comp), 0);
}

GraphRoundtrip roundtrip_graph(const Arrangement& arr, uint64_t cap) {
  const Graph& g = arr.graph();
  Pocset p = halfspace_pocset(arr);
  DualGraph dual = dual_median_graph(p, cap);

  std::unordered_map<Bitset, int, BitsetHash> index;
  for (size_t i = 0; i < dual.vertex_orientation.size(); ++i)
    index[dual.vertex_orientation[i]] = static_cast<int>(i);

  int n = g.vertex_count();
  std::vector<int> map(n, -1);
  std::vector<char> hit(dual.vertex_orientation.size(), 0);
  for (int x = 0; x < n; ++x) {
    Bitset ori(p.size());
    ori.set(1);
    for (const HalfSpace& h : arr.halfspaces()) {
      if (h.side.test(x)) ori.set(2 + h.id);
    }
    auto it = index.find(ori);
    if (it == index.end()) throw std::logic_error("principal orientation missing from the dual");
    map[x] = it->second;
    if (hit[it->second]) throw std::logic_error("principal orientation map is not injective");
    hit[it->second] = 1;
  }
  if (static_cast<int>(dual.vertex_orientation.size()) != n) {
    throw std::logic_error("dual vertex count differs from the graph");
  }
  for (auto [u, v] : g.edges()) {
    if (!dual.graph.has_edge(map[u], map[v])) throw std::logic_error("edge lost in the dual");
  }
  if (dual.graph.edge_count() != g.edge_count()) {
    throw std::logic_error("dual edge count differs from the graph");
  }
  return GraphRoundtrip{std::move(dual), std::move(map)};
}

PocsetRoundtrip roundtrip_pocset(const Pocset& p, uint64_t cap) {
  DualGraph dual = dual_median_graph(p, cap);
  Arrangement arr = Arrangement::build(MedianGraph::assume_median(dual.graph));
  Pocset q = halfspace_pocset(arr);
  if (q.size() != p.size()) throw std::logic_error("half-space pocset of the dual has wrong size");

  int k = static_cast<int>(dual.vertex_orientation.size());
  std::vector<int> map(p.size(), -1);
  std::vector<char> hit(q.size(), 0);
  for (int e = 0; e < p.size(); ++e) {
    Bitset side(k);
    for (int u = 0; u < k; ++u) {
      if (dual.vertex_orientation[u].test(e)) side.set(u);
    }
    int target;
    if (side.none()) {
      target = 0;
    } else if (side == Bitset::full(k)) {
      target = 1;
    } else {
      auto id = arr.find_by_side(side);
      if (!id) throw std::logic_error("element image is not a half-space of the dual");
      target = 2 + *id;
    }
    map[e] = target;
    if (hit[target]) throw std::logic_error("element map is not injective");
    hit[target] = 1;
  }
  for (int e = 0; e < p.size(); ++e) {
    if (map[p.complement(e)] != q.complement(map[e]))
      throw std::logic_error("element map does not commute with complementation");
    for (int f = 0; f < p.size(); ++f) {
      if (p.leq(e, f) != q.leq(map[e], map[f]))
        throw std::logic_error("element map is not an order isomorphism");
    }
  }
  return PocsetRoundtrip{std::move(dual), std::move(map)};
}

Walling Walling::close(int ground, std::vector<Bitset> walls) {
  Walling w;
  if (ground <= 0) throw std::invalid_argument("walling needs a nonempty ground set");
  w.ground_ = ground;
  for (const Bitset& b : walls) {
    if (b.universe() != ground) throw std::invalid_argument("wall universe mismatch");
  }
  std::sort(walls.begin(), walls.end(), BitsetLexLess{});
  walls.erase(std::unique(walls.begin(), walls.end()), walls.end());

  std::unordered_set<Bitset, BitsetHash> have(walls.begin(), walls.end());
  std::vector<Bitset> all = walls;
  for (const Bitset& b : walls) {
    Bitset c = ~b;
    if (have.insert(c).second) {
      all.push_back(c);
      w.added_complements_ = true;
    }
  }
  for (Bitset t : {Bitset(ground), Bitset::full(ground)}) {
    if (have.insert(t).second) {
      all.push_back(t);
      w.added_trivials_ = true;
    }
  }
  std::sort(all.begin(), all.end(), BitsetLexLess{});
  w.walls_ = std::move(all);

  std::unordered_map<Bitset, int, BitsetHash> index;
  for (size_t i = 0; i < w.walls_.size(); ++i) index[w.walls_[i]] = static_cast<int>(i);
  w.comp_.resize(w.walls_.size());
  for (size_t i = 0; i < w.walls_.size(); ++i) w.comp_[i] = index.at(~w.walls_[i]);
  return w;
}

BlockPartition blocks(const Walling& w) {
  int n = w.ground();
  int m = static_cast<int>(w.walls().size());
  std::unordered_map<Bitset, int, BitsetHash> sig_to_rep;
  std::vector<int> block_of(n, -1);
  std::vector<Bitset> sigs(n, Bitset(m));
  for (int x = 0; x < n; ++x) {
    for (int i = 0; i < m; ++i) {
      if (w.walls()[i].test(x)) sigs[x].set(i);
    }
    block_of[x] = sig_to_rep.try_emplace(sigs[x], x).first->second;
  }
  BlockPartition part;
  part.block_of = block_of;
  std::vector<int> reps;
  for (int x = 0; x < n; ++x)
    if (block_of[x] == x) reps.push_back(x);
  for (int r : reps) {
    Bitset blk(n);
    for (int x = 0; x < n; ++x)
      if (block_of[x] == r) blk.set(x);
    part.blocks.push_back(std::move(blk));
  }
  return part;
}

WallDual wall_dual(const Walling& w, uint64_t cap) {
  int m = static_cast<int>(w.walls().size());
  std::vector<Bitset> up(m, Bitset(m));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (w.walls()[i].is_subset_of(w.walls()[j])) up[i].set(j);
    }
  }
  std::vector<int> comp(m);
  for (int i = 0; i < m; ++i) comp[i] = w.complement_wall(i);
  int zero = -1;
  for (int i = 0; i < m; ++i) {
    if (w.walls()[i].none()) zero = i;
  }
  Pocset p = Pocset::unchecked(std::move(up), std::move(comp), zero);

  DualGraph dual = dual_median_graph(p, cap);
  std::unordered_map<Bitset, int, BitsetHash> index;
  for (size_t i = 0; i < dual.vertex_orientation.size(); ++i)
    index[dual.vertex_orientation[i]] = static_cast<int>(i);

  std::vector<int> principal(w.ground(), -1);
  for (int x = 0; x < w.ground(); ++x) {
    Bitset ori(m);
    for (int i = 0; i < m; ++i) {
      if (w.walls()[i].test(x)) ori.set(i);
    }
    auto it = index.find(ori);
    if (it == index.end()) throw std::logic_error("principal orientation missing from the wall dual");
    principal[x] = it->second;
  }
  return WallDual{std::move(p), std::move(dual), std::move(principal)};
}

ProperWallingReport proper_walling_report(const Walling& w) {
  ProperWallingReport r;
  int n = w.ground();
  const auto& walls = w.walls();
  int m = static_cast<int>(walls.size());
  r.wall_count = m;

  std::vector<int> nontrivial;
  for (int i = 0; i < m; ++i) {
    if (walls[i].any() && walls[i].count() < n) nontrivial.push_back(i);
  }
  r.nontrivial_wall_count = static_cast<int>(nontrivial.size());

  for (const Bitset& b : blocks(w).blocks) r.max_block_size = std::max(r.max_block_size, b.count());

  for (int i : nontrivial) {
    int nn = 0, succ = 0;
    for (int j : nontrivial) {
      if (j == i || j == w.complement_wall(i)) continue;
      if (!nested(walls[i], walls[j])) ++nn;
      if (walls[i].is_subset_of(walls[j]) && walls[i] != walls[j]) {
        bool between = false;
        for (int l : nontrivial) {
          if (l == i || l == j) continue;
          if (walls[i].is_subset_of(walls[l]) && walls[l].is_subset_of(walls[j]) &&
              walls[l] != walls[i] && walls[l] != walls[j]) {
            between = true;
            break;
          }
        }
        if (!between) ++succ;
      }
    }
    r.max_non_nested = std::max(r.max_non_nested, nn);
    r.max_successors = std::max(r.max_successors, succ);
  }

  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (x == y) continue;
      int c = 0;
      for (int i = 0; i < m; ++i) {
        if (walls[i].test(x) && !walls[i].test(y)) ++c;
      }
      r.max_separating = std::max(r.max_separating, c);
    }
  }
  return r;
}

}  // namespace treelike
