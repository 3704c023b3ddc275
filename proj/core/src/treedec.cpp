#include "treelike/treedec.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace treelike {

namespace {

std::vector<Bitset> images_from_bags(int host_n, const std::vector<Bitset>& bags) {
  std::vector<Bitset> image(host_n, Bitset(static_cast<int>(bags.size())));
  for (size_t y = 0; y < bags.size(); ++y) {
    bags[y].for_each([&](int x) { image[x].set(static_cast<int>(y)); });
  }
  return image;
}

bool is_tree(const Graph& g) {
  return g.vertex_count() > 0 && g.connected() && g.edge_count() == g.vertex_count() - 1;
}

// skeleton path between two nodes of a tree
std::vector<int> tree_path(const Graph& tree, int a, int b) {
  auto row = tree.bfs_row(a);
  std::vector<int> path{b};
  int cur = b;
  while (cur != a) {
    for (int w : tree.neighbors(cur)) {
      if (row[w] == row[cur] - 1) {
        cur = w;
        break;
      }
    }
    path.push_back(cur);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

std::variant<TreeDecomposition, TreedecViolation> validate_treedec(const Graph& host, const Graph& skeleton,
                                                                   std::vector<Bitset> bags) {
  using V = TreedecViolation;
  if (static_cast<int>(bags.size()) != skeleton.vertex_count()) {
    throw std::invalid_argument("bag count differs from skeleton node count");
  }
  for (const Bitset& b : bags) {
    if (b.universe() != host.vertex_count()) throw std::invalid_argument("bag universe mismatch");
  }
  if (!is_tree(skeleton)) {
    return V{V::Kind::skeleton_not_tree, -1, -1, "skeleton is not a tree"};
  }
  std::vector<Bitset> image = images_from_bags(host.vertex_count(), bags);
  for (int x = 0; x < host.vertex_count(); ++x) {
    if (image[x].none()) {
      return V{V::Kind::empty_image, x, -1, "vertex " + std::to_string(x) + " is in no bag"};
    }
    if (components(skeleton, image[x]).size() != 1) {
      return V{V::Kind::image_not_connected, x, -1,
               "bags containing vertex " + std::to_string(x) + " do not form a subtree"};
    }
  }
  for (auto [u, v] : host.edges()) {
    if (!image[u].intersects(image[v])) {
      return V{V::Kind::edge_not_covered, u, v,
               "no bag contains both endpoints of (" + std::to_string(u) + ", " + std::to_string(v) + ")"};
    }
  }
  std::vector<int> labels(skeleton.vertex_count());
  std::iota(labels.begin(), labels.end(), 0);
  return TreeDecomposition{host, skeleton, std::move(labels), std::move(bags), std::move(image)};
}

int width(const TreeDecomposition& td) {
  int w = -1;
  for (const Bitset& b : td.bags) w = std::max(w, b.count() - 1);
  return w;
}

TreeDecomposition shrink_bags(const TreeDecomposition& td) {
  TreeDecomposition out = td;
  int n = out.host.vertex_count();
  for (int x = 0; x < n; ++x) {
    std::vector<int> picks;
    Bitset own = out.image[x];
    picks.push_back(own.first());
    for (int y : out.host.neighbors(x)) {
      Bitset shared = out.image[x] & out.image[y];
      int z = shared.first();
      if (z < 0) throw std::logic_error("shrink_bags: neighbor images do not meet");
      picks.push_back(z);
    }
    // skeleton hull of the picks: union of paths from the first pick
    Bitset hull(out.skeleton.vertex_count());
    for (int z : picks) {
      for (int w : tree_path(out.skeleton, picks[0], z)) hull.set(w);
    }
    if (!hull.is_subset_of(out.image[x])) {
      throw std::logic_error("shrink_bags: hull escaped the current image");
    }
    out.image[x] = hull;
  }
  // rebuild bags from images
  for (int y = 0; y < out.skeleton.vertex_count(); ++y) {
    Bitset bag(n);
    for (int x = 0; x < n; ++x) {
      if (out.image[x].test(y)) bag.set(x);
    }
    out.bags[y] = std::move(bag);
  }
  return out;
}

TreeDecomposition prune_skeleton(const TreeDecomposition& td) {
  // work on a mutable copy with node masks
  Graph skel = td.skeleton;
  std::vector<Bitset> bags = td.bags;
  std::vector<int> labels = td.skeleton_labels;

  for (;;) {
    int m = skel.vertex_count();
    bool removed = false;
    for (auto [y, y2] : [&] {
      std::vector<Edge> dirs;
      for (auto [a, b] : skel.edges()) {
        dirs.emplace_back(a, b);
        dirs.emplace_back(b, a);
      }
      std::sort(dirs.begin(), dirs.end());
      return dirs;
    }()) {
      // branch at y2 away from y
      auto row = skel.bfs_row(y);
      Bitset branch(m);
      for (int z = 0; z < m; ++z) {
        if (z == y) continue;
        // z beyond y2: the path y..z passes y2
        if (row[z] >= 0) {
          // walk back from z towards y and see whether we hit y2
          int cur = z;
          while (cur != y && cur != y2) {
            for (int w : skel.neighbors(cur)) {
              if (row[w] == row[cur] - 1) {
                cur = w;
                break;
              }
            }
          }
          if (cur == y2) branch.set(z);
        }
      }
      Bitset preimage(td.host.vertex_count());
      branch.for_each([&](int z) { preimage |= bags[z]; });
      if (preimage.is_subset_of(bags[y])) {
        // drop the branch
        std::vector<int> keep;
        for (int z = 0; z < m; ++z) {
          if (!branch.test(z)) keep.push_back(z);
        }
        std::vector<int> new_id(m, -1);
        for (size_t i = 0; i < keep.size(); ++i) new_id[keep[i]] = static_cast<int>(i);
        std::vector<Edge> new_edges;
        for (auto [a, b] : skel.edges()) {
          if (new_id[a] >= 0 && new_id[b] >= 0) new_edges.emplace_back(new_id[a], new_id[b]);
        }
        std::vector<Bitset> new_bags;
        std::vector<int> new_labels;
        for (int z : keep) {
          new_bags.push_back(bags[z]);
          new_labels.push_back(labels[z]);
        }
        skel = Graph::from_edges(static_cast<int>(keep.size()), std::move(new_edges));
        bags = std::move(new_bags);
        labels = std::move(new_labels);
        removed = true;
        break;
      }
    }
    if (!removed) break;
  }

  auto res = validate_treedec(td.host, skel, bags);
  if (std::holds_alternative<TreedecViolation>(res)) {
    throw std::logic_error("prune_skeleton produced an invalid decomposition: " +
                           std::get<TreedecViolation>(res).message);
  }
  TreeDecomposition out = std::get<TreeDecomposition>(std::move(res));
  out.skeleton_labels = std::move(labels);
  return out;
}

CutFamily treedec_cuts(const TreeDecomposition& td, bool close_complements) {
  std::vector<Bitset> sides;
  for (int y = 0; y < td.skeleton.vertex_count(); ++y) {
    for (const Bitset& comp : components(td.host, ~td.bags[y])) {
      BoundaryBundle b = boundaries(td.host, comp);
      if (!b.outer_vertex.is_subset_of(td.bags[y])) {
        throw std::logic_error("treedec cut boundary escaped the bag");
      }
      sides.push_back(comp);
      if (close_complements) sides.push_back(~comp);
    }
  }
  std::sort(sides.begin(), sides.end(), BitsetLexLess{});
  sides.erase(std::unique(sides.begin(), sides.end()), sides.end());
  CutFamily f;
  f.provenance = CutProvenance::treedec;
  for (Bitset& s : sides) f.cuts.push_back(make_cut(td.host, std::move(s)));
  f.closed_under_complement = complement_closed(f);
  return f;
}

TreeDecomposition heuristic_treedec(const Graph& host) {
  int n = host.vertex_count();
  if (n == 0) {
    // one empty bag on a single node
    auto res = validate_treedec(host, Graph::from_edges(1, {}), {Bitset(0)});
    return std::get<TreeDecomposition>(std::move(res));
  }

  // min-degree elimination on a working adjacency
  std::vector<std::set<int>> adj(n);
  for (auto [u, v] : host.edges()) {
    adj[u].insert(v);
    adj[v].insert(u);
  }
  std::vector<char> gone(n, 0);
  std::vector<int> order;            // elimination order
  std::vector<std::vector<int>> nbr;  // neighbors at elimination time
  std::vector<int> when(n, -1);
  for (int step = 0; step < n; ++step) {
    int best = -1;
    for (int v = 0; v < n; ++v) {
      if (gone[v]) continue;
      if (best < 0 || adj[v].size() < adj[best].size()) best = v;
    }
    when[best] = step;
    order.push_back(best);
    std::vector<int> nb(adj[best].begin(), adj[best].end());
    nbr.push_back(nb);
    for (int a : nb) {
      adj[a].erase(best);
      for (int b : nb) {
        if (a < b) {
          adj[a].insert(b);
          adj[b].insert(a);
        }
      }
    }
    gone[best] = 1;
    adj[best].clear();
  }

  // bag per elimination step; node i connects to the step of its earliest
  // eliminated neighbor-at-elimination
  std::vector<Bitset> bags(n, Bitset(n));
  std::vector<Edge> skel_edges;
  for (int i = 0; i < n; ++i) {
    bags[i].set(order[i]);
    for (int v : nbr[i]) bags[i].set(v);
    if (!nbr[i].empty()) {
      int first = -1;
      for (int v : nbr[i]) {
        if (first < 0 || when[v] < when[first]) first = v;
      }
      skel_edges.emplace_back(i, when[first]);
    }
  }
  // isolated skeleton nodes (hosts with several components): chain them
  {
    std::vector<Edge> undirected;
    for (auto [a, b] : skel_edges) undirected.emplace_back(std::min(a, b), std::max(a, b));
    Graph probe = Graph::from_edges(n, undirected);
    auto comp = probe.component_ids();
    std::vector<int> reps;
    for (int v = 0; v < n; ++v) {
      if (comp[v] == v) reps.push_back(v);
    }
    for (size_t i = 1; i < reps.size(); ++i) undirected.emplace_back(std::min(reps[i - 1], reps[i]), std::max(reps[i - 1], reps[i]));
    skel_edges = std::move(undirected);
  }

  Graph skel = Graph::from_edges(n, skel_edges);
  auto res = validate_treedec(host, skel, bags);
  if (std::holds_alternative<TreedecViolation>(res)) {
    throw std::logic_error("heuristic_treedec produced an invalid decomposition: " +
                           std::get<TreedecViolation>(res).message);
  }
  return std::get<TreeDecomposition>(std::move(res));
}

bool partition_law_holds(const TreeDecomposition& td) {
  int m = td.skeleton.vertex_count();
  for (int y = 0; y < m; ++y) {
    Bitset rest = ~td.bags[y];
    auto row = td.skeleton.bfs_row(y);
    Bitset covered(td.host.vertex_count());
    for (int y2 : td.skeleton.neighbors(y)) {
      // branch at y2 away from y
      Bitset branch(m);
      for (int z = 0; z < m; ++z) {
        if (z == y) continue;
        int cur = z;
        while (cur != y && cur != y2) {
          bool stepped = false;
          for (int w : td.skeleton.neighbors(cur)) {
            if (row[w] == row[cur] - 1) {
              cur = w;
              stepped = true;
              break;
            }
          }
          if (!stepped) break;
        }
        if (cur == y2) branch.set(z);
      }
      Bitset piece(td.host.vertex_count());
      branch.for_each([&](int z) { piece |= td.bags[z]; });
      piece -= td.bags[y];
      if (piece.intersects(covered)) return false;  // pieces must be disjoint
      covered |= piece;
    }
    if (!(covered == rest)) return false;
  }
  return true;
}

}  // namespace treelike
