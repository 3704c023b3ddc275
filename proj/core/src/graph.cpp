#include "treelike/graph.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <set>
#include <stdexcept>
#include <string>

namespace treelike {

Graph::Graph() : cache_(std::make_shared<DistCache>()) {}

Graph Graph::from_edges(int vertex_count, std::vector<Edge> edges) {
  if (vertex_count < 0) throw std::invalid_argument("negative vertex count");
  for (auto& [u, v] : edges) {
    if (u < 0 || u >= vertex_count || v < 0 || v >= vertex_count) {
      throw std::invalid_argument("edge endpoint out of range");
    }
    if (u == v) throw std::invalid_argument("self-loop rejected");
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
    throw std::invalid_argument("duplicate edge rejected");
  }

  Graph g;
  g.n_ = vertex_count;
  g.edges_ = std::move(edges);
  std::vector<int> deg(vertex_count, 0);
  for (auto [u, v] : g.edges_) {
    ++deg[u];
    ++deg[v];
  }
  g.adj_start_.assign(vertex_count + 1, 0);
  for (int v = 0; v < vertex_count; ++v) g.adj_start_[v + 1] = g.adj_start_[v] + deg[v];
  g.adj_flat_.resize(g.adj_start_[vertex_count]);
  std::vector<int> fill(g.adj_start_.begin(), g.adj_start_.end() - 1);
  for (auto [u, v] : g.edges_) {
    g.adj_flat_[fill[u]++] = v;
    g.adj_flat_[fill[v]++] = u;
  }
  for (int v = 0; v < vertex_count; ++v) {
    std::sort(g.adj_flat_.begin() + g.adj_start_[v], g.adj_flat_.begin() + g.adj_start_[v + 1]);
  }
  return g;
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_) throw std::invalid_argument("vertex id out of range: " + std::to_string(v));
}

std::span<const int> Graph::neighbors(int v) const {
  check_vertex(v);
  return {adj_flat_.data() + adj_start_[v],
          static_cast<size_t>(adj_start_[v + 1] - adj_start_[v])};
}

int Graph::max_degree() const {
  int d = 0;
  for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
  return d;
}

bool Graph::has_edge(int u, int v) const {
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

int Graph::edge_index(int u, int v) const {
  if (u > v) std::swap(u, v);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{u, v});
  if (it == edges_.end() || *it != Edge{u, v}) return -1;
  return static_cast<int>(it - edges_.begin());
}

std::vector<int32_t> Graph::bfs_row(int source) const {
  check_vertex(source);
  std::vector<int32_t> d(n_, -1);
  std::vector<int> queue;
  queue.reserve(n_);
  d[source] = 0;
  queue.push_back(source);
  for (size_t head = 0; head < queue.size(); ++head) {
    int v = queue[head];
    for (int w : neighbors(v)) {
      if (d[w] < 0) {
        d[w] = d[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return d;
}

const std::vector<int32_t>& Graph::all_distances() const {
  std::call_once(cache_->once, [this] {
    auto& d = cache_->d;
    d.assign(static_cast<size_t>(n_) * n_, -1);
    for (int s = 0; s < n_; ++s) {
      auto row = bfs_row(s);
      std::copy(row.begin(), row.end(), d.begin() + static_cast<size_t>(s) * n_);
    }
  });
  return cache_->d;
}

int Graph::dist(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return all_distances()[static_cast<size_t>(u) * n_ + v];
}

std::span<const int32_t> Graph::dist_row(int source) const {
  check_vertex(source);
  const auto& d = all_distances();
  return {d.data() + static_cast<size_t>(source) * n_, static_cast<size_t>(n_)};
}

int Graph::ecc(int v) const {
  auto row = dist_row(v);
  int32_t m = 0;
  for (int32_t x : row) m = std::max(m, x);
  return m;
}

bool Graph::connected() const {
  if (n_ == 0) return true;
  auto row = bfs_row(0);
  return std::none_of(row.begin(), row.end(), [](int32_t x) { return x < 0; });
}

std::vector<int> Graph::component_ids() const {
  std::vector<int> comp(n_, -1);
  std::vector<int> queue;
  for (int s = 0; s < n_; ++s) {
    if (comp[s] >= 0) continue;
    comp[s] = s;
    queue.assign(1, s);
    for (size_t head = 0; head < queue.size(); ++head) {
      for (int w : neighbors(queue[head])) {
        if (comp[w] < 0) {
          comp[w] = s;
          queue.push_back(w);
        }
      }
    }
  }
  return comp;
}

BoundaryBundle boundaries(const Graph& g, const Bitset& a) {
  if (a.universe() != g.vertex_count()) throw std::invalid_argument("set universe mismatch");
  BoundaryBundle b{Bitset(g.vertex_count()), Bitset(g.vertex_count()), {}, {}};
  for (auto [u, v] : g.edges()) {
    bool ua = a.test(u), va = a.test(v);
    if (ua == va) continue;
    int in = ua ? u : v;
    int out = ua ? v : u;
    b.inner_vertex.set(in);
    b.outer_vertex.set(out);
    b.inner_edges.emplace_back(out, in);
  }
  std::sort(b.inner_edges.begin(), b.inner_edges.end());
  b.outer_edges.reserve(b.inner_edges.size());
  for (auto [u, v] : b.inner_edges) b.outer_edges.emplace_back(v, u);
  std::sort(b.outer_edges.begin(), b.outer_edges.end());
  return b;
}

Bitset interval(const Graph& g, int x, int y) {
  g.check_vertex(x);
  g.check_vertex(y);
  Bitset out(g.vertex_count());
  auto dx = g.dist_row(x), dy = g.dist_row(y);
  int32_t dxy = dx[y];
  if (dxy < 0) return out;
  for (int z = 0; z < g.vertex_count(); ++z) {
    if (dx[z] >= 0 && dy[z] >= 0 && dx[z] + dy[z] == dxy) out.set(z);
  }
  return out;
}

ConvexityReport is_convex(const Graph& g, const Bitset& a) {
  if (a.universe() != g.vertex_count()) throw std::invalid_argument("set universe mismatch");
  auto members = a.to_vector();
  for (int x : members) {
    for (int y : members) {
      if (y <= x) continue;
      Bitset iv = interval(g, x, y);
      iv -= a;
      int z = iv.first();
      if (z >= 0) return {false, ConvexityWitness{x, y, z}};
    }
  }
  return {true, std::nullopt};
}

std::vector<Bitset> components(const Graph& g, const Bitset& a) {
  if (a.universe() != g.vertex_count()) throw std::invalid_argument("set universe mismatch");
  std::vector<Bitset> out;
  Bitset seen(g.vertex_count());
  std::vector<int> queue;
  for (int s = a.first(); s >= 0; s = a.next(s)) {
    if (seen.test(s)) continue;
    Bitset comp(g.vertex_count());
    comp.set(s);
    seen.set(s);
    queue.assign(1, s);
    for (size_t head = 0; head < queue.size(); ++head) {
      for (int w : g.neighbors(queue[head])) {
        if (a.test(w) && !seen.test(w)) {
          seen.set(w);
          comp.set(w);
          queue.push_back(w);
        }
      }
    }
    out.push_back(std::move(comp));
  }
  return out;
}

Graph threshold_graph(const std::vector<std::vector<double>>& table, double r) {
  int n = static_cast<int>(table.size());
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(table[i].size()) != n) throw std::invalid_argument("table not square");
    if (table[i][i] != 0.0) throw std::invalid_argument("nonzero diagonal");
    for (int j = 0; j < n; ++j) {
      if (std::isnan(table[i][j]) || table[i][j] < 0) throw std::invalid_argument("negative or NaN entry");
      if (table[i][j] != table[j][i]) throw std::invalid_argument("asymmetric table");
    }
  }
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (table[i][j] <= r) edges.emplace_back(i, j);
  return Graph::from_edges(n, std::move(edges));
}

}  // namespace treelike
