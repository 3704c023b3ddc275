#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "treelike/bitset.hpp"

namespace treelike {

using Edge = std::pair<int, int>;

// Undirected simple graph on dense 0-based vertex ids.
// Immutable after construction. All-pairs distances are computed lazily and
// memoized behind a lock shared by copies.
class Graph {
 public:
  Graph();

  // Validates ids, rejects self-loops and duplicate edges.
  static Graph from_edges(int vertex_count, std::vector<Edge> edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  std::span<const int> neighbors(int v) const;
  int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
  int max_degree() const;
  bool has_edge(int u, int v) const;

  // Canonical edge list: u < v, sorted lexicographically.
  const std::vector<Edge>& edges() const { return edges_; }
  // Index of canonical edge (u, v) in edges(); -1 if absent.
  int edge_index(int u, int v) const;

  // Fresh single-source BFS row; -1 marks unreachable vertices.
  std::vector<int32_t> bfs_row(int source) const;

  // Memoized all-pairs distances; -1 marks unreachable pairs.
  int dist(int u, int v) const;
  std::span<const int32_t> dist_row(int source) const;

  // Max finite distance from v.
  int ecc(int v) const;

  bool connected() const;
  // Component id per vertex; the id is the least vertex of the component.
  std::vector<int> component_ids() const;

  void check_vertex(int v) const;

 private:
  int n_ = 0;
  std::vector<int> adj_flat_;
  std::vector<int> adj_start_;
  std::vector<Edge> edges_;

  struct DistCache {
    std::once_flag once;
    std::vector<int32_t> d;
  };
  std::shared_ptr<DistCache> cache_;

  const std::vector<int32_t>& all_distances() const;
};

// Boundary data of a vertex set A, per the four boundary operators.
// Inward edges are oriented (u, v) with u outside and v inside A;
// outward edges are their reversals.
struct BoundaryBundle {
  Bitset inner_vertex;             // A touching the complement
  Bitset outer_vertex;             // complement touching A
  std::vector<Edge> inner_edges;   // (u, v), u not in A, v in A
  std::vector<Edge> outer_edges;   // reversals of inner_edges

  Bitset total_vertex() const { return inner_vertex | outer_vertex; }
};

BoundaryBundle boundaries(const Graph& g, const Bitset& a);

// Interval [x, y] = vertices z with d(x,z) + d(z,y) = d(x,y).
// Empty when x and y lie in different components.
Bitset interval(const Graph& g, int x, int y);

struct ConvexityWitness {
  int x, y, z;  // z lies in [x, y] but outside the set
};

struct ConvexityReport {
  bool convex;
  std::optional<ConvexityWitness> witness;  // lexicographically least
};

ConvexityReport is_convex(const Graph& g, const Bitset& a);

// Maximal connected subsets of a under the induced subgraph,
// ordered by least vertex.
std::vector<Bitset> components(const Graph& g, const Bitset& a);

// Graph on the points of a finite metric table with edges at distance <= r.
// The table must be square, symmetric, nonnegative, with zero diagonal.
Graph threshold_graph(const std::vector<std::vector<double>>& table, double r);

}  // namespace treelike
