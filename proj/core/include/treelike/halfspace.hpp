#pragma once

#include <optional>
#include <unordered_map>
#include <vector>

#include "treelike/median.hpp"

namespace treelike {

// A nontrivial half-space: one side of a hyperplane.
struct HalfSpace {
  int id;             // rank of the least oriented member edge
  int complement_id;  // the other side, linked by edge reversal
  int pair_id;        // unoriented hyperplane class
  Bitset side;
  BoundaryBundle boundary;
};

// An unoriented hyperplane: the class of edges crossing it.
struct HyperplaneClass {
  int pair_id;
  std::vector<Edge> edges;  // canonical u < v, sorted
  int halfspace_a;          // id, a < b
  int halfspace_b;
  Bitset total_boundary;    // inner ∪ outer vertex boundary (same for both sides)
  int boundary_diameter;    // diameter of total_boundary in the graph metric
};

// All half-spaces of a median graph. Edge classes are grown from
// opposite sides of 4-cycles; sides come from distance comparison
// across a representative edge and are checked against the class.
class Arrangement {
 public:
  static Arrangement build(const MedianGraph& m);

  const MedianGraph& median() const { return m_; }
  const Graph& graph() const { return m_.graph(); }

  const std::vector<HalfSpace>& halfspaces() const { return halfspaces_; }
  const std::vector<HyperplaneClass>& classes() const { return classes_; }
  int halfspace_count() const { return static_cast<int>(halfspaces_.size()); }
  int pair_count() const { return static_cast<int>(classes_.size()); }

  const HalfSpace& halfspace(int id) const { return halfspaces_.at(id); }
  const HalfSpace& complement(int id) const { return halfspaces_.at(halfspaces_.at(id).complement_id); }

  // Half-space entered when crossing the edge from u to v (side containing v).
  int crossing(int u, int v) const;
  int pair_of_edge(int u, int v) const;

  std::optional<int> find_by_side(const Bitset& side) const;

 private:
  explicit Arrangement(MedianGraph m) : m_(std::move(m)) {}

  MedianGraph m_;
  std::vector<HalfSpace> halfspaces_;
  std::vector<HyperplaneClass> classes_;
  std::vector<int> crossing_of_oriented_;  // 2 * edge_index + direction
  std::unordered_map<Bitset, int, BitsetHash> by_side_;
};

// The four corners of a pair of half-spaces.
struct Corners {
  Bitset both;        // H ∩ K
  Bitset only_first;  // H ∖ K
  Bitset only_second; // K ∖ H
  Bitset neither;     // complement of H ∪ K
};

Corners corners(const Bitset& h, const Bitset& k);

// Nested iff some corner is empty.
bool nested(const Bitset& h, const Bitset& k);

// Half-spaces k with k ⊋ h and nothing strictly between, located by the
// boundary test: k ⊇ h and ∂iv(k) meets ∂ov(h).
std::vector<int> successors(const Arrangement& arr, int halfspace_id);

// Graph on hyperplane classes; distinct classes are adjacent iff their
// total boundaries intersect. Cross-checked against the order-theoretic
// description (non-nested or successor in some orientation).
Graph hyperplane_adjacency(const Arrangement& arr);

// Ids of half-spaces containing y but not x, ascending.
std::vector<int> separating_halfspaces(const Arrangement& arr, int x, int y);

// A half-space containing A and disjoint from B, found from the first edge
// of a lexicographically-least shortest geodesic between the sets.
int separate_convex(const Arrangement& arr, const Bitset& a, const Bitset& b);

// Corner vertices of the cube spanned by a pairwise non-nested family,
// indexed by bitmask (bit i set = inside halfspace_ids[i]).
struct CubeEmbedding {
  std::vector<int> halfspace_ids;
  std::vector<int> corner_vertex;  // size 2^k
};

CubeEmbedding cube_embedding(const Arrangement& arr, const std::vector<int>& halfspace_ids);

}  // namespace treelike
