#pragma once

#include <optional>
#include <stdexcept>

#include "treelike/graph.hpp"

namespace treelike {

struct MedianWitness {
  int x, y, z;
  Bitset intersection;  // [x,y] ∩ [y,z] ∩ [z,x], empty or with >= 2 elements
};

struct MedianCertificate {
  bool accepted;
  std::optional<MedianWitness> witness;  // lexicographically least failure
};

class NotMedianError : public std::runtime_error {
 public:
  NotMedianError(std::string msg, MedianWitness w)
      : std::runtime_error(std::move(msg)), witness(std::move(w)) {}
  MedianWitness witness;
};

// Reference recognition: every triple must have a one-point interval
// intersection. Cubic in the vertex count with memoized distances.
// Throws on disconnected input.
MedianCertificate check_median(const Graph& g);

// A graph together with evidence that it is median. `verify` runs the
// reference check; `assume_median` is for outputs of constructions that
// are median by design (duals, generators) and is spot-checked in tests.
class MedianGraph {
 public:
  static MedianGraph verify(Graph g);
  static MedianGraph assume_median(Graph g);

  const Graph& graph() const { return g_; }
  int vertex_count() const { return g_.vertex_count(); }

 private:
  explicit MedianGraph(Graph g) : g_(std::move(g)) {}
  Graph g_;
};

// The unique vertex in [x,y] ∩ [y,z] ∩ [z,x].
int median_vertex(const MedianGraph& m, int x, int y, int z);

// cone(x, y) = { z : y ∈ [x, z] }; convex in a median graph.
Bitset cone(const Graph& g, int x, int y);

// Nearest-point projection onto a nonempty convex set, via repeated
// medians against violating members scanned in ascending id order.
int gate_projection(const MedianGraph& m, const Bitset& a, int x);

// Least convex superset, by interval-closure iteration.
Bitset convex_hull(const MedianGraph& m, const Bitset& a);

}  // namespace treelike
