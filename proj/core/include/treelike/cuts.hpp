#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "treelike/graph.hpp"

namespace treelike {

enum class CutProvenance { radial, diam, card, treedec, brute, custom };

std::string to_string(CutProvenance p);

// One side of a cut with its boundary data and size metrics.
struct Cut {
  Bitset side;
  BoundaryBundle boundary;
  int boundary_diameter;  // of the total vertex boundary; -1 when empty
  int inner_size;         // |inner vertex boundary|
  int outer_size;
};

Cut make_cut(const Graph& g, Bitset side);

struct CutFamily {
  CutProvenance provenance = CutProvenance::custom;
  bool closed_under_complement = false;
  std::vector<Cut> cuts;
};

// Recomputes the complement-closure flag from the sides.
bool complement_closed(const CutFamily& f);

// Components of the complement of the radius-r ball around center,
// ordered by least vertex.
CutFamily radial_cuts(const Graph& g, int center, int radius);

// Radial cuts over all centers and radii, deduplicated by side; optionally
// closed under complement.
CutFamily all_radial_cuts(const Graph& g, bool close_complements = true);

// Keep cuts whose total vertex boundary has diameter <= r.
CutFamily filter_diam(const CutFamily& f, int r);

// Keep cuts with min(inner, outer) boundary size <= n; `one_sided` filters
// on the inner boundary alone.
CutFamily filter_card(const CutFamily& f, int n, bool one_sided = false);

// Keep cuts whose both sides are connected or empty.
CutFamily filter_connected(const Graph& g, const CutFamily& f);

// For every input cut H, component C of H, and component D of the
// complement of C, emit the complement of D. Trivial cuts pass through.
// Every output has both sides connected or empty, and its inward edge
// boundary is contained in some input's (asserted). Requires a
// complement-closed input.
CutFamily connectify(const Graph& g, const CutFamily& f);

struct FinitenessReport {
  std::vector<int> boundary_count;  // per vertex: cuts whose total boundary contains it
  int max_count = 0;
};
FinitenessReport walling_finiteness_check(const Graph& g, const CutFamily& f);

struct SuccessorDistanceReport {
  int successor_pairs = 0;
  int max_boundary_distance = 0;  // Hausdorff distance between total boundaries, maximized over pairs
};
// Successor pairs within the inclusion order on the family's nontrivial sides.
SuccessorDistanceReport successor_distance_report(const Graph& g, const CutFamily& f);

// All cuts with both sides connected or empty, including the trivial pair.
// Exhaustive over subsets; refuses more than max_vertices vertices.
CutFamily brute_force_cuts(const Graph& g, int max_vertices = 20);

}  // namespace treelike
