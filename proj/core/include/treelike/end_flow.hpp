#pragma once

#include <map>
#include <string>
#include <vector>

#include "treelike/halfspace.hpp"

namespace treelike {

// A target to flow toward: an orientation of the half-space pocset given by
// a per-half-space membership bit. Principal targets take the half-spaces
// around a vertex; windows reuse the horizon vertex as an end proxy.
struct EndTarget {
  int target = -1;
  std::vector<char> in_u;  // per half-space id: does the target side contain U
};

EndTarget principal_target(const Arrangement& arr, int u);

// A_{U,x}: the maximal half-spaces containing the target but not x.
// Each has x on its outer vertex boundary; pairwise non-nested (checked).
std::vector<int> a_set(const Arrangement& arr, const EndTarget& u, int x);

// One flow step: the gate projection of x onto the intersection of
// A_{U,x}; x itself when the set is empty.
int t_u_step(const Arrangement& arr, const EndTarget& u, int x);

// Variant step crossing a single half-space of A_{U,x} (least id).
// One choice rule among many; no canonicity claimed.
int t_u_step_single(const Arrangement& arr, const EndTarget& u, int x);

struct FlowForest {
  std::vector<int> step;   // step[x] = T_U(x)
  std::vector<int> orbit;  // orbit id per vertex; the id is the least member
  std::vector<int> fixed;  // fixed points, ascending
};

// Step map over all vertices with orbit partition. Checks that the
// half-spaces containing the target but not x shrink strictly along
// non-fixed steps.
FlowForest flow_forest(const Arrangement& arr, const EndTarget& u);

// The vertex whose forward orbit is the intersection of the forward
// orbits of c. The half-space h must contain c and not the target; the
// first iterate of each member outside h must land on its outer boundary.
int t_u_root(const Arrangement& arr, const EndTarget& u, const Bitset& c, int h);

struct EnReport {
  // class id per vertex per level 0..n_max; the id is the least member
  std::vector<std::vector<int>> classes;
  // per level, class id -> roots of the class's orbit slices
  std::vector<std::map<int, std::vector<int>>> roots;
  int orbit_count = 0;
  bool finitely_many_orbits = true;  // always on finite instances; reported
};

// x E_n y iff every half-space missing the target that meets more than n
// orbits contains both or neither.
EnReport e_n_sequence(const Arrangement& arr, const EndTarget& u, int n_max);

enum class WindowFamilyKind { quadrant_staircase, regular_tree, ladder, grid_quadrant };

WindowFamilyKind parse_window_kind(const std::string& name);
std::string to_string(WindowFamilyKind kind);

// A finite window of a fixed infinite median graph. The horizon vertex
// stands in for the end; a vertex is certified when its 2-ball is free of
// frontier vertices, which makes the window A-set exact.
struct WindowedFamily {
  WindowFamilyKind kind;
  int radius;
  int degree;  // regular-tree branching; 0 otherwise
  Arrangement arr;
  EndTarget target;
  int horizon;
  Bitset frontier;   // vertices with neighbors cut off by the window
  Bitset certified;  // distance >= 2 from the frontier
  std::vector<std::pair<int, int>> coords;  // grids: (a, b); tree: (depth, parent)
};

WindowedFamily make_window(WindowFamilyKind kind, int radius, int degree = 3);

// Certified wrappers; throw std::invalid_argument on uncertified vertices.
std::vector<int> windowed_a_set(const WindowedFamily& w, int x);
int windowed_step(const WindowedFamily& w, int x);

}  // namespace treelike
