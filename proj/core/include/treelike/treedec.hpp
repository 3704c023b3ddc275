#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "treelike/cuts.hpp"
#include "treelike/graph.hpp"

namespace treelike {

// Tree decomposition as a relation between host vertices and skeleton
// nodes: image(x) is the set of nodes whose bag contains x.
struct TreeDecomposition {
  Graph host;
  Graph skeleton;                    // a tree
  std::vector<int> skeleton_labels;  // original node ids, for pruned outputs
  std::vector<Bitset> bags;          // per skeleton node, over host vertices
  std::vector<Bitset> image;         // per host vertex, over skeleton nodes
};

struct TreedecViolation {
  enum class Kind {
    skeleton_not_tree,
    empty_image,          // witness: host vertex
    image_not_connected,  // witness: host vertex
    edge_not_covered,     // witnesses: host edge endpoints
  };
  Kind kind;
  int a = -1, b = -1;
  std::string message;
};

// Checks the three decomposition clauses in order and reports the first
// violated one with a witness.
std::variant<TreeDecomposition, TreedecViolation> validate_treedec(const Graph& host, const Graph& skeleton,
                                                                   std::vector<Bitset> bags);

// max bag size - 1; -1 for an empty decomposition.
int width(const TreeDecomposition& td);

// Per host vertex: pick a shared node with each closed neighbor, then
// replace the image by the skeleton hull of the picks. Never grows
// images or bags.
TreeDecomposition shrink_bags(const TreeDecomposition& td);

// Repeatedly delete branches hanging off a node y whose host preimage is
// contained in the bag of y. Output is re-indexed; original node ids stay
// in skeleton_labels.
TreeDecomposition prune_skeleton(const TreeDecomposition& td);

// Per skeleton node y: components of the host minus bag(y). Each cut's
// outer vertex boundary lies inside bag(y) (asserted).
CutFamily treedec_cuts(const TreeDecomposition& td, bool close_complements = false);

// Min-degree elimination heuristic; ties broken by least vertex id.
TreeDecomposition heuristic_treedec(const Graph& host);

// The branches around each node partition the rest of the host (used by
// tests; a theorem for valid decompositions).
bool partition_law_holds(const TreeDecomposition& td);

}  // namespace treelike
