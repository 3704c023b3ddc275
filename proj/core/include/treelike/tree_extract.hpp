#pragma once

#include <cstdint>
#include <vector>

#include "treelike/halfspace.hpp"

namespace treelike {

// Proper coloring of hyperplane classes: complement pairs share a color,
// classes with intersecting total boundaries get distinct colors.
struct HalfspaceColoring {
  std::vector<int> color_of_pair;
  int color_count = 0;
};

// Greedy coloring in ascending pair id.
HalfspaceColoring color_halfspaces(const Arrangement& arr);

// Same, but checks that the graph has max degree <= max_degree and all
// hyperplane boundary diameters <= max_diam, and that the color count
// stays within the 3^(D^(2R+1)) budget those bounds guarantee.
HalfspaceColoring color_halfspaces_bounded(const Arrangement& arr, int max_degree, int max_diam);

// Stagewise forest: stage n has one edge per adjacent pair of blocks of
// the relation "not separated by a hyperplane of color >= n".
struct StagedForest {
  // stage_edges[n] = edges of T_{n+1} (cumulative); empty T_0 omitted
  std::vector<std::vector<Edge>> stage_edges;
  // stage_blocks[n] = block id per vertex at stage n (n = 0 .. color_count);
  // the id is the least vertex of the block
  std::vector<std::vector<int>> stage_blocks;
};

StagedForest extract_spanning_tree(const Arrangement& arr, const HalfspaceColoring& coloring);

// Distance bound per stage: M_1 = 1, M_{n+1} = 2 r M_n + 1 (saturating).
std::vector<uint64_t> stage_distance_bounds(int stages, int r);

struct QuasiIsometryReport {
  std::vector<uint64_t> bound;         // M_n per stage
  std::vector<int> observed_max;       // max forest distance over same-block host edges
  bool within = true;
};

// Checks d_{T_n}(x, y) <= M_n for every host edge (x, y) inside one
// stage-n block. Requires all boundary diameters <= r.
QuasiIsometryReport verify_quasi_isometry(const Arrangement& arr, const StagedForest& sf, int r);

// Partition sequence on a finite ground set; class ids are least members.
struct FerSequence {
  std::vector<std::vector<int>> class_of;  // per level, per point
};

struct FerWitness {
  FerSequence seq;
  bool cofinal = false;  // some member contains every point
  int max_size = 0;
};

// Level n relates points not separated by any member of size > n.
// Levels run from 0 to the maximum member size.
FerWitness oneended_fer_witness(int ground, const std::vector<Bitset>& family);

// Rank variant: level n uses the family with minimal members peeled off
// n times; stops once the family is empty.
FerWitness oneended_fer_witness_rank(int ground, const std::vector<Bitset>& family);

struct OneEndedAxiomReport {
  bool cofinal = false;
  int max_pair_separating = 0;  // members containing x but not y, maximized over pairs
  int max_split = 0;            // members meeting and missing part of I, maximized over I
  int max_non_nested = 0;       // members non-nested with I, maximized over I
  bool non_nested_within_split = true;  // the non-nested witnesses also split
};

OneEndedAxiomReport oneended_axiom_check(int ground, const std::vector<Bitset>& family);

// Repeatedly delete the minimal half-spaces avoiding the target vertex,
// joining deleted vertices to their projection onto the survivors.
struct LeafPruneResult {
  std::vector<Bitset> deleted_per_stage;
  std::vector<Edge> links;  // (deleted vertex, projection target)
  FerSequence seq;          // partition after each stage, final level all-one
  int root;                 // the target vertex
};

LeafPruneResult leaf_prune(const Arrangement& arr, int target);

}  // namespace treelike
