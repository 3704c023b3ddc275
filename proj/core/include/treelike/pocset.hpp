#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "treelike/halfspace.hpp"

namespace treelike {

struct PocsetViolation {
  enum class Kind {
    bad_index,
    involution_ill_formed,   // not a well-defined pairing
    involution_fixpoint,
    antisymmetry,
    not_order_reversing,
    no_least_element,
    lower_bound,             // p, ¬p with a common lower bound besides 0
  };
  Kind kind;
  int a = -1, b = -1;
  std::string message;
};

// Finite pocset: poset with least element 0 and an order-reversing
// fixpoint-free involution such that 0 is the only lower bound of any
// complementary pair. The stored order is reflexively and transitively
// closed.
class Pocset {
 public:
  int size() const { return static_cast<int>(up_.size()); }
  bool leq(int p, int q) const { return up_[p].test(q); }
  const Bitset& up(int p) const { return up_[p]; }
  const Bitset& down(int p) const { return down_[p]; }
  int complement(int p) const { return comp_[p]; }
  int zero() const { return zero_; }
  int one() const { return comp_[zero_]; }

  // For construction-by-design call sites; derived rows must already be
  // closed and valid.
  static Pocset unchecked(std::vector<Bitset> up_rows, std::vector<int> comp, int zero);

 private:
  std::vector<Bitset> up_;
  std::vector<Bitset> down_;
  std::vector<int> comp_;
  int zero_ = -1;
};

// Validates the axioms of a raw presentation. Order pairs are closed
// reflexively and transitively before checking; every distinct failure
// is reported with its own kind and witnesses.
std::variant<Pocset, PocsetViolation> validate_pocset(int n, const std::vector<std::pair<int, int>>& order_pairs,
                                                      const std::vector<std::pair<int, int>>& involution_pairs);

class CapExceededError : public std::runtime_error {
 public:
  CapExceededError(std::string msg, uint64_t cap) : std::runtime_error(std::move(msg)), cap(cap) {}
  uint64_t cap;
};

constexpr uint64_t kDefaultOrientationCap = uint64_t{1} << 20;

// All orientations (upward-closed transversals of the complementation),
// canonically ordered by their membership strings. Enumeration walks the
// flip graph from a greedily extended seed; exceeding the cap throws.
std::vector<Bitset> orientations(const Pocset& p, uint64_t cap = kDefaultOrientationCap);

struct DualGraph {
  Graph graph;
  std::vector<Bitset> vertex_orientation;  // per dual vertex, over pocset elements
};

// Graph on orientations; adjacent iff they differ by one complement swap.
DualGraph dual_median_graph(const Pocset& p, uint64_t cap = kDefaultOrientationCap);

// Pocset of half-space sides under inclusion, with the trivial pair added:
// element 0 is the empty side, element 1 the full side, element 2 + h the
// half-space with id h.
Pocset halfspace_pocset(const Arrangement& arr);

// x ↦ (half-spaces containing x), checked to be an isomorphism onto the
// dual of the half-space pocset. Failure throws: it would be a library bug.
struct GraphRoundtrip {
  DualGraph dual;
  std::vector<int> vertex_to_dual;
};
GraphRoundtrip roundtrip_graph(const Arrangement& arr, uint64_t cap = kDefaultOrientationCap);

// p ↦ (orientations containing p), checked to be a pocset isomorphism onto
// the half-space pocset of the dual graph.
struct PocsetRoundtrip {
  DualGraph dual;
  std::vector<int> element_to_element;
};
PocsetRoundtrip roundtrip_pocset(const Pocset& p, uint64_t cap = kDefaultOrientationCap);

// Complement-closed family of walls over a finite ground set, with the
// trivial pair always present. Closure is applied on construction and
// recorded.
class Walling {
 public:
  static Walling close(int ground, std::vector<Bitset> walls);

  int ground() const { return ground_; }
  const std::vector<Bitset>& walls() const { return walls_; }  // lex sorted, deduped
  int complement_wall(int w) const { return comp_[w]; }
  bool added_complements() const { return added_complements_; }
  bool added_trivials() const { return added_trivials_; }

 private:
  int ground_ = 0;
  std::vector<Bitset> walls_;
  std::vector<int> comp_;
  bool added_complements_ = false;
  bool added_trivials_ = false;
};

// Classes of the same-walls relation; block ids are least members.
struct BlockPartition {
  std::vector<int> block_of;
  std::vector<Bitset> blocks;  // ordered by least member
};
BlockPartition blocks(const Walling& w);

// Dual of the wall pocset plus the principal orientation of each ground
// point.
struct WallDual {
  Pocset pocset;               // elements are the distinct walls
  DualGraph dual;
  std::vector<int> principal;  // ground point -> dual vertex
};
WallDual wall_dual(const Walling& w, uint64_t cap = kDefaultOrientationCap);

// Finiteness quantities behind the properness axioms, all finite here;
// reported so callers can compare families.
struct ProperWallingReport {
  int wall_count = 0;
  int nontrivial_wall_count = 0;
  int max_block_size = 0;
  int max_non_nested = 0;   // over nontrivial walls
  int max_successors = 0;   // within the inclusion order on nontrivial walls
  int max_separating = 0;   // over ordered point pairs
};
ProperWallingReport proper_walling_report(const Walling& w);

}  // namespace treelike
