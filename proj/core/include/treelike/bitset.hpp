#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace treelike {

// Fixed-universe bitset used for vertex sets and half-space sides.
// The universe size is part of the value; operations require equal universes.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(int universe);

  static Bitset full(int universe);
  static Bitset of(int universe, std::initializer_list<int> bits);
  static Bitset from_indices(int universe, const std::vector<int>& bits);

  int universe() const { return size_; }

  bool test(int i) const { return (words_[word(i)] >> bit(i)) & 1u; }
  void set(int i) { words_[word(i)] |= uint64_t{1} << bit(i); }
  void reset(int i) { words_[word(i)] &= ~(uint64_t{1} << bit(i)); }
  void assign(int i, bool value) { value ? set(i) : reset(i); }

  int count() const;
  bool any() const;
  bool none() const { return !any(); }

  Bitset& operator&=(const Bitset& o);
  Bitset& operator|=(const Bitset& o);
  Bitset& operator-=(const Bitset& o);  // set difference
  Bitset operator&(const Bitset& o) const;
  Bitset operator|(const Bitset& o) const;
  Bitset operator-(const Bitset& o) const;
  Bitset operator~() const;  // complement within the universe

  bool operator==(const Bitset& o) const = default;

  bool is_subset_of(const Bitset& o) const;
  bool intersects(const Bitset& o) const;

  // Set bits in increasing order; -1 when exhausted.
  int first() const;
  int next(int after) const;

  template <typename F>
  void for_each(F&& f) const {
    for (size_t w = 0; w < words_.size(); ++w) {
      uint64_t m = words_[w];
      while (m) {
        int b = __builtin_ctzll(m);
        f(static_cast<int>(w * 64 + b));
        m &= m - 1;
      }
    }
  }

  std::vector<int> to_vector() const;

  // Lexicographic order on the membership string b_0 b_1 ... b_{n-1}.
  bool lex_less(const Bitset& o) const;

  size_t hash() const;

 private:
  static size_t word(int i) { return static_cast<size_t>(i) >> 6; }
  static int bit(int i) { return i & 63; }

  int size_ = 0;
  std::vector<uint64_t> words_;
};

struct BitsetHash {
  size_t operator()(const Bitset& b) const { return b.hash(); }
};

struct BitsetLexLess {
  bool operator()(const Bitset& a, const Bitset& b) const { return a.lex_less(b); }
};

}  // namespace treelike
