#include "treelike/bitset.hpp"

#include <stdexcept>

namespace treelike {

namespace {
void require_same_universe(const Bitset& a, const Bitset& b) {
  if (a.universe() != b.universe()) {
    throw std::invalid_argument("bitset universe mismatch");
  }
}
}  // namespace

Bitset::Bitset(int universe)
    : size_(universe), words_((static_cast<size_t>(universe) + 63) / 64, 0) {
  if (universe < 0) throw std::invalid_argument("negative universe");
}

Bitset Bitset::full(int universe) {
  Bitset b(universe);
  for (auto& w : b.words_) w = ~uint64_t{0};
  if (universe % 64 != 0 && !b.words_.empty()) {
    b.words_.back() &= (uint64_t{1} << (universe % 64)) - 1;
  }
  return b;
}

Bitset Bitset::of(int universe, std::initializer_list<int> bits) {
  Bitset b(universe);
  for (int i : bits) b.set(i);
  return b;
}

Bitset Bitset::from_indices(int universe, const std::vector<int>& bits) {
  Bitset b(universe);
  for (int i : bits) b.set(i);
  return b;
}

int Bitset::count() const {
  int c = 0;
  for (uint64_t w : words_) c += __builtin_popcountll(w);
  return c;
}

bool Bitset::any() const {
  for (uint64_t w : words_)
    if (w) return true;
  return false;
}

Bitset& Bitset::operator&=(const Bitset& o) {
  require_same_universe(*this, o);
  for (size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
  return *this;
}

Bitset& Bitset::operator|=(const Bitset& o) {
  require_same_universe(*this, o);
  for (size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
  return *this;
}

Bitset& Bitset::operator-=(const Bitset& o) {
  require_same_universe(*this, o);
  for (size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
  return *this;
}

Bitset Bitset::operator&(const Bitset& o) const {
  Bitset r = *this;
  r &= o;
  return r;
}

Bitset Bitset::operator|(const Bitset& o) const {
  Bitset r = *this;
  r |= o;
  return r;
}

Bitset Bitset::operator-(const Bitset& o) const {
  Bitset r = *this;
  r -= o;
  return r;
}

Bitset Bitset::operator~() const {
  Bitset r(size_);
  for (size_t i = 0; i < words_.size(); ++i) r.words_[i] = ~words_[i];
  if (size_ % 64 != 0 && !r.words_.empty()) {
    r.words_.back() &= (uint64_t{1} << (size_ % 64)) - 1;
  }
  return r;
}

bool Bitset::is_subset_of(const Bitset& o) const {
  require_same_universe(*this, o);
  for (size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~o.words_[i]) return false;
  return true;
}

bool Bitset::intersects(const Bitset& o) const {
  require_same_universe(*this, o);
  for (size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & o.words_[i]) return true;
  return false;
}

int Bitset::first() const {
  for (size_t i = 0; i < words_.size(); ++i)
    if (words_[i]) return static_cast<int>(i * 64 + __builtin_ctzll(words_[i]));
  return -1;
}

int Bitset::next(int after) const {
  int i = after + 1;
  if (i >= size_) return -1;
  size_t w = word(i);
  uint64_t m = words_[w] >> bit(i);
  if (m) return i + __builtin_ctzll(m);
  for (size_t j = w + 1; j < words_.size(); ++j)
    if (words_[j]) return static_cast<int>(j * 64 + __builtin_ctzll(words_[j]));
  return -1;
}

std::vector<int> Bitset::to_vector() const {
  std::vector<int> out;
  out.reserve(count());
  for_each([&](int i) { out.push_back(i); });
  return out;
}

bool Bitset::lex_less(const Bitset& o) const {
  require_same_universe(*this, o);
  for (size_t i = 0; i < words_.size(); ++i) {
    uint64_t diff = words_[i] ^ o.words_[i];
    if (diff) {
      int b = __builtin_ctzll(diff);
      // first differing position: smaller iff this side has the 0 bit there
      return ((words_[i] >> b) & 1u) == 0;
    }
  }
  return false;
}

size_t Bitset::hash() const {
  uint64_t h = 1469598103934665603ull ^ static_cast<uint64_t>(size_);
  for (uint64_t w : words_) {
    h ^= w;
    h *= 1099511628211ull;
  }
  return static_cast<size_t>(h);
}

}  // namespace treelike
