#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace scd {

// Dynamic bitset sized once at construction. Adjacency rows, alive-vertex
// masks and neighbourhood sets all use this; desk-scale graphs fit in a
// handful of 64-bit words.
class Bitset {
public:
  Bitset() = default;
  explicit Bitset(int nbits) : nbits_(nbits), w_((nbits + 63) / 64, 0) {}

  int capacity() const { return nbits_; }

  void set(int i) { w_[i >> 6] |= uint64_t(1) << (i & 63); }
  void reset(int i) { w_[i >> 6] &= ~(uint64_t(1) << (i & 63)); }
  bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

  void clear() { std::fill(w_.begin(), w_.end(), uint64_t(0)); }
  void set_all() {
    if (nbits_ == 0) return;
    std::fill(w_.begin(), w_.end(), ~uint64_t(0));
    trim();
  }

  bool any() const {
    for (uint64_t w : w_)
      if (w) return true;
    return false;
  }
  bool none() const { return !any(); }

  int count() const {
    int c = 0;
    for (uint64_t w : w_) c += std::popcount(w);
    return c;
  }

  // First set bit, or -1.
  int first() const {
    for (size_t k = 0; k < w_.size(); ++k)
      if (w_[k]) return int(k * 64) + std::countr_zero(w_[k]);
    return -1;
  }

  // First set bit strictly above i, or -1.
  int next(int i) const {
    ++i;
    if (i >= nbits_) return -1;
    size_t k = size_t(i >> 6);
    uint64_t w = w_[k] & (~uint64_t(0) << (i & 63));
    while (true) {
      if (w) return int(k * 64) + std::countr_zero(w);
      if (++k >= w_.size()) return -1;
      w = w_[k];
    }
  }

  // Highest set bit, or -1.
  int last() const {
    for (size_t k = w_.size(); k-- > 0;)
      if (w_[k]) return int(k * 64) + 63 - std::countl_zero(w_[k]);
    return -1;
  }

  Bitset& operator&=(const Bitset& o) {
    for (size_t k = 0; k < w_.size(); ++k) w_[k] &= o.w_[k];
    return *this;
  }
  Bitset& operator|=(const Bitset& o) {
    for (size_t k = 0; k < w_.size(); ++k) w_[k] |= o.w_[k];
    return *this;
  }
  Bitset& and_not(const Bitset& o) {
    for (size_t k = 0; k < w_.size(); ++k) w_[k] &= ~o.w_[k];
    return *this;
  }

  bool is_subset_of(const Bitset& o) const {
    for (size_t k = 0; k < w_.size(); ++k)
      if (w_[k] & ~o.w_[k]) return false;
    return true;
  }

  bool intersects(const Bitset& o) const {
    for (size_t k = 0; k < w_.size(); ++k)
      if (w_[k] & o.w_[k]) return true;
    return false;
  }

  friend bool operator==(const Bitset& a, const Bitset& b) {
    return a.nbits_ == b.nbits_ && a.w_ == b.w_;
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    for (int i = first(); i != -1; i = next(i)) out.push_back(i);
    return out;
  }

private:
  void trim() {
    int tail = nbits_ & 63;
    if (tail) w_.back() &= (~uint64_t(0)) >> (64 - tail);
  }

  int nbits_ = 0;
  std::vector<uint64_t> w_;
};

inline Bitset bit_and(Bitset a, const Bitset& b) { return a &= b; }
inline Bitset bit_or(Bitset a, const Bitset& b) { return a |= b; }
inline Bitset bit_and_not(Bitset a, const Bitset& b) { return a.and_not(b); }

} // namespace scd
