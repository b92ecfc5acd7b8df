#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace diskflow {

// Fixed-width bitset sized at runtime. Rows of the adjacency matrix and the
// candidate sets of the clique searches are all of this type.
class Bits {
 public:
  Bits() = default;
  explicit Bits(size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  size_t size() const { return size_; }
  size_t word_count() const { return words_.size(); }
  const std::vector<uint64_t>& words() const { return words_; }

  void set(size_t i) { words_[i >> 6] |= uint64_t{1} << (i & 63); }
  void reset(size_t i) { words_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }
  bool test(size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }

  void set_all() {
    for (auto& w : words_) w = ~uint64_t{0};
    trim();
  }

  size_t count() const {
    size_t c = 0;
    for (auto w : words_) c += static_cast<size_t>(std::popcount(w));
    return c;
  }

  bool any() const {
    for (auto w : words_) {
      if (w) return true;
    }
    return false;
  }

  bool intersects(const Bits& o) const {
    for (size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] & o.words_[i]) return true;
    }
    return false;
  }

  Bits& operator&=(const Bits& o) {
    for (size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  Bits& operator|=(const Bits& o) {
    for (size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  Bits& subtract(const Bits& o) {
    for (size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }

  friend Bits operator&(Bits a, const Bits& b) { return a &= b; }
  friend bool operator==(const Bits&, const Bits&) = default;

  /// Keep only bits with index > i.
  void keep_above(size_t i) {
    const size_t w = i >> 6;
    for (size_t k = 0; k < w && k < words_.size(); ++k) words_[k] = 0;
    if (w < words_.size()) {
      const unsigned shift = static_cast<unsigned>(i & 63);
      words_[w] &= shift == 63 ? 0 : (~uint64_t{0} << (shift + 1));
    }
  }

  /// Index of the first set bit, or size() if none.
  size_t first() const {
    for (size_t k = 0; k < words_.size(); ++k) {
      if (words_[k]) return (k << 6) + static_cast<size_t>(std::countr_zero(words_[k]));
    }
    return size_;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (size_t k = 0; k < words_.size(); ++k) {
      uint64_t w = words_[k];
      while (w) {
        f((k << 6) + static_cast<size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

 private:
  void trim() {
    if (size_ & 63) words_.back() &= (uint64_t{1} << (size_ & 63)) - 1;
  }

  size_t size_ = 0;
  std::vector<uint64_t> words_;
};

}  // namespace diskflow
