#pragma once

#include <cstdint>
#include <cstddef>
#include <functional>
#include <vector>

namespace cubemedian {

// Fixed-size bit vector used for vertex sets and theta-class labels.
// Word layout is little-endian: bit i lives in word i/64.
class Bits {
public:
  Bits() = default;
  explicit Bits(std::size_t nbits)
      : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

  std::size_t size() const { return nbits_; }

  void set(std::size_t i) { words_[i >> 6] |= (std::uint64_t{1} << (i & 63)); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  void assign(std::size_t i, bool v) { v ? set(i) : reset(i); }
  bool test(std::size_t i) const {
    return (words_[i >> 6] >> (i & 63)) & 1;
  }
  void flip(std::size_t i) { words_[i >> 6] ^= (std::uint64_t{1} << (i & 63)); }

  void clear() {
    for (auto& w : words_) w = 0;
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(__builtin_popcountll(w));
    return c;
  }
  bool none() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }
  bool any() const { return !none(); }

  bool intersects(const Bits& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }
  bool is_subset_of(const Bits& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  Bits operator&(const Bits& o) const {
    Bits r(nbits_);
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] & o.words_[i];
    return r;
  }
  Bits operator|(const Bits& o) const {
    Bits r(nbits_);
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] | o.words_[i];
    return r;
  }
  Bits operator~() const {
    Bits r(nbits_);
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = ~words_[i];
    r.trim();
    return r;
  }
  Bits& operator&=(const Bits& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  Bits& operator|=(const Bits& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  Bits& operator^=(const Bits& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
    return *this;
  }

  bool operator==(const Bits& o) const {
    return nbits_ == o.nbits_ && words_ == o.words_;
  }
  bool operator!=(const Bits& o) const { return !(*this == o); }
  bool operator<(const Bits& o) const {  // lexicographic on bit index 0,1,2,...
    for (std::size_t i = 0; i < words_.size() && i < o.words_.size(); ++i) {
      if (words_[i] != o.words_[i]) {
        std::uint64_t diff = words_[i] ^ o.words_[i];
        std::uint64_t low = diff & ~(diff - 1);
        return (o.words_[i] & low) != 0;  // o has the lowest differing bit set
      }
    }
    return nbits_ < o.nbits_;
  }

  // out = majority(a, b, c), bitwise. All operands must share one size.
  static void majority3(Bits& out, const Bits& a, const Bits& b, const Bits& c) {
    for (std::size_t i = 0; i < out.words_.size(); ++i) {
      std::uint64_t x = a.words_[i], y = b.words_[i], z = c.words_[i];
      out.words_[i] = (x & y) | (y & z) | (x & z);
    }
  }

  std::size_t hamming(const Bits& o) const {
    std::size_t c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
      c += static_cast<std::size_t>(__builtin_popcountll(words_[i] ^ o.words_[i]));
    return c;
  }

  // First set bit at index >= from, or size() when none.
  std::size_t find_next(std::size_t from) const {
    if (from >= nbits_) return nbits_;
    std::size_t w = from >> 6;
    std::uint64_t cur = words_[w] & (~std::uint64_t{0} << (from & 63));
    while (true) {
      if (cur) return (w << 6) + static_cast<std::size_t>(__builtin_ctzll(cur));
      if (++w == words_.size()) return nbits_;
      cur = words_[w];
    }
  }
  std::size_t find_first() const { return find_next(0); }

  std::vector<int> to_indices() const {
    std::vector<int> out;
    for (std::size_t i = find_first(); i < nbits_; i = find_next(i + 1))
      out.push_back(static_cast<int>(i));
    return out;
  }

  std::size_t hash() const {
    std::size_t h = 0xcbf29ce484222325ull;
    for (auto w : words_) {
      h ^= static_cast<std::size_t>(w);
      h *= 0x100000001b3ull;
    }
    return h;
  }

  const std::vector<std::uint64_t>& words() const { return words_; }

private:
  void trim() {
    if (nbits_ & 63) words_.back() &= (~std::uint64_t{0} >> (64 - (nbits_ & 63)));
  }

  std::size_t nbits_ = 0;
  std::vector<std::uint64_t> words_;
};

struct BitsHash {
  std::size_t operator()(const Bits& b) const { return b.hash(); }
};

}  // namespace cubemedian
