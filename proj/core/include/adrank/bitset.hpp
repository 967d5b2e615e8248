#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <span>
#include <vector>

namespace adrank {

/// Fixed-size bitset sized at runtime, stored as 64-bit words.
class DynBitset {
 public:
  DynBitset() = default;
  explicit DynBitset(int nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

  int size() const { return nbits_; }
  int num_words() const { return static_cast<int>(words_.size()); }

  bool test(int i) const {
    assert(i >= 0 && i < nbits_);
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }
  void set(int i) {
    assert(i >= 0 && i < nbits_);
    words_[i >> 6] |= std::uint64_t{1} << (i & 63);
  }
  void reset(int i) {
    assert(i >= 0 && i < nbits_);
    words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
  }
  void clear() { std::fill(words_.begin(), words_.end(), 0); }

  int count() const {
    int c = 0;
    for (std::uint64_t w : words_) c += std::popcount(w);
    return c;
  }

  std::span<const std::uint64_t> words() const { return words_; }
  std::span<std::uint64_t> words() { return words_; }

  /// Mask covering the valid bits of the last word (all-ones if size % 64 == 0).
  std::uint64_t tail_mask() const {
    int r = nbits_ & 63;
    return r == 0 ? ~std::uint64_t{0} : ((std::uint64_t{1} << r) - 1);
  }

  bool operator==(const DynBitset& o) const = default;

  template <typename Fn>
  void for_each_set(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        int b = std::countr_zero(bits);
        fn(static_cast<int>(w * 64 + b));
        bits &= bits - 1;
      }
    }
  }

 private:
  int nbits_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace adrank
