// Copyright (c) 2026, the gapkit authors
// See LICENSE.txt for license details

#ifndef GAPKIT_BITMAP_HPP_
#define GAPKIT_BITMAP_HPP_

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace gapkit {

// Dense bit-set over [0, size). Concurrent setters must use SetBitAtomic;
// readers may race with setters (frontier-style usage).
class Bitmap {
 public:
  explicit Bitmap(size_t size) : words_((size + 63) / 64, 0) {}

  void Reset() { std::fill(words_.begin(), words_.end(), 0); }

  void SetBit(size_t pos) { words_[pos >> 6] |= uint64_t{1} << (pos & 63); }

  void SetBitAtomic(size_t pos) {
    std::atomic_ref<uint64_t>(words_[pos >> 6])
        .fetch_or(uint64_t{1} << (pos & 63), std::memory_order_relaxed);
  }

  bool GetBit(size_t pos) const {
    return (words_[pos >> 6] >> (pos & 63)) & 1;
  }

  void Swap(Bitmap& other) { words_.swap(other.words_); }

 private:
  std::vector<uint64_t> words_;
};

}  // namespace gapkit

#endif  // GAPKIT_BITMAP_HPP_
