// Copyright (c) 2026, the gapkit authors
// See LICENSE.txt for license details

#ifndef GAPKIT_SLIDING_QUEUE_HPP_
#define GAPKIT_SLIDING_QUEUE_HPP_

#include <algorithm>
#include <cstddef>
#include <vector>

#include "gapkit/atomics.hpp"

namespace gapkit {

template <typename T>
class QueueBuffer;

// Frontier queue backed by one flat array. The active window [out_start,
// out_end) is read-only while workers append past it through QueueBuffer;
// SlideWindow exposes everything appended since the last slide. The storage
// keeps each window in place, so level boundaries remain addressable after
// the traversal (used by the betweenness backward pass).
template <typename T>
class SlidingQueue {
 public:
  explicit SlidingQueue(size_t capacity) : data_(capacity) {}

  void PushBack(T v) { data_[in_++] = v; }  // serial use only

  bool Empty() const { return out_start_ == out_end_; }
  size_t Size() const { return out_end_ - out_start_; }

  void SlideWindow() {
    out_start_ = out_end_;
    out_end_ = in_;
  }

  void Reset() {
    in_ = 0;
    out_start_ = 0;
    out_end_ = 0;
  }

  const T* begin() const { return data_.data() + out_start_; }
  const T* end() const { return data_.data() + out_end_; }

  size_t OffsetStart() const { return out_start_; }
  size_t OffsetEnd() const { return out_end_; }
  const T& At(size_t global_index) const { return data_[global_index]; }

 private:
  friend class QueueBuffer<T>;
  std::vector<T> data_;
  size_t in_ = 0;
  size_t out_start_ = 0;
  size_t out_end_ = 0;
};

// Per-worker staging buffer; flushes into the shared queue with one
// fetch-add per batch.
template <typename T>
class QueueBuffer {
 public:
  explicit QueueBuffer(SlidingQueue<T>& queue, size_t max_size = 1024)
      : queue_(queue) {
    local_.reserve(max_size);
  }

  void PushBack(T v) {
    if (local_.size() == local_.capacity())
      Flush();
    local_.push_back(v);
  }

  void Flush() {
    if (local_.empty())
      return;
    size_t pos = FetchAdd(queue_.in_, local_.size());
    std::copy(local_.begin(), local_.end(), queue_.data_.begin() + pos);
    local_.clear();
  }

 private:
  SlidingQueue<T>& queue_;
  std::vector<T> local_;
};

}  // namespace gapkit

#endif  // GAPKIT_SLIDING_QUEUE_HPP_
