// Copyright (c) 2026, the gapkit authors
// See LICENSE.txt for license details

#ifndef GAPKIT_ATOMICS_HPP_
#define GAPKIT_ATOMICS_HPP_

#include <atomic>

namespace gapkit {

// Relaxed-order helpers over plain storage shared inside parallel regions.

template <typename T>
inline T AtomicLoad(const T& x) {
  return std::atomic_ref<const T>(x).load(std::memory_order_relaxed);
}

template <typename T>
inline void AtomicStore(T& x, T val) {
  std::atomic_ref<T>(x).store(val, std::memory_order_relaxed);
}

template <typename T>
inline bool CompareAndSwap(T& x, T expected, T desired) {
  return std::atomic_ref<T>(x).compare_exchange_strong(
      expected, desired, std::memory_order_relaxed);
}

template <typename T>
inline T FetchAdd(T& x, T inc) {
  return std::atomic_ref<T>(x).fetch_add(inc, std::memory_order_relaxed);
}

// Lowers x to min(x, val); returns true when this call lowered it.
template <typename T>
inline bool FetchMin(T& x, T val) {
  std::atomic_ref<T> ref(x);
  T cur = ref.load(std::memory_order_relaxed);
  while (val < cur) {
    if (ref.compare_exchange_weak(cur, val, std::memory_order_relaxed))
      return true;
  }
  return false;
}

}  // namespace gapkit

#endif  // GAPKIT_ATOMICS_HPP_
