// Copyright (c) 2026, the gapkit authors
// See LICENSE.txt for license details

#ifndef GAPKIT_TIMER_HPP_
#define GAPKIT_TIMER_HPP_

#include <chrono>

namespace gapkit {

// Monotonic wall-clock timer.
class Timer {
 public:
  void Start() { start_ = std::chrono::steady_clock::now(); }
  void Stop() { stop_ = std::chrono::steady_clock::now(); }

  double Seconds() const {
    return std::chrono::duration<double>(stop_ - start_).count();
  }
  double Millisecs() const { return Seconds() * 1000.0; }

 private:
  std::chrono::steady_clock::time_point start_;
  std::chrono::steady_clock::time_point stop_;
};

}  // namespace gapkit

#endif  // GAPKIT_TIMER_HPP_
