// Shared numeric utilities for the circulant+diagonal spectral toolkit:
// error taxonomy, compensated summation, fixed-precision float formatting
// for reports, and a deterministic slot-based parallel map whose results
// do not depend on the number of worker threads.
#pragma once

#include <atomic>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace harper {

inline constexpr double pi = 3.14159265358979323846;

using cplx = std::complex<double>;

// Thrown when an iterative procedure fails to converge or a computation
// cannot produce a trustworthy value (iteration caps, simulation time caps,
// insufficient samples). Precondition violations throw std::invalid_argument
// or std::domain_error instead.
class numerical_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Kahan–Babuška compensated sum.
inline double kahan_total(const std::vector<double>& v) {
  double s = 0.0, c = 0.0;
  for (double x : v) {
    double t = s + x;
    if (std::abs(s) >= std::abs(x))
      c += (s - t) + x;
    else
      c += (x - t) + s;
    s = t;
  }
  return s + c;
}

// 17 significant digits: enough to round-trip any double through text.
inline std::string format_float17(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return std::string(buf);
}

// Worker budget: HARPER_THREADS if set to a positive integer, else the
// hardware concurrency (at least 1).
inline unsigned thread_budget() {
  if (const char* env = std::getenv("HARPER_THREADS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<unsigned>(v);
  }
  unsigned hc = std::thread::hardware_concurrency();
  return hc ? hc : 1u;
}

// Runs fn(i) for every i in [0, count). fn must write only to storage
// owned by slot i, so the combined result is identical for any thread
// count. The first exception (lowest worker index) is rethrown.
inline void parallel_for(std::size_t count,
                         const std::function<void(std::size_t)>& fn) {
  unsigned workers = thread_budget();
  if (workers <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  if (workers > count) workers = static_cast<unsigned>(count);
  std::vector<std::exception_ptr> errors(workers);
  std::atomic<bool> stop{false};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < count; i += workers) {
          if (stop.load(std::memory_order_relaxed)) return;
          fn(i);
        }
      } catch (...) {
        errors[w] = std::current_exception();
        stop.store(true, std::memory_order_relaxed);
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace harper
