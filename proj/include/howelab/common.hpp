#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace howelab {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

struct InvalidSymbol : std::domain_error {
  using std::domain_error::domain_error;
};
struct NonIntegralDimension : std::domain_error {
  using std::domain_error::domain_error;
};
struct InconsistentDefect : std::domain_error {
  using std::domain_error::domain_error;
};
struct BadRange : std::domain_error {
  using std::domain_error::domain_error;
};
struct WrongRange : std::domain_error {
  using std::domain_error::domain_error;
};
struct WrongParity : std::domain_error {
  using std::domain_error::domain_error;
};

inline Int ipow(Int base, long long e) {
  Int r = 1;
  while (e > 0) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

inline Int binom2(long long n) { return n < 2 ? Int(0) : Int(n) * (n - 1) / 2; }

// Number of worker threads for scan-style loops, bounded by HOWE_LAB_THREADS.
inline unsigned worker_threads() {
  unsigned n = std::thread::hardware_concurrency();
  if (n == 0) n = 1;
  if (const char* env = std::getenv("HOWE_LAB_THREADS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v >= 1 && v < 256) n = std::min<unsigned>(n, static_cast<unsigned>(v));
  }
  return n;
}

// Runs fn(i) for i in [0, count); results are indexed so assembly stays
// deterministic regardless of scheduling.
inline void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn) {
  unsigned nthreads = worker_threads();
  if (nthreads <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  std::size_t chunk = (count + nthreads - 1) / nthreads;
  for (unsigned t = 0; t < nthreads; ++t) {
    std::size_t lo = t * chunk, hi = std::min(count, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([lo, hi, &fn] {
      for (std::size_t i = lo; i < hi; ++i) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace howelab
