#include "lieframe/numeric.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "lieframe/errors.hpp"

namespace lieframe {

namespace {

double initial_tolerance() {
  if (const char* env = std::getenv("LIEFRAME_TOL")) {
    try {
      double v = std::stod(env);
      if (v > 0) return v;
    } catch (const std::exception&) {
    }
  }
  return kDefaultTolerance;
}

std::atomic<double>& tol_slot() {
  static std::atomic<double> slot{initial_tolerance()};
  return slot;
}

}  // namespace

double tolerance() { return tol_slot().load(); }

void set_tolerance(double tol) {
  if (!(tol > 0)) throw UsageError("tolerance must be positive");
  tol_slot().store(tol);
}

void parallel_for(std::size_t n, unsigned threads,
                  const std::function<void(std::size_t)>& fn) {
  if (threads <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  unsigned workers = static_cast<unsigned>(std::min<std::size_t>(threads, n));
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace lieframe
