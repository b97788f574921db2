#ifndef CROWNVOL_PARALLEL_HPP
#define CROWNVOL_PARALLEL_HPP

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace crownvol {

/// Worker count to use: 0 means one per hardware thread.
inline unsigned resolve_workers(unsigned requested) {
  if (requested > 0) return requested;
  return std::max(1U, std::thread::hardware_concurrency());
}

/// Calls f(i) for i in [0, count) across `workers` threads in contiguous
/// chunks. Callers write results into slot i, so the outcome never depends
/// on scheduling. The first exception thrown by any worker is rethrown.
template <class F>
void parallel_for(std::size_t count, unsigned workers, F&& f) {
  unsigned w = std::min<std::size_t>(resolve_workers(workers), std::max<std::size_t>(count, 1));
  if (w <= 1) {
    for (std::size_t i = 0; i < count; ++i) f(i);
    return;
  }
  std::vector<std::exception_ptr> errors(w);
  std::vector<std::thread> threads;
  threads.reserve(w);
  std::size_t chunk = (count + w - 1) / w;
  for (unsigned t = 0; t < w; ++t) {
    threads.emplace_back([&, t] {
      try {
        std::size_t lo = t * chunk, hi = std::min(count, lo + chunk);
        for (std::size_t i = lo; i < hi; ++i) f(i);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& th : threads) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace crownvol

#endif  // CROWNVOL_PARALLEL_HPP
