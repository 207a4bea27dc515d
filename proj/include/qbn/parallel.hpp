#pragma once

#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace qbn {

// Effective worker count: the QBN_THREADS environment variable wins over the
// requested value; anything unparseable or < 1 falls back to 1.
inline int resolve_threads(int requested) {
  if (const char* env = std::getenv("QBN_THREADS")) {
    try {
      requested = std::stoi(env);
    } catch (const std::exception&) {
      requested = 1;
    }
  }
  return requested < 1 ? 1 : requested;
}

// Runs body(i) for i in [0, count) across the given number of threads.
// Work items claim indices from a shared counter, so results must be written
// to per-index slots to keep output independent of the schedule. The first
// exception thrown by any worker is rethrown on the calling thread.
template <typename Body>
void parallel_for(long count, int threads, Body&& body) {
  threads = resolve_threads(threads);
  if (count <= 0) return;
  if (threads == 1 || count == 1) {
    for (long i = 0; i < count; ++i) body(i);
    return;
  }
  if (threads > count) threads = static_cast<int>(count);

  std::atomic<long> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  auto worker = [&] {
    for (;;) {
      long i = next.fetch_add(1);
      if (i >= count) return;
      try {
        body(i);
      } catch (...) {
        std::scoped_lock lk(error_mu);
        if (!error) error = std::current_exception();
        next.store(count);
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace qbn
