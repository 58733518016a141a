#pragma once

#include <atomic>
#include <cstdint>
#include <thread>
#include <vector>

namespace edgeideal {

inline int default_jobs() {
  unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : static_cast<int>(hc);
}

// Deterministic parallel map-reduce over an index range: workers claim
// fixed-size chunks, produce one partial result per chunk, and the partials
// are merged in chunk order afterwards. Result does not depend on the
// number of jobs.
template <typename Part, typename Work, typename Merge>
inline Part parallel_reduce(std::uint64_t begin, std::uint64_t end, int jobs,
                            std::uint64_t chunk, Part init, Work work,
                            Merge merge) {
  if (jobs <= 1 || end - begin <= chunk) {
    Part acc = init;
    work(begin, end, acc);
    return acc;
  }
  std::uint64_t nchunks = (end - begin + chunk - 1) / chunk;
  std::vector<Part> parts(nchunks, init);
  std::atomic<std::uint64_t> next{0};
  auto runner = [&]() {
    for (;;) {
      std::uint64_t c = next.fetch_add(1);
      if (c >= nchunks) return;
      std::uint64_t lo = begin + c * chunk;
      std::uint64_t hi = std::min(end, lo + chunk);
      work(lo, hi, parts[c]);
    }
  };
  std::vector<std::thread> pool;
  int nthreads = static_cast<int>(std::min<std::uint64_t>(jobs, nchunks));
  pool.reserve(nthreads);
  for (int i = 0; i < nthreads; ++i) pool.emplace_back(runner);
  for (auto& t : pool) t.join();
  Part acc = init;
  for (auto& p : parts) merge(acc, p);
  return acc;
}

}  // namespace edgeideal
