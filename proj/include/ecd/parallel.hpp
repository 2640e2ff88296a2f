#pragma once

#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <thread>
#include <vector>

#include "ecd/combinatorics.hpp"

namespace ecd {

/// Worker count for partitioned scans. EC_DESIGNS_THREADS caps it;
/// 0 or unset means one worker per hardware thread.
inline int worker_count() {
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  if (const char* env = std::getenv("EC_DESIGNS_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && v > 0) return static_cast<int>(v < 256 ? v : 256);
  }
  return static_cast<int>(hw);
}

struct ScanHit {
  std::uint64_t rank = 0;      // colex rank of the subset that hit
  int payload = 0;             // visitor-defined (e.g. failing split mask)
  std::vector<int> subset;
};

/// Scans all k-subsets of [0, n_items) in colex order and returns the
/// minimal-rank subset for which the visitor reports a hit, or nullopt.
///
/// make_visitor() is called once per worker; the visitor maps a subset to a
/// payload >= 0 (hit) or a negative value (no hit). Chunks are handed out
/// dynamically but the reported hit is the global colex minimum, so the
/// result is identical for any worker count.
template <class MakeVisitor>
std::optional<ScanHit> scan_combinations_first_hit(int n_items, int k, MakeVisitor make_visitor) {
  if (k < 0 || k > n_items) return std::nullopt;
  const std::uint64_t total = combination_count(n_items, k);
  if (total == 0) return std::nullopt;

  const int workers_wanted = worker_count();
  if (workers_wanted <= 1 || total < 4096) {
    auto visit = make_visitor();
    std::vector<int> c(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) c[static_cast<std::size_t>(i)] = i;
    std::uint64_t rank = 0;
    do {
      int payload = visit(static_cast<const std::vector<int>&>(c));
      if (payload >= 0) return ScanHit{rank, payload, c};
      ++rank;
    } while (colex_next(c, n_items));
    return std::nullopt;
  }

  const std::uint64_t chunk = std::max<std::uint64_t>(1024, total / (static_cast<std::uint64_t>(workers_wanted) * 16));
  std::atomic<std::uint64_t> next_start{0};
  std::atomic<std::uint64_t> best_rank{UINT64_MAX};

  const int nthreads = static_cast<int>(std::min<std::uint64_t>(static_cast<std::uint64_t>(workers_wanted),
                                                                (total + chunk - 1) / chunk));
  std::vector<std::optional<ScanHit>> local(static_cast<std::size_t>(nthreads));
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(nthreads));

  for (int tid = 0; tid < nthreads; ++tid) {
    pool.emplace_back([&, tid] {
      auto visit = make_visitor();
      for (;;) {
        const std::uint64_t start = next_start.fetch_add(chunk);
        if (start >= total) return;
        if (start > best_rank.load(std::memory_order_relaxed)) return;
        const std::uint64_t end = std::min(start + chunk, total);
        std::vector<int> c = colex_unrank(start, k, n_items);
        for (std::uint64_t rank = start; rank < end; ++rank) {
          if ((rank & 4095) == 0 && rank > best_rank.load(std::memory_order_relaxed)) break;
          int payload = visit(static_cast<const std::vector<int>&>(c));
          if (payload >= 0) {
            auto& slot = local[static_cast<std::size_t>(tid)];
            if (!slot || rank < slot->rank) slot = ScanHit{rank, payload, c};
            // publish for pruning; lowered monotonically
            std::uint64_t cur = best_rank.load(std::memory_order_relaxed);
            while (rank < cur && !best_rank.compare_exchange_weak(cur, rank)) {
            }
            return;  // this worker's later chunks only have larger ranks
          }
          colex_next(c, n_items);
        }
      }
    });
  }
  for (auto& t : pool) t.join();

  std::optional<ScanHit> best;
  for (auto& h : local)
    if (h && (!best || h->rank < best->rank)) best = std::move(h);
  return best;
}

}  // namespace ecd
