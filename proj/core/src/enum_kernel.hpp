#pragma once

// Labelled graph walkers. Both walkers fill adjacency columns in graph6
// order, so "the first P bits of the adjacency word" names a contiguous
// block of the search tree; partition p fixes those bits to the binary
// digits of p.

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

#include "bitgraph.hpp"

namespace topo::detail {

inline constexpr int kMaxPartitionBits = 6;

inline int partition_bits(int word_bits) { return std::min(word_bits, kMaxPartitionBits); }

struct PartitionSlice {
  int prefix_bits = 0;
  std::uint64_t prefix = 0;  // bit k fixes string position k
};

/// Visits every labelled graph on n vertices whose word agrees with the slice.
/// With `min_degree_two`, subtrees that cannot reach minimum degree 2 are cut
/// and only graphs with every degree >= 2 reach the leaf.
template <class Leaf>
class LabeledWalker {
 public:
  LabeledWalker(int n, bool min_degree_two, PartitionSlice slice, Leaf& leaf)
      : n_(n), prune_(min_degree_two), leaf_(leaf) {
    for (int j = 1; j < n; ++j) {
      for (int i = 0; i < j; ++i) {
        const int k = pair_bit(i, j);
        if (k < slice.prefix_bits) {
          fixed_mask_[static_cast<std::size_t>(j)] |= std::uint64_t{1} << i;
          if ((slice.prefix >> k) & 1U) fixed_value_[static_cast<std::size_t>(j)] |= std::uint64_t{1} << i;
        }
      }
    }
  }

  std::uint64_t run() {
    visited_ = 0;
    if (n_ == 1) {
      if (!prune_) {
        ++visited_;
        leaf_(rows_.data(), degree_.data());
      }
      return visited_;
    }
    column(1);
    return visited_;
  }

 private:
  void column(int j) {
    if (j == n_) {
      ++visited_;
      leaf_(rows_.data(), degree_.data());
      return;
    }
    const std::uint64_t all = low_mask(j);
    const std::uint64_t fm = fixed_mask_[static_cast<std::size_t>(j)];
    const std::uint64_t fv = fixed_value_[static_cast<std::size_t>(j)];
    std::uint64_t must = fv;
    std::uint64_t banned = fm & ~fv;
    const int later = n_ - 1 - j;
    if (prune_) {
      for (int i = 0; i < j; ++i) {
        const int slack = degree_[static_cast<std::size_t>(i)] + later;
        if (slack == 0) return;
        if (slack == 1) must |= std::uint64_t{1} << i;
      }
      if ((must & banned) != 0) return;
    }
    const std::uint64_t free = all & ~must & ~banned;
    std::uint64_t s = 0;
    do {
      const std::uint64_t sub = must | s;
      if (!prune_ || std::popcount(sub) + later >= 2) place(j, sub);
      s = (s - free) & free;
    } while (s != 0);
  }

  void place(int j, std::uint64_t sub) {
    rows_[static_cast<std::size_t>(j)] = sub;
    degree_[static_cast<std::size_t>(j)] = std::popcount(sub);
    for (std::uint64_t x = sub; x != 0; x &= x - 1) {
      const int i = std::countr_zero(x);
      rows_[static_cast<std::size_t>(i)] |= std::uint64_t{1} << j;
      ++degree_[static_cast<std::size_t>(i)];
    }
    column(j + 1);
    for (std::uint64_t x = sub; x != 0; x &= x - 1) {
      const int i = std::countr_zero(x);
      rows_[static_cast<std::size_t>(i)] &= ~(std::uint64_t{1} << j);
      --degree_[static_cast<std::size_t>(i)];
    }
    rows_[static_cast<std::size_t>(j)] = 0;
  }

  int n_;
  bool prune_;
  Leaf& leaf_;
  Rows rows_{};
  std::array<int, 64> degree_{};
  std::array<std::uint64_t, 64> fixed_mask_{};
  std::array<std::uint64_t, 64> fixed_value_{};
  std::uint64_t visited_ = 0;
};

/// Every even graph on n vertices, once each: walk all graphs on vertices
/// 1..n-1 and join vertex 0 to exactly the odd-degree ones. The slice refers
/// to the word of the (n-1)-vertex graph. Returns the candidate count.
template <class Leaf>
std::uint64_t walk_even_graphs(int n, PartitionSlice slice, Leaf& leaf) {
  Rows full{};
  std::array<int, 64> full_degree{};
  auto complete = [&](const std::uint64_t* rows, const int* degree) {
    std::uint64_t odd = 0;
    for (int i = 0; i + 1 < n; ++i) {
      const int d = degree[i];
      const bool is_odd = (d & 1) != 0;
      if (is_odd) odd |= std::uint64_t{1} << (i + 1);
      full[static_cast<std::size_t>(i + 1)] = (rows[i] << 1) | (is_odd ? 1U : 0U);
      full_degree[static_cast<std::size_t>(i + 1)] = d + (is_odd ? 1 : 0);
    }
    full[0] = odd;
    full_degree[0] = std::popcount(odd);
    leaf(full.data(), full_degree.data());
  };
  LabeledWalker<decltype(complete)> walker(n - 1, false, slice, complete);
  return walker.run();
}

/// Runs task(p) for p in [0, parts) on up to `workers` threads. The first
/// exception thrown by any task is rethrown after all threads join.
template <class Task>
void run_partitions(int parts, int workers, Task&& task) {
  workers = std::max(1, std::min(workers, parts));
  if (workers == 1) {
    for (int p = 0; p < parts; ++p) task(p);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (int p = next++; p < parts; p = next++) {
        try {
          task(p);
        } catch (...) {
          const std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace topo::detail
