#include "topo/canonical.hpp"

#include <array>
#include <bit>

#include "bitgraph.hpp"
#include "canonical_kernel.hpp"
#include "topo/error.hpp"
#include "topo/graph6.hpp"

namespace topo {

namespace detail {

namespace {

constexpr int kMaxKeyOrder = 11;

// Ordered partition of the vertex set; cells[k] occupies position k when all
// earlier cells are singletons.
struct Partition {
  std::array<std::uint64_t, kMaxKeyOrder> cells{};
  int count = 0;
};

class Canonizer {
 public:
  Canonizer(const std::uint64_t* rows, int n) : rows_(rows), n_(n), bits_(n * (n - 1) / 2) {}

  std::uint64_t run() {
    Partition p;
    p.cells[0] = low_mask(n_);
    p.count = 1;
    std::array<std::uint64_t, 2 * kMaxKeyOrder * kMaxKeyOrder> queue{};
    queue[0] = p.cells[0];
    refine(p, queue.data(), 1);
    search(p);
    return best_;
  }

 private:
  // Splits cells by neighbour counts into each splitter until equitable.
  // Only cell order and counts drive decisions, so relabelled inputs follow
  // the same path.
  void refine(Partition& p, std::uint64_t* queue, int queued) const {
    while (queued > 0) {
      const std::uint64_t splitter = queue[--queued];
      for (int c = 0; c < p.count; ++c) {
        const std::uint64_t cell = p.cells[static_cast<std::size_t>(c)];
        if ((cell & (cell - 1)) == 0) continue;
        std::array<int, kMaxKeyOrder> count_of{};
        int lo = 64;
        int hi = -1;
        for (std::uint64_t x = cell; x != 0; x &= x - 1) {
          const int v = std::countr_zero(x);
          const int k = std::popcount(rows_[v] & splitter);
          count_of[static_cast<std::size_t>(v)] = k;
          lo = k < lo ? k : lo;
          hi = k > hi ? k : hi;
        }
        if (lo == hi) continue;
        std::array<std::uint64_t, kMaxKeyOrder> parts{};
        int made = 0;
        for (int k = lo; k <= hi; ++k) {
          std::uint64_t part = 0;
          for (std::uint64_t x = cell; x != 0; x &= x - 1) {
            const int v = std::countr_zero(x);
            if (count_of[static_cast<std::size_t>(v)] == k) part |= std::uint64_t{1} << v;
          }
          if (part != 0) parts[static_cast<std::size_t>(made++)] = part;
        }
        for (int k = p.count - 1; k > c; --k) {
          p.cells[static_cast<std::size_t>(k + made - 1)] = p.cells[static_cast<std::size_t>(k)];
        }
        for (int k = 0; k < made; ++k) {
          p.cells[static_cast<std::size_t>(c + k)] = parts[static_cast<std::size_t>(k)];
          queue[queued++] = parts[static_cast<std::size_t>(k)];
        }
        p.count += made - 1;
        c += made - 1;
      }
    }
  }

  // True when every ordering inside the cells yields the same bit string.
  bool uniform(const Partition& p) const {
    for (int v = 0; v < n_; ++v) {
      const std::uint64_t self = std::uint64_t{1} << v;
      for (int c = 0; c < p.count; ++c) {
        const std::uint64_t cell = p.cells[static_cast<std::size_t>(c)] & ~self;
        const std::uint64_t hit = rows_[v] & cell;
        if (hit != 0 && hit != cell) return false;
      }
    }
    return true;
  }

  // Key bits for string positions of pairs among the first `fixed` positions.
  std::uint64_t prefix_key(const Partition& p, int fixed) const {
    std::uint64_t key = 0;
    int k = 0;
    for (int j = 1; j < fixed; ++j) {
      const std::uint64_t vj = p.cells[static_cast<std::size_t>(j)];
      for (int i = 0; i < j; ++i, ++k) {
        if (rows_[std::countr_zero(p.cells[static_cast<std::size_t>(i)])] & vj) {
          key |= std::uint64_t{1} << (bits_ - 1 - k);
        }
      }
    }
    return key;
  }

  void search(const Partition& p) {
    int fixed = 0;
    while (fixed < p.count && std::popcount(p.cells[static_cast<std::size_t>(fixed)]) == 1) ++fixed;

    const int prefix_bits = fixed * (fixed - 1) / 2;
    const std::uint64_t key = prefix_key(p, fixed);
    if (have_best_ && prefix_bits > 0) {
      const int shift = bits_ - prefix_bits;
      const std::uint64_t mine = key >> shift;
      const std::uint64_t theirs = best_ >> shift;
      if (mine > theirs) return;
      if (fixed == n_ && mine == theirs) return;
    }
    if (fixed == n_) {
      if (!have_best_ || key < best_) {
        best_ = key;
        have_best_ = true;
      }
      return;
    }

    const std::uint64_t target = p.cells[static_cast<std::size_t>(fixed)];
    const bool single_branch = uniform(p);
    for (std::uint64_t x = target; x != 0; x &= x - 1) {
      const std::uint64_t chosen = x & (~x + 1);
      Partition child = p;
      for (int k = child.count - 1; k > fixed; --k) {
        child.cells[static_cast<std::size_t>(k + 1)] = child.cells[static_cast<std::size_t>(k)];
      }
      child.cells[static_cast<std::size_t>(fixed)] = chosen;
      child.cells[static_cast<std::size_t>(fixed + 1)] = target & ~chosen;
      ++child.count;
      std::array<std::uint64_t, 2 * kMaxKeyOrder * kMaxKeyOrder> queue{};
      queue[0] = chosen;
      refine(child, queue.data(), 1);
      search(child);
      if (single_branch) break;
    }
  }

  const std::uint64_t* rows_;
  int n_;
  int bits_;
  std::uint64_t best_ = 0;
  bool have_best_ = false;
};

}  // namespace

std::uint64_t canonical_key(const std::uint64_t* rows, int n) {
  if (n <= 1) return 0;
  return Canonizer(rows, n).run();
}

void key_to_rows(std::uint64_t key, int n, std::uint64_t* rows) {
  const int bits = n * (n - 1) / 2;
  for (int v = 0; v < n; ++v) rows[v] = 0;
  int k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      if ((key >> (bits - 1 - k)) & 1U) {
        rows[i] |= std::uint64_t{1} << j;
        rows[j] |= std::uint64_t{1} << i;
      }
    }
  }
}

}  // namespace detail

Graph canonical_graph(const Graph& g) {
  if (g.order() > kCanonicalMaxOrder) {
    throw Error(ErrorKind::OrderTooLarge,
                "canonical forms are limited to n <= 10, got " + std::to_string(g.order()));
  }
  detail::Rows rows{};
  detail::key_to_rows(detail::canonical_key(g.rows().data(), g.order()), g.order(), rows.data());
  return Graph::from_rows(g.order(), rows);
}

CanonicalForm canonical_form(const Graph& g) { return CanonicalForm{to_graph6(canonical_graph(g))}; }

}  // namespace topo
