#pragma once

// Per-graph index evaluation and extreme-value tracking for the exhaustive
// scans. Values are exact throughout: Harary sums are kept as integers scaled
// by lcm(1..n-1), and pi2 is resolved through a per-partition cache keyed by
// the degree histogram.

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <unordered_map>
#include <utility>
#include <vector>

#include "bitgraph.hpp"
#include "canonical_kernel.hpp"
#include "topo/canonical.hpp"
#include "topo/error.hpp"
#include "topo/graph6.hpp"
#include "topo/rational.hpp"
#include "topo/verification.hpp"

namespace topo::detail {

inline constexpr int kScanMaxOrder = 11;

/// lcm(1..n-1): every distance in a connected n-vertex graph divides it.
inline std::int64_t harary_scale(int n) {
  std::int64_t l = 1;
  for (int d = 2; d < n; ++d) l = std::lcm(l, static_cast<std::int64_t>(d));
  return l;
}

struct DegreeValues {
  std::int64_t m1 = 0;
  std::int64_t m2 = 0;
  std::int64_t pi1 = 1;
  std::uint64_t histogram = 0;  // nibble d counts vertices of degree d
  int edges = 0;
  bool two_regular = true;
};

inline DegreeValues degree_values(const std::uint64_t* rows, const int* degree, int n) {
  DegreeValues v;
  std::int64_t twice_m2 = 0;
  int degree_sum = 0;
  for (int u = 0; u < n; ++u) {
    const int d = degree[u];
    degree_sum += d;
    v.m1 += static_cast<std::int64_t>(d) * d;
    v.pi1 *= d;
    v.histogram += std::uint64_t{1} << (4 * d);
    v.two_regular = v.two_regular && d == 2;
    std::int64_t around = 0;
    for (std::uint64_t x = rows[u]; x != 0; x &= x - 1) around += degree[std::countr_zero(x)];
    twice_m2 += static_cast<std::int64_t>(d) * around;
  }
  v.m2 = twice_m2 / 2;
  v.edges = degree_sum / 2;
  return v;
}

struct DistanceValues {
  std::int64_t wiener = 0;
  std::int64_t harary_scaled = 0;
};

inline DistanceValues distance_values(const std::uint32_t* hist, int diameter, std::int64_t scale) {
  DistanceValues v;
  for (int d = 1; d <= diameter; ++d) {
    v.wiener += static_cast<std::int64_t>(d) * hist[d];
    v.harary_scaled += static_cast<std::int64_t>(hist[d]) * (scale / d);
  }
  return v;
}

/// Exact pi2 per degree histogram, memoised.
class Pi2Cache {
 public:
  const BigInt& get(std::uint64_t histogram) {
    auto it = cache_.find(histogram);
    if (it != cache_.end()) return it->second;
    BigInt value{1};
    for (int d = 1; d < 16; ++d) {
      const auto count = static_cast<unsigned long>((histogram >> (4 * d)) & 0xF);
      if (count == 0) continue;
      BigInt power;
      mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(d) * count);
      value *= power;
    }
    return cache_.emplace(histogram, std::move(value)).first->second;
  }

 private:
  std::unordered_map<std::uint64_t, BigInt> cache_;
};

inline Rational pi1_of_histogram(std::uint64_t histogram) {
  BigInt value{1};
  for (int d = 0; d < 16; ++d) {
    const auto count = static_cast<unsigned long>((histogram >> (4 * d)) & 0xF);
    if (count == 0) continue;
    BigInt power;
    mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(d), count);
    value *= power;
  }
  return Rational(value);
}

/// Best and second-best distinct values with their labelled witnesses
/// (edge words). Merging is associative and commutative.
template <class V>
class Tracker {
 public:
  static constexpr std::size_t kCompactAt = std::size_t{1} << 18;

  Tracker(Direction direction, int n) : direction_(direction), n_(n) {}

  void offer(const V& value, std::uint64_t word) {
    if (!best_ || better(value, *best_)) {
      second_ = std::move(best_);
      second_words_ = std::move(best_words_);
      best_ = value;
      best_words_.assign(1, word);
    } else if (value == *best_) {
      push(best_words_, word);
    } else if (!second_ || better(value, *second_)) {
      second_ = value;
      second_words_.assign(1, word);
    } else if (value == *second_) {
      push(second_words_, word);
    }
  }

  void merge(Tracker&& other) {
    if (other.best_) offer_many(*other.best_, std::move(other.best_words_));
    if (other.second_) offer_many(*other.second_, std::move(other.second_words_));
  }

  const std::optional<V>& best() const { return best_; }
  const std::optional<V>& second() const { return second_; }
  const std::vector<std::uint64_t>& best_words() const { return best_words_; }
  const std::vector<std::uint64_t>& second_words() const { return second_words_; }

 private:
  bool better(const V& a, const V& b) const { return direction_ == Direction::min ? a < b : b < a; }

  void offer_many(const V& value, std::vector<std::uint64_t>&& words) {
    if (words.empty()) return;
    offer(value, words.front());
    // Route the rest through the slot the first landed in, if any.
    std::vector<std::uint64_t>* slot = nullptr;
    if (best_ && value == *best_) slot = &best_words_;
    else if (second_ && value == *second_) slot = &second_words_;
    if (slot == nullptr) return;
    for (std::size_t i = 1; i < words.size(); ++i) push(*slot, words[i]);
  }

  void push(std::vector<std::uint64_t>& words, std::uint64_t word) {
    words.push_back(word);
    if (words.size() >= kCompactAt) compact(words);
  }

  // Replaces labelled witnesses by one word per isomorphism class.
  void compact(std::vector<std::uint64_t>& words) const {
    Rows rows{};
    for (auto& w : words) {
      word_to_rows(w, n_, rows.data());
      const std::uint64_t key = canonical_key(rows.data(), n_);
      key_to_rows(key, n_, rows.data());
      w = rows_to_word(rows.data(), n_);
    }
    std::sort(words.begin(), words.end());
    words.erase(std::unique(words.begin(), words.end()), words.end());
  }

  Direction direction_;
  int n_;
  std::optional<V> best_;
  std::optional<V> second_;
  std::vector<std::uint64_t> best_words_;
  std::vector<std::uint64_t> second_words_;
};

/// Distinct canonical forms of labelled witness words, sorted.
inline std::vector<CanonicalForm> canonical_witnesses(const std::vector<std::uint64_t>& words, int n) {
  std::set<std::uint64_t> keys;
  Rows rows{};
  for (const auto w : words) {
    word_to_rows(w, n, rows.data());
    keys.insert(canonical_key(rows.data(), n));
  }
  std::vector<CanonicalForm> out;
  out.reserve(keys.size());
  for (const auto key : keys) {
    key_to_rows(key, n, rows.data());
    out.push_back(CanonicalForm{to_graph6(Graph::from_rows(n, rows))});
  }
  return out;
}

inline Graph graph_of_word(std::uint64_t word, int n) {
  Rows rows{};
  word_to_rows(word, n, rows.data());
  return Graph::from_rows(n, rows);
}

}  // namespace topo::detail
