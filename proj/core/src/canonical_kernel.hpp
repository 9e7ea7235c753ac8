#pragma once

#include <cstdint>

namespace topo::detail {

/// Canonical upper-triangle key for n <= 11: bit (L-1-k) holds string
/// position k, so numeric order equals lexicographic order of the string.
std::uint64_t canonical_key(const std::uint64_t* rows, int n);

/// Rebuilds rows from a key produced by canonical_key.
void key_to_rows(std::uint64_t key, int n, std::uint64_t* rows);

}  // namespace topo::detail
