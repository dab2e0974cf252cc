#pragma once
#include <cstdint>

namespace unifac {

// Desk-scale caps. Oversized requests are hard errors, never silent fallbacks.
struct Limits {
  uint64_t max_field_size = 1u << 20;       // p^k cap for constructed fields
  uint32_t max_perm_degree = 16;            // degree cap for factorization searches
  uint64_t max_bfs_group = 21'000'000;      // element cap for covering-radius BFS
  uint64_t search_retry_cap = 1'000'000;    // randomized search retries
  uint64_t closure_result_cap = 100'000;    // distinct covers in a bounded closure
  uint64_t pair_table_cap = 1u << 17;       // q^(d*d) cap for cached invertible lists
};

inline Limits& limits() {
  static Limits l;
  return l;
}

}  // namespace unifac
