#pragma once

#include <cstdint>
#include <map>

namespace cubicpm {

/// g(3) = 4, g(k) = ceil(4 g(k-1) / 3), f(k) = ceil(3 g(k) / 2).
struct BipartiteBoundTable {
  std::map<int, std::int64_t> g;
  std::map<int, std::int64_t> f;
};

/// Rows k = 3..max_k. Throws std::invalid_argument when max_k < 3.
BipartiteBoundTable bound_table(int max_k);

}  // namespace cubicpm
