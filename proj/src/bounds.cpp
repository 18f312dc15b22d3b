#include "cubicpm/bounds.hpp"

#include <stdexcept>

namespace cubicpm {
namespace {

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return (a + b - 1) / b; }

}  // namespace

BipartiteBoundTable bound_table(int max_k) {
  if (max_k < 3) throw std::invalid_argument("bound table starts at k = 3");
  if (max_k > 120) throw std::invalid_argument("bound table overflows beyond k = 120");
  BipartiteBoundTable t;
  std::int64_t g = 4;
  for (int k = 3; k <= max_k; ++k) {
    if (k > 3) g = ceil_div(4 * g, 3);
    t.g[k] = g;
    t.f[k] = ceil_div(3 * g, 2);
  }
  return t;
}

}  // namespace cubicpm
