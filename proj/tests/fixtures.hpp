#pragma once

#include <vector>

#include "waldspurger/matrix.hpp"

namespace fixtures {

using wald::IntMatrix;

inline const std::vector<IntMatrix> kTypeA = {
    {{0, 0, 0}, {0, 0, 0}, {0, 0, 0}}, {{1, 0, 0}, {0, 0, 0}, {0, 0, 1}}, {{0, 0, 0}, {0, 1, 0}, {0, 0, 0}},
    {{1, 1, 0}, {0, 1, 0}, {0, 1, 1}}, {{1, 0, 0}, {1, 1, 1}, {0, 0, 1}}, {{1, 1, 1}, {1, 1, 1}, {1, 1, 1}},
    {{1, 1, 0}, {1, 2, 1}, {0, 1, 1}}, {{1, 1, 1}, {1, 2, 1}, {1, 1, 1}},
};
inline const std::vector<IntMatrix> kTypeC = {
    {{0, 0}, {0, 0}}, {{1, 0}, {0, 0}}, {{0, 0}, {0, 1}}, {{1, 2}, {0, 1}},
    {{1, 0}, {1, 1}}, {{2, 2}, {1, 1}}, {{1, 2}, {1, 2}}, {{2, 2}, {1, 2}},
};
inline const std::vector<IntMatrix> kTypeB = {
    {{0, 0}, {0, 0}}, {{1, 0}, {0, 0}}, {{0, 0}, {0, 1}}, {{1, 1}, {0, 1}},
    {{1, 0}, {2, 1}}, {{2, 1}, {2, 1}}, {{1, 1}, {2, 2}}, {{2, 1}, {2, 2}},
};

// The two collision matrices at rank 4, column-folded with F.
inline const IntMatrix kLeft{{1, 1, 0, 0}, {1, 2, 1, 0}, {0, 1, 1, 0}, {0, 0, 0, 0}};
inline const IntMatrix kRight{{0, 0, 0, 0}, {0, 2, 2, 1}, {0, 2, 2, 1}, {0, 2, 2, 1}};

// Fold by the index rule alone.
inline IntMatrix fold_by_index(const IntMatrix& w, bool rows) {
  const std::size_t n = (w.rows() + 1) / 2, m = w.rows();
  IntMatrix out(n, n);
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j) {
      auto at = [&](std::size_t a, std::size_t b) { return rows ? w(a - 1, b - 1) : w(b - 1, a - 1); };
      const std::int64_t x = i < n ? at(i, j) + at(m + 1 - i, j) : at(i, j);
      if (rows) out(i - 1, j - 1) = x;
      else out(j - 1, i - 1) = x;
    }
  return out;
}

}  // namespace fixtures
