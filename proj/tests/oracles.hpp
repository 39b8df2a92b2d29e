#pragma once

// Brute-force reference implementations used only by the tests.

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "waldspurger/matrix.hpp"
#include "waldspurger/permutation.hpp"

namespace oracle {

using wald::IntMatrix;
using wald::IntVector;

// Star counting straight from the definition, no prefix sums.
inline IntMatrix wt_by_stars(const IntMatrix& m) {
  const std::size_t n = m.rows();
  IntMatrix w(n - 1, n - 1);
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = 1; j < n; ++j) {
      std::int64_t s = 0;
      for (std::size_t a = 1; a <= n; ++a)
        for (std::size_t b = 1; b <= n; ++b) {
          const bool counted = i <= j ? (a <= i && b > j) : (a > i && b <= j);
          if (counted) s += m(a - 1, b - 1);
        }
      w(i - 1, j - 1) = s;
    }
  return w;
}

// Bruhat order via the tableau criterion: u <= v iff for every k the sorted
// first-k values of u are dominated by those of v.
inline bool bruhat_tableau(const wald::Permutation& u, const wald::Permutation& v) {
  const int n = u.size();
  for (int k = 1; k <= n; ++k) {
    std::vector<int> a(u.window().begin(), u.window().begin() + k);
    std::vector<int> b(v.window().begin(), v.window().begin() + k);
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    for (int t = 0; t < k; ++t)
      if (a[static_cast<std::size_t>(t)] > b[static_cast<std::size_t>(t)]) return false;
  }
  return true;
}

// Full B_n Bruhat order from subword closure: generate by the simple
// generators, u <= v iff u is a subword product of some reduced word of v.
inline std::set<std::pair<std::vector<int>, std::vector<int>>> signed_bruhat_by_subwords(int n) {
  using wald::SignedPermutation;
  std::vector<SignedPermutation> gens;
  for (int i = 1; i < n; ++i) {
    std::vector<int> w(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) w[static_cast<std::size_t>(k)] = k + 1;
    std::swap(w[static_cast<std::size_t>(i - 1)], w[static_cast<std::size_t>(i)]);
    gens.emplace_back(w);
  }
  {
    std::vector<int> w(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) w[static_cast<std::size_t>(k)] = k + 1;
    w[static_cast<std::size_t>(n - 1)] = -n;
    gens.emplace_back(w);
  }
  // Breadth-first search gives lengths; a reduced word of v s is one of v
  // followed by s, so below(v s) = below(v) union below(v) s.
  std::map<std::vector<int>, std::set<std::vector<int>>> below;
  std::map<std::vector<int>, int> length;
  const auto id = SignedPermutation::identity(n);
  below[id.window()] = {id.window()};
  length[id.window()] = 0;
  std::vector<SignedPermutation> frontier{id};
  for (int level = 0; !frontier.empty(); ++level) {
    std::vector<SignedPermutation> next;
    for (const auto& v : frontier)
      for (const auto& g : gens) {
        const auto vg = v * g;
        auto it = length.find(vg.window());
        if (it != length.end() && it->second <= level) continue;
        length[vg.window()] = level + 1;
        auto& set = below[vg.window()];
        const bool fresh = set.empty();
        for (const auto& u : below[v.window()]) {
          set.insert(u);
          set.insert((SignedPermutation(u) * g).window());
        }
        if (fresh) next.push_back(vg);
      }
    frontier = std::move(next);
  }
  std::set<std::pair<std::vector<int>, std::vector<int>>> rel;
  for (const auto& [v, us] : below)
    for (const auto& u : us) rel.insert({u, v});
  return rel;
}

}  // namespace oracle

namespace oracle {

// All {-1,0,1} matrices assembled from alternating rows, filtered by the
// column conditions.
inline std::vector<wald::IntMatrix> asms_by_rows(int n) {
  std::vector<IntVector> rows;
  IntVector cur(static_cast<std::size_t>(n), 0);
  auto gen = [&](auto&& self, std::size_t k, std::int64_t partial) -> void {
    if (k == cur.size()) {
      if (partial == 1) rows.push_back(cur);
      return;
    }
    for (int x = -1; x <= 1; ++x) {
      const std::int64_t p = partial + x;
      if (p < 0 || p > 1) continue;
      cur[k] = x;
      self(self, k + 1, p);
    }
  };
  gen(gen, 0, 0);
  std::vector<wald::IntMatrix> out;
  const auto un = static_cast<std::size_t>(n);
  wald::IntMatrix m(un, un);
  std::vector<std::int64_t> col(un, 0);
  auto place = [&](auto&& self, std::size_t i) -> void {
    if (i == un) {
      if (std::all_of(col.begin(), col.end(), [](std::int64_t c) { return c == 1; })) out.push_back(m);
      return;
    }
    for (const auto& r : rows) {
      bool ok = true;
      for (std::size_t j = 0; j < un; ++j) {
        const std::int64_t c = col[j] + r[j];
        if (c < 0 || c > 1) ok = false;
      }
      if (!ok) continue;
      for (std::size_t j = 0; j < un; ++j) {
        m(i, j) = r[j];
        col[j] += r[j];
      }
      self(self, i + 1);
      for (std::size_t j = 0; j < un; ++j) col[j] -= r[j];
    }
  };
  place(place, 0);
  return out;
}

// Upper sets of the positive roots of A_m (intervals ordered by containment)
// that are abelian, by brute force over all subsets.
inline std::set<std::vector<std::pair<int, int>>> abelian_upper_sets(int m) {
  std::vector<std::pair<int, int>> roots;
  for (int i = 1; i <= m; ++i)
    for (int j = i; j <= m; ++j) roots.emplace_back(i, j);
  std::set<std::vector<std::pair<int, int>>> out;
  const std::size_t total = std::size_t{1} << roots.size();
  for (std::size_t mask = 0; mask < total; ++mask) {
    std::vector<std::pair<int, int>> s;
    for (std::size_t k = 0; k < roots.size(); ++k)
      if (mask >> k & 1) s.push_back(roots[k]);
    auto in = [&](int i, int j) { return std::find(s.begin(), s.end(), std::make_pair(i, j)) != s.end(); };
    bool ok = true;
    for (const auto& [i, j] : s) {
      if (i > 1 && !in(i - 1, j)) ok = false;
      if (j < m && !in(i, j + 1)) ok = false;
      for (const auto& [k, l] : s)
        if (j + 1 == k) ok = false;
    }
    if (ok) out.insert(s);
  }
  return out;
}

}  // namespace oracle
