#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "waldspurger/error.hpp"
#include "waldspurger/matrix.hpp"
#include "waldspurger/root_system.hpp"

namespace wald {

// UM vectors are the vectors whose zero-padded profile is a unimodal Motzkin
// path: consecutive differences in {-1,0,1} with every +1 before every -1.
inline bool is_um(std::span<const std::int64_t> v) {
  std::int64_t prev = 0;
  bool descending = false;
  for (std::size_t k = 0; k <= v.size(); ++k) {
    const std::int64_t cur = k < v.size() ? v[k] : 0;
    if (cur < 0) return false;
    const std::int64_t step = cur - prev;
    if (step > 1 || step < -1) return false;
    if (step == -1) descending = true;
    if (step == 1 && descending) return false;
    prev = cur;
  }
  return true;
}

// is_um with a maximum at zero-based position k.
inline bool is_um_at(std::span<const std::int64_t> v, std::size_t k) {
  if (k >= v.size() || !is_um(v)) return false;
  return std::all_of(v.begin(), v.end(), [&](std::int64_t x) { return x <= v[k]; });
}

inline bool is_um(const IntVector& v) { return is_um(std::span<const std::int64_t>(v)); }
inline bool is_um_at(const IntVector& v, std::size_t k) {
  return is_um_at(std::span<const std::int64_t>(v), k);
}

// Every UM vector of length m, lexicographically sorted (2^m of them).
inline std::vector<IntVector> enumerate_um(int m) {
  if (m < 1) throw InputError("enumerate_um needs m >= 1");
  std::vector<IntVector> out;
  IntVector cur;
  // State: last value and whether a down step has occurred.
  auto rec = [&](auto&& self, std::int64_t prev, bool descending) -> void {
    if (static_cast<int>(cur.size()) == m) {
      // closing step to the padded zero
      if (prev <= 1) out.push_back(cur);
      return;
    }
    for (int step = -1; step <= 1; ++step) {
      if (step == 1 && descending) continue;
      const std::int64_t next = prev + step;
      if (next < 0) continue;
      cur.push_back(next);
      self(self, next, descending || step == -1);
      cur.pop_back();
    }
  };
  rec(rec, 0, false);
  std::sort(out.begin(), out.end());
  return out;
}

enum class Step { Up, Flat, Down };

struct MotzkinPath {
  std::vector<Step> steps;

  bool is_unimodal_motzkin() const {
    std::int64_t h = 0;
    bool descending = false;
    for (Step s : steps) {
      if (s == Step::Up) {
        if (descending) return false;
        ++h;
      } else if (s == Step::Down) {
        descending = true;
        if (--h < 0) return false;
      }
    }
    return h == 0;
  }

  std::vector<std::int64_t> heights() const {
    std::vector<std::int64_t> h{0};
    for (Step s : steps) h.push_back(h.back() + (s == Step::Up ? 1 : s == Step::Down ? -1 : 0));
    return h;
  }

  friend bool operator==(const MotzkinPath&, const MotzkinPath&) = default;
};

inline MotzkinPath um_to_ump(const IntVector& v) {
  if (!is_um(v)) throw InputError("um_to_ump: not a UM vector");
  MotzkinPath path;
  std::int64_t prev = 0;
  for (std::size_t k = 0; k <= v.size(); ++k) {
    const std::int64_t cur = k < v.size() ? v[k] : 0;
    path.steps.push_back(cur > prev ? Step::Up : cur < prev ? Step::Down : Step::Flat);
    prev = cur;
  }
  return path;
}

inline IntVector ump_to_um(const MotzkinPath& path) {
  if (path.steps.empty() || !path.is_unimodal_motzkin()) {
    throw InputError("ump_to_um: not a unimodal Motzkin path");
  }
  auto h = path.heights();
  return IntVector(h.begin() + 1, h.end() - 1);
}

// A positive root of A_m written as the interval [first, last] of simple
// roots (one-based), i.e. a consecutive-ones vector in root coordinates.
struct RootInterval {
  int first = 1;
  int last = 1;
  friend auto operator<=>(const RootInterval&, const RootInterval&) = default;
};

// An ideal of the positive root poset (upward closed under adding simple
// roots). `generators` holds its minimal elements.
struct RootIdeal {
  int rank = 0;
  std::vector<RootInterval> generators;
  std::vector<RootInterval> roots;
};

inline bool contains(const RootInterval& big, const RootInterval& small) {
  return big.first <= small.first && small.last <= big.last;
}

// Upward closure of a set of roots inside the positive roots of A_rank.
inline std::vector<RootInterval> upward_closure(const std::vector<RootInterval>& gens, int rank) {
  std::vector<RootInterval> out;
  for (int i = 1; i <= rank; ++i)
    for (int j = i; j <= rank; ++j) {
      const RootInterval r{i, j};
      if (std::any_of(gens.begin(), gens.end(), [&](const RootInterval& g) { return contains(r, g); }))
        out.push_back(r);
    }
  return out;
}

inline bool is_upward_closed(const std::vector<RootInterval>& roots, int rank) {
  std::set<RootInterval> s(roots.begin(), roots.end());
  for (const auto& r : roots) {
    if (r.first > 1 && !s.count({r.first - 1, r.last})) return false;
    if (r.last < rank && !s.count({r.first, r.last + 1})) return false;
  }
  return true;
}

// Two roots [i,j], [k,l] sum to a root exactly when the intervals abut.
inline bool is_abelian(const std::vector<RootInterval>& roots) {
  for (const auto& a : roots)
    for (const auto& b : roots)
      if (a.last + 1 == b.first) return false;
  return true;
}

inline IntVector indicator_sum(const std::vector<RootInterval>& roots, int rank) {
  IntVector v(static_cast<std::size_t>(rank), 0);
  for (const auto& r : roots)
    for (int k = r.first; k <= r.last; ++k) ++v[static_cast<std::size_t>(k - 1)];
  return v;
}

// Greedy decomposition into positive roots: repeatedly remove the root that
// starts at the first positive entry and runs across the maximal
// nondecreasing stretch of positive entries. The removed roots are the
// minimal elements of an abelian ideal and sum to v.
inline RootIdeal um_to_roots(const IntVector& v) {
  if (!is_um(v)) throw InputError("um_to_roots: not a UM vector");
  const int m = static_cast<int>(v.size());
  RootIdeal ideal;
  ideal.rank = m;
  IntVector rest = v;
  while (true) {
    std::size_t s = 0;
    while (s < rest.size() && rest[s] == 0) ++s;
    if (s == rest.size()) break;
    std::size_t e = s;
    while (e + 1 < rest.size() && rest[e + 1] > 0 && rest[e + 1] >= rest[e]) ++e;
    for (std::size_t k = s; k <= e; ++k) --rest[k];
    ideal.generators.push_back({static_cast<int>(s) + 1, static_cast<int>(e) + 1});
  }
  std::sort(ideal.generators.begin(), ideal.generators.end());
  ideal.roots = upward_closure(ideal.generators, m);
  return ideal;
}

// Reads the ideal as a Young diagram in the staircase of positive roots:
// row i holds the roots [i, j]; part i is their count.
inline std::vector<int> um_to_partition(const IntVector& v) {
  const RootIdeal ideal = um_to_roots(v);
  std::vector<int> parts(static_cast<std::size_t>(ideal.rank), 0);
  for (const auto& r : ideal.roots) ++parts[static_cast<std::size_t>(r.first - 1)];
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  return parts;
}

inline int max_hook_length(const std::vector<int>& parts) {
  if (parts.empty()) return 0;
  // The hook of the corner cell dominates all others.
  return parts.front() + static_cast<int>(parts.size()) - 1;
}

// v^T C y for every positive root y, computed two ways: by the Cartan
// matrix and by the local formula -x_{i-1} + x_i + x_j - x_{j+1}.
inline bool peterson_test(const IntVector& v) {
  const int m = static_cast<int>(v.size());
  if (m < 1) return true;
  const IntMatrix c = cartan_data(Family::A, m).cartan;
  auto x = [&](int k) -> std::int64_t { return k < 1 || k > m ? 0 : v[static_cast<std::size_t>(k - 1)]; };
  bool inside = true;
  for (int i = 1; i <= m; ++i)
    for (int j = i; j <= m; ++j) {
      std::int64_t via_cartan = 0;
      for (int a = 1; a <= m; ++a)
        for (int b = i; b <= j; ++b) via_cartan += x(a) * c(static_cast<std::size_t>(a - 1), static_cast<std::size_t>(b - 1));
      const std::int64_t local = -x(i - 1) + x(i) + x(j) - x(j + 1);
      if (via_cartan != local) {
        throw InvariantError("Peterson pairing routes disagree for root [" + std::to_string(i) +
                             "," + std::to_string(j) + "]");
      }
      if (local < -1 || local > 2) inside = false;
    }
  return inside;
}

}  // namespace wald
