#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "waldspurger/error.hpp"
#include "waldspurger/matrix.hpp"
#include "waldspurger/permutation.hpp"
#include "waldspurger/poset.hpp"
#include "waldspurger/transform.hpp"
#include "waldspurger/um_vectors.hpp"

namespace wald {

// Row k (one-based) lists the columns where the first k rows of an ASM have
// partial column sum 1.
struct MonotoneTriangle {
  int n = 0;
  std::vector<std::vector<int>> rows;

  std::optional<std::string> violation() const {
    if (static_cast<int>(rows.size()) != n) return "triangle must have n rows";
    for (int k = 0; k < n; ++k) {
      const auto& r = rows[static_cast<std::size_t>(k)];
      if (static_cast<int>(r.size()) != k + 1) return "row " + std::to_string(k + 1) + " has the wrong length";
      for (std::size_t t = 0; t < r.size(); ++t) {
        if (r[t] < 1 || r[t] > n) return "row " + std::to_string(k + 1) + " has an entry outside 1..n";
        if (t && r[t] <= r[t - 1]) return "row " + std::to_string(k + 1) + " is not strictly increasing";
      }
      if (k) {
        const auto& above = rows[static_cast<std::size_t>(k - 1)];
        for (std::size_t t = 0; t < above.size(); ++t)
          if (r[t] > above[t] || above[t] > r[t + 1])
            return "rows " + std::to_string(k) + " and " + std::to_string(k + 1) + " do not interlace";
      }
    }
    for (int t = 0; t < n; ++t)
      if (rows.back()[static_cast<std::size_t>(t)] != t + 1) return "last row must be 1..n";
    return std::nullopt;
  }

  friend bool operator==(const MonotoneTriangle&, const MonotoneTriangle&) = default;
};

// Text form "3; 2 4; 2 4 5".
inline std::string to_string(const MonotoneTriangle& t) {
  std::string out;
  for (std::size_t k = 0; k < t.rows.size(); ++k) {
    if (k) out += "; ";
    for (std::size_t j = 0; j < t.rows[k].size(); ++j) {
      if (j) out += " ";
      out += std::to_string(t.rows[k][j]);
    }
  }
  return out;
}

inline std::vector<std::vector<int>> parse_triangle_rows(std::string_view text) {
  std::vector<std::vector<int>> rows;
  std::stringstream ss{std::string(text)};
  std::string chunk;
  while (std::getline(ss, chunk, ';')) {
    std::stringstream rs(chunk);
    std::vector<int> row;
    std::string tok;
    while (rs >> tok) {
      try {
        std::size_t used = 0;
        row.push_back(std::stoi(tok, &used));
        if (used != tok.size()) throw InputError("");
      } catch (const std::exception&) {
        throw InputError("malformed triangle entry '" + tok + "'");
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

inline MonotoneTriangle parse_triangle(std::string_view text) {
  MonotoneTriangle t;
  t.rows = parse_triangle_rows(text);
  t.n = static_cast<int>(t.rows.size());
  if (auto v = t.violation()) throw InputError("invalid monotone triangle: " + *v);
  return t;
}

inline MonotoneTriangle asm_to_mt(const IntMatrix& m) {
  if (auto v = asm_violation(m)) throw InputError("asm_to_mt: " + *v);
  MonotoneTriangle t;
  t.n = static_cast<int>(m.rows());
  std::vector<std::int64_t> partial(m.cols(), 0);
  for (std::size_t k = 0; k < m.rows(); ++k) {
    std::vector<int> row;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      partial[j] += m(k, j);
      if (partial[j] == 1) row.push_back(static_cast<int>(j) + 1);
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

inline IntMatrix mt_to_asm(const MonotoneTriangle& t) {
  if (auto v = t.violation()) throw InputError("mt_to_asm: " + *v);
  const auto n = static_cast<std::size_t>(t.n);
  IntMatrix m(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    for (int c : t.rows[k]) m(k, static_cast<std::size_t>(c - 1)) += 1;
    if (k)
      for (int c : t.rows[k - 1]) m(k, static_cast<std::size_t>(c - 1)) -= 1;
  }
  return m;
}

// Reduced form: entry j of row k minus j, with the (all zero) last row
// dropped. Row i then holds the painting loads for row i of WT.
struct ReducedTriangle {
  int n = 0;
  std::vector<std::vector<int>> rows;
  friend bool operator==(const ReducedTriangle&, const ReducedTriangle&) = default;
};

inline ReducedTriangle reduce(const MonotoneTriangle& t) {
  if (auto v = t.violation()) throw InputError("reduce: " + *v);
  ReducedTriangle r;
  r.n = t.n;
  for (std::size_t k = 0; k + 1 < t.rows.size(); ++k) {
    std::vector<int> row;
    for (std::size_t j = 0; j < t.rows[k].size(); ++j) row.push_back(t.rows[k][j] - static_cast<int>(j) - 1);
    r.rows.push_back(std::move(row));
  }
  return r;
}

inline MonotoneTriangle unreduce(const ReducedTriangle& r) {
  MonotoneTriangle t;
  t.n = r.n;
  for (const auto& row : r.rows) {
    std::vector<int> out;
    for (std::size_t j = 0; j < row.size(); ++j) out.push_back(row[j] + static_cast<int>(j) + 1);
    t.rows.push_back(std::move(out));
  }
  std::vector<int> last(static_cast<std::size_t>(r.n));
  for (int j = 0; j < r.n; ++j) last[static_cast<std::size_t>(j)] = j + 1;
  t.rows.push_back(std::move(last));
  if (auto v = t.violation()) throw InputError("invalid reduced triangle: " + *v);
  return t;
}

// Paints one row: load r at position j (one-based) covers columns j..j+r-1.
inline IntVector paint_row(const std::vector<int>& loads, std::size_t width) {
  IntVector v(width, 0);
  for (std::size_t j = 0; j < loads.size(); ++j) {
    if (loads[j] < 0) throw InputError("negative painting load");
    if (loads[j] > 0 && j + static_cast<std::size_t>(loads[j]) > width) {
      throw InputError("painting load " + std::to_string(loads[j]) + " at position " + std::to_string(j + 1) +
                       " runs past column " + std::to_string(width));
    }
    for (int c = 0; c < loads[j]; ++c) ++v[j + static_cast<std::size_t>(c)];
  }
  return v;
}

inline IntMatrix paint(const ReducedTriangle& r) {
  const auto m = static_cast<std::size_t>(r.n - 1);
  if (r.rows.size() != m) throw InputError("reduced triangle must have n-1 rows");
  IntMatrix w(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    if (r.rows[i].size() != i + 1) throw InputError("reduced triangle row " + std::to_string(i + 1) + " has the wrong length");
    const IntVector row = paint_row(r.rows[i], m);
    for (std::size_t j = 0; j < m; ++j) w(i, j) = row[j];
  }
  return w;
}

// Loads (r_1..r_k), weakly increasing, whose painting is v. The j-th stroke
// ends at column e_j = j - 1 + r_j and column c is covered by the strokes
// j with g(c) <= j <= min(c,k), g(c) = min(c,k) + 1 - v_c; each stroke is
// pushed as far right as that permits.
inline std::optional<std::vector<int>> try_peel(const IntVector& v, int k) {
  const int m = static_cast<int>(v.size());
  if (k < 1 || k > m || !is_um(v)) return std::nullopt;
  auto g = [&](int c) { return static_cast<std::int64_t>(std::min(c, k)) + 1 - v[static_cast<std::size_t>(c - 1)]; };
  std::vector<int> loads;
  for (int j = 1; j <= k; ++j) {
    int e = j - 1;
    while (e + 1 <= m && g(e + 1) <= j) ++e;
    loads.push_back(e - j + 1);
  }
  for (std::size_t t = 1; t < loads.size(); ++t)
    if (loads[t] < loads[t - 1]) return std::nullopt;
  try {
    if (paint_row(loads, v.size()) != v) return std::nullopt;
  } catch (const InputError&) {
    return std::nullopt;
  }
  return loads;
}

inline std::vector<int> feasible_part_counts(const IntVector& v) {
  std::vector<int> out;
  for (int k = 1; k <= static_cast<int>(v.size()); ++k)
    if (try_peel(v, k)) out.push_back(k);
  return out;
}

inline std::vector<int> peel(const IntVector& v, int k) {
  if (!is_um(v)) throw InputError("peel: not a UM vector");
  if (auto loads = try_peel(v, k)) return *loads;
  std::string feasible;
  for (int f : feasible_part_counts(v)) feasible += (feasible.empty() ? "" : ",") + std::to_string(f);
  throw InputError("peel: " + std::to_string(k) + " parts is infeasible; feasible part counts {" + feasible + "}");
}

// All monotone triangles of size n, built upward from the fixed last row.
inline std::vector<MonotoneTriangle> enumerate_monotone_triangles(int n) {
  if (n < 1) throw InputError("triangle size must be at least 1");
  std::vector<MonotoneTriangle> out;
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) rows.back().push_back(j);
  auto rec = [&](auto&& self, int k) -> void {
    // rows[k] is set (zero-based, length k+1); fill rows[k-1].
    if (k == 0) {
      out.push_back({n, rows});
      return;
    }
    const auto& below = rows[static_cast<std::size_t>(k)];
    auto& row = rows[static_cast<std::size_t>(k - 1)];
    row.assign(static_cast<std::size_t>(k), 0);
    auto fill = [&](auto&& fself, std::size_t t) -> void {
      if (t == row.size()) {
        self(self, k - 1);
        return;
      }
      const int lo = std::max(below[t], t ? row[t - 1] + 1 : below[t]);
      for (int x = lo; x <= below[t + 1]; ++x) {
        row[t] = x;
        fself(fself, t + 1);
      }
    };
    fill(fill, 0);
  };
  rec(rec, n - 1);
  std::sort(out.begin(), out.end(), [](const MonotoneTriangle& a, const MonotoneTriangle& b) { return a.rows < b.rows; });
  return out;
}

inline std::vector<IntMatrix> enumerate_asms(int n) {
  std::vector<IntMatrix> out;
  for (const auto& t : enumerate_monotone_triangles(n)) out.push_back(mt_to_asm(t));
  return out;
}

inline bool triangle_leq(const MonotoneTriangle& a, const MonotoneTriangle& b) {
  for (std::size_t k = 0; k < a.rows.size(); ++k)
    for (std::size_t j = 0; j < a.rows[k].size(); ++j)
      if (a.rows[k][j] > b.rows[k][j]) return false;
  return true;
}

struct AsmLattice {
  int n = 0;
  std::vector<IntMatrix> asms;
  std::vector<IntMatrix> wts;
  std::vector<MonotoneTriangle> triangles;
  FinitePoset poset;
  std::map<IntMatrix, std::size_t> index_of_wt;

  std::optional<std::size_t> find_wt(const IntMatrix& w) const {
    auto it = index_of_wt.find(w);
    if (it == index_of_wt.end()) return std::nullopt;
    return it->second;
  }

  // Entrywise max, validated to lie in the image and to be the least upper
  // bound in the poset.
  std::size_t join(std::size_t x, std::size_t y) const { return combine(x, y, true); }
  std::size_t meet(std::size_t x, std::size_t y) const { return combine(x, y, false); }

  std::vector<std::size_t> permutation_indices() const {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < asms.size(); ++k)
      if (std::all_of(asms[k].data().begin(), asms[k].data().end(), [](std::int64_t x) { return x >= 0; }))
        out.push_back(k);
    return out;
  }

 private:
  std::size_t combine(std::size_t x, std::size_t y, bool upper) const {
    const IntMatrix w = upper ? entrywise_max(wts[x], wts[y]) : entrywise_min(wts[x], wts[y]);
    const auto z = find_wt(w);
    if (!z) {
      throw InvariantError(std::string("entrywise ") + (upper ? "max" : "min") + " of " + to_string(wts[x]) +
                           " and " + to_string(wts[y]) + " leaves the image: " + to_string(w));
    }
    const auto expected = upper ? poset.join(x, y) : poset.meet(x, y);
    if (!expected || *expected != *z) throw InvariantError("entrywise bound is not the lattice bound");
    return *z;
  }
};

inline AsmLattice build_asm_lattice(int n) {
  if (n < 2 || n > 6) throw InputError("build_asm_lattice supports 2 <= n <= 6");
  AsmLattice l;
  l.n = n;
  l.triangles = enumerate_monotone_triangles(n);
  std::vector<std::string> labels;
  for (const auto& t : l.triangles) {
    l.asms.push_back(mt_to_asm(t));
    l.wts.push_back(wt_general(l.asms.back()));
    l.index_of_wt.emplace(l.wts.back(), l.wts.size() - 1);
    std::string label;
    for (auto x : l.wts.back().data()) label += std::to_string(x);
    labels.push_back(label);
  }
  if (l.index_of_wt.size() != l.wts.size()) throw InvariantError("two ASMs share a Waldspurger matrix");
  l.poset = FinitePoset::from_relation(
      l.wts.size(), [&](std::size_t a, std::size_t b) { return componentwise_leq(l.wts[a], l.wts[b]); },
      std::move(labels));
  return l;
}

// Same elements, ordered by componentwise comparison of monotone triangles.
inline FinitePoset triangle_order(const AsmLattice& l) {
  return FinitePoset::from_relation(l.triangles.size(), [&](std::size_t a, std::size_t b) {
    return triangle_leq(l.triangles[a], l.triangles[b]);
  }, l.poset.labels());
}

inline bool is_bigrassmannian(const Permutation& p) {
  return p.right_descents().size() == 1 && p.left_descents().size() == 1;
}

inline std::vector<Permutation> bigrassmannians(int n) {
  if (n < 1 || n > 8) throw InputError("bigrassmannians supports 1 <= n <= 8");
  std::vector<Permutation> out;
  for (const auto& p : all_permutations(n))
    if (is_bigrassmannian(p)) out.push_back(p);
  return out;
}

inline std::int64_t max_fixed_value(int n, int i, int j) { return std::min({i, j, n - i, n - j}); }

// Number of positive values each entry of an n x n ASM's Waldspurger matrix
// can be fixed at.
inline IntMatrix fixing_table(int n) {
  const auto m = static_cast<std::size_t>(n - 1);
  IntMatrix t(m, m);
  for (int i = 1; i < n; ++i)
    for (int j = 1; j < n; ++j) t(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) = max_fixed_value(n, i, j);
  return t;
}

// Componentwise least image matrix with entry (i,j) >= v, as the meet of
// every element that qualifies.
inline IntMatrix min_with_fixed_entry(const AsmLattice& l, int i, int j, std::int64_t v) {
  const int n = l.n;
  if (i < 1 || j < 1 || i >= n || j >= n) throw InputError("entry position outside the matrix");
  const std::int64_t bound = max_fixed_value(n, i, j);
  if (v > bound) {
    throw InputError("entry (" + std::to_string(i) + "," + std::to_string(j) + ") can be at most min(i,j,n-i,n-j) = " +
                     std::to_string(bound));
  }
  std::optional<IntMatrix> acc;
  for (const auto& w : l.wts) {
    if (w(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) < v) continue;
    acc = acc ? entrywise_min(*acc, w) : w;
  }
  if (!acc) throw InvariantError("no element reaches the fixed value");
  if (!l.find_wt(*acc)) throw InvariantError("meet of qualifying elements leaves the image: " + to_string(*acc));
  if ((*acc)(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) < v)
    throw InvariantError("no least element with the fixed entry");
  return *acc;
}

inline IntMatrix min_with_fixed_entry(int n, int i, int j, std::int64_t v) {
  return min_with_fixed_entry(build_asm_lattice(n), i, j, v);
}

}  // namespace wald
