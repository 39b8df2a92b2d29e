#pragma once

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "waldspurger/asm_lattice.hpp"
#include "waldspurger/bruhat.hpp"
#include "waldspurger/error.hpp"
#include "waldspurger/matrix.hpp"
#include "waldspurger/permutation.hpp"
#include "waldspurger/poset.hpp"
#include "waldspurger/root_system.hpp"
#include "waldspurger/transform.hpp"

namespace wald {

// F keeps the middle row (type C) or column (type B) single; FTilde doubles it.
enum class FoldConvention { F, FTilde };

inline std::string to_string(FoldConvention c) { return c == FoldConvention::F ? "F" : "Ftilde"; }

inline FoldConvention parse_convention(std::string_view text) {
  if (text == "F") return FoldConvention::F;
  if (text == "Ftilde") return FoldConvention::FTilde;
  throw InputError("unknown folding convention '" + std::string(text) + "' (use F or Ftilde)");
}

struct BCMatrix {
  IntMatrix m;
  Family family = Family::C;
  FoldConvention convention = FoldConvention::FTilde;
  friend bool operator==(const BCMatrix&, const BCMatrix&) = default;
};

inline bool is_centrally_symmetric(const IntMatrix& m) {
  const std::size_t r = m.rows(), c = m.cols();
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (m(i, j) != m(r - 1 - i, c - 1 - j)) return false;
  return true;
}

namespace detail {

inline IntMatrix fold_rows(const IntMatrix& w, bool doubled) {
  const std::size_t size = w.rows();
  const std::size_t n = (size + 1) / 2;
  IntMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      // zero-based mirror of row i is size - 1 - i; the middle row is its own
      out(i, j) = i + 1 < n ? w(i, j) + w(size - 1 - i, j) : (doubled ? 2 : 1) * w(i, j);
    }
  return out;
}

inline void require_family(Family f) {
  if (f == Family::A) throw InputError("folding produces types B and C only");
}

}  // namespace detail

// Folds a centrally symmetric (2n-1) x (2n-1) type-A matrix: rows onto the
// upper half for type C, columns onto the left half for type B.
inline BCMatrix fold_wt(const IntMatrix& w, Family family, FoldConvention conv) {
  detail::require_family(family);
  if (!w.is_square() || w.rows() % 2 == 0) throw InputError("fold_wt needs an odd-sized square matrix");
  if (!is_centrally_symmetric(w)) throw InputError("fold_wt needs a centrally symmetric matrix");
  const bool doubled = conv == FoldConvention::FTilde;
  IntMatrix m = family == Family::C ? detail::fold_rows(w, doubled) : detail::fold_rows(w.transpose(), doubled).transpose();
  return {std::move(m), family, conv};
}

// WT_Phi with the middle row (C) or column (B) adjusted to the convention.
inline IntMatrix wt_phi_convention(const SignedPermutation& s, Family family, FoldConvention conv) {
  IntMatrix m = wt_phi(s, family);
  if (conv == FoldConvention::FTilde) {
    const std::size_t last = m.rows() - 1;
    for (std::size_t k = 0; k < m.rows(); ++k) {
      if (family == Family::C) m(last, k) *= 2;
      else m(k, last) *= 2;
    }
  }
  return m;
}

// Computed by the root-coordinate formula and by folding the type-A
// transform of the unfolded permutation; the two must agree.
inline BCMatrix wt_bc(const SignedPermutation& s, Family family, FoldConvention conv = FoldConvention::FTilde) {
  detail::require_family(family);
  const IntMatrix direct = wt_phi_convention(s, family, conv);
  const BCMatrix folded = fold_wt(wt_perm(unfold_perm(s)), family, conv);
  if (!(folded.m == direct)) {
    throw InvariantError("folding disagrees with WT_" + to_string(family) + " for " + s.to_string() + ": " +
                         to_string(direct) + " vs " + to_string(folded.m));
  }
  return folded;
}

// Type-B/C UM vectors: some peak position k has entries starting in
// {0,1,2}, steps in {0,1,2} up to k, steps in {-1,0,1} after k, ending even.
inline bool is_um_bc_at(const IntVector& v, std::size_t k) {
  if (v.empty() || k >= v.size()) return false;
  std::int64_t prev = 0;
  for (std::size_t t = 0; t < v.size(); ++t) {
    const std::int64_t step = v[t] - prev;
    if (v[t] < 0) return false;
    if (t <= k ? (step < 0 || step > 2) : (step < -1 || step > 1)) return false;
    prev = v[t];
  }
  return v.back() % 2 == 0;
}

inline bool is_um_bc(const IntVector& v) {
  for (std::size_t k = 0; k < v.size(); ++k)
    if (is_um_bc_at(v, k)) return true;
  return false;
}

// Column j <= n of the type-A transform of a centrally symmetric permutation
// of size 2n is fixed by the set S of positions holding the values 1..j:
// entry i is i - |S cap [1,i]| for i <= j and |S cap (i,2n]| beyond. S may
// not contain a position together with its mirror. Folding these columns
// gives exactly the vectors that occur; each also satisfies is_um_bc.
inline std::vector<IntVector> enumerate_um_bc(int n) {
  if (n < 1) throw InputError("enumerate_um_bc needs n >= 1");
  const int m = 2 * n;
  std::set<IntVector> out;
  std::vector<int> in_s(static_cast<std::size_t>(m) + 1, 0);
  auto emit = [&](int j) {
    std::vector<std::int64_t> prefix(static_cast<std::size_t>(m) + 1, 0);
    for (int a = 1; a <= m; ++a) prefix[static_cast<std::size_t>(a)] = prefix[static_cast<std::size_t>(a - 1)] + in_s[static_cast<std::size_t>(a)];
    auto u = [&](int i) -> std::int64_t {
      const auto ui = static_cast<std::size_t>(i);
      return i <= j ? i - prefix[ui] : static_cast<std::int64_t>(j) - prefix[ui];
    };
    IntVector c(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) c[static_cast<std::size_t>(i - 1)] = i < n ? u(i) + u(m - i) : 2 * u(i);
    if (!is_um_bc(c)) throw InvariantError("folded column violates the type-B/C UM inequalities");
    out.insert(std::move(c));
  };
  for (int j = 1; j <= n; ++j) {
    auto rec = [&](auto&& self, int pair, int chosen) -> void {
      if (chosen == j) {
        emit(j);
        return;
      }
      if (pair == n || n - pair < j - chosen) return;
      self(self, pair + 1, chosen);
      for (int pos : {pair + 1, m - pair}) {
        in_s[static_cast<std::size_t>(pos)] = 1;
        self(self, pair + 1, chosen + 1);
        in_s[static_cast<std::size_t>(pos)] = 0;
      }
    };
    rec(rec, 0, 0);
  }
  return {out.begin(), out.end()};
}

// Multiplicity of each rank of Id - R(s) over the group, indexed by rank.
inline std::vector<std::size_t> rank_census(int n, Family family) {
  detail::require_family(family);
  std::vector<std::size_t> out(static_cast<std::size_t>(n) + 1, 0);
  const RatMatrix id = RatMatrix::identity(static_cast<std::size_t>(n));
  for (const auto& s : all_signed_permutations(n)) ++out[rank(id - signed_perm_to_root_matrix(s, family))];
  return out;
}

inline bool waldspurger_leq(const SignedPermutation& s, const SignedPermutation& t, Family family) {
  return componentwise_leq(wt_bc(s, family).m, wt_bc(t, family).m);
}

inline bool is_bigrassmannian(const SignedPermutation& s) {
  return right_descents(s).size() == 1 && left_descents(s).size() == 1;
}

inline std::vector<SignedPermutation> bigrassmannians_signed(int n) {
  std::vector<SignedPermutation> out;
  for (const auto& s : all_signed_permutations(n))
    if (is_bigrassmannian(s)) out.push_back(s);
  return out;
}

inline FinitePoset signed_bruhat_poset(const std::vector<SignedPermutation>& elems) {
  std::vector<std::string> labels;
  for (const auto& s : elems) labels.push_back(s.to_string());
  std::vector<Permutation> unfolded;
  for (const auto& s : elems) unfolded.push_back(unfold_perm(s));
  return FinitePoset::from_relation(elems.size(), [&](std::size_t a, std::size_t b) {
    return bruhat_leq(unfolded[a], unfolded[b]);
  }, labels);
}

inline FinitePoset matrix_poset(const std::vector<IntMatrix>& ms, std::vector<std::string> labels = {}) {
  return FinitePoset::from_relation(ms.size(), [&](std::size_t a, std::size_t b) { return componentwise_leq(ms[a], ms[b]); },
                                    std::move(labels));
}

struct CoverPair {
  std::size_t lower;
  std::size_t upper;
};

struct OrderComparison {
  int rank = 0;
  Family family = Family::C;
  std::vector<SignedPermutation> elements;
  std::vector<IntMatrix> matrices;
  bool identical = false;
  bool extends_bruhat = true;  // u <= v in Bruhat implies u <= v in Waldspurger order
  std::vector<CoverPair> extra_covers;    // covers in Waldspurger order only
  std::vector<CoverPair> missing_covers;  // covers in Bruhat order only
  std::vector<std::size_t> bigrassmannian_ids;
  std::vector<CoverPair> extra_bigrassmannian_covers;  // within the bigrassmannian subposet
};

namespace detail {

inline std::vector<CoverPair> cover_difference(const FinitePoset& a, const FinitePoset& b,
                                               const std::vector<std::size_t>& ids) {
  std::set<std::pair<std::size_t, std::size_t>> bc(b.covers().begin(), b.covers().end());
  std::vector<CoverPair> out;
  for (const auto& [x, y] : a.covers())
    if (!bc.count({x, y})) out.push_back({ids[x], ids[y]});
  return out;
}

}  // namespace detail

inline OrderComparison compare_orders(int n, Family family) {
  detail::require_family(family);
  if (n < 1 || n > 4) throw InputError("compare_orders supports ranks 1..4");
  OrderComparison r;
  r.rank = n;
  r.family = family;
  r.elements = all_signed_permutations(n);
  for (const auto& s : r.elements) r.matrices.push_back(wt_bc(s, family).m);
  const FinitePoset bruhat = signed_bruhat_poset(r.elements);
  const FinitePoset wald = matrix_poset(r.matrices, bruhat.labels());
  r.identical = true;
  for (std::size_t a = 0; a < r.elements.size(); ++a)
    for (std::size_t b = 0; b < r.elements.size(); ++b) {
      const bool x = bruhat.leq(a, b), y = wald.leq(a, b);
      if (x != y) r.identical = false;
      if (x && !y) r.extends_bruhat = false;
    }
  std::vector<std::size_t> all(r.elements.size());
  for (std::size_t k = 0; k < all.size(); ++k) all[k] = k;
  r.extra_covers = detail::cover_difference(wald, bruhat, all);
  r.missing_covers = detail::cover_difference(bruhat, wald, all);

  for (std::size_t k = 0; k < r.elements.size(); ++k)
    if (is_bigrassmannian(r.elements[k])) r.bigrassmannian_ids.push_back(k);
  const auto& ids = r.bigrassmannian_ids;
  auto sub = [&](const FinitePoset& p) {
    return FinitePoset::from_relation(ids.size(), [&](std::size_t a, std::size_t b) { return p.leq(ids[a], ids[b]); });
  };
  r.extra_bigrassmannian_covers = detail::cover_difference(sub(wald), sub(bruhat), ids);
  return r;
}

// Centrally symmetric ASMs of size 2n from the top half of their monotone
// triangles; the lower half is the rotation of the upper.
inline std::vector<IntMatrix> enumerate_cs_asms(int n) {
  if (n < 1 || n > 5) throw InputError("enumerate_cs_asms supports 1 <= n <= 5");
  const int size = 2 * n;
  std::vector<IntMatrix> out;
  std::vector<std::vector<int>> rows;
  auto build = [&]() {
    const auto s = static_cast<std::size_t>(size);
    IntMatrix m(s, s);
    for (std::size_t k = 0; k < rows.size(); ++k) {
      for (int c : rows[k]) m(k, static_cast<std::size_t>(c - 1)) += 1;
      if (k)
        for (int c : rows[k - 1]) m(k, static_cast<std::size_t>(c - 1)) -= 1;
    }
    for (std::size_t k = 0; k < rows.size(); ++k)
      for (std::size_t j = 0; j < s; ++j) m(s - 1 - k, s - 1 - j) = m(k, j);
    if (!asm_violation(m)) out.push_back(m);
  };
  auto rec = [&](auto&& self) -> void {
    const int k = static_cast<int>(rows.size());
    if (k == n) {
      // Exactly one of each mirror pair of columns is open after n rows.
      const auto& last = rows.back();
      for (int c : last)
        if (std::find(last.begin(), last.end(), size + 1 - c) != last.end()) return;
      build();
      return;
    }
    std::vector<int> row(static_cast<std::size_t>(k + 1));
    auto fill = [&](auto&& fself, std::size_t t) -> void {
      if (t == row.size()) {
        rows.push_back(row);
        self(self);
        rows.pop_back();
        return;
      }
      int lo = t ? row[t - 1] + 1 : 1;
      int hi = size;
      if (k) {
        const auto& above = rows.back();
        if (t) lo = std::max(lo, above[t - 1]);
        if (t < above.size()) hi = above[t];
      }
      for (int x = lo; x <= hi; ++x) {
        row[t] = x;
        fself(fself, t + 1);
      }
    };
    fill(fill, 0);
  };
  rec(rec);
  std::sort(out.begin(), out.end());
  return out;
}

// Folding is not injective on centrally symmetric ASMs, so the order lives
// on the distinct folded matrices.
struct CsAsmFold {
  std::vector<IntMatrix> asms;
  std::vector<std::size_t> fold_of;  // asm index -> index into folded
  std::vector<IntMatrix> folded;     // distinct, sorted
  FinitePoset poset;
  std::vector<std::size_t> group_ids;  // folded indices of signed permutations
};

inline CsAsmFold cs_asm_fold(int n, Family family = Family::C, FoldConvention conv = FoldConvention::FTilde) {
  CsAsmFold r;
  r.asms = enumerate_cs_asms(n);
  std::vector<IntMatrix> all;
  for (const auto& a : r.asms) all.push_back(fold_wt(wt_general(a), family, conv).m);
  std::set<IntMatrix> distinct(all.begin(), all.end());
  r.folded.assign(distinct.begin(), distinct.end());
  std::set<std::size_t> group;
  for (std::size_t k = 0; k < r.asms.size(); ++k) {
    const auto it = std::lower_bound(r.folded.begin(), r.folded.end(), all[k]);
    r.fold_of.push_back(static_cast<std::size_t>(it - r.folded.begin()));
    if (permutation_of_matrix(r.asms[k])) group.insert(r.fold_of.back());
  }
  r.group_ids.assign(group.begin(), group.end());
  std::vector<std::string> labels;
  for (const auto& m : r.folded) labels.push_back(to_string(m));
  r.poset = matrix_poset(r.folded, std::move(labels));
  return r;
}

inline std::size_t find_matrix(const std::vector<IntMatrix>& sorted, const IntMatrix& m) {
  const auto it = std::lower_bound(sorted.begin(), sorted.end(), m);
  if (it == sorted.end() || !(*it == m)) throw InvariantError("matrix " + to_string(m) + " not found");
  return static_cast<std::size_t>(it - sorted.begin());
}

// Number of positive values (type C, FTilde) attained at each entry by the
// Weyl group elements.
inline IntMatrix bc_fixing_table_observed(int n) {
  const auto un = static_cast<std::size_t>(n);
  std::vector<std::vector<std::set<std::int64_t>>> seen(un, std::vector<std::set<std::int64_t>>(un));
  for (const auto& s : all_signed_permutations(n)) {
    const IntMatrix m = wt_bc(s, Family::C).m;
    for (std::size_t i = 0; i < un; ++i)
      for (std::size_t j = 0; j < un; ++j)
        if (m(i, j) > 0) seen[i][j].insert(m(i, j));
  }
  IntMatrix t(un, un);
  for (std::size_t i = 0; i < un; ++i)
    for (std::size_t j = 0; j < un; ++j) t(i, j) = static_cast<std::int64_t>(seen[i][j].size());
  return t;
}

// 2 min(i,j) inside, i on the right and bottom edges, n in the corner.
inline IntMatrix bc_fixing_table(int n) {
  const auto un = static_cast<std::size_t>(n);
  IntMatrix t(un, un);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      std::int64_t v = 2 * std::min(i, j);
      if (i == n || j == n) v = std::min(i, j);
      t(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) = v;
    }
  return t;
}

inline std::int64_t octahedral(int n) { return static_cast<std::int64_t>(n) * (2LL * n * n + 1) / 3; }

namespace detail {

// Least type-A image matrix of size m with entry (i,j) >= v (one-based),
// found among the bigrassmannian permutations and checked to be least.
class TypeAMinima {
 public:
  explicit TypeAMinima(int size) : size_(size) {
    for (const auto& p : bigrassmannians(size)) wts_.push_back(wt_perm(p));
  }

  // Empty when no matrix reaches v at (i,j).
  std::optional<IntMatrix> least(std::size_t i, std::size_t j, std::int64_t v) const {
    const std::size_t m = static_cast<std::size_t>(size_ - 1);
    if (v <= 0) return IntMatrix(m, m);
    std::optional<IntMatrix> acc;
    for (const auto& w : wts_)
      if (w(i, j) >= v) acc = acc ? entrywise_min(*acc, w) : w;
    if (acc && (*acc)(i, j) < v) throw InvariantError("entrywise minimum lost the fixed entry");
    return acc;
  }

 private:
  int size_;
  std::vector<IntMatrix> wts_;
};

}  // namespace detail

struct FixedEntryDatum {
  int i = 0, j = 0;
  std::int64_t v = 0;
  std::vector<std::size_t> minimal_elements;  // indices into BaseReport::elements
  std::vector<IntMatrix> minimal_cs_asm_folds;
  // Unfold, fall in type A, refold: one result per realizable split, most
  // inequitable first.
  std::vector<std::pair<std::pair<std::int64_t, std::int64_t>, IntMatrix>> candidates;
  bool candidate_matches = false;         // first candidate is a minimal element
  bool candidate_matches_cs_asm = false;  // first candidate is a minimal CS-ASM fold
};

struct BaseReport {
  int rank = 0;
  std::vector<SignedPermutation> elements;
  std::vector<IntMatrix> matrices;  // type C, FTilde
  std::vector<std::size_t> bigrassmannian_ids;
  std::vector<std::size_t> base_ids;
  std::vector<FixedEntryDatum> data;
  std::vector<std::size_t> collisions;  // indices into data with several minima
  IntMatrix fixing_table;
  IntMatrix fixing_table_observed;
  std::optional<std::size_t> dm_size;
  std::size_t cs_asm_count = 0;
  std::size_t cs_asm_fold_count = 0;
  // Conjecture: every base element is the least element for some datum.
  bool conjecture_holds = false;
  std::vector<std::size_t> base_never_least;
  std::vector<std::size_t> minimal_not_in_base;
};

// Minimal elements of {x : m_x(i,j) >= v} in a poset over the matrices ms.
inline std::vector<std::size_t> minimal_with_entry(const std::vector<IntMatrix>& ms, const FinitePoset& order,
                                                   std::size_t i, std::size_t j, std::int64_t v) {
  Bits q(ms.size());
  for (std::size_t k = 0; k < ms.size(); ++k)
    if (ms[k](i, j) >= v) q.set(k);
  std::vector<std::size_t> out;
  for (std::size_t a = q.find_first(); a != Bits::npos; a = q.find_next(a))
    if ((order.down(a) & q).count() == 1) out.push_back(a);
  return out;
}

inline std::size_t dm_completion_size(int n) {
  if (n < 1 || n > 4) throw InputError("dm_completion_size supports ranks 1..4");
  return dm_cuts(signed_bruhat_poset(all_signed_permutations(n))).size();
}

namespace detail {

// Unfolds entry (i,j) >= v of a type C, FTilde matrix into lower bounds on
// four entries of a centrally symmetric type-A matrix, falls down in type A,
// joins and refolds. Splits are tried from the most inequitable; the first
// whose refold keeps entry (i,j) at exactly v are kept.
inline std::vector<std::pair<std::pair<std::int64_t, std::int64_t>, IntMatrix>> unfold_fall_refold(
    const TypeAMinima& type_a, int n, std::size_t i, std::size_t j, std::int64_t v) {
  const auto un = static_cast<std::size_t>(n);
  const std::size_t mid = un - 1, last = 2 * un - 2;
  std::vector<std::pair<std::int64_t, std::int64_t>> splits;
  if (i == mid) {
    if (v % 2 == 0) splits.emplace_back(v / 2, v / 2);
  } else {
    for (std::int64_t a = v; 2 * a >= v; --a) splits.emplace_back(a, v - a);
  }
  std::vector<std::pair<std::pair<std::int64_t, std::int64_t>, IntMatrix>> out;
  for (const auto& split : splits) {
    const auto [a, b] = split;
    std::vector<std::optional<IntMatrix>> parts{type_a.least(i, j, a), type_a.least(last - i, last - j, a)};
    if (i != mid) {
      parts.push_back(type_a.least(last - i, j, b));
      parts.push_back(type_a.least(i, last - j, b));
    }
    if (std::any_of(parts.begin(), parts.end(), [](const auto& x) { return !x; })) continue;
    IntMatrix join = *parts[0];
    for (const auto& x : parts) join = entrywise_max(join, *x);
    if (image_violation(join)) continue;
    IntMatrix folded = fold_wt(join, Family::C, FoldConvention::FTilde).m;
    if (folded(i, j) != v) continue;
    out.emplace_back(split, std::move(folded));
  }
  return out;
}

}  // namespace detail

inline BaseReport base_report(int n, bool include_dm_size = true) {
  if (n < 1 || n > 4) throw InputError("base_report supports ranks 1..4");
  BaseReport r;
  r.rank = n;
  r.elements = all_signed_permutations(n);
  for (const auto& s : r.elements) r.matrices.push_back(wt_bc(s, Family::C).m);
  for (std::size_t k = 0; k < r.elements.size(); ++k)
    if (is_bigrassmannian(r.elements[k])) r.bigrassmannian_ids.push_back(k);
  const FinitePoset bruhat = signed_bruhat_poset(r.elements);
  r.base_ids = dm_join_irreducibles(bruhat);
  if (include_dm_size) r.dm_size = dm_cuts(bruhat).size();
  r.fixing_table = bc_fixing_table(n);
  r.fixing_table_observed = bc_fixing_table_observed(n);

  const FinitePoset wald = matrix_poset(r.matrices);
  const CsAsmFold cs = cs_asm_fold(n);
  r.cs_asm_count = cs.asms.size();
  r.cs_asm_fold_count = cs.folded.size();
  const detail::TypeAMinima type_a(2 * n);
  const auto un = static_cast<std::size_t>(n);
  std::set<std::size_t> all_minima, least;
  for (std::size_t i = 0; i < un; ++i)
    for (std::size_t j = 0; j < un; ++j) {
      std::set<std::int64_t> values;
      for (const auto& m : r.matrices)
        if (m(i, j) > 0) values.insert(m(i, j));
      for (std::int64_t v : values) {
        FixedEntryDatum d;
        d.i = static_cast<int>(i) + 1;
        d.j = static_cast<int>(j) + 1;
        d.v = v;
        d.minimal_elements = minimal_with_entry(r.matrices, wald, i, j, v);
        for (auto k : minimal_with_entry(cs.folded, cs.poset, i, j, v)) d.minimal_cs_asm_folds.push_back(cs.folded[k]);
        d.candidates = detail::unfold_fall_refold(type_a, n, i, j, v);
        if (!d.candidates.empty()) {
          const IntMatrix& first = d.candidates.front().second;
          for (auto k : d.minimal_elements)
            if (r.matrices[k] == first) d.candidate_matches = true;
          for (const auto& m : d.minimal_cs_asm_folds)
            if (m == first) d.candidate_matches_cs_asm = true;
        }
        if (d.minimal_elements.size() > 1) r.collisions.push_back(r.data.size());
        all_minima.insert(d.minimal_elements.begin(), d.minimal_elements.end());
        if (d.minimal_elements.size() == 1) least.insert(d.minimal_elements.front());
        r.data.push_back(std::move(d));
      }
    }
  const std::set<std::size_t> base(r.base_ids.begin(), r.base_ids.end());
  std::set_difference(all_minima.begin(), all_minima.end(), base.begin(), base.end(),
                      std::back_inserter(r.minimal_not_in_base));
  std::set_difference(base.begin(), base.end(), least.begin(), least.end(), std::back_inserter(r.base_never_least));
  r.conjecture_holds = r.base_never_least.empty();
  return r;
}

}  // namespace wald
