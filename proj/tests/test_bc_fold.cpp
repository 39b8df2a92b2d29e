#include <gtest/gtest.h>

#include <set>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "waldspurger/bc_fold.hpp"

using namespace wald;
using namespace fixtures;

namespace {

IntMatrix column_fold(const SignedPermutation& s) { return wt_bc(s, Family::B, FoldConvention::F).m; }

// Positional descents of the window in the order 1 < ... < n < -n < ... < -1:
// i < n when w(i) > w(i+1), n when w(n) < 0. Products compose left to
// right, so these are the right descents of the inverse.
std::vector<int> window_descents(const SignedPermutation& s) {
  auto key = [&](int v) { return v > 0 ? v : 2 * s.rank() + 1 + v; };
  std::vector<int> out;
  for (int i = 1; i < s.rank(); ++i)
    if (key(s(i)) > key(s(i + 1))) out.push_back(i);
  if (s(s.rank()) < 0) out.push_back(s.rank());
  return out;
}

}  // namespace

TEST(FoldWt, PaperFixturesInOrder) {
  for (std::size_t k = 0; k < kTypeA.size(); ++k) {
    EXPECT_EQ(fold_wt(kTypeA[k], Family::C, FoldConvention::F).m, kTypeC[k]) << k;
    EXPECT_EQ(fold_wt(kTypeA[k], Family::B, FoldConvention::F).m, kTypeB[k]) << k;
  }
  EXPECT_EQ(fold_wt(wt_perm(Permutation::parse("3412")), Family::C, FoldConvention::F).m, (IntMatrix{{1, 2}, {1, 2}}));
  EXPECT_EQ(fold_wt(IntMatrix(5, 5), Family::C, FoldConvention::FTilde).m, IntMatrix(3, 3));
}

TEST(FoldWt, FixturesAreTheB2Images) {
  std::set<IntMatrix> images, fixtures(kTypeA.begin(), kTypeA.end());
  for (const auto& s : all_signed_permutations(2)) images.insert(wt_perm(unfold_perm(s)));
  EXPECT_EQ(images, fixtures);
}

TEST(FoldWt, Rejections) {
  EXPECT_THROW(fold_wt(IntMatrix{{1, 0, 0}, {0, 0, 0}, {0, 0, 0}}, Family::C, FoldConvention::F), InputError);
  EXPECT_THROW(fold_wt(IntMatrix(2, 2), Family::B, FoldConvention::F), InputError);
  EXPECT_THROW(fold_wt(IntMatrix(3, 3), Family::A, FoldConvention::F), InputError);
  EXPECT_THROW(parse_convention("G"), InputError);
}

TEST(FoldPerm, HomomorphismOnS6) {
  std::vector<Permutation> cs;
  for (const auto& p : all_permutations(6))
    if (is_centrally_symmetric(p)) cs.push_back(p);
  ASSERT_EQ(cs.size(), 48u);
  for (const auto& p : cs)
    for (const auto& q : cs) EXPECT_EQ(fold_perm(p * q), fold_perm(p) * fold_perm(q));
}

TEST(WtBc, CommutingDiagram) {
  for (int n = 1; n <= 3; ++n)
    for (Family f : {Family::B, Family::C})
      for (const auto& s : all_signed_permutations(n)) {
        const BCMatrix m = wt_bc(s, f, FoldConvention::F);
        if (n > 1) {
          EXPECT_EQ(m.m, fold_by_index(oracle::wt_by_stars(unfold_perm(s).matrix()), f == Family::C)) << s.to_string();
        }
        EXPECT_NO_THROW(wt_bc(s, f, FoldConvention::FTilde));
      }
  EXPECT_EQ(wt_bc(SignedPermutation::identity(3), Family::C).m, IntMatrix(3, 3));
}

TEST(WtBc, TransposeDuality) {
  for (const auto& s : all_signed_permutations(3))
    for (auto c : {FoldConvention::F, FoldConvention::FTilde})
      EXPECT_EQ(wt_bc(s.transpose(), Family::C, c).m, wt_bc(s, Family::B, c).m.transpose()) << s.to_string();
}

TEST(WtBc, LongestWord) {
  for (int n = 2; n <= 4; ++n) {
    const IntMatrix m = wt_bc(SignedPermutation::longest(n), Family::C).m;
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        EXPECT_EQ(m(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)), 2 * std::min(i, j));
  }
}

TEST(UmBc, Counts) {
  std::int64_t expected = 2;
  for (int n = 1; n <= 7; ++n, expected *= 3) EXPECT_EQ(static_cast<std::int64_t>(enumerate_um_bc(n).size()), expected);
  EXPECT_EQ(enumerate_um_bc(1), (std::vector<IntVector>{{0}, {2}}));
  EXPECT_THROW(enumerate_um_bc(0), InputError);
}

TEST(UmBc, ExactlyTheOccurringVectors) {
  for (int n = 1; n <= 4; ++n) {
    std::set<IntVector> seen;
    for (const auto& s : all_signed_permutations(n))
      for (Family f : {Family::B, Family::C}) {
        const IntMatrix m = wt_bc(s, f).m;
        for (std::size_t j = 0; j < m.cols(); ++j) {
          seen.insert(m.column(j));
          seen.insert(IntVector(m.row(j).begin(), m.row(j).end()));
        }
      }
    const auto e = enumerate_um_bc(n);
    EXPECT_EQ(std::set<IntVector>(e.begin(), e.end()), seen) << n;
    for (const auto& v : e) EXPECT_TRUE(is_um_bc(v));
  }
  // The inequalities alone admit vectors that never occur.
  EXPECT_TRUE(is_um_bc({1, 2, 4}));
  EXPECT_TRUE(is_um_bc({2, 1, 0}));
  const auto e3 = enumerate_um_bc(3);
  EXPECT_FALSE(std::binary_search(e3.begin(), e3.end(), IntVector{1, 2, 4}));
  EXPECT_FALSE(std::binary_search(e3.begin(), e3.end(), IntVector{2, 1, 0}));
}

TEST(RankCensus, B2) {
  for (Family f : {Family::B, Family::C}) EXPECT_EQ(rank_census(2, f), (std::vector<std::size_t>{1, 4, 3}));
}

TEST(SignedBigrassmannian, RootCriterionMatchesWindow) {
  const std::vector<std::size_t> counts{1, 6, 19, 45};
  for (int n = 1; n <= 4; ++n) {
    std::size_t c = 0;
    for (const auto& s : all_signed_permutations(n)) {
      EXPECT_EQ(right_descents(s), window_descents(s.inverse()));
      EXPECT_EQ(left_descents(s), window_descents(s));
      if (window_descents(s).size() == 1 && window_descents(s.inverse()).size() == 1) ++c;
    }
    EXPECT_EQ(c, counts[static_cast<std::size_t>(n - 1)]);
    EXPECT_EQ(bigrassmannians_signed(n).size(), c);
  }
}

TEST(Orders, CoincideInRanksTwoAndThree) {
  for (int n = 2; n <= 3; ++n)
    for (Family f : {Family::B, Family::C}) {
      const auto r = compare_orders(n, f);
      EXPECT_TRUE(r.identical);
      EXPECT_TRUE(r.extra_covers.empty());
      EXPECT_TRUE(r.missing_covers.empty());
    }
}

TEST(Orders, RankFourExtraCovers) {
  const auto r = compare_orders(4, Family::C);
  EXPECT_FALSE(r.identical);
  EXPECT_TRUE(r.extends_bruhat);
  EXPECT_EQ(r.bigrassmannian_ids.size(), 45u);
  std::set<std::pair<IntMatrix, IntMatrix>> got;
  for (const auto& c : r.extra_bigrassmannian_covers)
    got.insert({column_fold(r.elements[c.lower]), column_fold(r.elements[c.upper])});
  const std::set<std::pair<IntMatrix, IntMatrix>> want{
      {kLeft, IntMatrix{{2, 2, 2, 1}, {2, 2, 2, 1}, {2, 2, 2, 1}, {2, 2, 2, 1}}},
      {kRight, IntMatrix{{1, 1, 1, 0}, {1, 2, 3, 1}, {1, 3, 5, 2}, {0, 2, 4, 2}}},
  };
  EXPECT_EQ(r.extra_bigrassmannian_covers.size(), 2u);
  EXPECT_EQ(got, want);
  // Type B gives the same comparison.
  EXPECT_EQ(compare_orders(4, Family::B).extra_bigrassmannian_covers.size(), 2u);
}

TEST(CsAsm, Counts) {
  const std::vector<std::size_t> counts{2, 10, 140, 5544};
  for (int n = 1; n <= 4; ++n) EXPECT_EQ(enumerate_cs_asms(n).size(), counts[static_cast<std::size_t>(n - 1)]);
  for (int n = 1; n <= 3; ++n) {
    std::vector<IntMatrix> brute;
    for (const auto& a : oracle::asms_by_rows(2 * n))
      if (is_centrally_symmetric(a)) brute.push_back(a);
    std::sort(brute.begin(), brute.end());
    EXPECT_EQ(enumerate_cs_asms(n), brute);
  }
}

TEST(CsAsm, FoldIsCompletionInLowRank) {
  for (int n = 1; n <= 3; ++n) {
    const auto cs = cs_asm_fold(n);
    const auto elems = all_signed_permutations(n);
    std::vector<std::size_t> inclusion;
    for (const auto& s : elems) inclusion.push_back(find_matrix(cs.folded, wt_bc(s, Family::C).m));
    EXPECT_EQ(matches_dm_completion(signed_bruhat_poset(elems), cs.poset, inclusion), std::nullopt) << n;
  }
  const auto cs2 = cs_asm_fold(2, Family::C, FoldConvention::F);
  EXPECT_EQ(cs2.folded.size(), 10u);
  std::set<IntMatrix> extra;
  for (const auto& a : cs2.asms)
    if (!permutation_of_matrix(a)) extra.insert(wt_general(a));
  EXPECT_EQ(extra, (std::set<IntMatrix>{IntMatrix{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, IntMatrix{{1, 1, 0}, {1, 1, 1}, {0, 1, 1}}}));
}

TEST(CsAsm, RankFourFolds) {
  const auto cs = cs_asm_fold(4);
  EXPECT_EQ(cs.asms.size(), 5544u);
  EXPECT_EQ(cs.folded.size(), 4664u);
  EXPECT_EQ(cs.group_ids.size(), 384u);
  // The poset joins agree with entrywise maxima whenever those are folds.
  for (std::size_t a = 0; a < cs.folded.size(); a += 37)
    for (std::size_t b = 0; b < cs.folded.size(); b += 41) {
      const IntMatrix mx = entrywise_max(cs.folded[a], cs.folded[b]);
      if (!std::binary_search(cs.folded.begin(), cs.folded.end(), mx)) continue;
      const auto j = cs.poset.join(a, b);
      ASSERT_TRUE(j);
      EXPECT_EQ(cs.folded[*j], mx);
    }
}

TEST(BaseReport, FixingTables) {
  EXPECT_EQ(bc_fixing_table(2), (IntMatrix{{2, 1}, {1, 2}}));
  for (int n = 1; n <= 4; ++n) {
    EXPECT_EQ(bc_fixing_table_observed(n), bc_fixing_table(n));
    EXPECT_EQ(entry_sum(bc_fixing_table(n)), octahedral(n));
  }
  EXPECT_EQ(octahedral(3), 19);
  EXPECT_EQ(octahedral(4), 44);
}

TEST(BaseReport, LowRanks) {
  for (int n = 1; n <= 3; ++n) {
    const auto r = base_report(n);
    EXPECT_EQ(r.bigrassmannian_ids, r.base_ids);
    EXPECT_TRUE(r.collisions.empty());
    EXPECT_TRUE(r.conjecture_holds);
    EXPECT_EQ(static_cast<std::int64_t>(r.data.size()), octahedral(n));
    ASSERT_TRUE(r.dm_size);
    EXPECT_EQ(*r.dm_size, r.cs_asm_fold_count);
  }
  EXPECT_EQ(*base_report(2).dm_size, 10u);
}

TEST(BaseReport, RankFour) {
  const auto r = base_report(4);
  EXPECT_EQ(r.bigrassmannian_ids.size(), 45u);
  EXPECT_EQ(r.base_ids.size(), 44u);
  ASSERT_EQ(r.collisions.size(), 1u);
  const auto& d = r.data[r.collisions.front()];
  EXPECT_EQ(d.i, 2);
  EXPECT_EQ(d.j, 2);
  EXPECT_EQ(d.v, 2);
  std::set<IntMatrix> pair;
  for (auto k : d.minimal_elements) pair.insert(column_fold(r.elements[k]));
  EXPECT_EQ(pair, (std::set<IntMatrix>{kLeft, kRight}));
  bool left_in_base = false;
  for (auto k : r.base_ids) left_in_base = left_in_base || column_fold(r.elements[k]) == kLeft;
  EXPECT_TRUE(left_in_base);
  ASSERT_EQ(r.minimal_not_in_base.size(), 1u);
  EXPECT_EQ(r.elements[r.minimal_not_in_base.front()].to_string(), "3,-2,1,4");
  EXPECT_EQ(r.dm_size, std::optional<std::size_t>(4824));

  // The fast test agrees with the join-irreducibles of the full completion.
  const auto dm = dm_completion(signed_bruhat_poset(r.elements));
  const auto ji = dm.lattice.join_irreducibles();
  std::vector<std::size_t> from_lattice;
  for (std::size_t x = 0; x < r.elements.size(); ++x) {
    if (std::find(ji.begin(), ji.end(), dm.embedding[x]) != ji.end()) from_lattice.push_back(x);
  }
  EXPECT_EQ(from_lattice, r.base_ids);
}

TEST(BruhatB, SubwordOracleRankFour) {
  const auto rel = oracle::signed_bruhat_by_subwords(4);
  const auto elems = all_signed_permutations(4);
  const FinitePoset p = signed_bruhat_poset(elems);
  for (std::size_t a = 0; a < elems.size(); ++a)
    for (std::size_t b = 0; b < elems.size(); ++b)
      ASSERT_EQ(p.leq(a, b), rel.count({elems[a].window(), elems[b].window()}) == 1);
}
