#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "waldspurger/transform.hpp"

using namespace wald;

namespace {

const IntMatrix kSixAsm{{0, 0, 1, 0, 0, 0}, {0, 1, -1, 1, 0, 0}, {0, 0, 0, 0, 1, 0},
                         {0, 0, 1, 0, -1, 1}, {1, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 1, 0}};

}  // namespace

TEST(WtPerm, Anchors) {
  EXPECT_EQ(wt_perm(Permutation::identity(4)), IntMatrix(3, 3));
  EXPECT_EQ(wt_perm(Permutation::parse("4321")), (IntMatrix{{1, 1, 1}, {1, 2, 1}, {1, 1, 1}}));
  const IntMatrix w = wt_perm(Permutation::parse("3412"));
  EXPECT_EQ(w.column(0), (IntVector{1, 1, 0}));
  EXPECT_EQ(w.column(1), (IntVector{1, 2, 1}));
  EXPECT_EQ(w.column(2), (IntVector{0, 1, 1}));
  EXPECT_EQ(wt_perm(Permutation::parse("231")), (IntMatrix{{1, 0}, {1, 1}}));
  EXPECT_EQ(wt_perm(Permutation::parse("312")), (IntMatrix{{1, 1}, {0, 1}}));
}

TEST(WtPerm, DefiningIdentity) {
  for (int n = 2; n <= 6; ++n) {
    const IntMatrix c = cartan_data(Family::A, n - 1).cartan;
    const IntMatrix id = IntMatrix::identity(static_cast<std::size_t>(n - 1));
    for (const auto& p : all_permutations(n)) {
      const IntMatrix d = wt_perm(p);
      EXPECT_EQ(id - perm_to_root_matrix(p), d * c);
      EXPECT_EQ(d, oracle::wt_by_stars(p.matrix()));
      EXPECT_EQ(2 * height(d), entropy(p));
    }
  }
}

TEST(WtPerm, TransposeIsInverse) {
  for (const auto& p : all_permutations(5)) EXPECT_EQ(wt_perm(p.inverse()), wt_perm(p).transpose());
}

TEST(Entropy, Examples) {
  EXPECT_EQ(entropy(Permutation::identity(5)), 0);
  EXPECT_EQ(entropy(Permutation::parse("4321")), 20);
  EXPECT_EQ(height(wt_perm(Permutation::parse("4321"))), 10);
  EXPECT_EQ(entropy(Permutation::parse("231")), 6);
  EXPECT_EQ(height(wt_perm(Permutation::parse("231"))), 3);
}

TEST(WtGeneral, SixBySixAsm) {
  ASSERT_TRUE(is_asm(kSixAsm));
  const IntMatrix expected{{1, 1, 0, 0, 0}, {1, 1, 1, 0, 0}, {1, 1, 2, 1, 0}, {1, 1, 1, 1, 1}, {0, 0, 0, 0, 1}};
  EXPECT_EQ(wt_general(kSixAsm), expected);
  EXPECT_EQ(wt_inverse_asm(expected), kSixAsm);
  EXPECT_EQ(wt_general(IntMatrix(4, 4)), IntMatrix(3, 3));
}

TEST(WtGeneral, RejectsNonSumSymmetric) {
  IntMatrix m{{0, 1}, {0, 0}};
  try {
    wt_general(m);
    FAIL();
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("over-determined"), std::string::npos);
  }
}

TEST(WtGeneral, LinearWithDiagonalKernel) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> entry(-5, 5);
  auto random_ss = [&](std::size_t n) {
    // Sum-symmetric: antisymmetric-free construction from cycles; a random
    // matrix plus its transpose plus a diagonal.
    IntMatrix x(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) x(i, j) = entry(rng);
    return x + x.transpose();
  };
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + static_cast<std::size_t>(trial % 5);
    const IntMatrix m = random_ss(n), k = random_ss(n);
    ASSERT_TRUE(is_sum_symmetric(m));
    EXPECT_EQ(wt_general(m + k), wt_general(m) + wt_general(k));
    EXPECT_EQ(wt_general(m), oracle::wt_by_stars(m));
    IntMatrix d(n, n);
    for (std::size_t i = 0; i < n; ++i) d(i, i) = entry(rng);
    EXPECT_EQ(wt_general(d), IntMatrix(n - 1, n - 1));
  }
}

// Surjectivity witness: any target is hit by a sum-symmetric matrix whose
// extra mass sits in the first row, first column, and diagonal.
TEST(WtGeneral, Surjective) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> entry(-4, 4);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t m = 1 + static_cast<std::size_t>(trial % 5);
    IntMatrix target(m, m);
    for (auto i = 0u; i < m; ++i)
      for (auto j = 0u; j < m; ++j) target(i, j) = entry(rng);
    // I - A W A^T is sum-symmetric for any W and maps back to W.
    const IntMatrix a = detail::simple_root_embedding(Family::A, static_cast<int>(m));
    const IntMatrix pre = IntMatrix::identity(m + 1) - a * target * a.transpose();
    ASSERT_TRUE(is_sum_symmetric(pre));
    EXPECT_EQ(wt_general(pre), target);
  }
}

TEST(WtInverse, Examples) {
  EXPECT_EQ(wt_inverse_asm(IntMatrix(3, 3)), IntMatrix::identity(4));
  EXPECT_EQ(wt_inverse_asm(IntMatrix{{1, 1, 1}, {1, 2, 1}, {1, 1, 1}}), Permutation::parse("4321").matrix());
  EXPECT_THROW(wt_inverse_asm(IntMatrix{{2, 0}, {0, 0}}), InputError);
  try {
    wt_inverse_asm(IntMatrix{{1, 0}, {0, 2}});
    FAIL();
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("row 2"), std::string::npos);
  }
}

TEST(Asm, Validation) {
  EXPECT_TRUE(is_asm(IntMatrix::identity(3)));
  EXPECT_EQ(asm_violation(IntMatrix{{1, 1}, {0, 0}}).value(), "row 1 does not alternate in sign");
  EXPECT_EQ(asm_violation(IntMatrix{{1, 0}, {1, 0}}).value(), "column 1 does not alternate in sign");
}

TEST(WtPhi, Examples) {
  EXPECT_EQ(wt_phi(SignedPermutation::identity(2), Family::B), IntMatrix(2, 2));
  EXPECT_EQ(wt_phi(SignedPermutation::longest(2), Family::C), (IntMatrix{{2, 2}, {1, 2}}));
  EXPECT_EQ(wt_phi(SignedPermutation::parse("2,1"), Family::B), (IntMatrix{{1, 0}, {0, 0}}));
  EXPECT_EQ(wt_phi(SignedPermutation::parse("2,1"), Family::C), (IntMatrix{{1, 0}, {0, 0}}));
}

TEST(WtPhi, TransposeDuality) {
  for (const auto& s : all_signed_permutations(3))
    EXPECT_EQ(wt_phi(s.transpose(), Family::C), wt_phi(s, Family::B).transpose());
}
