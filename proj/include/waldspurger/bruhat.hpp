#pragma once

#include <vector>

#include "waldspurger/error.hpp"
#include "waldspurger/matrix.hpp"
#include "waldspurger/permutation.hpp"

namespace wald {

// r(i,j) = #{a <= i : u(a) <= j} for 1 <= i,j <= n, stored zero-based.
inline IntMatrix rank_matrix(const Permutation& u) {
  const auto n = static_cast<std::size_t>(u.size());
  IntMatrix r(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::int64_t above = i ? r(i - 1, j) : 0;
      r(i, j) = above + (u(static_cast<int>(i) + 1) <= static_cast<int>(j) + 1 ? 1 : 0);
    }
  return r;
}

// Strong Bruhat order by rank-matrix dominance: u <= v iff r_u >= r_v.
inline bool bruhat_leq(const Permutation& u, const Permutation& v) {
  if (u.size() != v.size()) throw InputError("bruhat_leq: size mismatch");
  const IntMatrix ru = rank_matrix(u);
  const IntMatrix rv = rank_matrix(v);
  return componentwise_leq(rv, ru);
}

// Bruhat order on B_n, induced from S_2n through the centrally symmetric
// embedding.
inline bool bruhat_leq_signed(const SignedPermutation& u, const SignedPermutation& v) {
  if (u.rank() != v.rank()) throw InputError("bruhat_leq_signed: rank mismatch");
  return bruhat_leq(unfold_perm(u), unfold_perm(v));
}

}  // namespace wald
