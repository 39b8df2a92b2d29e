#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "waldspurger/error.hpp"
#include "waldspurger/matrix.hpp"
#include "waldspurger/permutation.hpp"
#include "waldspurger/root_system.hpp"
#include "waldspurger/um_vectors.hpp"

namespace wald {

inline bool is_sum_symmetric(const IntMatrix& m) {
  if (!m.is_square()) return false;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::int64_t r = 0, c = 0;
    for (std::size_t k = 0; k < m.cols(); ++k) {
      r += m(i, k);
      c += m(k, i);
    }
    if (r != c) return false;
  }
  return true;
}

// First violated ASM axiom, or nullopt for a valid ASM.
inline std::optional<std::string> asm_violation(const IntMatrix& m) {
  if (!m.is_square() || m.rows() == 0) return "not a nonempty square matrix";
  const std::size_t n = m.rows();
  auto check_line = [&](bool is_row, std::size_t k) -> std::optional<std::string> {
    const std::string name = (is_row ? "row " : "column ") + std::to_string(k + 1);
    std::int64_t partial = 0;
    for (std::size_t t = 0; t < n; ++t) {
      const std::int64_t x = is_row ? m(k, t) : m(t, k);
      if (x < -1 || x > 1) return name + " has entry outside {-1,0,1}";
      partial += x;
      if (partial < 0 || partial > 1) return name + " does not alternate in sign";
    }
    if (partial != 1) return name + " does not sum to 1";
    return std::nullopt;
  };
  for (std::size_t k = 0; k < n; ++k) {
    if (auto r = check_line(true, k)) return r;
    if (auto c = check_line(false, k)) return c;
  }
  return std::nullopt;
}

inline bool is_asm(const IntMatrix& m) { return !asm_violation(m).has_value(); }

// WT(M)_{ij} = sum_{a<=i, b>j} M_ab for i <= j and sum_{a>i, b<=j} M_ab for
// i >= j (one-based, 1 <= i,j <= n-1).
inline IntMatrix wt_general(const IntMatrix& m) {
  if (!m.is_square() || m.rows() < 1) throw InputError("wt_general needs a nonempty square matrix");
  const std::size_t n = m.rows();
  // s(i,j) = sum of the top-left i x j block.
  IntMatrix s(n + 1, n + 1);
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j)
      s(i, j) = m(i - 1, j - 1) + s(i - 1, j) + s(i, j - 1) - s(i - 1, j - 1);
  IntMatrix w(n - 1, n - 1);
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = 1; j < n; ++j) {
      const std::int64_t upper = s(i, n) - s(i, j);
      const std::int64_t lower = s(n, j) - s(i, j);
      if (i < j) w(i - 1, j - 1) = upper;
      else if (i > j) w(i - 1, j - 1) = lower;
      else if (upper != lower) {
        throw InputError("matrix is not sum-symmetric: diagonal entry " + std::to_string(i) +
                         " would be over-determined (" + std::to_string(upper) + " vs " +
                         std::to_string(lower) + ")");
      } else {
        w(i - 1, i - 1) = upper;
      }
    }
  // The remaining sum-symmetry condition (index n) follows from the others.
  return w;
}

inline IntMatrix wt_perm(const Permutation& p) {
  if (p.size() < 2) throw InputError("wt_perm needs n >= 2");
  return wt_general(p.matrix());
}

// Row/column constraint violated by a candidate image matrix: every row i and
// column i must be UM with its maximum at i.
inline std::optional<std::string> image_violation(const IntMatrix& w) {
  if (!w.is_square()) return "not square";
  for (std::size_t i = 0; i < w.rows(); ++i) {
    const auto row = w.row(i);
    if (!is_um_at(IntVector(row.begin(), row.end()), i))
      return "row " + std::to_string(i + 1) + " is not UM with maximum on the diagonal";
    if (!is_um_at(w.column(i), i))
      return "column " + std::to_string(i + 1) + " is not UM with maximum on the diagonal";
  }
  return std::nullopt;
}

// The ASM with WT(M) = W. Since the ASMs lie in the affine span of the
// permutation matrices, M = I - A W A^T.
inline IntMatrix wt_inverse_asm(const IntMatrix& w) {
  if (auto v = image_violation(w)) throw InputError("not an ASM Waldspurger matrix: " + *v);
  const std::size_t n = w.rows() + 1;
  const IntMatrix a = detail::simple_root_embedding(Family::A, static_cast<int>(n - 1));
  IntMatrix m = IntMatrix::identity(n) - a * w * a.transpose();
  if (auto v = asm_violation(m)) {
    throw InputError("not an ASM Waldspurger matrix: reconstruction fails, " + *v);
  }
  if (!(wt_general(m) == w)) throw InvariantError("wt_inverse_asm round trip failed");
  return m;
}

// (Id - R_g) C^{-1} in simple-root coordinates of type B or C.
inline IntMatrix wt_phi(const SignedPermutation& s, Family family) {
  const RatMatrix r = signed_perm_to_root_matrix(s, family);
  const RootSystemData data = cartan_data(family, s.rank());
  const RatMatrix out = (RatMatrix::identity(r.rows()) - r) * data.cartan_inverse;
  if (!is_integral(out)) {
    throw InvariantError("WT_" + to_string(family) + "(" + s.to_string() + ") is not integral: " +
                         to_string(out));
  }
  return to_integer(out);
}

inline std::int64_t entropy(const Permutation& p) {
  std::int64_t e = 0;
  for (int i = 1; i <= p.size(); ++i) {
    const std::int64_t d = p(i) - i;
    e += d * d;
  }
  return e;
}

inline std::int64_t height(const IntMatrix& w) { return entry_sum(w); }

}  // namespace wald
