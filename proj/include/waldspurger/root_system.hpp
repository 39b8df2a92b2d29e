#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "waldspurger/error.hpp"
#include "waldspurger/matrix.hpp"
#include "waldspurger/permutation.hpp"

namespace wald {

enum class Family { A, B, C };

inline std::string to_string(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
  }
  return "?";
}

inline Family parse_family(std::string_view text) {
  if (text == "A") return Family::A;
  if (text == "B") return Family::B;
  if (text == "C") return Family::C;
  throw InputError("unsupported root system family '" + std::string(text) + "'");
}

struct RootSystemData {
  Family family = Family::A;
  int rank = 0;
  IntMatrix cartan;          // cartan(i,j) = 2 (a_i, a_j) / (a_i, a_i)
  RatMatrix cartan_inverse;  // columns: fundamental weights in root coordinates
  // Simple roots as columns in standard coordinates: (rank+1) x rank for A,
  // rank x rank for B and C.
  IntMatrix embedding;
  IntMatrix gram;            // embedding^T embedding
  IntVector theta;           // highest root in root coordinates
  IntVector rho;             // sum of the positive roots in root coordinates
  IntVector rho_pairing;     // gram * rho, so that (v, rho) = v . rho_pairing
};

namespace detail {

inline IntMatrix simple_root_embedding(Family family, int rank) {
  const auto r = static_cast<std::size_t>(rank);
  if (family == Family::A) {
    IntMatrix a(r + 1, r);
    for (std::size_t j = 0; j < r; ++j) {
      a(j, j) = 1;
      a(j + 1, j) = -1;
    }
    return a;
  }
  IntMatrix e(r, r);
  for (std::size_t j = 0; j < r; ++j) {
    e(j, j) = 1;
    if (j + 1 < r) e(j + 1, j) = -1;
  }
  if (family == Family::C) e(r - 1, r - 1) = 2;
  return e;
}

// Positive roots in standard coordinates.
inline std::vector<IntVector> positive_roots_standard(Family family, int rank) {
  const int dim = family == Family::A ? rank + 1 : rank;
  auto unit = [dim](int i) {
    IntVector v(static_cast<std::size_t>(dim), 0);
    v[static_cast<std::size_t>(i)] = 1;
    return v;
  };
  auto add = [](IntVector a, const IntVector& b, int s) {
    for (std::size_t k = 0; k < a.size(); ++k) a[k] += s * b[k];
    return a;
  };
  std::vector<IntVector> roots;
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j) {
      roots.push_back(add(unit(i), unit(j), -1));
      if (family != Family::A) roots.push_back(add(unit(i), unit(j), 1));
    }
  if (family == Family::B)
    for (int i = 0; i < dim; ++i) roots.push_back(unit(i));
  if (family == Family::C)
    for (int i = 0; i < dim; ++i) roots.push_back(add(unit(i), unit(i), 1));
  return roots;
}

}  // namespace detail

// Simple-root coordinates of every positive root.
inline std::vector<IntVector> positive_roots(Family family, int rank) {
  const IntMatrix e = detail::simple_root_embedding(family, rank);
  // Left inverse (E^T E)^{-1} E^T maps standard coordinates back to root ones.
  const RatMatrix et = to_rational(e.transpose());
  const RatMatrix left = inverse(et * to_rational(e)) * et;
  std::vector<IntVector> out;
  for (const auto& v : detail::positive_roots_standard(family, rank)) {
    RatMatrix col(v.size(), 1);
    for (std::size_t k = 0; k < v.size(); ++k) col(k, 0) = v[k];
    const IntMatrix c = to_integer(left * col);
    out.push_back(c.column(0));
  }
  return out;
}

inline RootSystemData cartan_data(Family family, int rank) {
  if (rank < 1) throw InputError("root system rank must be at least 1");
  RootSystemData d;
  d.family = family;
  d.rank = rank;
  d.embedding = detail::simple_root_embedding(family, rank);
  d.gram = d.embedding.transpose() * d.embedding;
  const auto r = static_cast<std::size_t>(rank);
  d.cartan = IntMatrix(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      const std::int64_t num = 2 * d.gram(i, j);
      if (num % d.gram(i, i) != 0) throw InvariantError("non-integral Cartan entry");
      d.cartan(i, j) = num / d.gram(i, i);
    }
  d.cartan_inverse = inverse(to_rational(d.cartan));

  d.theta.assign(r, 0);
  d.rho.assign(r, 0);
  std::int64_t best_height = -1;
  for (const auto& root : positive_roots(family, rank)) {
    std::int64_t height = 0;
    for (std::size_t k = 0; k < r; ++k) {
      d.rho[k] += root[k];
      height += root[k];
    }
    if (height > best_height) {
      best_height = height;
      d.theta = root;
    }
  }
  d.rho_pairing.assign(r, 0);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t k = 0; k < r; ++k) d.rho_pairing[i] += d.gram(i, k) * d.rho[k];
  return d;
}

// The matrix of p acting on the simple roots of A_{n-1}: the unique integer
// P with A P = M_p A, A the n x (n-1) simple-root embedding.
inline IntMatrix perm_to_root_matrix(const Permutation& p) {
  const int n = p.size();
  if (n < 2) throw InputError("perm_to_root_matrix needs n >= 2");
  const IntMatrix a = detail::simple_root_embedding(Family::A, n - 1);
  const IntMatrix at = a.transpose();
  // A^T A = C, so P = C^{-1} A^T M A.
  const IntMatrix rhs = at * p.matrix() * a;
  const RatMatrix c_inv = inverse(to_rational(at * a));
  return to_integer(c_inv * to_rational(rhs));
}

// E^{-1} M_s E for the simple-root embedding E of type B or C. The result is
// integral; a violation raises InvariantError.
inline RatMatrix signed_perm_to_root_matrix(const SignedPermutation& s, Family family) {
  if (family == Family::A) throw InputError("signed permutations act in types B and C only");
  const RatMatrix e = to_rational(detail::simple_root_embedding(family, s.rank()));
  RatMatrix r = inverse(e) * to_rational(s.matrix()) * e;
  if (!is_integral(r)) {
    throw InvariantError("root-coordinate matrix of " + s.to_string() + " is not integral: " +
                         to_string(r));
  }
  return r;
}

// Right descents via the root criterion: s_i is a right descent of w when
// w(alpha_i) is a negative root, i.e. column i of the root matrix is <= 0.
inline std::vector<int> right_descents(const SignedPermutation& s) {
  const RatMatrix r = signed_perm_to_root_matrix(s, Family::B);
  std::vector<int> out;
  for (std::size_t j = 0; j < r.cols(); ++j) {
    bool negative = true;
    for (std::size_t i = 0; i < r.rows(); ++i)
      if (r(i, j) > 0) negative = false;
    if (negative) out.push_back(static_cast<int>(j) + 1);
  }
  return out;
}

inline std::vector<int> left_descents(const SignedPermutation& s) {
  return right_descents(s.inverse());
}

}  // namespace wald
