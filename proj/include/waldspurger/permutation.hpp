#pragma once

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "waldspurger/error.hpp"
#include "waldspurger/matrix.hpp"

namespace wald {

// A permutation of {1..n} in one-line notation. The matrix form carries a 1
// in row i, column window[i]. Products follow matrix multiplication:
// matrix(p * q) == matrix(p) * matrix(q), i.e. (p * q)(i) = q(p(i)).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> window) : window_(std::move(window)) { validate(); }

  static Permutation identity(int n) {
    std::vector<int> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    return Permutation(std::move(w));
  }
  static Permutation longest(int n) {
    std::vector<int> w(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = n - i;
    return Permutation(std::move(w));
  }
  // Transposition exchanging a and b (one-based).
  static Permutation transposition(int n, int a, int b) {
    auto w = identity(n).window_;
    std::swap(w[static_cast<std::size_t>(a - 1)], w[static_cast<std::size_t>(b - 1)]);
    return Permutation(std::move(w));
  }

  // Accepts "456213" (single digits) or "4,5,6,2,1,3".
  static Permutation parse(std::string_view text) {
    std::vector<int> w;
    if (text.find(',') != std::string_view::npos) {
      std::stringstream ss{std::string(text)};
      std::string item;
      while (std::getline(ss, item, ',')) {
        try {
          std::size_t used = 0;
          w.push_back(std::stoi(item, &used));
          if (used != item.size()) throw InputError("");
        } catch (const std::exception&) {
          throw InputError("malformed permutation '" + std::string(text) + "'");
        }
      }
    } else {
      for (char c : text) {
        if (c < '1' || c > '9') throw InputError("malformed permutation '" + std::string(text) + "'");
        w.push_back(c - '0');
      }
    }
    return Permutation(std::move(w));
  }

  int size() const { return static_cast<int>(window_.size()); }
  // One-based image of one-based i.
  int operator()(int i) const { return window_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int>& window() const { return window_; }

  IntMatrix matrix() const {
    const auto n = window_.size();
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, static_cast<std::size_t>(window_[i] - 1)) = 1;
    return m;
  }

  Permutation inverse() const {
    std::vector<int> inv(window_.size());
    for (std::size_t i = 0; i < window_.size(); ++i)
      inv[static_cast<std::size_t>(window_[i] - 1)] = static_cast<int>(i) + 1;
    return Permutation(std::move(inv));
  }

  friend Permutation operator*(const Permutation& p, const Permutation& q) {
    if (p.size() != q.size()) throw InputError("permutation size mismatch");
    std::vector<int> w(p.window_.size());
    for (std::size_t i = 0; i < w.size(); ++i) w[i] = q(p.window_[i]);
    return Permutation(std::move(w));
  }

  int cycle_count() const {
    std::vector<bool> seen(window_.size(), false);
    int cycles = 0;
    for (std::size_t i = 0; i < window_.size(); ++i) {
      if (seen[i]) continue;
      ++cycles;
      for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(window_[j] - 1)) seen[j] = true;
    }
    return cycles;
  }

  // Positions i (one-based) with w(i) > w(i+1).
  std::vector<int> right_descents() const {
    std::vector<int> d;
    for (std::size_t i = 0; i + 1 < window_.size(); ++i)
      if (window_[i] > window_[i + 1]) d.push_back(static_cast<int>(i) + 1);
    return d;
  }
  std::vector<int> left_descents() const { return inverse().right_descents(); }

  bool is_identity() const {
    for (std::size_t i = 0; i < window_.size(); ++i)
      if (window_[i] != static_cast<int>(i) + 1) return false;
    return true;
  }

  std::string to_string() const {
    std::string out;
    const bool compact = window_.size() <= 9;
    for (std::size_t i = 0; i < window_.size(); ++i) {
      if (!compact && i) out += ",";
      out += std::to_string(window_[i]);
    }
    return out;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  void validate() const {
    std::vector<bool> seen(window_.size() + 1, false);
    for (int v : window_) {
      if (v < 1 || v > static_cast<int>(window_.size()) || seen[static_cast<std::size_t>(v)]) {
        throw InputError("window is not a permutation of 1..n");
      }
      seen[static_cast<std::size_t>(v)] = true;
    }
  }

  std::vector<int> window_;
};

// The permutation with this matrix, if it is a permutation matrix.
inline std::optional<Permutation> permutation_of_matrix(const IntMatrix& m) {
  if (!m.is_square()) return std::nullopt;
  std::vector<int> w;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    int col = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j) == 0) continue;
      if (m(i, j) != 1 || col) return std::nullopt;
      col = static_cast<int>(j) + 1;
    }
    if (!col) return std::nullopt;
    w.push_back(col);
  }
  try {
    return Permutation(std::move(w));
  } catch (const InputError&) {
    return std::nullopt;
  }
}

// All of S_n in lexicographic order of windows.
inline std::vector<Permutation> all_permutations(int n) {
  if (n < 0) throw InputError("negative permutation size");
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

// A signed permutation of rank n in window notation: |window| permutes 1..n.
// The matrix form has sign(window[i]) in row i, column |window[i]|; products
// follow matrix multiplication as for Permutation.
class SignedPermutation {
 public:
  SignedPermutation() = default;
  explicit SignedPermutation(std::vector<int> window) : window_(std::move(window)) { validate(); }

  static SignedPermutation identity(int n) {
    std::vector<int> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    return SignedPermutation(std::move(w));
  }
  // The longest element -id.
  static SignedPermutation longest(int n) {
    std::vector<int> w(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = -(i + 1);
    return SignedPermutation(std::move(w));
  }

  // Comma separated window, e.g. "2,-1,3".
  static SignedPermutation parse(std::string_view text) {
    std::vector<int> w;
    std::stringstream ss{std::string(text)};
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        std::size_t used = 0;
        w.push_back(std::stoi(item, &used));
        if (used != item.size()) throw InputError("");
      } catch (const std::exception&) {
        throw InputError("malformed signed permutation '" + std::string(text) + "'");
      }
    }
    return SignedPermutation(std::move(w));
  }

  int rank() const { return static_cast<int>(window_.size()); }
  int operator()(int i) const { return window_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int>& window() const { return window_; }

  IntMatrix matrix() const {
    const auto n = window_.size();
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      const int v = window_[i];
      m(i, static_cast<std::size_t>(std::abs(v) - 1)) = v > 0 ? 1 : -1;
    }
    return m;
  }

  SignedPermutation inverse() const {
    std::vector<int> inv(window_.size());
    for (std::size_t i = 0; i < window_.size(); ++i) {
      const int v = window_[i];
      inv[static_cast<std::size_t>(std::abs(v) - 1)] = (v > 0 ? 1 : -1) * (static_cast<int>(i) + 1);
    }
    return SignedPermutation(std::move(inv));
  }

  // The transposed matrix; for signed permutations this is the inverse.
  SignedPermutation transpose() const { return inverse(); }

  friend SignedPermutation operator*(const SignedPermutation& s, const SignedPermutation& t) {
    if (s.rank() != t.rank()) throw InputError("signed permutation rank mismatch");
    std::vector<int> w(s.window_.size());
    for (std::size_t i = 0; i < w.size(); ++i) {
      const int v = s.window_[i];
      w[i] = (v > 0 ? 1 : -1) * t(std::abs(v));
    }
    return SignedPermutation(std::move(w));
  }

  bool is_identity() const { return *this == identity(rank()); }

  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < window_.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(window_[i]);
    }
    return out;
  }

  friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;
  friend auto operator<=>(const SignedPermutation&, const SignedPermutation&) = default;

 private:
  void validate() const {
    std::vector<bool> seen(window_.size() + 1, false);
    for (int v : window_) {
      const int a = std::abs(v);
      if (a < 1 || a > static_cast<int>(window_.size()) || seen[static_cast<std::size_t>(a)]) {
        throw InputError("window is not a signed permutation of rank n");
      }
      seen[static_cast<std::size_t>(a)] = true;
    }
  }

  std::vector<int> window_;
};

// All 2^n n! signed permutations, ordered by underlying permutation and then
// by sign pattern.
inline std::vector<SignedPermutation> all_signed_permutations(int n) {
  std::vector<SignedPermutation> out;
  for (const auto& p : all_permutations(n)) {
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      std::vector<int> w = p.window();
      for (int i = 0; i < n; ++i)
        if (mask & (1u << i)) w[static_cast<std::size_t>(i)] = -w[static_cast<std::size_t>(i)];
      out.emplace_back(std::move(w));
    }
  }
  return out;
}

inline bool is_centrally_symmetric(const Permutation& p) {
  const int m = p.size();
  for (int i = 1; i <= m; ++i)
    if (p(m + 1 - i) != m + 1 - p(i)) return false;
  return true;
}

// Folds a centrally symmetric permutation of 2n into a signed permutation of
// rank n: entry (i,j) of the folded matrix is pi(i,j) - pi(2n+1-i, j).
inline SignedPermutation fold_perm(const Permutation& p) {
  const int m = p.size();
  if (m % 2 != 0 || !is_centrally_symmetric(p)) {
    throw InputError("fold_perm needs a centrally symmetric permutation of even size, got " +
                     p.to_string());
  }
  const int n = m / 2;
  std::vector<int> w(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    const int v = p(i);
    w[static_cast<std::size_t>(i - 1)] = v <= n ? v : -(m + 1 - v);
  }
  return SignedPermutation(std::move(w));
}

inline Permutation unfold_perm(const SignedPermutation& s) {
  const int n = s.rank();
  const int m = 2 * n;
  std::vector<int> w(static_cast<std::size_t>(m));
  for (int i = 1; i <= n; ++i) {
    const int v = s(i);
    const int image = v > 0 ? v : m + 1 + v;
    w[static_cast<std::size_t>(i - 1)] = image;
    w[static_cast<std::size_t>(m - i)] = m + 1 - image;
  }
  return Permutation(std::move(w));
}

}  // namespace wald
