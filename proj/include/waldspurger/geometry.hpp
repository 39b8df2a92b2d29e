#pragma once

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "waldspurger/asm_lattice.hpp"
#include "waldspurger/error.hpp"
#include "waldspurger/matrix.hpp"
#include "waldspurger/permutation.hpp"
#include "waldspurger/simplex.hpp"
#include "waldspurger/transform.hpp"

namespace wald {

enum class RegionMode { Cone, Simplex, Face };

// Points sum a_i c_i over the generator columns c_i with a_i >= 0 (cone),
// additionally sum a_i <= 1 (simplex) or sum a_i = 1 (face). Open regions
// use strict inequalities throughout.
struct GeneratedRegion {
  IntMatrix generators;
  RegionMode mode = RegionMode::Cone;
  bool open = false;
};

inline bool region_membership(const GeneratedRegion& region, const RatVector& p) {
  const IntMatrix& g = region.generators;
  const std::size_t d = g.rows(), m = g.cols();
  if (p.size() != d) throw InputError("point dimension does not match the generators");
  // Columns: a (m), then t when open, then one slack for the simplex bound.
  const bool slack = region.mode == RegionMode::Simplex;
  const bool has_sum = region.mode != RegionMode::Cone;
  const std::size_t t_col = m;
  const std::size_t nv = m + (region.open ? 1 : 0) + (slack ? 1 : 0) + (region.open && !has_sum ? 1 : 0);
  const std::size_t rows = d + (has_sum || region.open ? 1 : 0);
  RatMatrix a(rows, nv);
  RatVector b(rows, 0);
  for (std::size_t i = 0; i < d; ++i) {
    std::int64_t row_sum = 0;
    for (std::size_t j = 0; j < m; ++j) {
      a(i, j) = g(i, j);
      row_sum += g(i, j);
    }
    // Substituting a = a' + t(1,...,1) moves the strictness onto t.
    if (region.open) a(i, t_col) = row_sum;
    b[i] = p[i];
  }
  if (has_sum || region.open) {
    const std::size_t r = d;
    b[r] = 1;
    if (has_sum) {
      for (std::size_t j = 0; j < m; ++j) a(r, j) = 1;
      // With a_i = a'_i + t and strict slack s = s' + t, the bound reads
      // sum a' + (m + 1) t + s' = 1; the face has no slack.
      if (region.open) a(r, t_col) = static_cast<std::int64_t>(m + (slack ? 1 : 0));
      if (slack) a(r, nv - 1) = 1;
    } else {
      // Open cone: cap t by t + u = 1 so the maximization stays bounded.
      a(r, t_col) = 1;
      a(r, nv - 1) = 1;
    }
  }
  if (!region.open) return lp_feasible(a, b);
  RatVector c(nv, 0);
  c[t_col] = 1;
  const LpResult res = solve_lp(a, b, c);
  return res.status == LpStatus::Optimal && res.value > 0;
}

inline GeneratedRegion cone_of(const IntMatrix& w, bool open) { return {w, RegionMode::Cone, open}; }
inline GeneratedRegion simplex_of(const IntMatrix& w, bool open) { return {w, RegionMode::Simplex, open}; }
inline GeneratedRegion face_of(const IntMatrix& w, bool open) { return {w, RegionMode::Face, open}; }

inline std::vector<Permutation> cone_hits(const RatVector& p, int n, bool open = true) {
  std::vector<Permutation> hits;
  for (const auto& pi : all_permutations(n))
    if (region_membership(cone_of(wt_perm(pi), open), p)) hits.push_back(pi);
  return hits;
}

// The permutation whose open cone contains p. Failure of existence or
// uniqueness is a counterexample to the decomposition and raises
// InvariantError listing the hits.
inline Permutation classify_cone_point(const RatVector& p, int n) {
  if (n < 2) throw InputError("classify_cone_point needs n >= 2");
  if (p.size() != static_cast<std::size_t>(n - 1)) throw InputError("point must have n-1 root coordinates");
  for (const auto& x : p)
    if (x < 0) throw InputError("point lies outside the positive root cone");
  const auto hits = cone_hits(p, n, true);
  if (hits.size() != 1) {
    std::string list;
    for (const auto& h : hits) list += " " + h.to_string();
    throw InvariantError("open cone classification found " + std::to_string(hits.size()) + " hits:" + list);
  }
  return hits.front();
}

struct TileReport {
  std::vector<Permutation> open_hits;            // p inside the open V_pi
  std::vector<Permutation> full_dimensional_hits;  // those with invertible WT
  std::vector<Permutation> closed_hits;          // p inside the closed V_pi
  std::optional<Permutation> unique() const {
    if (full_dimensional_hits.size() == 1) return full_dimensional_hits.front();
    return std::nullopt;
  }
};

inline TileReport classify_tile_point(const RatVector& p, int n) {
  if (n < 2) throw InputError("classify_tile_point needs n >= 2");
  if (p.size() != static_cast<std::size_t>(n - 1)) throw InputError("point must have n-1 root coordinates");
  TileReport r;
  for (const auto& pi : all_permutations(n)) {
    const IntMatrix w = wt_perm(pi);
    if (region_membership(simplex_of(w, false), p)) r.closed_hits.push_back(pi);
    else continue;
    if (region_membership(simplex_of(w, true), p)) {
      r.open_hits.push_back(pi);
      if (determinant(w) != 0) r.full_dimensional_hits.push_back(pi);
    }
  }
  return r;
}

inline BigInt factorial(int n) {
  BigInt f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

inline BigInt volume_sum(int n) {
  BigInt total = 0;
  for (const auto& p : all_permutations(n)) total += boost::multiprecision::abs(determinant(wt_perm(p)));
  return total;
}

inline bool volume_sum_check(int n) {
  if (n < 2 || n > 8) throw InputError("volume_sum_check supports 2 <= n <= 8");
  return volume_sum(n) == factorial(n - 1);
}

// Reflection through the affine hyperplane orthogonal to theta at height
// one: v - (v_1 + v_m) theta + theta, theta = (1,...,1).
inline IntVector reflect_theta(const IntVector& v) {
  if (v.empty()) throw InputError("reflect_theta needs a nonempty vector");
  const std::int64_t s = v.front() + v.back();
  IntVector out = v;
  for (auto& x : out) x += 1 - s;
  return out;
}

struct InvolutionReport {
  std::size_t checked = 0;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

// Column j of WT(t pi) is R(column j of WT(pi)), t = (1,n) acting on the
// left; on the right, t moves each row of WT(pi) by +-theta, which must land
// on WT(pi t).
inline InvolutionReport check_R_involution(int n) {
  if (n < 2 || n > 7) throw InputError("check_R_involution supports 2 <= n <= 7");
  InvolutionReport rep;
  const Permutation t = Permutation::transposition(n, 1, n);
  const auto m = static_cast<std::size_t>(n - 1);
  for (const auto& pi : all_permutations(n)) {
    ++rep.checked;
    const IntMatrix w = wt_perm(pi);
    const IntMatrix left = wt_perm(t * pi);
    const IntMatrix right = wt_perm(pi * t);
    for (std::size_t j = 0; j < m; ++j) {
      const IntVector col = w.column(j);
      if (reflect_theta(col) != left.column(j))
        rep.violations.push_back("column " + std::to_string(j + 1) + " of " + pi.to_string());
      if (reflect_theta(reflect_theta(col)) != col) rep.violations.push_back("R is not an involution on a column of " + pi.to_string());
      const auto row = w.row(j);
      if (reflect_theta(IntVector(row.begin(), row.end())) != IntVector(right.row(j).begin(), right.row(j).end()))
        rep.violations.push_back("row " + std::to_string(j + 1) + " of " + pi.to_string());
    }
  }
  return rep;
}

// Center of mass of the face spanned by the columns.
inline RatVector barycenter(const IntMatrix& w) {
  RatVector c(w.rows(), 0);
  for (std::size_t i = 0; i < w.rows(); ++i) {
    for (std::size_t j = 0; j < w.cols(); ++j) c[i] += w(i, j);
    c[i] /= static_cast<std::int64_t>(w.cols());
  }
  return c;
}

// Inner product with rho for a vector in root coordinates.
inline Rational rho_projection(const RatVector& v) {
  const auto d = cartan_data(Family::A, static_cast<int>(v.size()));
  Rational s = 0;
  for (std::size_t i = 0; i < v.size(); ++i) s += v[i] * d.rho_pairing[i];
  return s;
}

struct CensusPoint {
  RatVector point;
  std::vector<std::size_t> asm_ids;  // indices into the ASM enumeration
};

inline std::vector<CensusPoint> census_permutohedron(const AsmLattice& l) {
  std::map<RatVector, std::vector<std::size_t>> groups;
  for (std::size_t k = 0; k < l.wts.size(); ++k) groups[barycenter(l.wts[k])].push_back(k);
  std::vector<CensusPoint> out;
  for (auto& [pt, ids] : groups) out.push_back({pt, ids});
  return out;
}

inline std::vector<CensusPoint> census_permutohedron(int n) { return census_permutohedron(build_asm_lattice(n)); }

inline std::string census_csv(const std::vector<CensusPoint>& census) {
  std::ostringstream os;
  os << "point,multiplicity,asm_ids\n";
  for (const auto& c : census) {
    for (std::size_t i = 0; i < c.point.size(); ++i) os << (i ? " " : "") << to_string(c.point[i]);
    os << "," << c.asm_ids.size() << ",";
    for (std::size_t k = 0; k < c.asm_ids.size(); ++k) os << (k ? " " : "") << c.asm_ids[k];
    os << "\n";
  }
  return os.str();
}

// Seeded rational points with bounded numerators and denominators.
inline RatVector sample_cone_point(std::mt19937_64& rng, int n, int max_num = 12, int max_den = 7) {
  std::uniform_int_distribution<int> num(0, max_num), den(1, max_den);
  RatVector p;
  for (int i = 0; i < n - 1; ++i) p.emplace_back(Rational(num(rng)) / den(rng));
  return p;
}

// A point in the open simplex of a random full-dimensional V_pi.
inline RatVector sample_tile_point(std::mt19937_64& rng, int n, int max_den = 9) {
  const auto perms = all_permutations(n);
  std::uniform_int_distribution<std::size_t> pick(0, perms.size() - 1);
  IntMatrix w;
  do w = wt_perm(perms[pick(rng)]);
  while (determinant(w) == 0);
  const std::size_t m = w.cols();
  std::uniform_int_distribution<int> part(1, max_den);
  // m + 1 positive weights normalized to one; the last is the slack.
  std::vector<int> weights(m + 1);
  int total = 0;
  for (auto& x : weights) total += x = part(rng);
  RatVector p(w.rows(), 0);
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t i = 0; i < w.rows(); ++i) p[i] += Rational(weights[j] * w(i, j)) / total;
  return p;
}

// SVG of the A2 tile: simplices V_pi and barycenters of Delta_M for every
// 3 x 3 ASM. Root coordinates (x, y) are drawn at x alpha_1 + y alpha_2.
inline std::string render_tile_svg(int n) {
  if (n != 3) throw InputError("render tile supports n = 3 only (the A2 root plane); higher ranks need 3-D output");
  const double scale = 160.0, ox = 260.0, oy = 380.0;
  auto px = [&](const Rational& x, const Rational& y) {
    const double fx = static_cast<double>(x), fy = static_cast<double>(y);
    const double sx = ox + scale * (fx - 0.5 * fy);
    const double sy = oy - scale * (std::sqrt(3.0) / 2.0 * fy);
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f,%.3f", sx, sy);
    return std::string(buf);
  };
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"520\" height=\"440\" viewBox=\"0 0 520 440\">\n";
  os << "<rect width=\"520\" height=\"440\" fill=\"white\"/>\n";
  for (const auto& p : all_permutations(3)) {
    const IntMatrix w = wt_perm(p);
    os << "<polygon points=\"" << px(0, 0) << " " << px(w(0, 0), w(1, 0)) << " " << px(w(0, 1), w(1, 1))
       << "\" fill=\"" << (determinant(w) != 0 ? "#cfe3f7" : "none") << "\" stroke=\"#1f4e79\" stroke-width=\"2\">"
       << "<title>" << p.to_string() << "</title></polygon>\n";
  }
  const auto l = build_asm_lattice(3);
  for (std::size_t k = 0; k < l.wts.size(); ++k) {
    const RatVector b = barycenter(l.wts[k]);
    const std::string at = px(b[0], b[1]);
    const auto comma = at.find(',');
    os << "<circle cx=\"" << at.substr(0, comma) << "\" cy=\"" << at.substr(comma + 1) << "\" r=\"4\" fill=\""
       << (permutation_of_matrix(l.asms[k]) ? "#c0392b" : "#27ae60") << "\"><title>" << to_string(l.wts[k])
       << "</title></circle>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace wald
