#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "waldspurger/error.hpp"

namespace wald {

using Bits = boost::dynamic_bitset<>;

// A finite poset stored as up-sets: up(x)[y] holds iff x <= y.
class FinitePoset {
 public:
  FinitePoset() = default;

  static FinitePoset from_relation(std::size_t n, const std::function<bool(std::size_t, std::size_t)>& leq,
                                   std::vector<std::string> labels = {}) {
    FinitePoset p;
    p.up_.assign(n, Bits(n));
    p.down_.assign(n, Bits(n));
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        if (x == y || leq(x, y)) {
          p.up_[x].set(y);
          p.down_[y].set(x);
        }
    p.labels_ = std::move(labels);
    if (p.labels_.empty())
      for (std::size_t x = 0; x < n; ++x) p.labels_.push_back(std::to_string(x));
    return p;
  }

  static FinitePoset from_up_sets(std::vector<Bits> up, std::vector<std::string> labels = {}) {
    FinitePoset p;
    const std::size_t n = up.size();
    p.up_ = std::move(up);
    p.down_.assign(n, Bits(n));
    for (std::size_t x = 0; x < n; ++x) {
      p.up_[x].set(x);
      for (std::size_t y = p.up_[x].find_first(); y != Bits::npos; y = p.up_[x].find_next(y)) p.down_[y].set(x);
    }
    p.labels_ = std::move(labels);
    if (p.labels_.empty())
      for (std::size_t x = 0; x < n; ++x) p.labels_.push_back(std::to_string(x));
    return p;
  }

  std::size_t size() const { return up_.size(); }
  bool leq(std::size_t x, std::size_t y) const { return up_[x].test(y); }
  const Bits& up(std::size_t x) const { return up_[x]; }
  const Bits& down(std::size_t x) const { return down_[x]; }
  const std::string& label(std::size_t x) const { return labels_[x]; }
  const std::vector<std::string>& labels() const { return labels_; }

  // Reflexive, antisymmetric, transitive; returns the first failure.
  std::optional<std::string> order_violation() const {
    for (std::size_t x = 0; x < size(); ++x) {
      if (!leq(x, x)) return "not reflexive at " + label(x);
      for (std::size_t y = up_[x].find_first(); y != Bits::npos; y = up_[x].find_next(y)) {
        if (y != x && leq(y, x)) return "not antisymmetric at " + label(x) + ", " + label(y);
        if (!up_[y].is_subset_of(up_[x])) return "not transitive through " + label(y);
      }
    }
    return std::nullopt;
  }

  // Elements sorted by the size of their down-set: a linear extension.
  std::vector<std::size_t> linear_extension() const {
    std::vector<std::size_t> order(size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return down_[a].count() < down_[b].count(); });
    return order;
  }

  // Cover relations (x, y) with x < y and nothing strictly between.
  const std::vector<std::pair<std::size_t, std::size_t>>& covers() const {
    if (!covers_) {
      std::vector<std::pair<std::size_t, std::size_t>> out;
      const auto order = linear_extension();
      std::vector<std::size_t> position(size());
      for (std::size_t k = 0; k < order.size(); ++k) position[order[k]] = k;
      for (std::size_t x = 0; x < size(); ++x) {
        Bits reached(size());
        std::vector<std::size_t> candidates;
        for (std::size_t y = up_[x].find_first(); y != Bits::npos; y = up_[x].find_next(y))
          if (y != x) candidates.push_back(y);
        std::sort(candidates.begin(), candidates.end(),
                  [&](std::size_t a, std::size_t b) { return position[a] < position[b]; });
        for (std::size_t y : candidates) {
          if (reached.test(y)) continue;
          out.emplace_back(x, y);
          reached |= up_[y];
        }
      }
      std::sort(out.begin(), out.end());
      covers_ = std::move(out);
    }
    return *covers_;
  }

  std::vector<std::size_t> lower_covers(std::size_t y) const {
    std::vector<std::size_t> out;
    for (const auto& [a, b] : covers())
      if (b == y) out.push_back(a);
    return out;
  }

  std::vector<std::size_t> minimal_elements() const {
    std::vector<std::size_t> out;
    for (std::size_t x = 0; x < size(); ++x)
      if (down_[x].count() == 1) out.push_back(x);
    return out;
  }
  std::vector<std::size_t> maximal_elements() const {
    std::vector<std::size_t> out;
    for (std::size_t x = 0; x < size(); ++x)
      if (up_[x].count() == 1) out.push_back(x);
    return out;
  }

  std::optional<std::size_t> least_of(const Bits& s) const {
    for (std::size_t z = s.find_first(); z != Bits::npos; z = s.find_next(z))
      if (s.is_subset_of(up_[z])) return z;
    return std::nullopt;
  }
  std::optional<std::size_t> greatest_of(const Bits& s) const {
    for (std::size_t z = s.find_first(); z != Bits::npos; z = s.find_next(z))
      if (s.is_subset_of(down_[z])) return z;
    return std::nullopt;
  }

  std::optional<std::size_t> join(std::size_t x, std::size_t y) const { return least_of(up_[x] & up_[y]); }
  std::optional<std::size_t> meet(std::size_t x, std::size_t y) const { return greatest_of(down_[x] & down_[y]); }

  // A pair of elements lacking a join or a meet, if any.
  std::optional<std::pair<std::size_t, std::size_t>> non_lattice_witness() const {
    for (std::size_t x = 0; x < size(); ++x)
      for (std::size_t y = x + 1; y < size(); ++y) {
        if (leq(x, y) || leq(y, x)) continue;
        if (!join(x, y) || !meet(x, y)) return std::make_pair(x, y);
      }
    return std::nullopt;
  }
  bool is_lattice() const { return size() > 0 && !non_lattice_witness(); }

  // Elements that cover exactly one element.
  std::vector<std::size_t> join_irreducibles() const {
    std::vector<std::size_t> count(size(), 0);
    for (const auto& c : covers()) ++count[c.second];
    std::vector<std::size_t> out;
    for (std::size_t x = 0; x < size(); ++x)
      if (count[x] == 1) out.push_back(x);
    return out;
  }

  std::string to_dot(const std::string& name = "hasse") const {
    std::ostringstream os;
    os << "digraph " << name << " {\n  rankdir=BT;\n";
    for (std::size_t x = 0; x < size(); ++x) os << "  n" << x << " [label=\"" << label(x) << "\"];\n";
    for (const auto& [a, b] : covers()) os << "  n" << a << " -> n" << b << ";\n";
    os << "}\n";
    return os.str();
  }

 private:
  std::vector<Bits> up_;
  std::vector<Bits> down_;
  std::vector<std::string> labels_;
  mutable std::optional<std::vector<std::pair<std::size_t, std::size_t>>> covers_;
};

struct BitsHash {
  std::size_t operator()(const Bits& b) const {
    std::size_t h = b.size();
    std::vector<Bits::block_type> blocks;
    boost::to_block_range(b, std::back_inserter(blocks));
    for (auto w : blocks) h = h * 1000003u ^ std::hash<Bits::block_type>{}(w);
    return h;
  }
};

// Dedekind-MacNeille completion as the lattice of cuts. Each cut is kept as
// its lower half A = L(U(A)); the closed sets are exactly the intersections
// of principal down-sets together with P itself.
struct DMCompletion {
  FinitePoset lattice;
  std::vector<Bits> cuts;             // lower half of each cut, over P
  std::vector<std::size_t> embedding;  // P element -> its principal cut
};

inline Bits closure(const FinitePoset& p, const Bits& a) {
  Bits upper(p.size());
  upper.set();
  for (std::size_t x = a.find_first(); x != Bits::npos; x = a.find_next(x)) upper &= p.up(x);
  Bits lower(p.size());
  lower.set();
  for (std::size_t u = upper.find_first(); u != Bits::npos; u = upper.find_next(u)) lower &= p.down(u);
  return lower;
}

// Lower halves of all cuts, in no particular order.
inline std::vector<Bits> dm_cuts(const FinitePoset& p) {
  const std::size_t n = p.size();
  std::vector<Bits> cuts;
  std::unordered_set<Bits, BitsHash> seen;
  auto add = [&](Bits b) {
    if (seen.insert(b).second) cuts.push_back(std::move(b));
  };
  Bits all(n);
  all.set();
  add(all);
  for (std::size_t x = 0; x < n; ++x) {
    const std::size_t existing = cuts.size();
    for (std::size_t k = 0; k < existing; ++k) add(cuts[k] & p.down(x));
  }
  return cuts;
}

inline DMCompletion dm_completion(const FinitePoset& p) {
  const std::size_t n = p.size();
  std::vector<Bits> cuts = dm_cuts(p);
  std::unordered_map<Bits, std::size_t, BitsHash> index;
  // Sort by cardinality so labels and indices are canonical.
  std::vector<std::size_t> order(cuts.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (cuts[a].count() != cuts[b].count()) return cuts[a].count() < cuts[b].count();
    return cuts[a] < cuts[b];
  });
  std::vector<Bits> sorted;
  for (std::size_t k : order) sorted.push_back(cuts[k]);
  cuts = std::move(sorted);
  index.clear();
  for (std::size_t k = 0; k < cuts.size(); ++k) index.emplace(cuts[k], k);

  DMCompletion out;
  std::vector<Bits> up(cuts.size(), Bits(cuts.size()));
  for (std::size_t a = 0; a < cuts.size(); ++a)
    for (std::size_t b = 0; b < cuts.size(); ++b)
      if (cuts[a].is_subset_of(cuts[b])) up[a].set(b);
  out.embedding.resize(n);
  std::vector<std::string> labels(cuts.size());
  for (std::size_t k = 0; k < cuts.size(); ++k) labels[k] = "cut" + std::to_string(k);
  for (std::size_t x = 0; x < n; ++x) {
    const auto it = index.find(p.down(x));
    if (it == index.end()) throw InvariantError("principal down-set missing from the completion");
    out.embedding[x] = it->second;
    labels[it->second] = p.label(x);
  }
  out.lattice = FinitePoset::from_up_sets(std::move(up), std::move(labels));
  out.cuts = std::move(cuts);
  return out;
}

// Join-irreducibles of the completion, found without building it: every
// join-irreducible cut is principal, and the cut of x is join-irreducible
// exactly when x is not in the closure of the elements strictly below it.
inline std::vector<std::size_t> dm_join_irreducibles(const FinitePoset& p) {
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < p.size(); ++x) {
    Bits below = p.down(x);
    below.reset(x);
    if (!closure(p, below).test(x)) out.push_back(x);
  }
  return out;
}

// Checks that `map` (P index -> Q index) is an order isomorphism.
inline std::optional<std::string> isomorphism_violation(const FinitePoset& p, const FinitePoset& q,
                                                        const std::vector<std::size_t>& map) {
  if (p.size() != q.size() || map.size() != p.size()) return "sizes differ";
  std::vector<bool> hit(q.size(), false);
  for (std::size_t x = 0; x < p.size(); ++x) {
    if (map[x] >= q.size() || hit[map[x]]) return "map is not a bijection at " + p.label(x);
    hit[map[x]] = true;
  }
  for (std::size_t x = 0; x < p.size(); ++x)
    for (std::size_t y = 0; y < p.size(); ++y)
      if (p.leq(x, y) != q.leq(map[x], map[y]))
        return "order differs on " + p.label(x) + ", " + p.label(y);
  return std::nullopt;
}

// Maps every element z of a lattice L containing the group poset G (via
// `inclusion`) to the cut {g : g <= z}, then checks the result is an
// isomorphism onto dm_completion(G).
inline std::optional<std::string> matches_dm_completion(const FinitePoset& group, const FinitePoset& lattice,
                                                        const std::vector<std::size_t>& inclusion) {
  const DMCompletion dm = dm_completion(group);
  if (dm.cuts.size() != lattice.size()) {
    return "completion has " + std::to_string(dm.cuts.size()) + " elements, lattice has " +
           std::to_string(lattice.size());
  }
  std::unordered_map<Bits, std::size_t, BitsHash> index;
  for (std::size_t k = 0; k < dm.cuts.size(); ++k) index.emplace(dm.cuts[k], k);
  std::vector<std::size_t> map(lattice.size());
  for (std::size_t z = 0; z < lattice.size(); ++z) {
    Bits d(group.size());
    for (std::size_t g = 0; g < group.size(); ++g)
      if (lattice.leq(inclusion[g], z)) d.set(g);
    const auto it = index.find(d);
    if (it == index.end()) return "element " + lattice.label(z) + " does not give a cut";
    map[z] = it->second;
  }
  return isomorphism_violation(lattice, dm.lattice, map);
}

}  // namespace wald
