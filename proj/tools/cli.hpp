#pragma once

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "waldspurger/asm_lattice.hpp"
#include "waldspurger/bc_fold.hpp"
#include "waldspurger/geometry.hpp"
#include "waldspurger/json_io.hpp"
#include "waldspurger/transform.hpp"
#include "waldspurger/um_vectors.hpp"

namespace wald::cli {

enum Exit : int { kOk = 0, kCounterexample = 1, kUsage = 2 };

struct CommandConfig {
  std::string group;
  std::string command;
  std::string value;
  std::optional<int> n;
  std::optional<int> rank;
  std::string family;
  std::string convention = "Ftilde";
  int samples = 1000;
  std::uint64_t seed = 0;
  std::string out;
  std::string format;
  std::string replay;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline int require_range(const std::optional<int>& v, const char* flag, int lo, int hi) {
  if (!v) throw UsageError(std::string("missing ") + flag);
  if (*v < lo || *v > hi) {
    throw UsageError(std::string(flag) + " must be between " + std::to_string(lo) + " and " + std::to_string(hi));
  }
  return *v;
}

inline int size_or_rank(const CommandConfig& c, int lo, int hi) {
  return c.rank ? require_range(c.rank, "--rank", lo, hi) : require_range(c.n, "--n", lo, hi);
}

inline Family bc_family(const CommandConfig& c) {
  const Family f = c.family.empty() ? Family::C : parse_family(c.family);
  if (f == Family::A) throw UsageError("this command needs --family B or C");
  return f;
}

inline std::string read_value(const std::string& v) {
  if (v.empty()) throw UsageError("missing input value");
  if (v.front() != '@') return v;
  std::ifstream in(v.substr(1));
  if (!in) throw UsageError("cannot read " + v.substr(1));
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::string dump(const Json& j) { return j.dump() + "\n"; }

inline Json perm_json(const Permutation& p, const IntMatrix& w) {
  Json j = wt_json(w, Family::A);
  j["permutation"] = p.to_string();
  j["height"] = height(w);
  return j;
}

inline Json signed_list(const std::vector<SignedPermutation>& elems, const std::vector<std::size_t>& ids) {
  Json out = Json::array();
  for (auto k : ids) out.push_back(elems[k].to_string());
  return out;
}

// One element check per verification; an empty result means it holds.
using Instance = Json;
struct Check {
  std::function<std::vector<Instance>(const CommandConfig&)> instances;
  std::function<std::optional<std::string>(const Instance&)> test;
};

inline std::vector<Instance> perms_of(int n, const char* check) {
  std::vector<Instance> out;
  for (const auto& p : all_permutations(n)) out.push_back(Json{{"check", check}, {"perm", p.to_string()}});
  return out;
}

inline std::optional<std::string> identity_test(const Instance& in) {
  const Permutation p = Permutation::parse(in.at("perm").get<std::string>());
  const IntMatrix c = cartan_data(Family::A, p.size() - 1).cartan;
  const IntMatrix lhs = IntMatrix::identity(static_cast<std::size_t>(p.size() - 1)) - perm_to_root_matrix(p);
  const IntMatrix rhs = wt_perm(p) * c;
  if (lhs == rhs) return std::nullopt;
  return "I - P = " + to_string(lhs) + " but WT C = " + to_string(rhs);
}

inline std::optional<std::string> entropy_test(const Instance& in) {
  const Permutation p = Permutation::parse(in.at("perm").get<std::string>());
  const std::int64_t h = height(wt_perm(p)), e = entropy(p);
  if (2 * h == e) return std::nullopt;
  return "height " + std::to_string(h) + " but entropy " + std::to_string(e);
}

inline std::optional<std::string> image_test(const Instance& in) {
  const IntMatrix m = int_matrix_from_json(in.at("asm"));
  if (auto v = asm_violation(m)) throw InputError("not an ASM: " + *v);
  const IntMatrix w = wt_general(m);
  if (auto v = image_violation(w)) return *v;
  if (!(wt_inverse_asm(w) == m)) return "inverse does not recover the ASM";
  return std::nullopt;
}

inline std::optional<std::string> fold_test(const Instance& in) {
  const SignedPermutation s = SignedPermutation::parse(in.at("signed").get<std::string>());
  const Family f = parse_family(in.at("family").get<std::string>());
  try {
    (void)wt_bc(s, f, parse_convention(in.at("convention").get<std::string>()));
  } catch (const InvariantError& e) {
    return std::string(e.what());
  }
  return std::nullopt;
}

inline std::optional<std::string> tiling_test(const Instance& in) {
  const int n = in.at("n").get<int>();
  RatVector p;
  for (const auto& x : in.at("point")) p.push_back(parse_rational(x.get<std::string>()));
  const auto hits = cone_hits(p, n, true);
  if (hits.size() == 1) return std::nullopt;
  std::string list;
  for (const auto& h : hits) list += " " + h.to_string();
  return std::to_string(hits.size()) + " open cones contain the point:" + list;
}

inline std::optional<std::string> reflection_test(const Instance& in) {
  const Permutation pi = Permutation::parse(in.at("perm").get<std::string>());
  const int n = pi.size();
  const Permutation t = Permutation::transposition(n, 1, n);
  const IntMatrix w = wt_perm(pi), left = wt_perm(t * pi), right = wt_perm(pi * t);
  for (std::size_t j = 0; j + 1 < static_cast<std::size_t>(n); ++j) {
    if (reflect_theta(w.column(j)) != left.column(j)) return "column " + std::to_string(j + 1);
    if (reflect_theta(IntVector(w.row(j).begin(), w.row(j).end())) != IntVector(right.row(j).begin(), right.row(j).end()))
      return "row " + std::to_string(j + 1);
  }
  return std::nullopt;
}

inline std::optional<std::string> volumes_test(const Instance& in) {
  const int n = in.at("n").get<int>();
  if (volume_sum_check(n)) return std::nullopt;
  return "sum of |det| is " + volume_sum(n).str() + ", expected " + factorial(n - 1).str();
}

inline const std::map<std::string, Check>& checks() {
  static const std::map<std::string, Check> table{
      {"identity", {[](const CommandConfig& c) { return perms_of(require_range(c.n, "--n", 2, 8), "identity"); }, identity_test}},
      {"entropy", {[](const CommandConfig& c) { return perms_of(require_range(c.n, "--n", 2, 8), "entropy"); }, entropy_test}},
      {"reflection",
       {[](const CommandConfig& c) { return perms_of(require_range(c.n, "--n", 2, 7), "reflection"); }, reflection_test}},
      {"image",
       {[](const CommandConfig& c) {
          std::vector<Instance> out;
          for (const auto& m : enumerate_asms(require_range(c.n, "--n", 2, 6)))
            out.push_back(Json{{"check", "image"}, {"asm", asm_json(m)}});
          return out;
        },
        image_test}},
      {"fold",
       {[](const CommandConfig& c) {
          const int r = size_or_rank(c, 1, 4);
          std::vector<std::string> fams{"B", "C"};
          if (!c.family.empty()) fams = {to_string(bc_family(c))};
          std::vector<Instance> out;
          for (const auto& s : all_signed_permutations(r))
            for (const auto& f : fams)
              out.push_back(Json{{"check", "fold"}, {"signed", s.to_string()}, {"family", f}, {"convention", c.convention}});
          return out;
        },
        fold_test}},
      {"tiling",
       {[](const CommandConfig& c) {
          const int n = require_range(c.n, "--n", 2, 5);
          if (c.samples < 1) throw UsageError("--samples must be positive");
          std::mt19937_64 rng(c.seed);
          std::vector<Instance> out;
          for (int k = 0; k < c.samples; ++k)
            out.push_back(Json{{"check", "tiling"}, {"n", n}, {"point", vector_json(sample_cone_point(rng, n))}});
          return out;
        },
        tiling_test}},
      {"volumes",
       {[](const CommandConfig& c) {
          return std::vector<Instance>{Json{{"check", "volumes"}, {"n", require_range(c.n, "--n", 2, 8)}}};
        },
        volumes_test}},
  };
  return table;
}

inline int verify(const CommandConfig& c, std::string& text) {
  const auto it = checks().find(c.command);
  if (it == checks().end()) throw UsageError("unknown check " + c.command);
  std::vector<Instance> instances;
  if (!c.replay.empty()) {
    Json j = parse_json_text(read_value("@" + c.replay));
    if (j.contains("counterexample")) j = j["counterexample"];
    if (!j.is_object() || j.value("check", "") != c.command) throw UsageError("replay file is not a " + c.command + " counterexample");
    instances.push_back(j);
  } else {
    instances = it->second.instances(c);
  }
  Json verdict{{"check", c.command}};
  if (c.n) verdict["n"] = *c.n;
  if (c.rank) verdict["rank"] = *c.rank;
  if (c.command == "tiling" && c.replay.empty()) {
    verdict["samples"] = c.samples;
    verdict["seed"] = c.seed;
  }
  std::size_t checked = 0;
  for (const auto& in : instances) {
    std::optional<std::string> failure;
    try {
      failure = it->second.test(in);
    } catch (const Json::exception& e) {
      throw UsageError(std::string("malformed instance: ") + e.what());
    }
    ++checked;
    if (failure) {
      Json ce = in;
      ce["detail"] = *failure;
      verdict["checked"] = checked;
      verdict["verified"] = false;
      verdict["counterexample"] = ce;
      text = dump(verdict);
      return kCounterexample;
    }
  }
  verdict["checked"] = checked;
  verdict["verified"] = true;
  verdict["counterexample"] = nullptr;
  text = dump(verdict);
  return kOk;
}

inline std::string wt(const CommandConfig& c) {
  if (c.command == "perm") {
    const Permutation p = Permutation::parse(read_value(c.value));
    if (p.size() < 2) throw UsageError("permutation needs at least 2 letters");
    return dump(perm_json(p, wt_perm(p)));
  }
  if (c.command == "asm") {
    const IntMatrix m = int_matrix_from_json(parse_json_text(read_value(c.value)));
    if (auto v = asm_violation(m)) throw InputError("not an ASM: " + *v);
    const IntMatrix w = wt_general(m);
    Json j = wt_json(w, Family::A);
    j["height"] = height(w);
    return dump(j);
  }
  const SignedPermutation s = SignedPermutation::parse(read_value(c.value));
  Json j = bc_json(wt_bc(s, bc_family(c), parse_convention(c.convention)));
  j["signed"] = s.to_string();
  return dump(j);
}

inline std::string vectors_out(const std::vector<IntVector>& vs, const std::string& format) {
  if (format == "csv" || format == "text") {
    std::string s = format == "csv" ? "vector\n" : "";
    for (const auto& v : vs) {
      std::string row;
      for (std::size_t k = 0; k < v.size(); ++k) row += (k ? " " : "") + std::to_string(v[k]);
      s += row + "\n";
    }
    return s;
  }
  return dump(Json(vs));
}

inline std::string enumerate(const CommandConfig& c) {
  if (c.command == "um") return vectors_out(enumerate_um(require_range(c.n, "--n", 1, 14)), c.format);
  if (c.command == "um-bc") return vectors_out(enumerate_um_bc(size_or_rank(c, 1, 9)), c.format);
  Json out = Json::array();
  if (c.command == "asm") {
    for (const auto& m : enumerate_asms(require_range(c.n, "--n", 1, 6))) out.push_back(asm_json(m));
  } else if (c.command == "cs-asm") {
    for (const auto& m : enumerate_cs_asms(size_or_rank(c, 1, 4))) out.push_back(asm_json(m));
  } else {
    throw UsageError("unknown enumeration " + c.command);
  }
  return dump(out);
}

inline std::string poset_out(const FinitePoset& p, const std::string& format, const std::string& name) {
  if (format == "dot") return p.to_dot(name);
  return dump(poset_json(p));
}

inline std::string lattice(const CommandConfig& c) {
  const bool typed = !c.family.empty() && parse_family(c.family) != Family::A;
  if (c.command == "build") {
    if (typed) {
      const auto cs = cs_asm_fold(size_or_rank(c, 1, 3), bc_family(c), parse_convention(c.convention));
      return poset_out(cs.poset, c.format, "folded");
    }
    return poset_out(build_asm_lattice(require_range(c.n, "--n", 2, 5)).poset, c.format, "asm");
  }
  if (c.command == "dm") {
    FinitePoset bruhat;
    if (typed) {
      bruhat = signed_bruhat_poset(all_signed_permutations(size_or_rank(c, 1, 3)));
    } else {
      const auto perms = all_permutations(require_range(c.n, "--n", 2, 5));
      std::vector<std::string> labels;
      for (const auto& p : perms) labels.push_back(p.to_string());
      bruhat = FinitePoset::from_relation(perms.size(), [&](std::size_t a, std::size_t b) { return bruhat_leq(perms[a], perms[b]); }, labels);
    }
    return poset_out(dm_completion(bruhat).lattice, c.format, "dm");
  }
  if (c.command == "irreducibles") {
    Json out = Json::array();
    if (typed) {
      const Family f = bc_family(c);
      const auto elems = all_signed_permutations(size_or_rank(c, 1, 4));
      for (auto k : dm_join_irreducibles(signed_bruhat_poset(elems))) {
        Json j = bc_json(wt_bc(elems[k], f, parse_convention(c.convention)));
        j["signed"] = elems[k].to_string();
        out.push_back(j);
      }
    } else {
      for (const auto& p : bigrassmannians(require_range(c.n, "--n", 2, 8))) out.push_back(perm_json(p, wt_perm(p)));
    }
    return dump(out);
  }
  throw UsageError("unknown lattice command " + c.command);
}

inline Json covers_json(const std::vector<CoverPair>& covers, const OrderComparison& r) {
  Json out = Json::array();
  for (const auto& cp : covers) {
    out.push_back(Json{{"lower", r.elements[cp.lower].to_string()},
                       {"upper", r.elements[cp.upper].to_string()},
                       {"lower_matrix", r.matrices[cp.lower].to_rows()},
                       {"upper_matrix", r.matrices[cp.upper].to_rows()}});
  }
  return out;
}

inline std::string report(const CommandConfig& c) {
  if (c.command == "orders") {
    const Family f = bc_family(c);
    const auto r = compare_orders(size_or_rank(c, 1, 4), f);
    if (c.format == "text") {
      std::ostringstream os;
      os << "rank " << r.rank << " type " << to_string(f) << "\n"
         << "orders identical: " << (r.identical ? "yes" : "no") << "\n"
         << "Waldspurger order extends Bruhat order: " << (r.extends_bruhat ? "yes" : "no") << "\n"
         << "extra covers: " << r.extra_covers.size() << ", missing covers: " << r.missing_covers.size() << "\n"
         << "bigrassmannian elements: " << r.bigrassmannian_ids.size() << "\n";
      for (const auto& cp : r.extra_bigrassmannian_covers)
        os << "  " << to_string(r.matrices[cp.lower]) << " < " << to_string(r.matrices[cp.upper]) << "\n";
      return os.str();
    }
    return dump(Json{{"rank", r.rank},
                     {"family", to_string(f)},
                     {"convention", "Ftilde"},
                     {"identical", r.identical},
                     {"extends_bruhat", r.extends_bruhat},
                     {"extra_covers", covers_json(r.extra_covers, r)},
                     {"missing_covers", covers_json(r.missing_covers, r)},
                     {"bigrassmannian_count", r.bigrassmannian_ids.size()},
                     {"extra_bigrassmannian_covers", covers_json(r.extra_bigrassmannian_covers, r)}});
  }
  if (c.command == "base") {
    if (bc_family(c) != Family::C) throw UsageError("report base is computed in type C");
    const auto r = base_report(size_or_rank(c, 1, 4));
    Json data = Json::array();
    for (const auto& d : r.data) {
      Json cands = Json::array();
      for (const auto& [split, m] : d.candidates)
        cands.push_back(Json{{"split", Json::array({split.first, split.second})}, {"rows", m.to_rows()}});
      data.push_back(Json{{"entry", Json::array({d.i, d.j})},
                          {"value", d.v},
                          {"minimal", signed_list(r.elements, d.minimal_elements)},
                          {"minimal_cs_asm_folds", d.minimal_cs_asm_folds.size()},
                          {"candidates", cands},
                          {"candidate_matches", d.candidate_matches}});
    }
    Json collisions = Json::array();
    for (auto k : r.collisions) {
      Json ms = Json::array();
      for (auto e : r.data[k].minimal_elements)
        ms.push_back(Json{{"signed", r.elements[e].to_string()},
                          {"rows", r.matrices[e].to_rows()},
                          {"in_base", std::find(r.base_ids.begin(), r.base_ids.end(), e) != r.base_ids.end()}});
      collisions.push_back(Json{{"entry", Json::array({r.data[k].i, r.data[k].j})}, {"value", r.data[k].v}, {"minimal", ms}});
    }
    const Json j{{"rank", r.rank},
                 {"family", "C"},
                 {"convention", "Ftilde"},
                 {"bigrassmannian_count", r.bigrassmannian_ids.size()},
                 {"base_count", r.base_ids.size()},
                 {"bigrassmannian_not_in_base", [&] {
                    std::vector<std::size_t> out;
                    std::set_difference(r.bigrassmannian_ids.begin(), r.bigrassmannian_ids.end(), r.base_ids.begin(),
                                        r.base_ids.end(), std::back_inserter(out));
                    return signed_list(r.elements, out);
                  }()},
                 {"fixing_table", r.fixing_table.to_rows()},
                 {"fixing_sum", entry_sum(r.fixing_table)},
                 {"octahedral", octahedral(r.rank)},
                 {"fixing_table_matches_group", r.fixing_table == r.fixing_table_observed},
                 {"collisions", collisions},
                 {"conjecture_holds", r.conjecture_holds},
                 {"base_never_least", signed_list(r.elements, r.base_never_least)},
                 {"dm_completion_size", r.dm_size ? Json(*r.dm_size) : Json(nullptr)},
                 {"cs_asm_count", r.cs_asm_count},
                 {"cs_asm_distinct_folds", r.cs_asm_fold_count},
                 {"data", data}};
    if (c.format == "text") {
      std::ostringstream os;
      os << "rank " << r.rank << ": " << r.bigrassmannian_ids.size() << " bigrassmannian, " << r.base_ids.size()
         << " base, DM completion " << (r.dm_size ? std::to_string(*r.dm_size) : "?") << "\n"
         << "fixing table " << to_string(r.fixing_table) << " sum " << entry_sum(r.fixing_table) << "\n";
      for (const auto& col : collisions) os << "collision " << col.dump() << "\n";
      os << "conjecture holds: " << (r.conjecture_holds ? "yes" : "no") << "\n";
      return os.str();
    }
    return dump(j);
  }
  if (c.command == "census") {
    const auto census = census_permutohedron(require_range(c.n, "--n", 2, 5));
    if (c.format == "json") {
      Json out = Json::array();
      for (const auto& p : census) out.push_back(Json{{"point", vector_json(p.point)}, {"asm_ids", p.asm_ids}});
      return dump(out);
    }
    return census_csv(census);
  }
  throw UsageError("unknown report " + c.command);
}

inline std::string render(const CommandConfig& c) {
  if (c.command != "tile") throw UsageError("unknown render target " + c.command);
  if (!c.n || *c.n != 3) throw UsageError("render tile supports --n 3 only (the root space must be 2-dimensional)");
  return render_tile_svg(3);
}

inline void add_common(CLI::App* s, CommandConfig& c) {
  s->add_option("--n", c.n, "size n (permutations of n letters, n x n ASMs)");
  s->add_option("--rank", c.rank, "rank of the type B/C root system");
  s->add_option("--family", c.family, "A, B or C")->check(CLI::IsMember({"A", "B", "C"}));
  s->add_option("--convention", c.convention, "folding convention F or Ftilde")->check(CLI::IsMember({"F", "Ftilde"}));
  s->add_option("--samples", c.samples, "number of random samples");
  s->add_option("--seed", c.seed, "random seed (default 0)");
  s->add_option("--out", c.out, "write output to this file instead of stdout");
  s->add_option("--format", c.format, "json, csv, dot, svg or text")->check(CLI::IsMember({"json", "csv", "dot", "svg", "text"}));
  s->add_option("--replay", c.replay, "re-run a counterexample JSON file");
}

}  // namespace detail

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CommandConfig cfg;
  CLI::App app{"Waldspurger transforms, ASM lattices and Meinrenken tiles"};
  app.require_subcommand(1);
  app.footer(
      "CSV output: report census writes point,multiplicity,asm_ids (points as p/q, ids separated by spaces);\n"
      "enumerate um|um-bc --format csv writes a 'vector' header and one space-separated vector per line.\n"
      "Exit status: 0 success, 1 counterexample found (JSON on stdout), 2 usage or malformed input.");
  const std::vector<std::pair<std::string, std::vector<std::string>>> groups{
      {"wt", {"perm", "asm", "signed"}},
      {"enumerate", {"um", "um-bc", "asm", "cs-asm"}},
      {"lattice", {"build", "dm", "irreducibles"}},
      {"verify", {"identity", "entropy", "image", "fold", "tiling", "reflection", "volumes"}},
      {"report", {"orders", "base", "census"}},
      {"render", {"tile"}},
  };
  for (const auto& [g, cmds] : groups) {
    CLI::App* group = app.add_subcommand(g);
    group->require_subcommand(1);
    for (const auto& name : cmds) {
      CLI::App* leaf = group->add_subcommand(name);
      detail::add_common(leaf, cfg);
      if (g == "wt") leaf->add_option("value", cfg.value, "one-line permutation, JSON rows, signed window, or @file")->required();
      leaf->callback([&cfg, g = g, name = name] {
        cfg.group = g;
        cfg.command = name;
      });
    }
  }
  std::vector<std::string> args;
  for (int k = argc - 1; k >= 1; --k) args.emplace_back(argv[k]);
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  int code = kOk;
  std::string text;
  try {
    if (cfg.group == "verify") code = detail::verify(cfg, text);
    else if (cfg.group == "wt") text = detail::wt(cfg);
    else if (cfg.group == "enumerate") text = detail::enumerate(cfg);
    else if (cfg.group == "lattice") text = detail::lattice(cfg);
    else if (cfg.group == "report") text = detail::report(cfg);
    else text = detail::render(cfg);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const InvariantError& e) {
    Json j{{"verified", false}, {"error", e.what()}};
    out << detail::dump(j);
    return kCounterexample;
  }
  if (!cfg.out.empty()) {
    std::ofstream f(cfg.out, std::ios::binary);
    if (!f) {
      err << "error: cannot write " << cfg.out << "\n";
      return kUsage;
    }
    f << text;
  } else {
    out << text;
  }
  return code;
}

}  // namespace wald::cli
