#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "waldspurger/bc_fold.hpp"
#include "waldspurger/error.hpp"
#include "waldspurger/matrix.hpp"
#include "waldspurger/poset.hpp"
#include "waldspurger/rational.hpp"
#include "waldspurger/um_vectors.hpp"

namespace wald {

using Json = nlohmann::ordered_json;

inline Json matrix_json(const IntMatrix& m) { return Json{{"rows", m.to_rows()}}; }

inline Json matrix_json(const RatMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return Json{{"rows", std::move(rows)}};
}

inline Json vector_json(const RatVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

inline Json asm_json(const IntMatrix& m) { return Json{{"n", m.rows()}, {"rows", m.to_rows()}}; }

inline Json wt_json(const IntMatrix& w, Family family) {
  return Json{{"n", w.rows()}, {"rows", w.to_rows()}, {"family", to_string(family)}};
}

inline Json bc_json(const BCMatrix& m) {
  return Json{{"n", m.m.rows()},
              {"rows", m.m.to_rows()},
              {"family", to_string(m.family)},
              {"convention", to_string(m.convention)}};
}

inline Json ideal_json(const RootIdeal& ideal) {
  Json pairs = Json::array();
  for (const auto& r : ideal.roots) pairs.push_back(Json::array({r.first, r.last}));
  return pairs;
}

inline Json poset_json(const FinitePoset& p) {
  Json covers = Json::array();
  for (const auto& [a, b] : p.covers()) covers.push_back(Json::array({a, b}));
  return Json{{"elements", p.labels()}, {"covers", std::move(covers)}};
}

// Accepts {"rows": [[...]]} or a bare array of rows.
inline IntMatrix int_matrix_from_json(const Json& j) {
  const Json& rows = j.is_object() ? j.at("rows") : j;
  if (!rows.is_array() || rows.empty()) throw InputError("matrix JSON needs a non-empty array of rows");
  std::vector<std::vector<std::int64_t>> data;
  for (const auto& r : rows) {
    if (!r.is_array()) throw InputError("matrix JSON rows must be arrays");
    std::vector<std::int64_t> row;
    for (const auto& x : r) {
      if (!x.is_number_integer()) throw InputError("matrix JSON entries must be integers");
      row.push_back(x.get<std::int64_t>());
    }
    if (!data.empty() && row.size() != data.front().size()) throw InputError("matrix JSON rows differ in length");
    data.push_back(std::move(row));
  }
  return IntMatrix::from_rows(data);
}

inline Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace wald
