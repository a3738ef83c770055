#pragma once

// JSON forms of the domain values. Index pairs are [a, b] arrays; covers
// are {"rc": [...], "rs": [...], "cs": [...]} with each list sorted.

#include <string>
#include <vector>

#include "json.hpp"
#include "widecover/covers.hpp"
#include "widecover/latin.hpp"
#include "widecover/partition.hpp"
#include "widecover/profile.hpp"
#include "widecover/witness.hpp"

namespace widecover {

using Json = nlohmann::ordered_json;

inline Json to_json(const Partition& y) { return Json(y.parts()); }

inline Json to_json(const RowSubset& s) { return Json(s.indices); }

inline Json to_json(const GridSet& q) {
  Json out = Json::array();
  for (auto [c, s] : q.cells()) out.push_back({c, s});
  return out;
}

inline Json to_json(const PairCover& p) {
  Json rc = Json::array();
  Json rs = Json::array();
  for (auto [r, c] : p.rc) rc.push_back({r, c});
  for (auto [r, s] : p.rs) rs.push_back({r, s});
  return Json{{"rc", rc}, {"rs", rs}, {"cs", to_json(p.cs)}};
}

inline Json to_json(const Profile& prof) {
  return Json{{"p", prof.p}, {"q", prof.q}, {"I", prof.ones}, {"II", prof.twos}};
}

inline Json to_json(const Filling& f) { return Json(f.rows); }

/// Witness record: {subset, k, cover, sizes: {cover, diagram}}.
inline Json witness_json(const RowSubset& subset, int k, const PairCover& cover, int diagram_size) {
  return Json{{"subset", to_json(subset)},
              {"k", k},
              {"cover", to_json(cover)},
              {"sizes", {{"cover", cover.size()}, {"diagram", diagram_size}}}};
}

/// Reads a cover for diagram y; the column/symbol grid gets side a_1.
inline PairCover pair_cover_from_json(const Json& j, const Partition& y) {
  auto read_pairs = [&](const char* key) {
    std::vector<IndexPair> out;
    if (!j.contains(key)) return out;
    detail::require(j.at(key).is_array(), std::string("cover field '") + key + "' must be an array");
    for (const Json& item : j.at(key)) {
      detail::require(item.is_array() && item.size() == 2 && item[0].is_number_integer() &&
                          item[1].is_number_integer(),
                      std::string("cover field '") + key + "' must hold [int, int] pairs");
      out.emplace_back(item[0].get<int>(), item[1].get<int>());
    }
    return out;
  };
  detail::require(j.is_object(), "cover must be a JSON object");
  PairCover p(y.width());
  for (auto pr : read_pairs("rc")) p.rc.insert(pr);
  for (auto pr : read_pairs("rs")) p.rs.insert(pr);
  for (auto [c, s] : read_pairs("cs")) p.cs.insert(c, s);
  for (const auto* part : {&p.rc, &p.rs}) {
    for (auto [row, other] : *part) {
      detail::require(row >= 1 && row <= y.num_rows() && other >= 1 && other <= y.width(),
                      "cover pair (" + std::to_string(row) + "," + std::to_string(other) + ") out of range");
    }
  }
  return p;
}

}  // namespace widecover
