#pragma once

/// JSON encodings. Every exact integer is written as a decimal string so that
/// consumers with 64-bit number types cannot corrupt values.

#include "facecount/fvector.hpp"
#include "facecount/polytope.hpp"

#include <json.hpp>

namespace facecount {

using Json = nlohmann::ordered_json;

inline Json to_json(const FaceCountVector& f) {
  Json counts = Json::array();
  for (const auto& c : f.counts()) counts.push_back(c.str());
  return Json{{"dim", f.dim()}, {"counts", counts}, {"realized", f.realized()}};
}

inline FaceCountVector fvector_from_json(const Json& j) {
  std::vector<Integer> counts;
  for (const auto& c : j.at("counts")) counts.emplace_back(c.get<std::string>());
  return FaceCountVector(j.at("dim").get<int>(), std::move(counts), j.at("realized").get<bool>());
}

/// {"ambient_dim": d, "vertices": [[["num", "den"], ...], ...]}
inline Json to_json(const VPolytope& p) {
  Json vertices = Json::array();
  for (const auto& v : p.vertices()) {
    Json coords = Json::array();
    for (const auto& x : v.coords) coords.push_back(Json::array({numerator_of(x).str(), denominator_of(x).str()}));
    vertices.push_back(std::move(coords));
  }
  return Json{{"ambient_dim", p.dim()}, {"vertices", vertices}};
}

inline VPolytope polytope_from_json(const Json& j) {
  std::vector<Point> points;
  for (const auto& v : j.at("vertices")) {
    Point p;
    for (const auto& x : v) {
      const Integer den(x.at(1).get<std::string>());
      if (den <= 0) throw DomainError("polytope_from_json: denominator must be positive");
      p.coords.emplace_back(Integer(x.at(0).get<std::string>()), den);
    }
    points.push_back(std::move(p));
  }
  return VPolytope(j.at("ambient_dim").get<std::size_t>(), std::move(points));
}

/// {"n_vertices", "n_facets", "incidence": one bit string per vertex row}
inline Json to_json(const IncidenceStructure& s) {
  return Json{{"n_vertices", s.n_vertices()}, {"n_facets", s.n_facets()}, {"incidence", s.row_strings()}};
}

inline IncidenceStructure incidence_from_json(const Json& j) {
  const auto nv = j.at("n_vertices").get<std::size_t>();
  const auto nf = j.at("n_facets").get<std::size_t>();
  const auto rows = j.at("incidence").get<std::vector<std::string>>();
  if (rows.size() != nv) throw DomainError("incidence_from_json: row count differs from n_vertices");
  std::vector<VertexSet> cols(nf, VertexSet(nv));
  for (std::size_t v = 0; v < nv; ++v) {
    if (rows[v].size() != nf) throw DomainError("incidence_from_json: row length differs from n_facets");
    for (std::size_t f = 0; f < nf; ++f) {
      if (rows[v][f] == '1') {
        cols[f].insert(v);
      } else if (rows[v][f] != '0') {
        throw DomainError("incidence_from_json: rows must be bit strings");
      }
    }
  }
  return IncidenceStructure(nv, std::move(cols));
}

}  // namespace facecount
