#include "hcmcg/json_io.hpp"

#include <fstream>
#include <limits>

#include "hcmcg/error.hpp"

namespace hcmcg {

Json int_to_json(const Int& x) {
  if (x.fits_slong_p()) return Json(x.get_si());
  return Json(x.get_str());
}

Int int_from_json(const Json& j) {
  if (j.is_number_integer()) return Int(j.get<long>());
  if (j.is_string()) {
    Int x;
    if (x.set_str(j.get<std::string>(), 10) != 0) throw InvalidArgument("not an integer: " + j.get<std::string>());
    return x;
  }
  throw InvalidArgument("expected an integer, got " + j.dump());
}

Json vector_to_json(const IntVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(int_to_json(x));
  return out;
}

IntVector vector_from_json(const Json& j) {
  if (!j.is_array()) throw InvalidArgument("expected an integer list, got " + j.dump());
  IntVector out;
  for (const auto& x : j) out.push_back(int_from_json(x));
  return out;
}

Json matrix_to_json(const IntMatrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(vector_to_json(m.row(i)));
  return out;
}

IntMatrix matrix_from_json(const Json& j) {
  if (!j.is_array()) throw InvalidArgument("expected a matrix (list of rows), got " + j.dump());
  std::vector<IntVector> rows;
  for (const auto& r : j) rows.push_back(vector_from_json(r));
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw DimensionMismatch("matrix rows have different lengths");
    for (std::size_t c = 0; c < cols; ++c) m(i, c) = rows[i][c];
  }
  return m;
}

Json group_to_json(const FinAbGroup& g) {
  Json out = Json::object();
  out["rank"] = g.rank();
  out["torsion"] = vector_to_json(g.torsion());
  return out;
}

FinAbGroup group_from_json(const Json& j) {
  if (!j.is_object()) throw InvalidArgument("expected a group object, got " + j.dump());
  std::size_t rank = j.value("rank", 0u);
  IntVector torsion = vector_from_json(j.value("torsion", Json::array()));
  return FinAbGroup::from_invariants(rank, torsion);
}

Json element_to_json(const GroupElement& x) {
  Json out = Json::object();
  out["group"] = group_to_json(x.owner());
  out["coords"] = vector_to_json(x.coords());
  return out;
}

Json presentation_to_json(const Presentation& p) {
  Json out = Json::object();
  out["gens"] = p.num_generators;
  out["relators"] = Json::array();
  for (const auto& w : p.relators) out["relators"].push_back(w);
  return out;
}

Presentation presentation_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("gens")) throw InvalidArgument("presentation needs a \"gens\" field");
  Presentation p;
  p.num_generators = j.at("gens").get<std::size_t>();
  for (const auto& w : j.value("relators", Json::array())) p.relators.push_back(w.get<Word>());
  p.validate();
  return p;
}

Json module_to_json(const GModule& m) {
  Json out = Json::object();
  out["dimension"] = m.dimension;
  out["modulus"] = int_to_json(m.modulus);
  out["action"] = Json::array();
  for (const auto& a : m.action) out["action"].push_back(matrix_to_json(a));
  return out;
}

GModule module_from_json(const Json& j) {
  if (!j.is_object()) throw InvalidArgument("module must be a JSON object");
  GModule m;
  m.modulus = j.contains("modulus") ? int_from_json(j.at("modulus")) : Int(0);
  for (const auto& a : j.value("action", Json::array())) m.action.push_back(matrix_from_json(a));
  if (j.contains("dimension"))
    m.dimension = j.at("dimension").get<std::size_t>();
  else if (!m.action.empty())
    m.dimension = m.action.front().rows();
  return m;
}

Json class_to_json(const AffineSurfaceClass& c, bool with_translations) {
  Json out = Json::object();
  out["g"] = c.base.g;
  out["h"] = c.base.h();
  out["pairs"] = Json::array();
  for (const auto& [a, b] : c.base.pairs) out["pairs"].push_back(Json::array({matrix_to_json(a), matrix_to_json(b)}));
  if (with_translations) {
    out["translations"] = Json::array();
    for (const auto& [v, w] : c.translations)
      out["translations"].push_back(Json::array({vector_to_json(v), vector_to_json(w)}));
  }
  return out;
}

bool class_json_has_translations(const Json& j) { return j.is_object() && j.contains("translations"); }

AffineSurfaceClass class_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("g") || !j.contains("pairs"))
    throw InvalidArgument("class file needs \"g\" and \"pairs\" fields");
  SurfaceClass base;
  base.g = j.at("g").get<std::size_t>();
  for (const auto& pr : j.at("pairs")) {
    if (!pr.is_array() || pr.size() != 2) throw InvalidArgument("each pair must be [A, B]");
    base.pairs.push_back({matrix_from_json(pr[0]), matrix_from_json(pr[1])});
  }
  if (j.contains("h") && j.at("h").get<std::size_t>() != base.h())
    throw DimensionMismatch("\"h\" does not match the number of pairs");
  AffineSurfaceClass c = AffineSurfaceClass::untranslated(base);
  if (class_json_has_translations(j)) {
    c.translations.clear();
    for (const auto& pr : j.at("translations")) {
      if (!pr.is_array() || pr.size() != 2) throw InvalidArgument("each translation must be [v, w]");
      c.translations.push_back({vector_from_json(pr[0]), vector_from_json(pr[1])});
    }
  }
  return c;
}

Json parse_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot read '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw InvalidArgument("'" + path + "' is not valid JSON: " + e.what());
  }
}

}  // namespace hcmcg
