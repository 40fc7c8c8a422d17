#include "cygrowth/json_io.hpp"

#include <fstream>

#include "cygrowth/error.hpp"
#include "json.hpp"

namespace cygrowth {

namespace {

using nlohmann::json;

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::ParseError, "cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw Error(Errc::ParseError, std::string("bad JSON in ") + path + ": " + e.what());
  }
  return j;
}

template <typename T>
T field(const json& j, const char* name) {
  if (!j.contains(name))
    throw Error(Errc::ParseError, std::string("missing field: ") + name);
  try {
    return j.at(name).get<T>();
  } catch (const std::exception&) {
    throw Error(Errc::ParseError, std::string("field has the wrong type: ") + name);
  }
}

std::vector<PathTerm> parse_terms(const json& terms) {
  std::vector<PathTerm> out;
  for (auto& t : terms) {
    PathTerm pt;
    pt.coeff = parse_rat(field<std::string>(t, "coeff"));
    pt.path = field<std::vector<std::string>>(t, "path");
    out.push_back(std::move(pt));
  }
  return out;
}

}  // namespace

QuiverFile load_quiver_file(const std::string& path) {
  json j = load_json(path);
  QuiverFile qf;
  qf.quiver.n_vertices = field<int>(j, "vertices");
  if (j.contains("arrows"))
    for (auto& a : j.at("arrows")) {
      Arrow arrow;
      arrow.id = field<std::string>(a, "id");
      arrow.source = field<int>(a, "source");
      arrow.target = field<int>(a, "target");
      arrow.weight = field<long>(a, "weight");
      qf.quiver.arrows.push_back(std::move(arrow));
    }
  if (j.contains("cy")) {
    const json& c = j.at("cy");
    CYDatum cy;
    cy.dimension = field<int>(c, "dimension");
    cy.mu = field<std::vector<int>>(c, "mu");
    cy.ell = field<std::vector<long>>(c, "ell");
    qf.cy = cy;
  }
  return qf;
}

std::string quiver_to_json(const QuiverFile& qf) {
  json j;
  j["vertices"] = qf.quiver.n_vertices;
  j["arrows"] = json::array();
  for (auto& a : qf.quiver.arrows)
    j["arrows"].push_back(
        {{"id", a.id}, {"source", a.source}, {"target", a.target}, {"weight", a.weight}});
  if (qf.cy) {
    j["cy"] = {{"dimension", qf.cy->dimension}, {"mu", qf.cy->mu}, {"ell", qf.cy->ell}};
  }
  return j.dump(2);
}

RelationsFile load_relations_file(const std::string& path, const WeightedQuiver& quiver) {
  json j = load_json(path);
  RelationsFile rf;
  if (j.contains("relations")) {
    std::vector<Relation> rels;
    for (auto& r : j.at("relations")) {
      Relation rel;
      rel.source = field<int>(r, "source");
      rel.target = field<int>(r, "target");
      rel.weight = field<long>(r, "weight");
      rel.terms = parse_terms(r.at("terms"));
      rels.push_back(std::move(rel));
    }
    rf.relations = std::move(rels);
  }
  if (j.contains("tau")) {
    MeshData mesh;
    for (auto& [arrow_id, combo] : j.at("tau").items()) {
      std::vector<std::pair<Rat, std::string>> entries;
      for (auto& e : combo)
        entries.emplace_back(parse_rat(field<std::string>(e, "coeff")),
                             field<std::string>(e, "arrow"));
      mesh.tau[arrow_id] = std::move(entries);
    }
    rf.mesh = std::move(mesh);
  }
  if (j.contains("semipotential")) {
    const json& s = j.at("semipotential");
    Semipotential sp;
    if (s.contains("y_basis")) sp.y_basis = field<std::vector<std::string>>(s, "y_basis");
    for (auto& e : s.at("g")) {
      Semipotential::Entry entry;
      entry.y = field<std::string>(e, "y");
      entry.x = field<std::string>(e, "x");
      entry.g = parse_terms(e.at("terms"));
      sp.entries.push_back(std::move(entry));
    }
    rf.semipotential = std::move(sp);
  }
  if (!rf.relations && !rf.mesh && !rf.semipotential)
    throw Error(Errc::ParseError,
                "relations file needs one of: relations, tau, semipotential");
  (void)quiver;
  return rf;
}

}  // namespace cygrowth
