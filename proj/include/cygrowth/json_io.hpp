#pragma once

#include <optional>
#include <string>

#include "cygrowth/oracle.hpp"
#include "cygrowth/quiver.hpp"

namespace cygrowth {

struct QuiverFile {
  WeightedQuiver quiver;
  std::optional<CYDatum> cy;
};

/// Format: {"vertices": n, "arrows": [{"id","source","target","weight"}...],
///          "cy": {"dimension", "mu", "ell"}}
QuiverFile load_quiver_file(const std::string& path);
std::string quiver_to_json(const QuiverFile& qf);

struct RelationsFile {
  std::optional<std::vector<Relation>> relations;
  std::optional<MeshData> mesh;
  std::optional<Semipotential> semipotential;
};

/// Accepts {"relations": [...]}, {"tau": {...}} or
/// {"semipotential": {"y_basis": [...], "g": [...]}} (any combination).
RelationsFile load_relations_file(const std::string& path, const WeightedQuiver& quiver);

}  // namespace cygrowth
