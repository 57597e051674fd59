#pragma once

#include "mfkit/matpoly.hpp"

#include <json.hpp>

#include <string>

namespace mfkit {

/// Matrix file format: {"vars": [names], "rows": [[entry strings]]}.
PolyMat matrix_from_json(const nlohmann::json& j);
nlohmann::json matrix_to_json(const PolyMat& m,
                              const MonomialOrder& order = MonomialOrder{});

PolyMat read_matrix_file(const std::string& path);
void write_matrix_file(const std::string& path, const PolyMat& m);

/// One generator per line in the polynomial grammar; an optional first line
/// "vars: n1 n2 ..." declares the table, else Y1..Y4 is assumed.
std::pair<std::vector<Poly>, VarTablePtr> read_ideal_file(const std::string& path);

}  // namespace mfkit
