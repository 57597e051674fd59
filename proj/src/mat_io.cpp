#include "mfkit/mat_io.hpp"

#include <fstream>
#include <sstream>

namespace mfkit {

PolyMat matrix_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("vars") || !j.contains("rows"))
    throw Error("matrix json: expected object with 'vars' and 'rows'");
  std::vector<std::string> names;
  for (const auto& v : j.at("vars")) names.push_back(v.get<std::string>());
  auto table = std::make_shared<const VarTable>(std::move(names));
  std::vector<std::vector<Poly>> rows;
  for (const auto& row : j.at("rows")) {
    std::vector<Poly> r;
    for (const auto& cell : row) r.push_back(Poly::parse(cell.get<std::string>(), table));
    rows.push_back(std::move(r));
  }
  return PolyMat(std::move(rows));
}

nlohmann::json matrix_to_json(const PolyMat& m, const MonomialOrder& order) {
  nlohmann::json j;
  j["vars"] = m.table()->names();
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t k = 0; k < m.size(); ++k) row.push_back(m.at(i, k).str(order));
    rows.push_back(std::move(row));
  }
  j["rows"] = std::move(rows);
  return j;
}

PolyMat read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error(path + ": " + e.what());
  }
  return matrix_from_json(j);
}

void write_matrix_file(const std::string& path, const PolyMat& m) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open " + path + " for writing");
  out << matrix_to_json(m).dump(2) << "\n";
}

std::pair<std::vector<Poly>, VarTablePtr> read_ideal_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);

  VarTablePtr table = VarTable::standard();
  std::size_t start = 0;
  if (!lines.empty() && lines[0].rfind("vars:", 0) == 0) {
    std::istringstream ss(lines[0].substr(5));
    std::vector<std::string> names;
    std::string name;
    while (ss >> name) names.push_back(name);
    table = std::make_shared<const VarTable>(std::move(names));
    start = 1;
  }
  std::vector<Poly> gens;
  for (std::size_t i = start; i < lines.size(); ++i) {
    std::string s = lines[i];
    if (s.find_first_not_of(" \t\r") == std::string::npos) continue;
    gens.push_back(Poly::parse(s, table));
  }
  return {std::move(gens), table};
}

}  // namespace mfkit
