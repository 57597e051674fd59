// Command-line front end: catalog verification, classification, equivalence
// tests, Groebner bases, Fitting ideals, and factorization completion.
//
// Exit codes: 0 success / equivalent, 1 negative result, 2 input error.

#include "mfkit/catalog.hpp"
#include "mfkit/equiv.hpp"
#include "mfkit/groebner.hpp"
#include "mfkit/mat_io.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>

using namespace mfkit;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitInputError = 2;

void emit(const json& j, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::ofstream f(out_path);
    if (!f) throw Error("cannot write '" + out_path + "'");
    f << j.dump(2) << "\n";
  }
}

CycNum parse_scalar(const std::string& text) {
  auto empty = std::make_shared<const VarTable>(std::vector<std::string>{});
  Poly p = Poly::parse(text, empty);
  if (!p.is_constant()) throw Error("expected a scalar, got '" + text + "'");
  return p.constant_value();
}

std::map<std::string, std::string> parse_params(const std::string& text) {
  std::map<std::string, std::string> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string item = text.substr(pos, comma == std::string::npos ? comma : comma - pos);
    std::size_t eq = item.find('=');
    if (eq == std::string::npos || eq == 0)
      throw Error("bad parameter item '" + item + "', expected key=value");
    if (!out.emplace(item.substr(0, eq), item.substr(eq + 1)).second)
      throw Error("duplicate parameter '" + item.substr(0, eq) + "'");
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

std::string need(const std::map<std::string, std::string>& kv, const std::string& key) {
  auto it = kv.find(key);
  if (it == kv.end()) throw Error("missing parameter '" + key + "'");
  return it->second;
}

MonomialOrder order_from_name(const std::string& name) {
  if (name == "lex") return {OrderKind::lex};
  if (name == "grevlex") return {OrderKind::grevlex};
  throw Error("unknown order '" + name + "', expected lex or grevlex");
}

Poly read_single_form(const std::string& path) {
  auto [gens, table] = read_ideal_file(path);
  if (gens.size() != 1)
    throw Error("'" + path + "': expected exactly one polynomial, found " +
                std::to_string(gens.size()));
  return gens[0];
}

int cmd_verify_catalog(const std::string& out_path) {
  auto t = VarTable::standard();
  Poly f = f4(t);
  json checks = json::array();
  int failed = 0;
  auto record = [&](const std::string& name, bool ok, const std::string& detail = "") {
    json c{{"name", name}, {"ok", ok}};
    if (!detail.empty()) c["detail"] = detail;
    checks.push_back(c);
    if (!ok) ++failed;
  };

  std::vector<CatalogEntry> entries = enumerate_two_gen();
  for (auto& part : {enumerate_M3(), enumerate_N3()})
    entries.insert(entries.end(), part.begin(), part.end());

  for (const CatalogEntry& e : entries) {
    std::string name = e.family + ":" + e.params;
    std::size_t n = e.mf.phi.size();
    bool ok = e.mf.f == f && e.mf.phi * e.mf.psi == PolyMat::scalar(n, f) &&
              e.mf.psi * e.mf.phi == PolyMat::scalar(n, f) && e.mf.phi.det() == f;
    bool rank_ok = ok && rank_of_mf(e.mf) == 1;
    record(name, ok && rank_ok, ok ? "" : "product or determinant mismatch");
  }

  // Fitting formula for the two-generated presentation matrices.
  const int pairs[3][2] = {{2, 3}, {2, 4}, {3, 4}};
  for (auto [i, j] : pairs)
    for (const CycNum& a : root_order())
      for (const CycNum& b : root_order()) {
        TwoGenParams p{i, j, a, b};
        Ideal fit = fitting_ideal(phi_ij(p, t), 1);
        auto var = [&](int k) { return Poly::variable(t, static_cast<std::size_t>(k - 1)); };
        Ideal expect({var(1) - a * var(p.s()), var(i) - b * var(j),
                      var(p.s()) * var(p.s()), var(j) * var(j)},
                     fit.order);
        record("fitting:" + p.str(), ideal_equal(fit, expect));
      }

  json out{{"checked", checks.size()}, {"failed", failed}, {"checks", checks}};
  emit(out, out_path);
  return failed == 0 ? kExitOk : kExitNegative;
}

json report_to_json(const ClassReport& rep) {
  json classes = json::array();
  for (const ClassInfo& c : rep.classes)
    classes.push_back({{"id", c.id},
                       {"family", c.family},
                       {"params", c.params},
                       {"size", c.size()}});
  return classes;
}

int cmd_classify(const std::string& generators, bool exhaustive, int jobs,
                 const std::string& out_path) {
  ClassifyOptions opt;
  opt.exhaustive = exhaustive;
  opt.fast_rules = !exhaustive;
  opt.jobs = jobs;

  json out;
  json classes = json::array();
  int next_id = 0;
  auto absorb = [&](const ClassReport& rep) {
    for (const ClassInfo& c : rep.classes)
      classes.push_back({{"id", next_id++},
                         {"family", c.family},
                         {"params", c.params},
                         {"size", c.size()}});
  };
  if (generators == "2" || generators == "all") {
    ClassReport rep = classify(enumerate_two_gen(), opt);
    out["two_generated_classes"] = rep.classes.size();
    absorb(rep);
  }
  if (generators == "3" || generators == "all") {
    std::vector<CatalogEntry> entries = enumerate_M3();
    auto n3 = enumerate_N3();
    entries.insert(entries.end(), n3.begin(), n3.end());
    ClassReport rep = classify(entries, opt);
    out["three_generated_classes"] = rep.classes.size();
    absorb(rep);
  }
  out["classes"] = classes;
  out["total_classes"] = classes.size();
  emit(out, out_path);
  return kExitOk;
}

int cmd_equiv(const std::string& x_path, const std::string& y_path,
              const std::string& witness_path, const std::string& relations_path) {
  PolyMat x = read_matrix_file(x_path);
  PolyMat y = read_matrix_file(y_path);

  if (!witness_path.empty()) {
    std::ifstream f(witness_path);
    if (!f) throw Error("cannot read '" + witness_path + "'");
    json j = json::parse(f);
    if (!j.contains("U") || !j.contains("V"))
      throw Error("witness file must contain \"U\" and \"V\" matrices");
    PolyMat u = matrix_from_json(j.at("U"));
    PolyMat v = matrix_from_json(j.at("V"));
    std::vector<Poly> relations;
    if (!relations_path.empty()) {
      auto [gens, table] = read_ideal_file(relations_path);
      relations = gens;
    }
    bool ok = verify_witness(x, y, u, v, relations);
    std::cout << (ok ? "witness verified" : "witness rejected") << "\n";
    return ok ? kExitOk : kExitNegative;
  }

  EquivVerdict v = decide_equiv(x, y);
  std::cout << (v.equivalent ? "equivalent" : "not-equivalent") << "\n";
  std::cout << "certificate (reduced Groebner basis of the equivalence ideal):\n";
  for (const std::string& s : v.certificate) std::cout << "  " << s << "\n";
  return v.equivalent ? kExitOk : kExitNegative;
}

int cmd_gb(const std::string& path, const std::string& order_name) {
  auto [gens, table] = read_ideal_file(path);
  GroebnerBasis gb = buchberger(Ideal(gens, order_from_name(order_name)));
  for (const Poly& p : gb.elems) std::cout << p.str(gb.order) << "\n";
  return kExitOk;
}

int cmd_fitting(const std::string& path, int t_index, const std::string& order_name) {
  PolyMat m = read_matrix_file(path);
  if (t_index < 0 || static_cast<std::size_t>(t_index) > m.size())
    throw Error("--t must be between 0 and the matrix size");
  MonomialOrder order = order_from_name(order_name);
  GroebnerBasis gb =
      buchberger(fitting_ideal(m, static_cast<std::size_t>(t_index), order));
  for (const Poly& p : gb.elems) std::cout << p.str(gb.order) << "\n";
  return kExitOk;
}

int cmd_complete(const std::vector<std::string>& paths, unsigned variant,
                 const std::string& out_path) {
  PolyMat m = complete_factorization(
      read_single_form(paths[0]), read_single_form(paths[1]),
      read_single_form(paths[2]), read_single_form(paths[3]), variant);
  emit(matrix_to_json(m), out_path);
  return kExitOk;
}

int cmd_catalog(const std::string& family, const std::string& params_text,
                const std::string& out_path) {
  auto kv = parse_params(params_text);
  PolyMat m;
  if (family == "phi" || family == "psi") {
    TwoGenParams p{std::stoi(need(kv, "i")), std::stoi(need(kv, "j")),
                   parse_scalar(need(kv, "a")), parse_scalar(need(kv, "b"))};
    m = family == "phi" ? phi_ij(p) : psi_ij(p);
  } else if (family == "alpha" || family == "beta") {
    AlphaParams p{parse_scalar(need(kv, "b")), parse_scalar(need(kv, "c")),
                  parse_scalar(need(kv, "d")), parse_scalar(need(kv, "eps"))};
    m = family == "alpha" ? alpha(p) : beta(p);
  } else if (family == "eta") {
    m = eta({parse_scalar(need(kv, "a")), parse_scalar(need(kv, "b")),
             parse_scalar(need(kv, "c")), parse_scalar(need(kv, "eps"))});
  } else if (family == "theta") {
    m = theta({parse_scalar(need(kv, "a")), parse_scalar(need(kv, "b")),
               parse_scalar(need(kv, "c"))});
  } else if (family == "raw") {
    RawCaseParams p;
    p.tag = raw_case_from_string(need(kv, "case"));
    for (const char* name : {"a", "b", "c", "d"})
      p.scalars.push_back(parse_scalar(need(kv, name)));
    if (kv.count("eps")) p.scalars.push_back(parse_scalar(kv.at("eps")));
    m = raw_case(p);
  } else {
    throw Error("unknown family '" + family + "'");
  }
  emit(matrix_to_json(m), out_path);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact matrix-factorization toolkit for the cubic fourfold "
               "equation Y1^3+Y2^3+Y3^3+Y4^3"};
  app.require_subcommand(1);

  std::string out_path;

  auto* verify = app.add_subcommand("verify-catalog",
                                    "verify every catalog factorization");
  std::string verify_out;
  verify->add_option("-o,--output", verify_out, "write the JSON report here");

  auto* classify_cmd = app.add_subcommand("classify",
                                          "partition catalog modules into "
                                          "isomorphism classes");
  std::string generators = "all";
  bool exhaustive = false;
  int jobs = 1;
  std::string classify_out;
  classify_cmd->add_option("--generators", generators, "2, 3 or all")
      ->check(CLI::IsMember({"2", "3", "all"}));
  classify_cmd->add_flag("--exhaustive", exhaustive,
                         "decide every pair instead of using the proven rules");
  classify_cmd->add_option("--jobs", jobs, "parallel equivalence checks")
      ->check(CLI::PositiveNumber);
  classify_cmd->add_option("-o,--output", classify_out, "write the JSON report here");

  auto* equiv_cmd = app.add_subcommand("equiv", "decide Coker X ~ Coker Y");
  std::string x_path, y_path, witness_path, relations_path;
  equiv_cmd->add_option("X", x_path, "matrix JSON file")->required();
  equiv_cmd->add_option("Y", y_path, "matrix JSON file")->required();
  equiv_cmd->add_option("--witness", witness_path,
                        "JSON file with explicit U, V transformation matrices");
  equiv_cmd->add_option("--relations", relations_path,
                        "relation ideal for the witness scalars, one per line");

  auto* gb_cmd = app.add_subcommand("gb", "reduced Groebner basis of an ideal file");
  std::string gb_path, gb_order = "grevlex";
  gb_cmd->add_option("file", gb_path, "one generator per line")->required();
  gb_cmd->add_option("--order", gb_order, "lex or grevlex")
      ->check(CLI::IsMember({"lex", "grevlex"}));

  auto* fitting_cmd = app.add_subcommand("fitting", "Groebner basis of a Fitting ideal");
  std::string fit_path, fit_order = "grevlex";
  int fit_t = 1;
  fitting_cmd->add_option("matrix", fit_path, "matrix JSON file")->required();
  fitting_cmd->add_option("--t", fit_t, "Fitting index (default 1)");
  fitting_cmd->add_option("--order", fit_order, "lex or grevlex")
      ->check(CLI::IsMember({"lex", "grevlex"}));

  auto* complete_cmd =
      app.add_subcommand("complete", "complete four linear forms to a 3x3 "
                         "factorization of f4");
  std::vector<std::string> form_paths;
  unsigned variant = 0;
  std::string complete_out;
  complete_cmd->add_option("forms", form_paths, "four files, one linear form each")
      ->expected(4);
  complete_cmd->add_option("--variant", variant,
                           "select an alternative completion (0 = particular)");
  complete_cmd->add_option("-o,--output", complete_out, "write the matrix JSON here");

  auto* catalog_cmd = app.add_subcommand("catalog", "emit a catalog matrix as JSON");
  std::string family, params_text;
  std::string catalog_out;
  catalog_cmd->add_option("--family", family, "phi|psi|alpha|beta|eta|theta|raw")
      ->required();
  catalog_cmd->add_option("--params", params_text, "comma-separated key=value list")
      ->required();
  catalog_cmd->add_option("-o,--output", catalog_out, "write the matrix JSON here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (*verify) return cmd_verify_catalog(verify_out);
    if (*classify_cmd) return cmd_classify(generators, exhaustive, jobs, classify_out);
    if (*equiv_cmd) return cmd_equiv(x_path, y_path, witness_path, relations_path);
    if (*gb_cmd) return cmd_gb(gb_path, gb_order);
    if (*fitting_cmd) return cmd_fitting(fit_path, fit_t, fit_order);
    if (*complete_cmd) return cmd_complete(form_paths, variant, complete_out);
    if (*catalog_cmd) return cmd_catalog(family, params_text, catalog_out);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
