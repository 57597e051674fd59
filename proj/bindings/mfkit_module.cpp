// Python bindings: a thin, string-based view of the core operations. All
// polynomials cross the boundary in the text grammar; matrices are lists of
// rows of strings.

#include "mfkit/catalog.hpp"
#include "mfkit/equiv.hpp"
#include "mfkit/groebner.hpp"
#include "mfkit/matpoly.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace py = pybind11;
using namespace mfkit;

namespace {

using Rows = std::vector<std::vector<std::string>>;

VarTablePtr table_of(const std::vector<std::string>& names) {
  if (names.empty()) return VarTable::standard();
  return std::make_shared<const VarTable>(names);
}

MonomialOrder order_of(const std::string& name) {
  if (name == "lex") return {OrderKind::lex};
  if (name == "grevlex") return {OrderKind::grevlex};
  throw Error("unknown order '" + name + "'");
}

PolyMat matrix_of(const Rows& rows, const VarTablePtr& t) {
  std::vector<std::vector<Poly>> parsed;
  for (const auto& row : rows) {
    parsed.emplace_back();
    for (const auto& entry : row) parsed.back().push_back(Poly::parse(entry, t));
  }
  return PolyMat(parsed);
}

Rows rows_of(const PolyMat& m, const MonomialOrder& order) {
  Rows out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j)
      out[i].push_back(m.at(i, j).str(order));
  return out;
}

CycNum scalar_of(const std::string& text) {
  auto empty = std::make_shared<const VarTable>(std::vector<std::string>{});
  Poly p = Poly::parse(text, empty);
  if (!p.is_constant()) throw Error("expected a scalar, got '" + text + "'");
  return p.constant_value();
}

std::string need(const std::map<std::string, std::string>& kv, const char* key) {
  auto it = kv.find(key);
  if (it == kv.end()) throw Error(std::string("missing parameter '") + key + "'");
  return it->second;
}

}  // namespace

PYBIND11_MODULE(_mfkit, m) {
  m.doc() = "Exact matrix-factorization toolkit for Y1^3+Y2^3+Y3^3+Y4^3";

  py::register_exception<Error>(m, "MfkitError");

  m.def(
      "f4",
      [](const std::vector<std::string>& vars) {
        return f4(table_of(vars)).str(MonomialOrder{});
      },
      py::arg("vars") = std::vector<std::string>{});

  m.def(
      "groebner_basis",
      [](const std::vector<std::string>& gens, const std::vector<std::string>& vars,
         const std::string& order) {
        auto t = table_of(vars);
        std::vector<Poly> parsed;
        for (const auto& g : gens) parsed.push_back(Poly::parse(g, t));
        GroebnerBasis gb = buchberger(Ideal(parsed, order_of(order)));
        std::vector<std::string> out;
        for (const Poly& p : gb.elems) out.push_back(p.str(gb.order));
        return out;
      },
      py::arg("gens"), py::arg("vars") = std::vector<std::string>{},
      py::arg("order") = "grevlex");

  m.def(
      "fitting_basis",
      [](const Rows& rows, int t_index, const std::vector<std::string>& vars,
         const std::string& order) {
        PolyMat mat = matrix_of(rows, table_of(vars));
        GroebnerBasis gb = buchberger(
            fitting_ideal(mat, static_cast<std::size_t>(t_index), order_of(order)));
        std::vector<std::string> out;
        for (const Poly& p : gb.elems) out.push_back(p.str(gb.order));
        return out;
      },
      py::arg("rows"), py::arg("t") = 1, py::arg("vars") = std::vector<std::string>{},
      py::arg("order") = "grevlex");

  m.def(
      "decide_equiv",
      [](const Rows& x, const Rows& y, const std::vector<std::string>& vars) {
        auto t = table_of(vars);
        EquivVerdict v = decide_equiv(matrix_of(x, t), matrix_of(y, t));
        return py::make_tuple(v.equivalent, v.certificate);
      },
      py::arg("x"), py::arg("y"), py::arg("vars") = std::vector<std::string>{});

  m.def(
      "catalog_matrix",
      [](const std::string& family, const std::map<std::string, std::string>& kv) {
        PolyMat mat;
        if (family == "phi" || family == "psi") {
          TwoGenParams p{std::stoi(need(kv, "i")), std::stoi(need(kv, "j")),
                         scalar_of(need(kv, "a")), scalar_of(need(kv, "b"))};
          mat = family == "phi" ? phi_ij(p) : psi_ij(p);
        } else if (family == "alpha" || family == "beta") {
          AlphaParams p{scalar_of(need(kv, "b")), scalar_of(need(kv, "c")),
                        scalar_of(need(kv, "d")), scalar_of(need(kv, "eps"))};
          mat = family == "alpha" ? alpha(p) : beta(p);
        } else if (family == "eta") {
          mat = eta({scalar_of(need(kv, "a")), scalar_of(need(kv, "b")),
                     scalar_of(need(kv, "c")), scalar_of(need(kv, "eps"))});
        } else if (family == "theta") {
          mat = theta({scalar_of(need(kv, "a")), scalar_of(need(kv, "b")),
                       scalar_of(need(kv, "c"))});
        } else if (family == "raw") {
          RawCaseParams p;
          p.tag = raw_case_from_string(need(kv, "case"));
          for (const char* name : {"a", "b", "c", "d"})
            p.scalars.push_back(scalar_of(need(kv, name)));
          if (kv.count("eps")) p.scalars.push_back(scalar_of(kv.at("eps")));
          mat = raw_case(p);
        } else {
          throw Error("unknown family '" + family + "'");
        }
        return rows_of(mat, MonomialOrder{});
      },
      py::arg("family"), py::arg("params"));

  m.def(
      "complete_factorization",
      [](const std::string& a, const std::string& b, const std::string& g,
         const std::string& d, unsigned variant) {
        auto t = VarTable::standard();
        PolyMat mat = complete_factorization(Poly::parse(a, t), Poly::parse(b, t),
                                             Poly::parse(g, t), Poly::parse(d, t),
                                             variant);
        return rows_of(mat, MonomialOrder{});
      },
      py::arg("alpha"), py::arg("beta"), py::arg("gamma"), py::arg("delta"),
      py::arg("variant") = 0);

  m.def(
      "classify_counts",
      [](const std::string& generators, bool exhaustive, int jobs) {
        ClassifyOptions opt;
        opt.exhaustive = exhaustive;
        opt.fast_rules = !exhaustive;
        opt.jobs = jobs;
        py::dict out;
        if (generators == "2" || generators == "all") {
          out["two_generated_classes"] =
              classify(enumerate_two_gen(), opt).classes.size();
        }
        if (generators == "3" || generators == "all") {
          std::vector<CatalogEntry> entries = enumerate_M3();
          auto n3 = enumerate_N3();
          entries.insert(entries.end(), n3.begin(), n3.end());
          out["three_generated_classes"] = classify(entries, opt).classes.size();
        }
        return out;
      },
      py::arg("generators") = "all", py::arg("exhaustive") = false,
      py::arg("jobs") = 1);

  m.def("verify_catalog", [] {
    auto t = VarTable::standard();
    Poly f = f4(t);
    std::size_t checked = 0, failed = 0;
    std::vector<CatalogEntry> entries = enumerate_two_gen();
    for (auto& part : {enumerate_M3(), enumerate_N3()})
      entries.insert(entries.end(), part.begin(), part.end());
    for (const CatalogEntry& e : entries) {
      ++checked;
      std::size_t n = e.mf.phi.size();
      bool ok = e.mf.phi * e.mf.psi == PolyMat::scalar(n, f) &&
                e.mf.psi * e.mf.phi == PolyMat::scalar(n, f) &&
                rank_of_mf(e.mf) == 1;
      if (!ok) ++failed;
    }
    py::dict out;
    out["checked"] = checked;
    out["failed"] = failed;
    return out;
  });
}
