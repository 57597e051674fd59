#pragma once

#include "mfkit/catalog.hpp"
#include "mfkit/groebner.hpp"
#include "mfkit/matpoly.hpp"

#include <string>
#include <vector>

namespace mfkit {

/// Outcome of an equivalence test, with the reduced Groebner basis of the
/// equivalence ideal as audit certificate. not-equivalent iff the
/// certificate is {1}.
struct EquivVerdict {
  bool equivalent = false;
  std::vector<std::string> certificate;
};

/// The ideal, in scalar unknowns u1..u_{n^2}, v1..v_{n^2}, generated by all
/// coefficients (w.r.t. the Y-monomials) of the entries of U*X - Y*V plus
/// det(U)-1 and det(V)-1. Coker X and Coker Y are isomorphic iff this ideal
/// has a solution, i.e. iff it is not trivial.
Ideal build_equiv_ideal(const PolyMat& x, const PolyMat& y);

EquivVerdict decide_equiv(const PolyMat& x, const PolyMat& y);

/// Checks an explicit transformation pair modulo a relation ideal in
/// auxiliary scalars: every entry of U*X - Y*V, det(U)-1 and det(V)-1 must
/// lie in <relations>. All matrices share one VarTable.
bool verify_witness(const PolyMat& x, const PolyMat& y, const PolyMat& u,
                    const PolyMat& v, const std::vector<Poly>& relations);

/// The five closure equations of the alpha-family self-equivalence
/// analysis; true exactly for the identity and for the
/// (b eps, c eps, d eps, eps^2) twist.
bool alpha_self_equiv_conditions(const AlphaParams& p1, const AlphaParams& p2);

/// A proven parameter reduction, instantiated: source ~ target. When
/// syntactic is set the matrices are equal entry-by-entry; otherwise the
/// claim is checkable with decide_equiv.
struct ReductionCheck {
  std::string rule;
  std::string params;
  PolyMat source;
  PolyMat target;
  bool syntactic = false;
};

/// Static table of the proven case reductions (B->At, C->At, the D-cycle,
/// and the two E/F branches), instantiated at samples_per_rule parameter
/// tuples each.
std::vector<ReductionCheck> reduction_maps(int samples_per_rule = 3);

struct ClassifyOptions {
  bool fast_rules = true;
  bool exhaustive = false;
  int audit_samples = 5;
  int jobs = 1;
};

struct ClassInfo {
  int id = 0;
  std::string family;   // family of the representative
  std::string params;   // params of the representative
  std::vector<std::size_t> members;
  std::size_t size() const { return members.size(); }
};

struct ClassReport {
  std::size_t entry_count = 0;
  std::vector<ClassInfo> classes;
};

/// Union-find partition of catalog entries. With fast_rules, edges come
/// from the proven parameter rules (the alpha/beta twist pairing), each
/// audited by decide_equiv on a sample; two-generated entries with equal
/// Fitting ideals are compared by decide_equiv directly. With exhaustive,
/// all eta/theta pairs and every twist pair run through decide_equiv.
ClassReport classify(const std::vector<CatalogEntry>& entries,
                     const ClassifyOptions& options = {});

}  // namespace mfkit
