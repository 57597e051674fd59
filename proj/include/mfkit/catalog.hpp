#pragma once

#include "mfkit/matpoly.hpp"

#include <string>
#include <vector>

namespace mfkit {

/// Parameters of the two-generated families phi_ij(a,b), psi_ij(a,b):
/// {i,j} subset of {2,3,4} with i<j, s the remaining index, a^3 = b^3 = -1.
struct TwoGenParams {
  int i = 2, j = 3;
  CycNum a{-1}, b{-1};

  int s() const { return 2 + 3 + 4 - i - j; }
  void validate() const;
  std::string str() const;
};

PolyMat phi_ij(const TwoGenParams& p, const VarTablePtr& table = VarTable::standard());
PolyMat psi_ij(const TwoGenParams& p, const VarTablePtr& table = VarTable::standard());

/// Parameters of the three-generated alpha/beta families:
/// b^3 = c^3 = d^3 = -1, eps a primitive cube root of unity, a derived
/// from bcd = eps * a.
struct AlphaParams {
  CycNum b{-1}, c{-1}, d{-1};
  CycNum eps = CycNum::eps();

  CycNum a() const { return eps.pow(2) * b * c * d; }
  void validate() const;
  std::string str() const;
  /// The partner with the same cokernel: (b eps, c eps, d eps, eps^2).
  AlphaParams twist() const { return {b * eps, c * eps, d * eps, eps * eps}; }
  friend bool operator==(const AlphaParams& x, const AlphaParams& y) {
    return x.b == y.b && x.c == y.c && x.d == y.d && x.eps == y.eps;
  }
};

PolyMat alpha(const AlphaParams& p, const VarTablePtr& table = VarTable::standard());
PolyMat beta(const AlphaParams& p, const VarTablePtr& table = VarTable::standard());

/// (a,b,c) a permutation of the cube roots of -1; eps primitive.
struct EtaParams {
  CycNum a, b, c;
  CycNum eps = CycNum::eps();
  void validate() const;
  std::string str() const;
};

struct ThetaParams {
  CycNum a, b, c;
  void validate() const;
  std::string str() const;
};

PolyMat eta(const EtaParams& p, const VarTablePtr& table = VarTable::standard());
PolyMat theta(const ThetaParams& p, const VarTablePtr& table = VarTable::standard());

/// The nine raw case shapes of the three-generated classification.
enum class RawCase { A, At, B, Bt, C, Ct, D, E, F };

RawCase raw_case_from_string(const std::string& s);
std::string raw_case_to_string(RawCase c);

/// Cases A/At/B/Bt/C/Ct take (a,b,c,d,eps) with the per-case constraint
/// bcd = eps*a, ad = eps*bc, ab = eps*cd respectively; D/E/F take (a,b,c,d)
/// with a != c and b != d (scalars[4] ignored). All scalars cube to -1,
/// eps is a primitive cube root of unity.
struct RawCaseParams {
  RawCase tag = RawCase::A;
  std::vector<CycNum> scalars;
  void validate() const;
  std::string str() const;
};

PolyMat raw_case(const RawCaseParams& p, const VarTablePtr& table = VarTable::standard());

/// D((a,b,c),(p,q,r)) etc., with (a,b,c) and (p,q,r) permutations of the
/// cube roots of -1.
PolyMat d_perm(const std::vector<CycNum>& abc, const std::vector<CycNum>& pqr,
               const VarTablePtr& table = VarTable::standard());
PolyMat e_perm(const std::vector<CycNum>& abc, const std::vector<CycNum>& pqr,
               const VarTablePtr& table = VarTable::standard());
PolyMat f_perm(const std::vector<CycNum>& abc, const std::vector<CycNum>& pqr,
               const VarTablePtr& table = VarTable::standard());

/// A named, parameterized family member with its verified factorization.
struct CatalogEntry {
  std::string family;
  std::string params;
  MatrixFactorization mf;
  /// Params of a same-family member with the same cokernel (the alpha/beta
  /// twist pairing); empty when no such rule applies.
  std::string partner_params;
};

/// 27 phi + 27 psi, in lexicographic (family, index pair, root) order.
std::vector<CatalogEntry> enumerate_two_gen();
/// 54 alpha + 54 beta.
std::vector<CatalogEntry> enumerate_M3();
/// 12 eta + 6 theta.
std::vector<CatalogEntry> enumerate_N3();

/// Completes four independent linear forms with f4 in (alpha,beta) and in
/// (gamma,delta) to a 3x3 matrix [[0,alpha,beta],[gamma,m,n],[delta,w,t]]
/// with determinant f4, by solving the determinant identity as a linear
/// system in the coefficients of m,n,w,t. variant selects a point of the
/// solution space (0 = particular solution with free coordinates zero).
PolyMat complete_factorization(const Poly& alpha_form, const Poly& beta_form,
                               const Poly& gamma_form, const Poly& delta_form,
                               unsigned variant = 0);

/// Stable enumeration order of the cube roots of -1: -1, -e, -e^2.
const std::vector<CycNum>& root_order();
/// Stable order of the primitive cube roots of unity: e, e^2.
const std::vector<CycNum>& eps_order();

}  // namespace mfkit
