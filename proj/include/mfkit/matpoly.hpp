#pragma once

#include "mfkit/groebner.hpp"
#include "mfkit/poly.hpp"

#include <string>
#include <variant>
#include <vector>

namespace mfkit {

/// Square matrix of polynomials sharing one VarTable.
class PolyMat {
 public:
  PolyMat() = default;
  PolyMat(std::size_t n, VarTablePtr table);
  explicit PolyMat(std::vector<std::vector<Poly>> rows);

  std::size_t size() const { return n_; }
  const VarTablePtr& table() const { return table_; }
  Poly& at(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }
  const Poly& at(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }

  static PolyMat identity(std::size_t n, const VarTablePtr& table);
  static PolyMat scalar(std::size_t n, const Poly& p);

  PolyMat transpose() const;
  friend PolyMat operator*(const PolyMat& a, const PolyMat& b);
  friend PolyMat operator+(const PolyMat& a, const PolyMat& b);
  friend PolyMat operator-(const PolyMat& a, const PolyMat& b);
  friend bool operator==(const PolyMat& a, const PolyMat& b) {
    return a.n_ == b.n_ && a.entries_ == b.entries_;
  }

  /// Cofactor-expansion determinant (intended for n <= 3).
  Poly det() const;
  /// Transpose of the cofactor matrix: A * adjugate(A) = det(A) * I.
  PolyMat adjugate() const;
  /// Determinant of the minor deleting row i and column j.
  Poly minor_det(std::size_t i, std::size_t j) const;

  /// All k x k minor determinants, rows/columns in increasing index order.
  std::vector<Poly> minors(std::size_t k) const;

 private:
  std::size_t n_ = 0;
  VarTablePtr table_;
  std::vector<Poly> entries_;
};

/// Ideal of the (n-t) x (n-t) minors of A; Fitt_n = <1> by convention.
Ideal fitting_ideal(const PolyMat& a, std::size_t t,
                    MonomialOrder order = MonomialOrder{});

/// Pair (phi, psi) with phi*psi = psi*phi = f * I, verified on construction.
struct MatrixFactorization {
  PolyMat phi;
  PolyMat psi;
  Poly f;
};

/// Builds a MatrixFactorization, checking both products symbolically.
/// Throws Error naming the first offending entry otherwise.
MatrixFactorization make_mf(PolyMat phi, PolyMat psi, Poly f);

inline MatrixFactorization syzygy_mf(const MatrixFactorization& m) {
  return {m.psi, m.phi, m.f};
}

inline MatrixFactorization dual_mf(const MatrixFactorization& m) {
  return {m.phi.transpose(), m.psi.transpose(), m.f};
}

/// f-adic valuation of det(phi); the rank of Coker(phi) when f is
/// irreducible. Throws on det = 0.
int rank_of_mf(const MatrixFactorization& m);

/// 2x2 tensor-product factorization of a1*a2 + b1*b2 from two 1x1
/// factorizations (a1, a2) and (b1, b2).
MatrixFactorization tensor_1x1(const Poly& a1, const Poly& a2, const Poly& b1,
                               const Poly& b2);

// Elementary row/column transformations.
struct SwapRows { std::size_t i, j; };
struct SwapCols { std::size_t i, j; };
struct ScaleRow { std::size_t i; CycNum c; };   // c != 0
struct ScaleCol { std::size_t i; CycNum c; };   // c != 0
struct AddRowMultiple { std::size_t src, dst; Poly factor; };
struct AddColMultiple { std::size_t src, dst; Poly factor; };
using ElementaryOp = std::variant<SwapRows, SwapCols, ScaleRow, ScaleCol,
                                  AddRowMultiple, AddColMultiple>;

PolyMat apply_elementary(const PolyMat& a, const ElementaryOp& op);

}  // namespace mfkit
