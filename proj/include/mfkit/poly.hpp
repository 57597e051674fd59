#pragma once

#include "mfkit/cyclo.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace mfkit {

/// Ordered list of variable names fixed for a computation context.
class VarTable {
 public:
  explicit VarTable(std::vector<std::string> names);

  /// Y1, Y2, Y3, Y4.
  static std::shared_ptr<const VarTable> standard();

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }
  /// Index of a name, or -1 if absent.
  int index(const std::string& name) const;

  friend bool operator==(const VarTable& a, const VarTable& b) {
    return a.names_ == b.names_;
  }

 private:
  std::vector<std::string> names_;
};

using VarTablePtr = std::shared_ptr<const VarTable>;

/// Exponent vector over a VarTable.
using Exponents = std::vector<int>;

inline int total_degree(const Exponents& e) {
  int d = 0;
  for (int x : e) d += x;
  return d;
}

enum class OrderKind { lex, grevlex };

/// Total order on monomials; variable priority is the VarTable order.
struct MonomialOrder {
  OrderKind kind = OrderKind::grevlex;

  /// <0 if a < b, 0 if equal, >0 if a > b.
  int compare(const Exponents& a, const Exponents& b) const;
  bool greater(const Exponents& a, const Exponents& b) const { return compare(a, b) > 0; }
};

/// Sparse multivariate polynomial over Q(e).
class Poly {
 public:
  Poly() = default;
  explicit Poly(VarTablePtr table) : table_(std::move(table)) {}

  static Poly zero(VarTablePtr table) { return Poly(std::move(table)); }
  static Poly constant(VarTablePtr table, CycNum c);
  static Poly variable(VarTablePtr table, std::size_t i, int exp = 1);
  static Poly term(VarTablePtr table, Exponents e, CycNum c);

  /// Parses the grammar: terms joined by +/-, factors joined by a mandatory
  /// '*', '^' for exponents, coefficients are rationals and 'e', parentheses
  /// allowed. Throws Error with position on bad input.
  static Poly parse(const std::string& text, VarTablePtr table);

  const VarTablePtr& table() const { return table_; }
  const std::map<Exponents, CycNum>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  CycNum constant_value() const;  // requires is_constant()

  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;
  bool uses_var(std::size_t v) const;

  CycNum coeff(const Exponents& e) const;
  void add_term(const Exponents& e, const CycNum& c);

  friend Poly operator+(const Poly& p, const Poly& q);
  friend Poly operator-(const Poly& p, const Poly& q);
  friend Poly operator-(const Poly& p);
  friend Poly operator*(const Poly& p, const Poly& q);
  friend Poly operator*(const CycNum& c, const Poly& p);
  friend bool operator==(const Poly& p, const Poly& q) {
    return p.terms_ == q.terms_;
  }
  friend bool operator!=(const Poly& p, const Poly& q) { return !(p == q); }

  Poly pow(unsigned k) const;

  /// Homomorphic substitution; variables absent from the map stay themselves.
  Poly substitute(const std::map<std::size_t, Poly>& assignments) const;

  /// Coefficients of p by powers of variable v: p = sum result[k] * v^k,
  /// result polynomials free of v. For p = 0 returns {0}.
  std::vector<Poly> coeff_decompose(std::size_t v) const;

  /// Exact quotient p/q, or nullopt if q does not divide p.
  std::optional<Poly> exact_div(const Poly& q) const;

  /// Leading exponent/coefficient under the given order; poly must be nonzero.
  const Exponents& leading_exponents(const MonomialOrder& order) const;
  const CycNum& leading_coeff(const MonomialOrder& order) const;

  /// Canonical text, terms sorted descending by the given order.
  std::string str(const MonomialOrder& order = MonomialOrder{}) const;

 private:
  void check_same_table(const Poly& other) const;

  VarTablePtr table_;
  std::map<Exponents, CycNum> terms_;
};

/// f4 = Y1^3 + Y2^3 + Y3^3 + Y4^3 over a table whose first four variables
/// are Y1..Y4.
Poly f4(const VarTablePtr& table);

std::string monomial_str(const VarTable& table, const Exponents& e);

}  // namespace mfkit
