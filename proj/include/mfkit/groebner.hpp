#pragma once

#include "mfkit/poly.hpp"

#include <span>
#include <vector>

namespace mfkit {

/// Finite generator list under a declared monomial order. Zero generators
/// are dropped on construction.
struct Ideal {
  std::vector<Poly> gens;
  MonomialOrder order;

  Ideal() = default;
  Ideal(std::vector<Poly> g, MonomialOrder o);
};

/// Reduced Groebner basis: monic elements, no leading monomial divides
/// another's, every element fully reduced against the rest, sorted
/// descending by leading monomial.
struct GroebnerBasis {
  std::vector<Poly> elems;
  MonomialOrder order;

  bool is_trivial() const {
    return elems.size() == 1 && elems.front().is_constant();
  }
};

/// Remainder of p under the division algorithm by G: no term of the result
/// is divisible by any leading term of G, and p - result lies in <G>.
Poly normal_form(const Poly& p, std::span<const Poly> g, const MonomialOrder& order);

inline Poly normal_form(const Poly& p, const GroebnerBasis& gb) {
  return normal_form(p, gb.elems, gb.order);
}

/// Buchberger's algorithm with the coprime and chain pair-elimination
/// criteria; output is the reduced basis, deterministic for a given input.
GroebnerBasis buchberger(const Ideal& ideal);

bool ideal_member(const Poly& p, const Ideal& ideal);
bool ideal_equal(const Ideal& a, const Ideal& b);
bool ideal_is_trivial(const Ideal& ideal);

Poly s_polynomial(const Poly& f, const Poly& g, const MonomialOrder& order);

}  // namespace mfkit
