#include "mfkit/groebner.hpp"

#include <algorithm>
#include <list>

namespace mfkit {

namespace {

bool divides(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Exponents lcm_exp(const Exponents& a, const Exponents& b) {
  Exponents r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

bool coprime(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > 0 && b[i] > 0) return false;
  return true;
}

}  // namespace

Ideal::Ideal(std::vector<Poly> g, MonomialOrder o) : order(o) {
  for (auto& p : g)
    if (!p.is_zero()) gens.push_back(std::move(p));
}

Poly normal_form(const Poly& p, std::span<const Poly> g, const MonomialOrder& order) {
  if (g.empty()) return p;
  const VarTablePtr& table = p.table();
  std::vector<const Exponents*> lead(g.size());
  std::vector<CycNum> lead_inv(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    lead[i] = &g[i].leading_exponents(order);
    lead_inv[i] = g[i].leading_coeff(order).inv();
  }
  Poly rem = p;
  Poly out(table);
  while (!rem.is_zero()) {
    const Exponents& lt = rem.leading_exponents(order);
    bool reduced = false;
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (!divides(*lead[i], lt)) continue;
      Exponents shift(lt.size());
      for (std::size_t k = 0; k < lt.size(); ++k) shift[k] = lt[k] - (*lead[i])[k];
      CycNum c = rem.leading_coeff(order) * lead_inv[i];
      rem = rem - Poly::term(table, std::move(shift), c) * g[i];
      reduced = true;
      break;
    }
    if (!reduced) {
      out.add_term(lt, rem.leading_coeff(order));
      Poly drop = Poly::term(table, lt, rem.leading_coeff(order));
      rem = rem - drop;
    }
  }
  return out;
}

Poly s_polynomial(const Poly& f, const Poly& g, const MonomialOrder& order) {
  const VarTablePtr& table = f.table();
  const Exponents& lf = f.leading_exponents(order);
  const Exponents& lg = g.leading_exponents(order);
  Exponents l = lcm_exp(lf, lg);
  Exponents sf(l.size()), sg(l.size());
  for (std::size_t i = 0; i < l.size(); ++i) {
    sf[i] = l[i] - lf[i];
    sg[i] = l[i] - lg[i];
  }
  Poly tf = Poly::term(table, std::move(sf), f.leading_coeff(order).inv());
  Poly tg = Poly::term(table, std::move(sg), g.leading_coeff(order).inv());
  return tf * f - tg * g;
}

namespace {

std::vector<Poly> interreduce(std::vector<Poly> basis, const MonomialOrder& order) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      Poly g = basis[i];
      std::vector<Poly> others;
      others.reserve(basis.size() - 1);
      for (std::size_t j = 0; j < basis.size(); ++j)
        if (j != i) others.push_back(basis[j]);
      Poly r = normal_form(g, others, order);
      if (r != g) {
        changed = true;
        if (r.is_zero()) {
          basis.erase(basis.begin() + static_cast<long>(i));
          --i;
        } else {
          basis[i] = std::move(r);
        }
      }
    }
  }
  return basis;
}

struct Pair {
  std::size_t i, j;
  Exponents lcm;
};

}  // namespace

GroebnerBasis buchberger(const Ideal& ideal) {
  const MonomialOrder order = ideal.order;
  GroebnerBasis out{{}, order};
  if (ideal.gens.empty()) return out;

  std::vector<Poly> basis = interreduce(ideal.gens, order);
  std::list<Pair> pairs;
  auto add_pairs_for = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i)
      pairs.push_back({i, j, lcm_exp(basis[i].leading_exponents(order),
                                     basis[j].leading_exponents(order))});
  };
  for (std::size_t j = 1; j < basis.size(); ++j) add_pairs_for(j);

  auto pending = [&](std::size_t a, std::size_t b) {
    for (const Pair& p : pairs)
      if ((p.i == a && p.j == b) || (p.i == b && p.j == a)) return true;
    return false;
  };

  while (!pairs.empty()) {
    // Normal selection: smallest lcm first.
    auto best = pairs.begin();
    for (auto it = std::next(best); it != pairs.end(); ++it)
      if (order.compare(it->lcm, best->lcm) < 0) best = it;
    Pair p = *best;
    pairs.erase(best);

    const Exponents& li = basis[p.i].leading_exponents(order);
    const Exponents& lj = basis[p.j].leading_exponents(order);
    if (coprime(li, lj)) continue;
    // Chain criterion: some k with LT(k) | lcm(i,j) and both pairs resolved.
    bool skip = false;
    for (std::size_t k = 0; k < basis.size() && !skip; ++k) {
      if (k == p.i || k == p.j) continue;
      if (divides(basis[k].leading_exponents(order), p.lcm) &&
          !pending(p.i, k) && !pending(p.j, k))
        skip = true;
    }
    if (skip) continue;

    Poly s = s_polynomial(basis[p.i], basis[p.j], order);
    Poly r = normal_form(s, basis, order);
    if (r.is_zero()) continue;
    basis.push_back(std::move(r));
    add_pairs_for(basis.size() - 1);
  }

  // Reduce: keep only elements with minimal leading terms, then tail-reduce.
  std::vector<Poly> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const Exponents& li = basis[i].leading_exponents(order);
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      const Exponents& lj = basis[j].leading_exponents(order);
      if (divides(lj, li) && (lj != li || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(basis[i]);
  }
  minimal = interreduce(std::move(minimal), order);
  for (Poly& g : minimal) g = g.leading_coeff(order).inv() * g;
  std::sort(minimal.begin(), minimal.end(), [&](const Poly& a, const Poly& b) {
    return order.greater(a.leading_exponents(order), b.leading_exponents(order));
  });
  out.elems = std::move(minimal);
  return out;
}

bool ideal_member(const Poly& p, const Ideal& ideal) {
  if (p.is_zero()) return true;
  return normal_form(p, buchberger(ideal)).is_zero();
}

bool ideal_equal(const Ideal& a, const Ideal& b) {
  GroebnerBasis ga = buchberger(a);
  GroebnerBasis gb = buchberger(b);
  for (const Poly& p : b.gens)
    if (!normal_form(p, ga).is_zero()) return false;
  for (const Poly& p : a.gens)
    if (!normal_form(p, gb).is_zero()) return false;
  return true;
}

bool ideal_is_trivial(const Ideal& ideal) {
  return buchberger(ideal).is_trivial();
}

}  // namespace mfkit
