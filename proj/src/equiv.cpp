#include "mfkit/equiv.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <numeric>
#include <thread>

namespace mfkit {

namespace {

/// Re-expresses p over a table that contains all of p's variables by name.
Poly rebase(const Poly& p, const VarTablePtr& target) {
  const VarTable& src = *p.table();
  std::vector<int> map(src.size());
  for (std::size_t i = 0; i < src.size(); ++i) {
    map[i] = target->index(src.name(i));
    if (map[i] < 0 && p.uses_var(i))
      throw Error("rebase: target table lacks variable " + src.name(i));
  }
  Poly out(target);
  for (const auto& [e, c] : p.terms()) {
    Exponents ne(target->size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i]) ne[static_cast<std::size_t>(map[i])] = e[i];
    out.add_term(ne, c);
  }
  return out;
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), std::size_t{0});
  }
  std::size_t find(std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a), b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

Ideal build_equiv_ideal(const PolyMat& x, const PolyMat& y) {
  if (x.size() != y.size()) throw Error("build_equiv_ideal: size mismatch");
  std::size_t n = x.size();
  std::size_t nn = n * n;

  std::vector<std::string> names;
  for (std::size_t k = 1; k <= nn; ++k) names.push_back("u" + std::to_string(k));
  for (std::size_t k = 1; k <= nn; ++k) names.push_back("v" + std::to_string(k));
  std::size_t y_base = names.size();
  for (const std::string& v : x.table()->names()) names.push_back(v);
  auto table = std::make_shared<const VarTable>(std::move(names));

  PolyMat u(n, table), v(n, table), xr(n, table), yr(n, table);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      u.at(i, j) = Poly::variable(table, i * n + j);
      v.at(i, j) = Poly::variable(table, nn + i * n + j);
      xr.at(i, j) = rebase(x.at(i, j), table);
      yr.at(i, j) = rebase(y.at(i, j), table);
    }

  PolyMat c = u * xr - yr * v;
  std::vector<Poly> gens;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      // Split the entry by its Y-monomial part; each coefficient must vanish.
      std::map<Exponents, Poly> by_ypart;
      for (const auto& [e, coef] : c.at(i, j).terms()) {
        Exponents ypart(e.begin() + static_cast<long>(y_base), e.end());
        Exponents uvpart = e;
        std::fill(uvpart.begin() + static_cast<long>(y_base), uvpart.end(), 0);
        auto [it, ins] = by_ypart.emplace(std::move(ypart), Poly(table));
        it->second.add_term(uvpart, coef);
      }
      for (auto& [ypart, g] : by_ypart) gens.push_back(std::move(g));
    }
  Poly one = Poly::constant(table, CycNum(1));
  gens.push_back(u.det() - one);
  gens.push_back(v.det() - one);
  return Ideal(std::move(gens), MonomialOrder{OrderKind::grevlex});
}

EquivVerdict decide_equiv(const PolyMat& x, const PolyMat& y) {
  GroebnerBasis gb = buchberger(build_equiv_ideal(x, y));
  EquivVerdict verdict;
  verdict.equivalent = !gb.is_trivial();
  for (const Poly& p : gb.elems) verdict.certificate.push_back(p.str(gb.order));
  return verdict;
}

bool verify_witness(const PolyMat& x, const PolyMat& y, const PolyMat& u,
                    const PolyMat& v, const std::vector<Poly>& relations) {
  if (x.size() != y.size() || x.size() != u.size() || x.size() != v.size())
    throw Error("verify_witness: size mismatch");
  const VarTablePtr& table = u.table();
  std::size_t n = x.size();
  PolyMat xr(n, table), yr(n, table);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      xr.at(i, j) = rebase(x.at(i, j), table);
      yr.at(i, j) = rebase(y.at(i, j), table);
    }
  MonomialOrder order{OrderKind::grevlex};
  std::vector<Poly> rel;
  for (const Poly& r : relations) rel.push_back(rebase(r, table));
  GroebnerBasis gb = buchberger(Ideal(rel, order));
  auto in_ideal = [&](const Poly& p) {
    return normal_form(p, gb.elems, order).is_zero();
  };
  PolyMat c = u * xr - yr * v;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!in_ideal(c.at(i, j))) return false;
  Poly one = Poly::constant(table, CycNum(1));
  return in_ideal(u.det() - one) && in_ideal(v.det() - one);
}

bool alpha_self_equiv_conditions(const AlphaParams& p1, const AlphaParams& p2) {
  p1.validate();
  p2.validate();
  const CycNum a = p1.a(), b = p1.b, c = p1.c, d = p1.d;
  const CycNum n = p2.b, p = p2.c, q = p2.d, y = p2.eps;
  CycNum eq1 = d * d - d * q * y - d * q + q * q * y;
  CycNum eq2 = c + d * p * q * q;
  CycNum eq3 = b + d * n * q * q;
  CycNum eq4 = a + d * n * p * y + n * p * q;
  CycNum eq5 = a * b.pow(2) * c.pow(2) * d.pow(2) + d * q * q * y - CycNum(1);
  return eq1.is_zero() && eq2.is_zero() && eq3.is_zero() && eq4.is_zero() &&
         eq5.is_zero();
}

std::vector<ReductionCheck> reduction_maps(int samples_per_rule) {
  auto t = VarTable::standard();
  const auto& roots = root_order();
  std::vector<ReductionCheck> all;

  auto take = [samples_per_rule](std::vector<ReductionCheck> pool) {
    std::vector<ReductionCheck> out;
    if (pool.empty()) return out;
    std::size_t k = std::min<std::size_t>(pool.size(),
                                          static_cast<std::size_t>(samples_per_rule));
    std::size_t stride = std::max<std::size_t>(1, pool.size() / k);
    for (std::size_t i = 0; i < pool.size() && out.size() < k; i += stride)
      out.push_back(pool[i]);
    return out;
  };
  auto append = [&all](std::vector<ReductionCheck> v) {
    for (auto& r : v) all.push_back(std::move(r));
  };

  // B(m,n,p,q,y) ~ At(a,b,c,d,x) with a=-np, b=ynq^2, c=p, d=qy, x=y^2.
  {
    std::vector<ReductionCheck> pool;
    for (const CycNum& y : eps_order())
      for (const CycNum& n : roots)
        for (const CycNum& p : roots)
          for (const CycNum& q : roots) {
            CycNum m = n * p * y / q;
            PolyMat src = raw_case({RawCase::B, {m, n, p, q, y}}, t);
            AlphaParams ap{y * n * q.pow(2), p, q * y, y * y};
            pool.push_back({"B->At",
                            "m=" + m.str() + ",n=" + n.str() + ",p=" + p.str() +
                                ",q=" + q.str() + ",y=" + y.str(),
                            src, beta(ap, t), false});
          }
    append(take(std::move(pool)));
  }

  // C(m,n,p,q,y) ~ At(a,b,c,d,x) with a=-n^2pqy^2, b=n, c=n^2p, d=n^2q, x=y.
  {
    std::vector<ReductionCheck> pool;
    for (const CycNum& y : eps_order())
      for (const CycNum& n : roots)
        for (const CycNum& p : roots)
          for (const CycNum& q : roots) {
            CycNum m = y * p * q / n;
            PolyMat src = raw_case({RawCase::C, {m, n, p, q, y}}, t);
            AlphaParams ap{n, n.pow(2) * p, n.pow(2) * q, y};
            pool.push_back({"C->At",
                            "m=" + m.str() + ",n=" + n.str() + ",p=" + p.str() +
                                ",q=" + q.str() + ",y=" + y.str(),
                            src, beta(ap, t), false});
          }
    append(take(std::move(pool)));
  }

  int perm_idx[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  auto perm = [&roots](const int* pi) {
    return std::vector<CycNum>{roots[pi[0]], roots[pi[1]], roots[pi[2]]};
  };

  // D((a,b,c),(p,q,r)) ~ D((b,c,a),(q,r,p)): both triples rotate together.
  {
    std::vector<ReductionCheck> pool;
    for (auto& i1 : perm_idx)
      for (auto& i2 : perm_idx) {
        auto abc = perm(i1), pqr = perm(i2);
        pool.push_back({"D-cycle",
                        "abc=(" + abc[0].str() + "," + abc[1].str() + "," + abc[2].str() +
                            "),pqr=(" + pqr[0].str() + "," + pqr[1].str() + "," +
                            pqr[2].str() + ")",
                        d_perm(abc, pqr, t),
                        d_perm({abc[1], abc[2], abc[0]}, {pqr[1], pqr[2], pqr[0]}, t),
                        false});
      }
    append(take(std::move(pool)));
  }

  // E((-1,-y,-y^2),(p,q,r)) with y=-p^2q ~ D((-1,pq^2,p^2q),(r,q,p)),
  // and with y=-pq^2 ~ theta(p,q,r).
  {
    std::vector<ReductionCheck> d_pool, th_pool;
    for (auto& i2 : perm_idx) {
      auto pqr = perm(i2);
      const CycNum &p = pqr[0], &q = pqr[1], &r = pqr[2];
      std::string ps = "p=" + p.str() + ",q=" + q.str() + ",r=" + r.str();
      CycNum pq2 = p * q * q, p2q = p * p * q;
      if (p2q != CycNum(-1)) {
        CycNum y = -p2q;
        d_pool.push_back({"E-D-branch", ps,
                          e_perm({CycNum(-1), -y, -(y * y)}, pqr, t),
                          d_perm({CycNum(-1), pq2, p2q}, {r, q, p}, t), false});
      }
      if (pq2 != CycNum(-1)) {
        CycNum y = -pq2;
        th_pool.push_back({"E-theta-branch", ps,
                           e_perm({CycNum(-1), -y, -(y * y)}, pqr, t),
                           theta({p, q, r}, t), false});
      }
    }
    append(take(std::move(d_pool)));
    append(take(std::move(th_pool)));
  }

  // F((-1,-y,-y^2),(p,q,r)): the y=-p^2q branch lands in the D family as
  // D((q,p,r),(p,q,r)); the y=-pq^2 branch is theta with b=q and a+p+q=0,
  // i.e. theta(r,q,p).
  {
    std::vector<ReductionCheck> d_pool, th_pool;
    for (auto& i2 : perm_idx) {
      auto pqr = perm(i2);
      const CycNum &p = pqr[0], &q = pqr[1], &r = pqr[2];
      std::string ps = "p=" + p.str() + ",q=" + q.str() + ",r=" + r.str();
      CycNum pq2 = p * q * q, p2q = p * p * q;
      if (p2q != CycNum(-1)) {
        CycNum y = -p2q;
        d_pool.push_back({"F-D-branch", ps,
                          f_perm({CycNum(-1), -y, -(y * y)}, pqr, t),
                          d_perm({q, p, r}, pqr, t), false});
      }
      if (pq2 != CycNum(-1)) {
        CycNum y = -pq2;
        th_pool.push_back({"F-theta-branch", ps,
                           f_perm({CycNum(-1), -y, -(y * y)}, pqr, t),
                           theta({r, q, p}, t), false});
      }
    }
    append(take(std::move(d_pool)));
    append(take(std::move(th_pool)));
  }

  return all;
}

namespace {

/// Runs decide_equiv over a pair list, optionally in parallel; results are
/// indexed, so the outcome is schedule-independent.
std::vector<bool> run_pairs(const std::vector<CatalogEntry>& entries,
                            const std::vector<std::pair<std::size_t, std::size_t>>& pairs,
                            int jobs) {
  std::vector<bool> equivalent(pairs.size(), false);
  auto work = [&](std::size_t k) {
    equivalent[k] =
        decide_equiv(entries[pairs[k].first].mf.phi, entries[pairs[k].second].mf.phi)
            .equivalent;
  };
  if (jobs <= 1 || pairs.size() < 2) {
    for (std::size_t k = 0; k < pairs.size(); ++k) work(k);
    return equivalent;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  int n_threads = std::min<int>(jobs, static_cast<int>(pairs.size()));
  // vector<bool> is not safe for concurrent writes; stage into bytes.
  std::vector<char> staged(pairs.size(), 0);
  for (int w = 0; w < n_threads; ++w)
    pool.emplace_back([&] {
      for (;;) {
        std::size_t k = next.fetch_add(1);
        if (k >= pairs.size()) return;
        staged[k] = decide_equiv(entries[pairs[k].first].mf.phi,
                                 entries[pairs[k].second].mf.phi)
                        .equivalent
                        ? 1
                        : 0;
      }
    });
  for (auto& th : pool) th.join();
  for (std::size_t k = 0; k < pairs.size(); ++k) equivalent[k] = staged[k] != 0;
  return equivalent;
}

std::string fitting_key(const PolyMat& m) {
  GroebnerBasis gb = buchberger(fitting_ideal(m, 1));
  std::string key;
  for (const Poly& p : gb.elems) key += p.str(gb.order) + ";";
  return key;
}

bool is_two_gen(const CatalogEntry& e) { return e.mf.phi.size() == 2; }

}  // namespace

ClassReport classify(const std::vector<CatalogEntry>& entries,
                     const ClassifyOptions& options) {
  std::size_t n = entries.size();
  UnionFind uf(n);

  // Twist partners declared by the catalog (the alpha/beta pairing rule).
  std::map<std::pair<std::string, std::string>, std::size_t> lookup;
  for (std::size_t i = 0; i < n; ++i)
    lookup[{entries[i].family, entries[i].params}] = i;
  std::vector<std::pair<std::size_t, std::size_t>> partner_pairs;
  for (std::size_t i = 0; i < n; ++i) {
    if (entries[i].partner_params.empty()) continue;
    auto it = lookup.find({entries[i].family, entries[i].partner_params});
    if (it != lookup.end() && it->second > i) partner_pairs.push_back({i, it->second});
  }

  std::vector<std::pair<std::size_t, std::size_t>> to_decide;
  std::vector<std::size_t> partner_decide_idx;

  if (options.exhaustive) {
    for (auto& p : partner_pairs) {
      partner_decide_idx.push_back(to_decide.size());
      to_decide.push_back(p);
    }
    // All pairs among the eta/theta entries, and among two-generated entries.
    std::vector<std::size_t> nset, twoset;
    for (std::size_t i = 0; i < n; ++i) {
      if (entries[i].family == "eta" || entries[i].family == "theta") nset.push_back(i);
      if (is_two_gen(entries[i])) twoset.push_back(i);
    }
    for (std::size_t a = 0; a < nset.size(); ++a)
      for (std::size_t b = a + 1; b < nset.size(); ++b)
        to_decide.push_back({nset[a], nset[b]});
    for (std::size_t a = 0; a < twoset.size(); ++a)
      for (std::size_t b = a + 1; b < twoset.size(); ++b)
        to_decide.push_back({twoset[a], twoset[b]});
  } else if (options.fast_rules) {
    for (auto& p : partner_pairs) uf.unite(p.first, p.second);
    // Audit a sample of the rule edges.
    std::size_t k = std::min<std::size_t>(partner_pairs.size(),
                                          static_cast<std::size_t>(options.audit_samples));
    if (k > 0) {
      std::size_t stride = std::max<std::size_t>(1, partner_pairs.size() / k);
      for (std::size_t i = 0; i < partner_pairs.size() && partner_decide_idx.size() < k;
           i += stride) {
        partner_decide_idx.push_back(to_decide.size());
        to_decide.push_back(partner_pairs[i]);
      }
    }
    // Two-generated entries: separate by Fitting ideal, decide the ties.
    std::map<std::string, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < n; ++i)
      if (is_two_gen(entries[i]))
        groups[fitting_key(entries[i].mf.phi)].push_back(i);
    for (auto& [key, members] : groups)
      for (std::size_t a = 0; a < members.size(); ++a)
        for (std::size_t b = a + 1; b < members.size(); ++b)
          to_decide.push_back({members[a], members[b]});
  }

  std::vector<bool> outcome = run_pairs(entries, to_decide, options.jobs);
  for (std::size_t k = 0; k < to_decide.size(); ++k)
    if (outcome[k]) uf.unite(to_decide[k].first, to_decide[k].second);
  for (std::size_t idx : partner_decide_idx)
    if (!outcome[idx])
      throw Error("classify: pairing-rule audit failed for (" +
                  entries[to_decide[idx].first].params + ") vs (" +
                  entries[to_decide[idx].second].params + ")");

  std::map<std::size_t, std::vector<std::size_t>> by_root;
  for (std::size_t i = 0; i < n; ++i) by_root[uf.find(i)].push_back(i);
  ClassReport report;
  report.entry_count = n;
  int id = 0;
  for (auto& [root, members] : by_root) {
    ClassInfo info;
    info.id = id++;
    info.family = entries[members.front()].family;
    info.params = entries[members.front()].params;
    info.members = members;
    report.classes.push_back(std::move(info));
  }
  return report;
}

}  // namespace mfkit
