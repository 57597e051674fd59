// Acceptance gate: one pass/fail line per criterion, nonzero exit when any
// criterion fails. Kept independent of the unit-test framework so the
// output stays a simple, greppable report.

#include "mfkit/catalog.hpp"
#include "mfkit/equiv.hpp"
#include "mfkit/groebner.hpp"
#include "mfkit/linsolve.hpp"
#include "mfkit/matpoly.hpp"

#include <chrono>
#include <cstdio>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

using namespace mfkit;

namespace {

int g_failures = 0;

void report(int criterion, const std::string& title, bool ok,
            const std::string& detail, double seconds) {
  std::printf("[%s] %2d %s — %s (%.1fs)\n", ok ? "PASS" : "FAIL", criterion,
              title.c_str(), detail.c_str(), seconds);
  std::fflush(stdout);
  if (!ok) ++g_failures;
}

template <typename Fn>
void criterion(int number, const std::string& title, Fn&& body) {
  auto start = std::chrono::steady_clock::now();
  bool ok = false;
  std::string detail;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  report(number, title, ok, detail, seconds);
}

const std::vector<TwoGenParams>& all_two_gen_params() {
  static std::vector<TwoGenParams> all = [] {
    std::vector<TwoGenParams> v;
    const int pairs[3][2] = {{2, 3}, {2, 4}, {3, 4}};
    for (auto [i, j] : pairs)
      for (const CycNum& a : root_order())
        for (const CycNum& b : root_order()) v.push_back({i, j, a, b});
    return v;
  }();
  return all;
}

const std::vector<AlphaParams>& all_alpha_params() {
  static std::vector<AlphaParams> all = [] {
    std::vector<AlphaParams> v;
    for (const CycNum& eps : eps_order())
      for (const CycNum& b : root_order())
        for (const CycNum& c : root_order())
          for (const CycNum& d : root_order()) v.push_back({b, c, d, eps});
    return v;
  }();
  return all;
}

std::string gb_key(const Ideal& ideal) {
  GroebnerBasis gb = buchberger(ideal);
  std::string key;
  for (const Poly& p : gb.elems) key += p.str(gb.order) + ";";
  return key;
}

Poly P(const std::string& s) { return Poly::parse(s, VarTable::standard()); }

}  // namespace

// ---------------------------------------------------------------------------

static void criterion_1() {
  criterion(1, "two-generated catalog validity", [](std::string& detail) {
    auto t = VarTable::standard();
    Poly f = f4(t);
    int checked = 0;
    for (const TwoGenParams& p : all_two_gen_params()) {
      PolyMat phi = phi_ij(p), psi = psi_ij(p);
      if (!(phi * psi == PolyMat::scalar(2, f)) ||
          !(psi * phi == PolyMat::scalar(2, f)) || phi.det() != f ||
          psi.det() != f) {
        detail = "failure at " + p.str();
        return false;
      }
      checked += 2;
    }
    detail = std::to_string(checked) + " matrices verified exactly";
    return checked == 54;
  });
}

static void criterion_2() {
  criterion(2, "Fitting formula for phi_ij", [](std::string& detail) {
    auto t = VarTable::standard();
    auto var = [&](int k) { return Poly::variable(t, static_cast<std::size_t>(k - 1)); };
    int checked = 0;
    for (const TwoGenParams& p : all_two_gen_params()) {
      Ideal fit = fitting_ideal(phi_ij(p), 1);
      Ideal expect({var(1) - p.a * var(p.s()), var(p.i) - p.b * var(p.j),
                    var(p.s()) * var(p.s()), var(p.j) * var(p.j)},
                   fit.order);
      if (!ideal_equal(fit, expect)) {
        detail = "mismatch at " + p.str();
        return false;
      }
      ++checked;
    }
    detail = std::to_string(checked) + " Fitting ideals match the closed form";
    return checked == 27;
  });
}

static void criterion_3() {
  criterion(3, "two-generated classification", [](std::string& detail) {
    // Fitting-ideal separation over all pairs of the 54 presentations.
    std::vector<CatalogEntry> entries = enumerate_two_gen();
    std::vector<std::string> keys;
    for (const CatalogEntry& e : entries)
      keys.push_back(gb_key(fitting_ideal(e.mf.phi, 1)));
    std::size_t distinct = 0, total = 0;
    std::vector<std::pair<std::size_t, std::size_t>> collisions;
    for (std::size_t i = 0; i < keys.size(); ++i)
      for (std::size_t j = i + 1; j < keys.size(); ++j) {
        ++total;
        if (keys[i] != keys[j])
          ++distinct;
        else
          collisions.push_back({i, j});
      }
    // The colliding pairs must still be non-isomorphic.
    bool separated = true;
    for (auto [i, j] : collisions)
      if (decide_equiv(entries[i].mf.phi, entries[j].mf.phi).equivalent) {
        separated = false;
        detail = "isomorphic pair " + entries[i].family + ":" + entries[i].params +
                 " ~ " + entries[j].family + ":" + entries[j].params;
        return false;
      }
    // Syzygy and dual relations on sampled parameter tuples.
    const auto& params = all_two_gen_params();
    int relation_checks = 0;
    for (std::size_t k = 0; k < params.size(); k += 4) {
      const TwoGenParams& p = params[k];
      MatrixFactorization m = make_mf(psi_ij(p), phi_ij(p), f4(VarTable::standard()));
      if (!decide_equiv(syzygy_mf(m).phi, phi_ij(p)).equivalent) {
        detail = "syzygy relation fails at " + p.str();
        return false;
      }
      if (!decide_equiv(dual_mf(m).phi, phi_ij(p)).equivalent) {
        detail = "dual relation fails at " + p.str();
        return false;
      }
      relation_checks += 2;
    }
    detail = std::to_string(distinct) + "/" + std::to_string(total) +
             " Fitting-ideal pairs distinct (" + std::to_string(collisions.size()) +
             " same-parameter phi/psi collisions, all separated by decide_equiv); " +
             std::to_string(relation_checks) + " syzygy/dual checks passed";
    // The criterion as stated demands all 1431 pairs distinct; the
    // same-parameter phi/psi couples share one Fitting ideal, so this stays
    // red even though the 54 modules are pairwise non-isomorphic.
    return separated && distinct == total && relation_checks >= 6;
  });
}

static void criterion_4() {
  criterion(4, "three-generated catalog validity", [](std::string& detail) {
    auto t = VarTable::standard();
    Poly f = f4(t);
    std::vector<CatalogEntry> entries = enumerate_M3();
    auto n3 = enumerate_N3();
    entries.insert(entries.end(), n3.begin(), n3.end());
    if (entries.size() != 126) {
      detail = "expected 126 entries, got " + std::to_string(entries.size());
      return false;
    }
    for (const CatalogEntry& e : entries) {
      if (!(e.mf.phi * e.mf.phi.adjugate() == PolyMat::scalar(3, f)) ||
          !(e.mf.phi * e.mf.psi == PolyMat::scalar(3, f)) || rank_of_mf(e.mf) != 1) {
        detail = "failure at " + e.family + ":" + e.params;
        return false;
      }
    }
    detail = "108 alpha/beta + 18 eta/theta verified, all rank 1";
    return true;
  });
}

static void criterion_5() {
  criterion(5, "Ulrich count: 72 three-generated classes", [](std::string& detail) {
    std::vector<CatalogEntry> entries = enumerate_M3();
    auto n3 = enumerate_N3();
    entries.insert(entries.end(), n3.begin(), n3.end());

    ClassifyOptions fast;
    fast.audit_samples = 5;
    ClassReport rep = classify(entries, fast);
    if (rep.classes.size() != 72) {
      detail = "fast classification found " + std::to_string(rep.classes.size()) +
               " classes";
      return false;
    }

    // Twist pairing confirmed directly on sampled pairs.
    const auto& alphas = all_alpha_params();
    int twist_checks = 0;
    for (std::size_t k = 0; k < alphas.size(); k += 11) {
      const AlphaParams& p = alphas[k];
      if (!decide_equiv(alpha(p), alpha(p.twist())).equivalent) {
        detail = "twist pair not equivalent at " + p.str();
        return false;
      }
      ++twist_checks;
    }

    // Self-equivalence conditions over all 54 x 54 parameter tuples.
    for (const AlphaParams& p1 : alphas)
      for (const AlphaParams& p2 : alphas) {
        bool expect = (p2 == p1) || (p2 == p1.twist());
        if (alpha_self_equiv_conditions(p1, p2) != expect) {
          detail = "self-equivalence conditions wrong at " + p1.str() + " vs " +
                   p2.str();
          return false;
        }
      }

    // Exhaustive non-equivalence of the 18 eta/theta representatives.
    int pairs = 0;
    for (std::size_t i = 0; i < n3.size(); ++i)
      for (std::size_t j = i + 1; j < n3.size(); ++j) {
        if (decide_equiv(n3[i].mf.phi, n3[j].mf.phi).equivalent) {
          detail = "unexpected equivalence " + n3[i].params + " ~ " + n3[j].params;
          return false;
        }
        ++pairs;
      }

    detail = "72 classes; " + std::to_string(twist_checks) +
             " twist pairs verified; 54x54 condition table exact; " +
             std::to_string(pairs) + " eta/theta pairs all non-equivalent";
    return twist_checks >= 5 && pairs == 153;
  });
}

static void criterion_6() {
  criterion(6, "cross-family separations", [](std::string& detail) {
    auto roots = root_order();
    int separations = 0;
    // alpha instances against D instances.
    std::vector<AlphaParams> aps = {{roots[0], roots[1], roots[2], CycNum::eps()},
                                    {roots[1], roots[1], roots[1], CycNum::eps()},
                                    {roots[2], roots[0], roots[1],
                                     CycNum::eps().pow(2)}};
    std::vector<std::vector<CycNum>> perms = {{roots[0], roots[1], roots[2]},
                                              {roots[1], roots[2], roots[0]},
                                              {roots[2], roots[0], roots[1]}};
    for (std::size_t k = 0; k < 3; ++k) {
      PolyMat a = alpha(aps[k]);
      PolyMat d = d_perm(perms[k], perms[(k + 1) % 3]);
      if (decide_equiv(a, d).equivalent || decide_equiv(a.transpose(), d).equivalent) {
        detail = "alpha/D instance unexpectedly equivalent at sample " +
                 std::to_string(k);
        return false;
      }
      // Transpose against itself with the same parameters.
      if (decide_equiv(a.transpose(), a).equivalent) {
        detail = "alpha^t ~ alpha at " + aps[k].str();
        return false;
      }
      separations += 3;
    }
    detail = std::to_string(separations) + " sampled pairs all non-equivalent";
    return separations >= 6;
  });
}

static void criterion_7() {
  criterion(7, "case reductions", [](std::string& detail) {
    auto checks = reduction_maps(3);
    std::map<std::string, int> per_rule;
    for (const ReductionCheck& rc : checks) {
      bool ok = rc.syntactic ? rc.source == rc.target
                             : decide_equiv(rc.source, rc.target).equivalent;
      if (!ok) {
        detail = rc.rule + " fails at " + rc.params;
        return false;
      }
      ++per_rule[rc.rule];
    }
    for (const char* rule : {"B->At", "C->At", "D-cycle", "E-D-branch",
                             "E-theta-branch", "F-D-branch", "F-theta-branch"})
      if (per_rule[rule] < 3) {
        detail = std::string("fewer than 3 samples for ") + rule;
        return false;
      }
    detail = std::to_string(checks.size()) + " instantiated reductions verified";
    return true;
  });
}

static void criterion_8() {
  criterion(8, "explicit witness with 9*lambda^3 = 8*m*p^2", [](std::string& detail) {
    // Concrete tuple m=-e, n=p=q=-1, y=e (so mq = npy), giving the A-side
    // parameters a=-1, b=-e, c=-1, d=-e, x=e^2.
    auto t = std::make_shared<const VarTable>(
        std::vector<std::string>{"Y1", "Y2", "Y3", "Y4", "l"});
    CycNum e = CycNum::eps();
    CycNum m = -e, p = CycNum(-1);

    PolyMat a_mat =
        raw_case({RawCase::A, {CycNum(-1), -e, CycNum(-1), -e, e * e}}, t);
    PolyMat b_mat = raw_case({RawCase::B, {m, CycNum(-1), p, CycNum(-1), e}}, t);

    Poly l = Poly::variable(t, 4);
    Poly z(t);
    auto s = [&](const CycNum& c) { return Poly::constant(t, c) * l; };
    CycNum half(Rat(1, 2)), three_half(Rat(3, 2));
    PolyMat u({{z, s(-half * p), s(half * p * p)},
               {s(three_half * m * m), z, z},
               {z, s(-half * p * p), l}});
    PolyMat v({{z, s(three_half * m * m), z},
               {s(-half * p), z, s(-half * p * p)},
               {s(half * p * p), z, l}});

    // 9*lambda^3 = 8*m*p^2 with m=-e, p=-1: 9*l^3 + 8*e = 0.
    Poly relation = CycNum(9) * l * l * l + Poly::constant(t, CycNum(8) * e);
    bool ok = verify_witness(a_mat.transpose(), b_mat, u, v, {relation});
    detail = ok ? "U*A^t = B*V and both determinants are 1 modulo the relation"
                : "witness rejected";
    return ok;
  });
}

static void criterion_9() {
  criterion(9, "completion lemma", [](std::string& detail) {
    std::mt19937 rng(20240815);
    auto t = VarTable::standard();
    const int partitions[3][4] = {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}};
    auto root_pair = [&](int i, int j, const CycNum& r) {
      return Poly::variable(t, i) - r * Poly::variable(t, j);
    };
    auto& roots = root_order();
    std::uniform_int_distribution<int> part(0, 2), root(0, 2);
    int done = 0, equiv_pairs = 0;
    while (done < 20) {
      const int* p1 = partitions[part(rng)];
      const int* p2 = partitions[part(rng)];
      std::vector<Poly> forms{root_pair(p1[0], p1[1], roots[root(rng)]),
                              root_pair(p1[2], p1[3], roots[root(rng)]),
                              root_pair(p2[0], p2[1], roots[root(rng)]),
                              root_pair(p2[2], p2[3], roots[root(rng)])};
      if (!are_independent_linear_forms(forms)) continue;
      PolyMat m0 = complete_factorization(forms[0], forms[1], forms[2], forms[3], 0);
      if (m0.det() != f4(t)) {
        detail = "completion determinant mismatch";
        return false;
      }
      ++done;
      if (equiv_pairs < 5) {
        PolyMat m1 =
            complete_factorization(forms[0], forms[1], forms[2], forms[3],
                                   1 + static_cast<unsigned>(done % 3));
        if (!decide_equiv(m0, m1).equivalent) {
          detail = "two completions of one border are not equivalent";
          return false;
        }
        ++equiv_pairs;
      }
    }
    detail = "20 completions with det = f4; " + std::to_string(equiv_pairs) +
             " variant pairs equivalent";
    return equiv_pairs >= 5;
  });
}

static void criterion_10() {
  criterion(10, "tensor factorizations meet the two-generated catalog",
            [](std::string& detail) {
    auto t = VarTable::standard();
    int matched = 0;
    std::vector<TwoGenParams> samples = {
        {2, 3, CycNum(-1), CycNum(-1)},
        {2, 4, -CycNum::eps(), CycNum(1) + CycNum::eps()},
        {3, 4, CycNum(1) + CycNum::eps(), -CycNum::eps()}};
    for (const TwoGenParams& p : samples) {
      auto var = [&](int k) { return Poly::variable(t, static_cast<std::size_t>(k - 1)); };
      Poly lin1 = var(1) - p.a * var(p.s());
      Poly quad1 = var(1) * var(1) + p.a * var(1) * var(p.s()) +
                   p.a.pow(2) * var(p.s()) * var(p.s());
      Poly lin2 = var(p.i) - p.b * var(p.j);
      Poly quad2 = var(p.i) * var(p.i) + p.b * var(p.i) * var(p.j) +
                   p.b.pow(2) * var(p.j) * var(p.j);
      MatrixFactorization tensor = tensor_1x1(lin1, quad1, quad2, lin2);
      if (tensor.f != f4(t)) {
        detail = "tensor does not factor f4 at " + p.str();
        return false;
      }
      if (!decide_equiv(tensor.phi, phi_ij(p)).equivalent) {
        detail = "tensor not equivalent to phi at " + p.str();
        return false;
      }
      ++matched;
    }
    detail = std::to_string(matched) + " tensor products matched phi_ij members";
    return matched >= 3;
  });
}

static void criterion_11() {
  criterion(11, "randomized kernel property suites", [](std::string& detail) {
    std::mt19937 rng(987654321);
    auto t = VarTable::standard();
    MonomialOrder grevlex{OrderKind::grevlex}, lex{OrderKind::lex};

    auto random_poly = [&](int max_terms, int max_deg) {
      std::uniform_int_distribution<int> nterms(1, max_terms), expd(0, max_deg);
      std::uniform_int_distribution<long> coef(-4, 4);
      Poly p(t);
      int k = nterms(rng);
      for (int i = 0; i < k; ++i) {
        Exponents e(4, 0);
        for (auto& x : e) x = expd(rng);
        p.add_term(e, CycNum(Rat(coef(rng)), Rat(coef(rng))));
      }
      return p;
    };

    // Field axioms.
    std::uniform_int_distribution<long> num(-100000, 100000), den(1, 997);
    for (int k = 0; k < 100; ++k) {
      CycNum a(Rat(num(rng), den(rng)), Rat(num(rng), den(rng)));
      CycNum b(Rat(num(rng), den(rng)), Rat(num(rng), den(rng)));
      if (!(a * (b + CycNum(1)) == a * b + a) ||
          (!a.is_zero() && !(a * a.inv() == CycNum(1)))) {
        detail = "field axiom failure";
        return false;
      }
    }

    // GB idempotence, S-polynomial criterion, and NF-membership soundness.
    for (int trial = 0; trial < 100; ++trial) {
      MonomialOrder ord = trial % 2 ? lex : grevlex;
      std::vector<Poly> gens{random_poly(3, 2), random_poly(3, 2), random_poly(2, 2)};
      GroebnerBasis gb = buchberger(Ideal(gens, ord));
      GroebnerBasis gb2 = buchberger(Ideal(gb.elems, ord));
      if (gb2.elems != gb.elems) {
        detail = "GB not idempotent";
        return false;
      }
      for (std::size_t i = 0; i < gb.elems.size(); ++i)
        for (std::size_t j = i + 1; j < gb.elems.size(); ++j)
          if (!normal_form(s_polynomial(gb.elems[i], gb.elems[j], ord), gb.elems, ord)
                   .is_zero()) {
            detail = "S-polynomial does not reduce to zero";
            return false;
          }
      // Membership soundness: random combinations of generators reduce to 0.
      Poly combo = random_poly(2, 1) * gens[0] + random_poly(2, 1) * gens[1];
      if (!normal_form(combo, gb.elems, ord).is_zero()) {
        detail = "ideal combination does not reduce to zero";
        return false;
      }
    }

    // Adjugate identity and Fitting-ideal invariance.
    std::uniform_int_distribution<int> idx(0, 2), pick(0, 3);
    std::uniform_int_distribution<long> coef(-3, 3);
    auto random_mat = [&](std::size_t n) {
      PolyMat m(n, t);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m.at(i, j) = random_poly(2, 1);
      return m;
    };
    for (int trial = 0; trial < 100; ++trial) {
      std::size_t n = 2 + trial % 2;
      PolyMat a = random_mat(n);
      if (!(a * a.adjugate() == PolyMat::scalar(n, a.det()))) {
        detail = "adjugate identity failure";
        return false;
      }
    }
    for (int trial = 0; trial < 100; ++trial) {
      PolyMat a = random_mat(2);
      std::size_t i = idx(rng) % 2, j = 1 - i;
      ElementaryOp op;
      switch (pick(rng)) {
        case 0: op = SwapRows{i, j}; break;
        case 1: op = ScaleCol{i, CycNum::eps()}; break;
        case 2: op = AddRowMultiple{i, j, P("Y1")}; break;
        default: op = AddColMultiple{i, j, P("Y2-Y3")}; break;
      }
      PolyMat b = apply_elementary(a, op);
      if (!ideal_equal(fitting_ideal(a, 1), fitting_ideal(b, 1))) {
        detail = "Fitting ideal changed under an elementary transform";
        return false;
      }
    }

    detail = "100+ randomized cases per suite, all exact";
    return true;
  });
}

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  criterion_11();
  std::printf("%d of 11 criteria failed\n", g_failures);
  return g_failures == 0 ? 0 : 1;
}
