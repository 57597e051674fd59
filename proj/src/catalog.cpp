#include "mfkit/catalog.hpp"

#include "mfkit/linsolve.hpp"

#include <algorithm>

namespace mfkit {

namespace {

Poly Yv(const VarTablePtr& t, int i) {
  int idx = t->index("Y" + std::to_string(i));
  if (idx < 0) throw Error("catalog: table lacks Y" + std::to_string(i));
  return Poly::variable(t, static_cast<std::size_t>(idx));
}

Poly cpoly(const VarTablePtr& t, const CycNum& c) { return Poly::constant(t, c); }

/// u^2 + a*u*v + a^2*v^2.
Poly quad(const Poly& u, const Poly& v, const CycNum& a) {
  return u * u + a * (u * v) + a.pow(2) * (v * v);
}

void require_root_of_minus_one(const CycNum& x, const std::string& name) {
  if (x.pow(3) != CycNum(-1))
    throw Error("catalog: parameter " + name + " = " + x.str() +
                " is not a cube root of -1");
}

void require_primitive_eps(const CycNum& x) {
  if (x.pow(3) != CycNum(1) || x == CycNum(1))
    throw Error("catalog: eps = " + x.str() +
                " is not a primitive cube root of unity");
}

void require_root_permutation(const std::vector<CycNum>& v, const std::string& what) {
  auto roots = cube_roots_of_minus_one();
  if (v.size() != 3 || !std::is_permutation(v.begin(), v.end(), roots.begin()))
    throw Error("catalog: " + what + " is not a permutation of the cube roots of -1");
}

MatrixFactorization mf_with_adjugate(PolyMat m, const VarTablePtr& table) {
  Poly f = f4(table);
  Poly d = m.det();
  auto unit = d.exact_div(f);
  if (!unit || !unit->is_constant() || unit->is_zero())
    throw Error("catalog: determinant is not a unit multiple of f4");
  CycNum u = unit->constant_value();
  PolyMat psi = m.adjugate();
  if (u != CycNum(1)) {
    CycNum s = u.inv();
    for (std::size_t i = 0; i < psi.size(); ++i)
      for (std::size_t j = 0; j < psi.size(); ++j) psi.at(i, j) = s * psi.at(i, j);
  }
  return make_mf(std::move(m), std::move(psi), std::move(f));
}

}  // namespace

const std::vector<CycNum>& root_order() {
  static const std::vector<CycNum> r = cube_roots_of_minus_one();
  return r;
}

const std::vector<CycNum>& eps_order() {
  static const std::vector<CycNum> r = primitive_cube_roots_of_unity();
  return r;
}

void TwoGenParams::validate() const {
  if (!(i < j && i >= 2 && j <= 4))
    throw Error("TwoGenParams: need 2 <= i < j <= 4");
  require_root_of_minus_one(a, "a");
  require_root_of_minus_one(b, "b");
}

std::string TwoGenParams::str() const {
  return "i=" + std::to_string(i) + ",j=" + std::to_string(j) + ",a=" + a.str() +
         ",b=" + b.str();
}

PolyMat phi_ij(const TwoGenParams& p, const VarTablePtr& t) {
  p.validate();
  Poly y1 = Yv(t, 1), yi = Yv(t, p.i), yj = Yv(t, p.j), ys = Yv(t, p.s());
  return PolyMat({{y1 - p.a * ys, -quad(yi, yj, p.b)},
                  {yi - p.b * yj, quad(y1, ys, p.a)}});
}

PolyMat psi_ij(const TwoGenParams& p, const VarTablePtr& t) {
  p.validate();
  Poly y1 = Yv(t, 1), yi = Yv(t, p.i), yj = Yv(t, p.j), ys = Yv(t, p.s());
  return PolyMat({{quad(y1, ys, p.a), quad(yi, yj, p.b)},
                  {-(yi - p.b * yj), y1 - p.a * ys}});
}

void AlphaParams::validate() const {
  require_root_of_minus_one(b, "b");
  require_root_of_minus_one(c, "c");
  require_root_of_minus_one(d, "d");
  require_primitive_eps(eps);
}

std::string AlphaParams::str() const {
  return "b=" + b.str() + ",c=" + c.str() + ",d=" + d.str() + ",eps=" + eps.str();
}

PolyMat alpha(const AlphaParams& p, const VarTablePtr& t) {
  p.validate();
  CycNum a = p.a(), b = p.b, c = p.c, d = p.d, e2 = p.eps.pow(2);
  Poly y1 = Yv(t, 1), y2 = Yv(t, 2), y3 = Yv(t, 3), y4 = Yv(t, 4);
  Poly z(t);
  return PolyMat(
      {{z, y1 - a * y4, y2 - b * y3},
       {y1 - c * y2, -(b.pow(2)) * y3 - (a * b * c.pow(2) * e2) * y4,
        (b.pow(2) * c.pow(2)) * y3 - (a * b * c * e2) * y4},
       {y3 - d * y4, c.pow(2) * y2 + (b * c.pow(2)) * y3 + (a * c) * y4,
        -y1 - c * y2 - a * y4}});
}

PolyMat beta(const AlphaParams& p, const VarTablePtr& t) {
  return alpha(p, t).transpose();
}

void EtaParams::validate() const {
  require_root_permutation({a, b, c}, "(a,b,c)");
  require_primitive_eps(eps);
}

std::string EtaParams::str() const {
  return "a=" + a.str() + ",b=" + b.str() + ",c=" + c.str() + ",eps=" + eps.str();
}

PolyMat eta(const EtaParams& p, const VarTablePtr& t) {
  p.validate();
  Poly y1 = Yv(t, 1), y2 = Yv(t, 2), y3 = Yv(t, 3), y4 = Yv(t, 4);
  Poly z(t);
  return PolyMat({{z, y1 + y2, y3 - p.a * y4},
                  {y1 + p.eps * y2, -y3 + p.c * y4, z},
                  {y3 - p.b * y4, z, -y1 - p.eps.pow(2) * y2}});
}

void ThetaParams::validate() const {
  require_root_permutation({a, b, c}, "(a,b,c)");
}

std::string ThetaParams::str() const {
  return "a=" + a.str() + ",b=" + b.str() + ",c=" + c.str();
}

PolyMat theta(const ThetaParams& p, const VarTablePtr& t) {
  p.validate();
  Poly y1 = Yv(t, 1), y2 = Yv(t, 2), y3 = Yv(t, 3), y4 = Yv(t, 4);
  Poly z(t);
  return PolyMat({{z, y1 + y3, y2 - p.a * y4},
                  {y1 - (p.a.pow(2) * p.b) * y3, -y2 + p.c * y4, z},
                  {y2 - p.b * y4, z, -y1 + (p.a * p.b.pow(2)) * y3}});
}

RawCase raw_case_from_string(const std::string& s) {
  if (s == "A") return RawCase::A;
  if (s == "At") return RawCase::At;
  if (s == "B") return RawCase::B;
  if (s == "Bt") return RawCase::Bt;
  if (s == "C") return RawCase::C;
  if (s == "Ct") return RawCase::Ct;
  if (s == "D") return RawCase::D;
  if (s == "E") return RawCase::E;
  if (s == "F") return RawCase::F;
  throw Error("unknown raw case tag '" + s + "'");
}

std::string raw_case_to_string(RawCase c) {
  switch (c) {
    case RawCase::A: return "A";
    case RawCase::At: return "At";
    case RawCase::B: return "B";
    case RawCase::Bt: return "Bt";
    case RawCase::C: return "C";
    case RawCase::Ct: return "Ct";
    case RawCase::D: return "D";
    case RawCase::E: return "E";
    case RawCase::F: return "F";
  }
  return "?";
}

void RawCaseParams::validate() const {
  bool transposed_family =
      tag == RawCase::D || tag == RawCase::E || tag == RawCase::F;
  std::size_t need = transposed_family ? 4 : 5;
  if (scalars.size() < need)
    throw Error("RawCaseParams: case " + raw_case_to_string(tag) + " needs " +
                std::to_string(need) + " scalars");
  const char* names[] = {"a", "b", "c", "d"};
  for (std::size_t k = 0; k < 4; ++k)
    require_root_of_minus_one(scalars[k], names[k]);
  const CycNum &a = scalars[0], &b = scalars[1], &c = scalars[2], &d = scalars[3];
  switch (tag) {
    case RawCase::A:
    case RawCase::At:
      require_primitive_eps(scalars[4]);
      if (b * c * d != scalars[4] * a)
        throw Error("RawCaseParams: case A requires bcd = eps*a");
      break;
    case RawCase::B:
    case RawCase::Bt:
      require_primitive_eps(scalars[4]);
      if (a * d != scalars[4] * b * c)
        throw Error("RawCaseParams: case B requires ad = eps*bc");
      break;
    case RawCase::C:
    case RawCase::Ct:
      require_primitive_eps(scalars[4]);
      if (a * b != scalars[4] * c * d)
        throw Error("RawCaseParams: case C requires ab = eps*cd");
      break;
    case RawCase::D:
    case RawCase::E:
    case RawCase::F:
      if (a == c || b == d)
        throw Error("RawCaseParams: cases D/E/F require a != c and b != d");
      break;
  }
}

PolyMat raw_case(const RawCaseParams& p, const VarTablePtr& t) {
  p.validate();
  const CycNum &a = p.scalars[0], &b = p.scalars[1], &c = p.scalars[2],
               &d = p.scalars[3];
  Poly y1 = Yv(t, 1), y2 = Yv(t, 2), y3 = Yv(t, 3), y4 = Yv(t, 4);
  Poly z(t);
  switch (p.tag) {
    case RawCase::A:
    case RawCase::At: {
      AlphaParams ap{b, c, d, p.scalars[4]};
      PolyMat m = alpha(ap, t);
      return p.tag == RawCase::A ? m : m.transpose();
    }
    case RawCase::B:
    case RawCase::Bt: {
      const CycNum& e = p.scalars[4];
      PolyMat m(
          {{z, y1 - a * y3, y2 - b * y4},
           {y1 - c * y2, (a.pow(2) * c) * y3 + (a * b * c.pow(2) + a.pow(2) * c * d) * y4,
            a.pow(2) * y3 - (a.pow(2) * d * e) * y4},
           {y3 - d * y4, c.pow(2) * y2 + (a * c) * y3 + (b * c.pow(2)) * y4,
            -y1 - c * y2 - a * y3}});
      return p.tag == RawCase::B ? m : m.transpose();
    }
    case RawCase::C:
    case RawCase::Ct: {
      CycNum e2 = p.scalars[4].pow(2);
      Poly mid = (b.pow(2) * c.pow(2)) * y3 - (b * c.pow(2) * d * e2) * y4;
      PolyMat m({{z, y1 - a * y4, y2 - b * y3},
                 {y1 - c * y3, -y2 - b * y3 - d * y4, -mid},
                 {y2 - d * y4, mid, -y1 - c * y3 - a * y4}});
      return p.tag == RawCase::C ? m : m.transpose();
    }
    case RawCase::D:
      return PolyMat({{z, y1 - a * y2, y3 - b * y4},
                      {y1 - c * y2, -y3 - (b + d) * y4, z},
                      {y3 - d * y4, z, -y1 - (a + c) * y2}});
    case RawCase::E:
      return PolyMat({{z, y1 - a * y3, y2 - b * y4},
                      {y1 - c * y3, -y2 - (b + d) * y4, z},
                      {y2 - d * y4, z, -y1 - (a + c) * y3}});
    case RawCase::F:
      return PolyMat({{z, y1 - a * y4, y2 - b * y3},
                      {y1 - c * y4, -y2 - (b + d) * y3, z},
                      {y2 - d * y3, z, -y1 - (a + c) * y4}});
  }
  throw Error("raw_case: unreachable");
}

std::string RawCaseParams::str() const {
  std::string s = "case=" + raw_case_to_string(tag);
  const char* names[] = {"a", "b", "c", "d", "eps"};
  for (std::size_t k = 0; k < scalars.size() && k < 5; ++k)
    s += std::string(",") + names[k] + "=" + scalars[k].str();
  return s;
}

PolyMat d_perm(const std::vector<CycNum>& abc, const std::vector<CycNum>& pqr,
               const VarTablePtr& t) {
  require_root_permutation(abc, "(a,b,c)");
  require_root_permutation(pqr, "(p,q,r)");
  return raw_case({RawCase::D, {abc[0], pqr[0], abc[2], pqr[1]}}, t);
}

PolyMat e_perm(const std::vector<CycNum>& abc, const std::vector<CycNum>& pqr,
               const VarTablePtr& t) {
  require_root_permutation(abc, "(a,b,c)");
  require_root_permutation(pqr, "(p,q,r)");
  return raw_case({RawCase::E, {abc[0], pqr[0], abc[2], pqr[1]}}, t);
}

PolyMat f_perm(const std::vector<CycNum>& abc, const std::vector<CycNum>& pqr,
               const VarTablePtr& t) {
  require_root_permutation(abc, "(a,b,c)");
  require_root_permutation(pqr, "(p,q,r)");
  return raw_case({RawCase::F, {abc[0], pqr[0], abc[2], pqr[1]}}, t);
}

std::vector<CatalogEntry> enumerate_two_gen() {
  auto t = VarTable::standard();
  Poly f = f4(t);
  std::vector<CatalogEntry> out;
  const int pairs[3][2] = {{2, 3}, {2, 4}, {3, 4}};
  for (const char* family : {"phi", "psi"}) {
    for (auto [i, j] : pairs) {
      for (const CycNum& a : root_order()) {
        for (const CycNum& b : root_order()) {
          TwoGenParams p{i, j, a, b};
          PolyMat phi = phi_ij(p, t), psi = psi_ij(p, t);
          MatrixFactorization mf = std::string(family) == "phi"
                                       ? make_mf(phi, psi, f)
                                       : make_mf(psi, phi, f);
          out.push_back({family, p.str(), std::move(mf)});
        }
      }
    }
  }
  return out;
}

std::vector<CatalogEntry> enumerate_M3() {
  auto t = VarTable::standard();
  std::vector<CatalogEntry> out;
  for (const char* family : {"alpha", "beta"}) {
    for (const CycNum& b : root_order())
      for (const CycNum& c : root_order())
        for (const CycNum& d : root_order())
          for (const CycNum& e : eps_order()) {
            AlphaParams p{b, c, d, e};
            PolyMat m = std::string(family) == "alpha" ? alpha(p, t) : beta(p, t);
            out.push_back({family, p.str(), mf_with_adjugate(std::move(m), t),
                           p.twist().str()});
          }
  }
  return out;
}

std::vector<CatalogEntry> enumerate_N3() {
  auto t = VarTable::standard();
  std::vector<CatalogEntry> out;
  const auto& roots = root_order();
  int perm_idx[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  for (auto& pi : perm_idx)
    for (const CycNum& e : eps_order()) {
      EtaParams p{roots[pi[0]], roots[pi[1]], roots[pi[2]], e};
      out.push_back({"eta", p.str(), mf_with_adjugate(eta(p, t), t)});
    }
  for (auto& pi : perm_idx) {
    ThetaParams p{roots[pi[0]], roots[pi[1]], roots[pi[2]]};
    out.push_back({"theta", p.str(), mf_with_adjugate(theta(p, t), t)});
  }
  return out;
}

PolyMat complete_factorization(const Poly& alpha_form, const Poly& beta_form,
                               const Poly& gamma_form, const Poly& delta_form,
                               unsigned variant) {
  const VarTablePtr& t = alpha_form.table();
  std::vector<Poly> forms = {alpha_form, beta_form, gamma_form, delta_form};
  for (const Poly& p : forms)
    if (p.is_zero() || p.degree() != 1 || !p.is_homogeneous())
      throw Error("complete_factorization: inputs must be nonzero linear forms");
  if (!are_independent_linear_forms(forms))
    throw Error("complete_factorization: forms are not linearly independent");
  Poly f = f4(t);
  MonomialOrder ord{OrderKind::grevlex};
  if (!ideal_member(f, Ideal({alpha_form, beta_form}, ord)))
    throw Error("complete_factorization: f4 not in (alpha, beta)");
  if (!ideal_member(f, Ideal({gamma_form, delta_form}, ord)))
    throw Error("complete_factorization: f4 not in (gamma, delta)");

  // det [[0,a,b],[g,m,n],[d,w,t]] = -a*g*t + a*d*n + b*g*w - b*d*m = f4,
  // linear in the 16 coefficients of the unknown forms m, n, w, t.
  std::size_t nv = t->size();
  std::vector<Poly> multiplier = {
      -(beta_form * delta_form),   // m
      alpha_form * delta_form,     // n
      beta_form * gamma_form,      // w
      -(alpha_form * gamma_form),  // t
  };
  std::vector<Poly> columns;
  for (const Poly& mult : multiplier)
    for (std::size_t v = 0; v < nv; ++v)
      columns.push_back(mult * Poly::variable(t, v));

  // Row index: every cubic monomial occurring anywhere.
  std::map<Exponents, std::size_t> row_of;
  auto note = [&](const Poly& p) {
    for (const auto& [e, c] : p.terms())
      row_of.emplace(e, row_of.size());
  };
  for (const Poly& p : columns) note(p);
  note(f);

  ScalarMat a(row_of.size(), columns.size());
  std::vector<CycNum> rhs(row_of.size(), CycNum(0));
  for (std::size_t k = 0; k < columns.size(); ++k)
    for (const auto& [e, c] : columns[k].terms()) a.at(row_of[e], k) = c;
  for (const auto& [e, c] : f.terms()) rhs[row_of[e]] = c;

  auto sol = solve(a, rhs);
  if (!sol)
    throw Error("complete_factorization: internal invariant breach, "
                "determinant system is inconsistent");
  if (variant != 0) {
    auto basis = nullspace(a);
    for (std::size_t i = 0; i < basis.size(); ++i) {
      CycNum c(static_cast<long>((variant >> (i % 8)) & 3u));
      if (c.is_zero()) continue;
      for (std::size_t k = 0; k < sol->size(); ++k)
        (*sol)[k] = (*sol)[k] + c * basis[i][k];
    }
  }

  auto form_from = [&](std::size_t base) {
    Poly p(t);
    for (std::size_t v = 0; v < nv; ++v)
      p = p + (*sol)[base * nv + v] * Poly::variable(t, v);
    return p;
  };
  Poly z(t);
  PolyMat result({{z, alpha_form, beta_form},
                  {gamma_form, form_from(0), form_from(1)},
                  {delta_form, form_from(2), form_from(3)}});
  if (result.det() != f)
    throw Error("complete_factorization: internal invariant breach, det != f4");
  return result;
}

}  // namespace mfkit
