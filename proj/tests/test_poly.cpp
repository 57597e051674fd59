#include "mfkit/poly.hpp"

#include <doctest.h>

#include <random>

using namespace mfkit;

namespace {

VarTablePtr tab() { return VarTable::standard(); }

Poly P(const std::string& s) { return Poly::parse(s, tab()); }

Poly random_poly(std::mt19937& rng, const VarTablePtr& t, int max_terms = 5,
                 int max_deg = 3) {
  std::uniform_int_distribution<int> nterms(0, max_terms);
  std::uniform_int_distribution<int> expd(0, max_deg);
  std::uniform_int_distribution<long> coef(-6, 6);
  Poly p(t);
  int k = nterms(rng);
  for (int i = 0; i < k; ++i) {
    Exponents e(t->size(), 0);
    for (auto& x : e) x = expd(rng);
    p.add_term(e, CycNum(Rat(coef(rng)), Rat(coef(rng))));
  }
  return p;
}

}  // namespace

TEST_CASE("parse f4") {
  CHECK(P("Y1^3+Y2^3+Y3^3+Y4^3") == f4(tab()));
  CHECK(P("0").is_zero());
  CHECK(P("Y1-e*Y4") == P("Y1") - Poly::constant(tab(), CycNum::eps()) * P("Y4"));
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(P("Y5+1"), Error);
  CHECK_THROWS_AS(P("Y1++"), Error);
  CHECK_THROWS_AS(P("Y1 Y2"), Error);  // multiplication must be explicit
}

TEST_CASE("arithmetic identities") {
  CHECK(P("(Y1+Y4)*(Y1^2-Y1*Y4+Y4^2)") == P("Y1^3+Y4^3"));
  CHECK((P("Y1+Y2") * P("0")).is_zero());
  // (Y1 - a Y4)(Y1^2 + a Y1 Y4 + a^2 Y4^2) = Y1^3 + Y4^3 when a^3 = -1.
  for (const char* a : {"-1", "-e", "1+e"}) {
    std::string s = std::string(a);
    Poly lhs = P("(Y1-(" + s + ")*Y4)*(Y1^2+(" + s + ")*Y1*Y4+(" + s + ")^2*Y4^2)");
    CHECK(lhs == P("Y1^3+Y4^3"));
  }
}

TEST_CASE("substitute") {
  Poly f = f4(tab());
  std::map<std::size_t, Poly> sub{{0, -P("Y2")}, {2, -P("Y4")}};
  CHECK(f.substitute(sub).is_zero());

  std::map<std::size_t, Poly> ident;
  CHECK(f.substitute(ident) == f);

  // Y1=bcd, Y2=bd, Y3=d, Y4=1 in Y1^2+a*Y1*Y4+a^2*Y4^2 -> (bcd)^2+abcd+a^2,
  // checked at b=c=d=-1, a=-e (so bcd=-1).
  CycNum a = -CycNum::eps();
  Poly q = P("Y1^2") + a * P("Y1*Y4") + a.pow(2) * P("Y4^2");
  std::map<std::size_t, Poly> sub2{{0, P("-1")}, {1, P("1")}, {2, P("-1")}, {3, P("1")}};
  Poly expect = Poly::constant(tab(), CycNum(1) - a + a.pow(2));
  CHECK(q.substitute(sub2) == expect);
}

TEST_CASE("coeff_decompose") {
  auto parts = P("Y1^2*Y2+Y2+Y3").coeff_decompose(1);
  REQUIRE(parts.size() == 2);
  CHECK(parts[0] == P("Y3"));
  CHECK(parts[1] == P("Y1^2+1"));

  auto f = f4(tab()).coeff_decompose(0);
  REQUIRE(f.size() == 4);
  CHECK(f[0] == P("Y2^3+Y3^3+Y4^3"));
  CHECK(f[1].is_zero());
  CHECK(f[2].is_zero());
  CHECK(f[3] == P("1"));

  auto z = Poly(tab()).coeff_decompose(2);
  REQUIRE(z.size() == 1);
  CHECK(z[0].is_zero());
}

TEST_CASE("exact_div") {
  CHECK(*P("Y1^3+Y4^3").exact_div(P("Y1+Y4")) == P("Y1^2-Y1*Y4+Y4^2"));
  Poly f = f4(tab());
  CHECK(*(f * f).exact_div(f) == f);
  CHECK(!P("Y1").exact_div(P("Y2")).has_value());
  CHECK_THROWS_AS(P("Y1").exact_div(P("0")), Error);
}

TEST_CASE("degree and homogeneity") {
  CHECK(f4(tab()).is_homogeneous());
  CHECK(f4(tab()).degree() == 3);
  CHECK(!P("Y1+Y2^2").is_homogeneous());
  CHECK(P("5").degree() == 0);
  CHECK(P("0").degree() == -1);
}

TEST_CASE("monomial orders") {
  MonomialOrder lex{OrderKind::lex}, grevlex{OrderKind::grevlex};
  // Y1 > Y2^3 under lex, but not under grevlex.
  Exponents y1{1, 0, 0, 0}, y2c{0, 3, 0, 0};
  CHECK(lex.greater(y1, y2c));
  CHECK(grevlex.greater(y2c, y1));
  // Classic grevlex tie-break: Y1*Y4 < Y2*Y3.
  Exponents y14{1, 0, 0, 1}, y23{0, 1, 1, 0};
  CHECK(grevlex.greater(y23, y14));
}

TEST_CASE("random ring laws and round trips") {
  std::mt19937 rng(777);
  auto t = tab();
  MonomialOrder ord{OrderKind::grevlex};
  for (int k = 0; k < 120; ++k) {
    Poly p = random_poly(rng, t), q = random_poly(rng, t), r = random_poly(rng, t);
    CHECK(p * (q + r) == p * q + p * r);
    CHECK((p * q) * r == p * (q * r));
    CHECK(Poly::parse(p.str(ord), t) == p);
    if (!q.is_zero()) CHECK(*(p * q).exact_div(q) == p);
    // coeff_decompose reassembly.
    auto parts = p.coeff_decompose(1);
    Poly back(t);
    for (std::size_t i = 0; i < parts.size(); ++i)
      back = back + parts[i] * Poly::variable(t, 1).pow(static_cast<unsigned>(i));
    CHECK(back == p);
  }
}

TEST_CASE("canonical printing is order-sorted") {
  MonomialOrder grevlex{OrderKind::grevlex};
  CHECK(P("Y4+Y1^2").str(grevlex) == "Y1^2+Y4");
  CHECK(P("-Y1-e*Y2").str(grevlex) == "-Y1-e*Y2");
  CHECK(Poly(tab()).str(grevlex) == "0");
}
