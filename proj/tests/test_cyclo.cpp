#include "mfkit/cyclo.hpp"

#include <doctest.h>

#include <random>

using namespace mfkit;

TEST_CASE("eps satisfies its minimal polynomial") {
  CycNum e = CycNum::eps();
  CHECK(e * e == CycNum(-1) - e);
  CHECK(e * e + e + CycNum(1) == CycNum(0));
  CHECK((-e).pow(3) == CycNum(-1));
  CHECK(e.pow(3) == CycNum(1));
}

TEST_CASE("additive inverse") {
  CycNum e = CycNum::eps();
  CHECK((CycNum(1) + e) + (CycNum(-1) - e) == CycNum(0));
}

TEST_CASE("inverses") {
  CycNum e = CycNum::eps();
  CHECK(e.inv() == e * e);
  CHECK(CycNum(2).inv() == CycNum(Rat(1, 2)));
  CycNum x(Rat(1), Rat(2));  // 1 + 2e
  CHECK(x * x.inv() == CycNum(1));
  CHECK_THROWS_AS(CycNum(0).inv(), Error);
}

TEST_CASE("cube roots of -1") {
  auto roots = cube_roots_of_minus_one();
  REQUIRE(roots.size() == 3);
  CycNum e = CycNum::eps();
  CHECK(roots[0] == CycNum(-1));
  CHECK(roots[1] == -e);
  CHECK(roots[2] == CycNum(1) + e);
  for (const auto& r : roots) CHECK(r.pow(3) == CycNum(-1));
  CHECK(roots[0] != roots[1]);
  CHECK(roots[0] != roots[2]);
  CHECK(roots[1] != roots[2]);
  // Closed under multiplication by primitive cube roots of unity.
  for (const auto& r : roots)
    for (const auto& w : primitive_cube_roots_of_unity()) {
      CycNum p = r * w;
      CHECK((p == roots[0] || p == roots[1] || p == roots[2]));
    }
}

TEST_CASE("primitive cube roots of unity") {
  auto prim = primitive_cube_roots_of_unity();
  REQUIRE(prim.size() == 2);
  CHECK(prim[0] == CycNum::eps());
  CHECK(prim[1] == CycNum(-1) - CycNum::eps());
  for (const auto& w : prim) {
    CHECK(w.pow(3) == CycNum(1));
    CHECK(w != CycNum(1));
    CHECK(w * w + w + CycNum(1) == CycNum(0));
  }
}

TEST_CASE("field axioms on random values") {
  std::mt19937 rng(12345);
  std::uniform_int_distribution<long> num(-1000000, 1000000);
  std::uniform_int_distribution<long> den(1, 997);
  auto rand_cyc = [&] {
    return CycNum(Rat(num(rng), den(rng)), Rat(num(rng), den(rng)));
  };
  for (int k = 0; k < 200; ++k) {
    CycNum a = rand_cyc(), b = rand_cyc(), c = rand_cyc();
    CHECK((a + b) - b == a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b) * c == a * (b * c));
    if (!a.is_zero()) CHECK(a * a.inv() == CycNum(1));
  }
}

TEST_CASE("text form") {
  CHECK(CycNum(Rat(-1, 2)).str() == "-1/2");
  CHECK(CycNum::eps().str() == "e");
  CHECK((CycNum(Rat(-1, 2)) + CycNum(3) * CycNum::eps()).str() == "(-1/2+3*e)");
}
