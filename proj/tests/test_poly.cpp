#include <catch2/catch_amalgamated.hpp>

#include "dio/poly.hpp"
#include "dio/poly_io.hpp"
#include "testutil.hpp"

using namespace dio;
using testutil::Rng;

TEST_CASE("natural power examples") {
  CHECK(nat_pow(5, 0) == 1);
  CHECK(nat_pow(2, 3) == 8);
  CHECK(nat_pow(0, 4) == 0);
  CHECK(nat_pow(0, 0) == 1);
  CHECK(nat_pow(10, 20) == Nat("100000000000000000000"));
}

TEST_CASE("monomial evaluation examples") {
  CHECK(eval_monomial({1, {}}, {7, 7}) == 1);
  CHECK(eval_monomial({3, {2, 1}}, {2, 5}) == 60);
  CHECK(eval_monomial({-2, {1, 3}}, {3, 2}) == -48);
}

TEST_CASE("monomial evaluation truncates to the shorter of vars and exps") {
  // Extra variables beyond the exponent vector are ignored, and missing
  // variables leave their exponents unused.
  CHECK(eval_monomial({3, {2}}, {2, 99, 99}) == 12);
  CHECK(eval_monomial({3, {2, 5, 5}}, {2}) == 12);
  CHECK(eval_nat_mono({3, {2}}, {2, 99}) == 12);
}

TEST_CASE("polynomial evaluation examples") {
  Poly d = {{1, {2, 0, 0}}, {-1, {0, 2, 0}}, {-1, {0, 0, 2}}, {-1, {0, 0, 0}}};
  CHECK(eval_poly(d, {1, 0, 0}) == 0);
  CHECK(eval_poly(d, {0, 0, 0}) == -1);
  CHECK(eval_poly(d, {3, 2, 2}) == 0);
  CHECK(eval_poly({}, {5, 5}) == 0);
}

TEST_CASE("natural polynomial evaluation examples") {
  CHECK(eval_nat_poly({{2, {1}}}, {3}) == 6);
  CHECK(eval_nat_poly({{1, {1}}, {1, {0}}}, {4}) == 5);
  CHECK(eval_nat_poly({}, {9}) == 0);
}

TEST_CASE("split examples") {
  SplitPoly s0 = split_poly({{0, {1}}});
  CHECK(s0.pos.empty());
  CHECK(s0.neg.empty());

  SplitPoly s1 = split_poly({{5, {0}}});
  CHECK(s1.pos == NatPoly{{5, {0}}});
  CHECK(s1.neg.empty());

  SplitPoly s2 = split_poly({{1, {2, 0, 0}}, {-1, {0, 2, 0}}, {-1, {0, 0, 2}}, {-1, {0, 0, 0}}});
  CHECK(s2.pos == NatPoly{{1, {2, 0, 0}}});
  CHECK(s2.neg == NatPoly{{1, {0, 2, 0}}, {1, {0, 0, 2}}, {1, {0, 0, 0}}});
}

TEST_CASE("split is exact: signed evaluation equals pos minus neg") {
  Rng rng(0x5eed0001);
  for (int i = 0; i < 1000; ++i) {
    std::size_t ar = testutil::rand_u64(rng, 0, 4);
    Poly p = testutil::rand_poly(rng, 8, ar, 1000, 3);
    std::vector<Nat> vars = testutil::rand_tuple(rng, ar, 20);
    SplitPoly s = split_poly(p);
    CHECK(eval_poly(p, vars) == Int(eval_nat_poly(s.pos, vars)) - Int(eval_nat_poly(s.neg, vars)));
  }
}

TEST_CASE("split drops zero monomials and keeps magnitudes") {
  Rng rng(0x5eed0002);
  for (int i = 0; i < 200; ++i) {
    Poly p = testutil::rand_poly(rng, 6, 3, 50, 2);
    if (!p.empty() && i % 2 == 0) p[i % p.size()].coeff = 0;
    SplitPoly s = split_poly(p);
    for (const auto& m : s.pos) CHECK(m.coeff > 0);
    for (const auto& m : s.neg) CHECK(m.coeff > 0);
    std::size_t zeros = 0;
    for (const auto& m : p)
      if (m.coeff == 0) ++zeros;
    CHECK(s.pos.size() + s.neg.size() + zeros == p.size());
  }
}

TEST_CASE("map2_add truncates to the shorter vector") {
  CHECK(map2_add({1, 2, 3}, {10, 20}) == std::vector<std::uint64_t>{11, 22});
  CHECK(map2_add({}, {10, 20}).empty());
  CHECK(map2_add({1, 1, 1}, {0, 0, 0}) == std::vector<std::uint64_t>{1, 1, 1});
}

TEST_CASE("polynomial product examples") {
  Poly a = {{2, {1}}};
  Poly b = {{3, {1}}};
  CHECK(poly_mult(a, b) == Poly{{6, {2}}});

  // Left-outermost order: (a0+a1)(b0+b1) lists a0b0, a0b1, a1b0, a1b1.
  Poly p = {{1, {1, 0}}, {1, {0, 1}}};
  Poly q = {{1, {1, 0}}, {-1, {0, 0}}};
  Poly r = poly_mult(p, q);
  REQUIRE(r.size() == 4);
  CHECK(r[0] == Monomial{1, {2, 0}});
  CHECK(r[1] == Monomial{-1, {1, 0}});
  CHECK(r[2] == Monomial{1, {1, 1}});
  CHECK(r[3] == Monomial{-1, {0, 1}});

  CHECK(poly_mult(Poly{}, b).empty());
  CHECK(poly_mult(a, Poly{}).empty());
}

TEST_CASE("product is sound for evaluation") {
  Rng rng(0x5eed0003);
  for (int i = 0; i < 300; ++i) {
    std::size_t ar = testutil::rand_u64(rng, 0, 3);
    Poly p = testutil::rand_poly(rng, 5, ar, 20, 3);
    Poly q = testutil::rand_poly(rng, 5, ar, 20, 3);
    std::vector<Nat> vars = testutil::rand_tuple(rng, ar, 9);
    CHECK(eval_poly(poly_mult(p, q), vars) == eval_poly(p, vars) * eval_poly(q, vars));

    NatPoly np = testutil::rand_nat_poly(rng, 5, ar, 20, 3);
    NatPoly nq = testutil::rand_nat_poly(rng, 5, ar, 20, 3);
    CHECK(eval_nat_poly(poly_mult(np, nq), vars) ==
          eval_nat_poly(np, vars) * eval_nat_poly(nq, vars));
    CHECK(eval_nat_poly(poly_sq(np), vars) == eval_nat_poly(np, vars) * eval_nat_poly(np, vars));
  }
}

TEST_CASE("scale examples and linearity") {
  CHECK(poly_scale(Int(2), Poly{{3, {0}}}) == Poly{{6, {0}}});
  CHECK(poly_scale(Nat(2), NatPoly{{3, {1, 1}}}) == NatPoly{{6, {1, 1}}});
  CHECK(poly_scale(Int(0), Poly{{3, {0}}}) == Poly{{0, {0}}});

  Rng rng(0x5eed0004);
  for (int i = 0; i < 200; ++i) {
    Poly p = testutil::rand_poly(rng, 5, 2, 30, 3);
    std::vector<Nat> vars = testutil::rand_tuple(rng, 2, 9);
    Int c = testutil::rand_coeff(rng, 50);
    CHECK(eval_poly(poly_scale(c, p), vars) == c * eval_poly(p, vars));
  }
}

TEST_CASE("concatenation adds evaluations") {
  Rng rng(0x5eed0005);
  for (int i = 0; i < 200; ++i) {
    Poly p = testutil::rand_poly(rng, 5, 3, 30, 3);
    Poly q = testutil::rand_poly(rng, 5, 3, 30, 3);
    Poly cat = p;
    cat.insert(cat.end(), q.begin(), q.end());
    std::vector<Nat> vars = testutil::rand_tuple(rng, 3, 9);
    CHECK(eval_poly(cat, vars) == eval_poly(p, vars) + eval_poly(q, vars));
  }
}

TEST_CASE("all_len checks uniform exponent length") {
  CHECK(all_len(3, NatPoly{}));
  CHECK(all_len(2, NatPoly{{1, {0, 1}}, {5, {2, 0}}}));
  CHECK_FALSE(all_len(2, NatPoly{{1, {0, 1}}, {5, {2}}}));
  CHECK(all_len(0, Poly{{7, {}}}));
}

TEST_CASE("arity validation reports short and long monomials") {
  Poly p = {{1, {1, 2}}, {2, {1}}, {3, {1, 2, 3}}};
  CHECK(validate_poly_arity(p, 2).size() == 2);
  CHECK(validate_poly_arity(p, 2)[0].find("monomial 1") != std::string::npos);
  CHECK(validate_poly_arity({{1, {1, 1}}}, 2).empty());
}

TEST_CASE("ragged polynomials still evaluate by truncation") {
  Rng rng(0x5eed0006);
  for (int i = 0; i < 200; ++i) {
    Poly p = testutil::rand_ragged_poly(rng, 5, 4, 30, 3);
    std::vector<Nat> vars = testutil::rand_tuple(rng, 4, 9);
    Int direct = 0;
    for (const auto& m : p) direct += eval_monomial(m, vars);
    CHECK(eval_poly(p, vars) == direct);
    SplitPoly s = split_poly(p);
    CHECK(eval_poly(p, vars) == Int(eval_nat_poly(s.pos, vars)) - Int(eval_nat_poly(s.neg, vars)));
  }
}

TEST_CASE("polynomial text round trip") {
  Rng rng(0x5eed0007);
  for (int i = 0; i < 100; ++i) {
    Poly p = testutil::rand_poly(rng, 6, 3, 1000000, 4);
    CHECK(parse_poly(serialize_poly(p)) == p);
  }
  Poly big = {{Int("-123456789012345678901234567890"), {0, 7}}};
  CHECK(parse_poly(serialize_poly(big)) == big);
}

TEST_CASE("polynomial parser accepts documented forms") {
  Poly p = parse_poly(R"([["1",[2,0,0]],["-1",[0,2,0]],["-1",[0,0,2]],["-1",[0,0,0]]])");
  CHECK(p.size() == 4);
  CHECK(p[0] == Monomial{1, {2, 0, 0}});
  CHECK(p[1] == Monomial{-1, {0, 2, 0}});

  // Bare JSON integers are accepted for coefficients.
  CHECK(parse_poly(R"([[5,[1]],[-3,[0]]])") == Poly{{5, {1}}, {-3, {0}}});
  CHECK(parse_poly("[]").empty());
}

TEST_CASE("polynomial parser rejects malformed input") {
  CHECK_THROWS_AS(parse_poly("not json"), std::runtime_error);
  CHECK_THROWS_AS(parse_poly(R"({"a":1})"), std::runtime_error);
  CHECK_THROWS_AS(parse_poly(R"([[1.5,[0]]])"), std::runtime_error);
  CHECK_THROWS_AS(parse_poly(R"([["1.5",[0]]])"), std::runtime_error);
  CHECK_THROWS_AS(parse_poly(R"([["x",[0]]])"), std::runtime_error);
  CHECK_THROWS_AS(parse_poly(R"([[1,[-2]]])"), std::runtime_error);
  CHECK_THROWS_AS(parse_poly(R"([[1,[0.5]]])"), std::runtime_error);
  CHECK_THROWS_AS(parse_poly(R"([[1]])"), std::runtime_error);
  CHECK_THROWS_AS(parse_poly(R"([[1,[0],9]])"), std::runtime_error);
}
