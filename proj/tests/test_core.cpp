#include <bit>
#include <doctest.h>

#include "pbq/core.hpp"
#include "pbq/families.hpp"
#include "test_util.hpp"

using namespace pbq;

namespace {

// s_3 = y (2 - x1 - x2 - x3)
QuadForm standard_neg3() {
  QuadForm g(3, 1);
  g.add_term({Y(1)}, Rational(2));
  for (unsigned i = 1; i <= 3; ++i) g.add_term({Y(1), X(i)}, Rational(-1));
  return g;
}

}  // namespace

TEST_SUITE("core") {

TEST_CASE("eval_symmetric reads the weight-value vector") {
  SymmetricSpec neg3 = spec_neg_monomial(3);
  CHECK(eval_symmetric(neg3, 0b111) == Rational(-1));
  CHECK(eval_symmetric(neg3, 0b101) == Rational(0));
  SymmetricSpec parity4 = spec_parity(4);
  CHECK(eval_symmetric(parity4, 0b0111) == Rational(1));
  CHECK_THROWS_AS(eval_symmetric(neg3, 0b1000), InputError);
}

TEST_CASE("spec construction validates the vector length") {
  CHECK_THROWS_AS(SymmetricSpec(3, std::vector<Rational>(3)), InputError);
  CHECK_THROWS_AS(SymmetricSpec(0, std::vector<Rational>(1)), InputError);
  SymmetricSpec s(2, {Rational(1), Rational(2), Rational(3)});
  CHECK(s.value_at_weight(2) == Rational(3));
  CHECK_THROWS_AS(s.value_at_weight(3), InputError);
}

TEST_CASE("eval_quadform on the standard negative-monomial form") {
  QuadForm g = standard_neg3();
  CHECK(eval_quadform(g, 0b111, 1) == Rational(-1));
  CHECK(eval_quadform(g, 0b001, 0) == Rational(0));
  CHECK(eval_quadform(g, 0b001, 1) == Rational(1));
  CHECK_THROWS_AS(eval_quadform(g, 0b1111, 0), InputError);
  CHECK_THROWS_AS(eval_quadform(g, 0b111, 0b10), InputError);
}

TEST_CASE("quadform rejects cubes, squares, and bad indices") {
  QuadForm g(2, 1);
  CHECK_THROWS_AS(g.add_term({X(1), X(2), Y(1)}, Rational(1)), InputError);
  CHECK_THROWS_AS(g.add_term({X(1), X(1)}, Rational(1)), InputError);
  CHECK_THROWS_AS(g.add_term({X(3)}, Rational(1)), InputError);
  CHECK_THROWS_AS(g.add_term({Y(2)}, Rational(1)), InputError);
}

TEST_CASE("interpolation of parity on 3 variables") {
  std::vector<Rational> table(8);
  for (uint64_t w = 0; w < 8; ++w) table[w] = Rational(std::popcount(w) & 1);
  MultilinearPoly p = interpolate_multilinear(table);

  CHECK(p.degree() == 3);
  CHECK(p.coefficient({1}) == Rational(1));
  CHECK(p.coefficient({2}) == Rational(1));
  CHECK(p.coefficient({3}) == Rational(1));
  CHECK(p.coefficient({1, 2}) == Rational(-2));
  CHECK(p.coefficient({1, 3}) == Rational(-2));
  CHECK(p.coefficient({2, 3}) == Rational(-2));
  CHECK(p.coefficient({1, 2, 3}) == Rational(4));
  CHECK(p.coefficient({}) == Rational(0));

  // independent subset-sum oracle
  for (uint64_t s = 0; s < 8; ++s) {
    std::vector<unsigned> vars;
    for (unsigned b = 0; b < 3; ++b)
      if ((s >> b) & 1) vars.push_back(b + 1);
    CHECK(p.coefficient(vars) == pbq::test::mobius_coef_oracle(table, s));
  }
}

TEST_CASE("interpolation edge tables") {
  CHECK(interpolate_multilinear(std::vector<Rational>(8, Rational(0))).terms().empty());

  std::vector<Rational> and2 = {Rational(0), Rational(0), Rational(0), Rational(1)};
  MultilinearPoly p = interpolate_multilinear(and2);
  CHECK(p.terms().size() == 1);
  CHECK(p.coefficient({1, 2}) == Rational(1));

  CHECK_THROWS_AS(interpolate_multilinear(std::vector<Rational>(3)), InputError);
  CHECK_THROWS_AS(interpolate_multilinear(std::vector<Rational>(1)), InputError);
}

TEST_CASE("interpolation reproduces every 0/1 table on n <= 4 exhaustively") {
  for (unsigned n = 1; n <= 4; ++n) {
    uint64_t points = uint64_t{1} << n;
    bool all_match = true;
    for (uint64_t code = 0; code < (uint64_t{1} << points); ++code) {
      std::vector<Rational> table(points);
      for (uint64_t w = 0; w < points; ++w) table[w] = Rational((code >> w) & 1);
      MultilinearPoly p = interpolate_multilinear(table);
      for (uint64_t w = 0; w < points; ++w)
        all_match = all_match && (eval_poly(p, w) == table[w]);
    }
    CHECK(all_match);
  }
}

TEST_CASE("interpolation reproduces random rational tables up to n = 10") {
  auto rng = pbq::test::make_rng(23);
  for (unsigned n = 4; n <= 10; n += 3) {
    std::vector<Rational> table;
    for (uint64_t w = 0; w < (uint64_t{1} << n); ++w)
      table.push_back(pbq::test::random_rational(rng));
    MultilinearPoly p = interpolate_multilinear(table);
    for (uint64_t w = 0; w < (uint64_t{1} << n); ++w) CHECK(eval_poly(p, w) == table[w]);
  }
}

TEST_CASE("eval_quadform is linear in the coefficient map") {
  auto rng = pbq::test::make_rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    QuadForm a = pbq::test::random_ylinear_form(rng, 4, 2);
    QuadForm b = pbq::test::random_ylinear_form(rng, 4, 2);
    QuadForm s = pbq::test::sum_forms(a, b);
    std::uniform_int_distribution<uint64_t> xs(0, 15), ys(0, 3);
    uint64_t x = xs(rng), y = ys(rng);
    CHECK(eval_quadform(s, x, y) == eval_quadform(a, x, y) + eval_quadform(b, x, y));
  }
}

TEST_CASE("canonicalize merges, drops zeros, and is idempotent") {
  QuadForm g(3, 1);
  g.add_term({X(2), X(1)}, Rational(3));
  g.add_term({X(1), X(2)}, Rational(2));  // merges to 5
  g.add_term({X(3)}, Rational(1));
  g.add_term({X(3)}, Rational(-1));  // cancels away
  g.add_term({Y(1)}, Rational(7));

  CHECK(g.coefficient({X(1), X(2)}) == Rational(5));
  CHECK(g.coefficient({X(3)}) == Rational(0));
  CHECK(g.terms().size() == 2);

  QuadForm c = canonicalize(g);
  CHECK(c == g);
  CHECK(canonicalize(c) == c);
}

TEST_CASE("term order is degree then lexicographic") {
  QuadForm g(2, 1);
  g.add_term({X(1), Y(1)}, Rational(1));
  g.add_term({}, Rational(1));
  g.add_term({Y(1)}, Rational(1));
  g.add_term({X(2)}, Rational(1));
  std::vector<Monomial> order;
  for (const auto& [mono, coef] : g.terms()) order.push_back(mono);
  CHECK(order[0] == Monomial{});
  CHECK(order[1] == Monomial{X(2)});
  CHECK(order[2] == Monomial{Y(1)});
  CHECK(order[3] == Monomial{X(1), Y(1)});
}

}  // TEST_SUITE
