#include <algorithm>
#include <doctest.h>

#include "pbq/families.hpp"
#include "pbq/identities.hpp"
#include "pbq/quadratize.hpp"
#include "pbq/verify.hpp"
#include "test_util.hpp"

using namespace pbq;

namespace {

void expect_valid(const QuadratizationResult& result, const SymmetricSpec& spec) {
  CHECK(result.aux_count == result.g.m());
  CHECK(result.aux_count <= result.paper_bound);
  VerifyReport report = verify_quadratization(result.g, spec);
  CHECK(report.passed);
  CHECK(report.global_min_match);
  CHECK(result.y_linear);
  CHECK(is_y_linear(result.g));
}

}  // namespace

TEST_SUITE("quadratize") {

TEST_CASE("from_nonneg_rep translates a single positive kink") {
  NegPartRep rep;
  rep.n = 3;
  rep.alphas = {{3, Rational(2), Rational(1, 2)}};
  QuadratizationResult result = from_nonneg_rep(rep);
  CHECK(result.aux_count == 1);
  CHECK(result.g.coefficient({Y(1)}) == Rational(5));  // 2 * (3 - 1/2)
  CHECK(result.g.coefficient({X(1), Y(1)}) == Rational(-2));
  CHECK(result.g.aux_labels().at(1) == 3);
  expect_valid(result, spec_neg_monomial(3));
}

TEST_CASE("from_nonneg_rep of the zero representation is the zero form") {
  NegPartRep rep;
  rep.n = 2;
  QuadratizationResult result = from_nonneg_rep(rep);
  CHECK(result.aux_count == 0);
  CHECK(result.g.terms().empty());
}

TEST_CASE("from_nonneg_rep rejects negative coefficients") {
  NegPartRep rep;
  rep.n = 2;
  rep.alphas = {{1, Rational(-1), Rational(1, 2)}};
  CHECK_THROWS_AS(from_nonneg_rep(rep), PreconditionError);
}

TEST_CASE("from_nonneg_rep scales linearly in the representation") {
  auto rng = pbq::test::make_rng(97);
  NegPartRep rep;
  rep.n = 4;
  rep.affine_const = Rational(3);
  rep.affine_linear = Rational(1, 2);
  rep.affine_quad = Rational(2);
  rep.alphas = {{1, Rational(1), Rational(1, 2)},
                {3, Rational(5, 2), Rational(1, 2)},
                {4, Rational(0), Rational(1, 2)}};
  Rational c(7, 3);
  NegPartRep scaled = rep;
  scaled.affine_const *= c;
  scaled.affine_linear *= c;
  scaled.affine_quad *= c;
  for (NegPartTerm& t : scaled.alphas) t.alpha *= c;

  QuadForm g = from_nonneg_rep(rep).g;
  QuadForm h = from_nonneg_rep(scaled).g;
  for (const auto& [mono, coef] : g.terms()) CHECK(h.coefficient(mono) == c * coef);
  CHECK(g.terms().size() == h.terms().size());
}

TEST_CASE("parity display for n = 4") {
  QuadratizationResult result = quadratize_parity(4);
  CHECK(result.aux_count == 2);
  CHECK(result.paper_bound == 2);
  CHECK(result.x_symmetric);
  const QuadForm& g = result.g;
  for (unsigned j = 1; j <= 4; ++j) CHECK(g.coefficient({X(j)}) == Rational(1));
  CHECK(g.coefficient({X(1), X(2)}) == Rational(2));
  CHECK(g.coefficient({X(3), X(4)}) == Rational(2));
  // 4 y1 (1 - l) and 4 y2 (3 - l)
  CHECK(g.coefficient({Y(1)}) == Rational(4));
  CHECK(g.coefficient({Y(2)}) == Rational(12));
  CHECK(g.coefficient({X(1), Y(1)}) == Rational(-4));
  CHECK(g.coefficient({X(2), Y(2)}) == Rational(-4));
  expect_valid(result, spec_parity(4));
}

TEST_CASE("parity family sizes and exact counts") {
  for (unsigned n = 1; n <= 12; ++n) {
    QuadratizationResult result = quadratize_parity(n);
    CHECK(result.aux_count == n / 2);
    expect_valid(result, spec_parity(n));
    CHECK(result.x_symmetric);

    QuadratizationResult comp = quadratize_parity_complement(n);
    CHECK(comp.aux_count == (n - 1) / 2);
    expect_valid(comp, spec_parity_complement(n));
    CHECK(comp.x_symmetric);
  }
  CHECK(quadratize_parity(1).aux_count == 0);
  CHECK(quadratize_parity(1).g.coefficient({X(1)}) == Rational(1));
  CHECK(quadratize_parity_complement(1).g.coefficient({X(1)}) == Rational(-1));
  CHECK(quadratize_parity_complement(1).g.coefficient({}) == Rational(1));
  CHECK(quadratize_parity_complement(5).aux_count == 2);
}

TEST_CASE("positive monomial: even display and exact counts") {
  QuadratizationResult result = quadratize_pos_monomial(4);
  CHECK(result.aux_count == 1);
  const QuadForm& g = result.g;
  CHECK(g.coefficient({X(1), X(2)}) == Rational(1));
  CHECK(g.coefficient({Y(1)}) == Rational(3));  // 2 * (2 - 1/2)
  CHECK(g.coefficient({X(1), Y(1)}) == Rational(-2));
  CHECK(g.coefficient({X(1)}) == Rational(0));
  expect_valid(result, spec_pos_monomial(4));

  for (unsigned n = 1; n <= 12; ++n) {
    QuadratizationResult r = quadratize_pos_monomial(n);
    CHECK(r.aux_count == (n - 1) / 2);
    CHECK(r.x_symmetric);
    expect_valid(r, spec_pos_monomial(n));
  }
  CHECK(quadratize_pos_monomial(2).aux_count == 0);
  CHECK(quadratize_pos_monomial(2).g.coefficient({X(1), X(2)}) == Rational(1));
}

TEST_CASE("positive monomial split variant") {
  QuadratizationResult r3 = quadratize_pos_monomial_split(3);
  CHECK(r3.aux_count == 1);
  CHECK_FALSE(r3.x_symmetric);
  CHECK(r3.g.coefficient({X(1), X(2)}) == Rational(1));
  CHECK(r3.g.coefficient({Y(1)}) == Rational(1));
  CHECK(r3.g.coefficient({X(3), Y(1)}) == Rational(1));
  CHECK(r3.g.coefficient({X(1), Y(1)}) == Rational(-1));
  expect_valid(r3, spec_pos_monomial(3));

  for (unsigned n = 3; n <= 11; n += 2) {
    QuadratizationResult r = quadratize_pos_monomial_split(n);
    CHECK(r.aux_count == (n - 1) / 2);
    CHECK(r.aux_count == quadratize_pos_monomial(n).aux_count);
    CHECK_FALSE(r.x_symmetric);
    expect_valid(r, spec_pos_monomial(n));
    // term-wise different from the symmetric construction, same function
    CHECK(r.g != quadratize_pos_monomial(n).g);
  }
  CHECK_THROWS_AS(quadratize_pos_monomial_split(4), InputError);
  CHECK_THROWS_AS(quadratize_pos_monomial_split(1), InputError);
}

TEST_CASE("negative monomial: standard, half, asymmetric") {
  QuadratizationResult std3 = quadratize_neg_monomial_standard(3);
  CHECK(std3.aux_count == 1);
  CHECK(minimize_over_y(std3.g, 0b111) == Rational(-1));
  CHECK(minimize_over_y(std3.g, 0b011) == Rational(0));
  CHECK(std3.g.coefficient({Y(1)}) == Rational(2));

  QuadratizationResult half3 = quadratize_neg_monomial_half(3);
  CHECK(half3.g.coefficient({Y(1)}) == Rational(5));
  CHECK(half3.g.coefficient({X(2), Y(1)}) == Rational(-2));
  CHECK(minimize_over_y(half3.g, 0b111) == Rational(-1));
  CHECK(minimize_over_y(half3.g, 0) == Rational(0));

  for (unsigned n = 2; n <= 12; ++n) {
    SymmetricSpec spec = spec_neg_monomial(n);
    QuadratizationResult standard = quadratize_neg_monomial_standard(n);
    QuadratizationResult half = quadratize_neg_monomial_half(n);
    QuadratizationResult asym = quadratize_neg_monomial_asymmetric(n);
    expect_valid(standard, spec);
    expect_valid(half, spec);
    expect_valid(asym, spec);
    CHECK(standard.x_symmetric);
    CHECK(half.x_symmetric);
    CHECK_FALSE(asym.x_symmetric);
    CHECK(standard.aux_count == 1);
    CHECK(half.aux_count == 1);
    CHECK(asym.aux_count == 1);
    // the two symmetric variants minimize identically on every vertex
    for (uint64_t x = 0; x < (uint64_t{1} << std::min(n, 10u)); ++x)
      CHECK(minimize_over_y(standard.g, x) == minimize_over_y(half.g, x));
  }

  QuadratizationResult asym2 = quadratize_neg_monomial_asymmetric(2);
  CHECK(asym2.g.coefficient({X(1), Y(1)}) == Rational(-1));
  CHECK(asym2.g.coefficient({X(1)}) == Rational(1));
  CHECK(asym2.g.coefficient({X(1), X(2)}) == Rational(-1));
  CHECK(asym2.g.coefficient({X(2), Y(1)}) == Rational(0));
  expect_valid(asym2, spec_neg_monomial(2));
}

TEST_CASE("general symmetric construction verifies within n - 2") {
  auto rng = pbq::test::make_rng(101);
  for (unsigned n = 3; n <= 8; ++n) {
    for (int trial = 0; trial < 20; ++trial) {
      SymmetricSpec spec = pbq::test::random_spec(rng, n);
      QuadratizationResult result = quadratize_symmetric_general(spec);
      CHECK(result.aux_count <= n - 2);
      CHECK(result.x_symmetric);
      expect_valid(result, spec);
    }
  }
}

TEST_CASE("general symmetric on small n interpolates directly") {
  auto rng = pbq::test::make_rng(103);
  for (unsigned n = 1; n <= 2; ++n) {
    SymmetricSpec spec = pbq::test::random_spec(rng, n);
    QuadratizationResult result = quadratize_symmetric_general(spec);
    CHECK(result.aux_count == 0);
    expect_valid(result, spec);
  }
  // explicit check on a family already covered elsewhere
  QuadratizationResult neg5 = quadratize_symmetric_general(spec_neg_monomial(5));
  CHECK(neg5.aux_count <= 3);
  expect_valid(neg5, spec_neg_monomial(5));
}

TEST_CASE("t-out-of-n verifies within ceil(n/2) for every t") {
  for (unsigned n = 1; n <= 10; ++n) {
    for (unsigned t = 1; t <= n; ++t) {
      QuadratizationResult result = quadratize_t_out_of_n(t, n);
      CHECK(result.paper_bound == (n + 1) / 2);
      CHECK(result.x_symmetric);
      expect_valid(result, spec_t_out_of_n(t, n));
    }
  }
  CHECK_THROWS_AS(quadratize_t_out_of_n(0, 4), InputError);
  CHECK_THROWS_AS(quadratize_t_out_of_n(5, 4), InputError);
}

TEST_CASE("t-out-of-n spot checks: Or, Maj, And") {
  QuadratizationResult or4 = quadratize_t_out_of_n(1, 4);
  expect_valid(or4, spec_t_out_of_n(1, 4));
  for (uint64_t x = 1; x < 16; ++x) CHECK(minimize_over_y(or4.g, x) == Rational(1));
  CHECK(minimize_over_y(or4.g, 0) == Rational(0));

  QuadratizationResult maj3 = quadratize_t_out_of_n(2, 3);
  CHECK(maj3.aux_count <= 2);
  expect_valid(maj3, spec_t_out_of_n(2, 3));

  // Maj_6 = 3-out-of-6 exercises the mixed-eps cover
  QuadratizationResult maj6 = quadratize_t_out_of_n(3, 6);
  CHECK(maj6.aux_count == 3);
  expect_valid(maj6, spec_t_out_of_n(3, 6));

  QuadratizationResult and5 = quadratize_t_out_of_n(5, 5);
  expect_valid(and5, spec_pos_monomial(5));
}

TEST_CASE("exact-t verifies within floor(n/2), with the monomial bound at t = n") {
  for (unsigned n = 1; n <= 10; ++n) {
    for (unsigned t = 0; t <= n; ++t) {
      QuadratizationResult result = quadratize_exact_t(t, n);
      CHECK(result.paper_bound == (t == n ? (n - 1) / 2 : n / 2));
      CHECK(result.family == Family::exact_t);
      expect_valid(result, spec_exact_t(t, n));
    }
  }
  CHECK_THROWS_AS(quadratize_exact_t(5, 4), InputError);
}

TEST_CASE("exact-t spot checks") {
  QuadratizationResult one_of_two = quadratize_exact_t(1, 2);
  CHECK(one_of_two.aux_count <= 1);
  expect_valid(one_of_two, spec_exact_t(1, 2));

  QuadratizationResult top4 = quadratize_exact_t(4, 4);
  CHECK(top4.aux_count == 1);  // delegation to the positive monomial
  CHECK(top4.paper_bound == 1);

  QuadratizationResult zero3 = quadratize_exact_t(0, 3);
  expect_valid(zero3, spec_exact_t(0, 3));
  CHECK(minimize_over_y(zero3.g, 0) == Rational(1));
  CHECK(minimize_over_y(zero3.g, 0b101) == Rational(0));
}

TEST_CASE("every family is y-linear and within its bound across sizes") {
  for (unsigned n = 1; n <= 10; ++n) {
    std::vector<QuadratizationResult> results;
    results.push_back(quadratize_pos_monomial(n));
    results.push_back(quadratize_neg_monomial_standard(n));
    results.push_back(quadratize_neg_monomial_half(n));
    if (n >= 2) results.push_back(quadratize_neg_monomial_asymmetric(n));
    if (n >= 3 && n % 2 == 1) results.push_back(quadratize_pos_monomial_split(n));
    results.push_back(quadratize_parity(n));
    results.push_back(quadratize_parity_complement(n));
    for (const QuadratizationResult& r : results) {
      CHECK(r.y_linear);
      CHECK(r.aux_count <= r.paper_bound);
      CHECK(r.aux_count == r.g.m());
    }
  }
}

TEST_CASE("family names round-trip") {
  for (Family f : {Family::general_symmetric, Family::pos_monomial, Family::pos_monomial_split,
                   Family::neg_monomial_standard, Family::neg_monomial_half,
                   Family::neg_monomial_asymmetric, Family::t_out_of_n, Family::exact_t,
                   Family::parity, Family::parity_complement, Family::from_rep})
    CHECK(family_from_name(family_name(f)) == f);
  CHECK_THROWS_AS(family_from_name("nonsense"), InputError);
}

}  // TEST_SUITE
