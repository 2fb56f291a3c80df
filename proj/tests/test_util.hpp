#pragma once

// Shared helpers for the test suites: seeded generators and independent
// oracles. The oracles deliberately use different algorithms than the
// library (dense Gaussian elimination instead of forward substitution,
// direct subset sums instead of the in-place transform).

#include <cstdint>
#include <random>
#include <vector>

#include "pbq/core.hpp"
#include "pbq/representation.hpp"

namespace pbq::test {

inline std::mt19937 make_rng(uint32_t seed) { return std::mt19937(seed); }

inline Rational random_rational(std::mt19937& rng, int lo = -9, int hi = 9, int max_den = 9) {
  std::uniform_int_distribution<int> num(lo, hi);
  std::uniform_int_distribution<int> den(1, max_den);
  return Rational(num(rng), den(rng));
}

inline Rational random_eps(std::mt19937& rng, int max_den = 12) {
  std::uniform_int_distribution<int> den(1, max_den);
  int q = den(rng);
  std::uniform_int_distribution<int> num(1, q);
  return Rational(num(rng), q);
}

inline SymmetricSpec random_spec(std::mt19937& rng, unsigned n) {
  std::vector<Rational> k;
  k.reserve(n + 1);
  for (unsigned l = 0; l <= n; ++l) k.push_back(random_rational(rng));
  return SymmetricSpec(n, std::move(k));
}

inline MultilinearPoly random_poly(std::mt19937& rng, unsigned n) {
  MultilinearPoly poly(n);
  std::uniform_int_distribution<int> keep(0, 2);
  for (uint64_t mask = 0; mask < (uint64_t{1} << n); ++mask) {
    if (keep(rng) == 0) continue;
    std::vector<unsigned> vars;
    for (unsigned b = 0; b < n; ++b) {
      if ((mask >> b) & 1) vars.push_back(b + 1);
    }
    poly.add_term(std::move(vars), random_rational(rng));
  }
  return poly;
}

inline QuadForm random_ylinear_form(std::mt19937& rng, unsigned n, unsigned m) {
  QuadForm g(n, m);
  g.add_term({}, random_rational(rng));
  for (unsigned i = 1; i <= n; ++i) g.add_term({X(i)}, random_rational(rng));
  for (unsigned i = 1; i <= n; ++i)
    for (unsigned j = i + 1; j <= n; ++j) g.add_term({X(i), X(j)}, random_rational(rng));
  for (unsigned a = 1; a <= m; ++a) {
    g.add_term({Y(a)}, random_rational(rng));
    for (unsigned i = 1; i <= n; ++i) g.add_term({X(i), Y(a)}, random_rational(rng));
  }
  return g;
}

// Coefficient of the monomial with support S in the unique multilinear
// interpolant: sum over subsets T of S of (-1)^{|S|-|T|} table[T].
inline Rational mobius_coef_oracle(const std::vector<Rational>& table, uint64_t s) {
  Rational total(0);
  for (uint64_t t = s;; t = (t - 1) & s) {
    int parity = (std::popcount(s) - std::popcount(t)) & 1;
    if (parity)
      total -= table[t];
    else
      total += table[t];
    if (t == 0) break;
  }
  return total;
}

// Dense Gaussian elimination on the full (n+1)x(n+1) system whose entry
// (j, i) is min(i - eps_i - j, 0); returns the alpha vector.
inline std::vector<Rational> gaussian_solve_oracle(const SymmetricSpec& spec,
                                                   const std::vector<Rational>& eps) {
  unsigned n = spec.n();
  unsigned dim = n + 1;
  std::vector<std::vector<Rational>> aug(dim, std::vector<Rational>(dim + 1));
  for (unsigned j = 0; j < dim; ++j) {
    for (unsigned i = 0; i < dim; ++i) {
      aug[j][i] = neg_part(Rational(static_cast<long long>(i)) - eps[i] -
                           Rational(static_cast<long long>(j)));
    }
    aug[j][dim] = spec.k()[j];
  }
  for (unsigned col = 0; col < dim; ++col) {
    unsigned pivot = col;
    while (pivot < dim && aug[pivot][col].is_zero()) ++pivot;
    std::swap(aug[pivot], aug[col]);
    for (unsigned row = 0; row < dim; ++row) {
      if (row == col || aug[row][col].is_zero()) continue;
      Rational factor = aug[row][col] / aug[col][col];
      for (unsigned c = col; c <= dim; ++c) aug[row][c] -= factor * aug[col][c];
    }
  }
  std::vector<Rational> alpha(dim);
  for (unsigned i = 0; i < dim; ++i) alpha[i] = aug[i][dim] / aug[i][i];
  return alpha;
}

inline QuadForm sum_forms(const QuadForm& a, const QuadForm& b) {
  QuadForm out(a.n(), a.m());
  for (const auto& [mono, coef] : a.terms()) out.add_term(mono, coef);
  for (const auto& [mono, coef] : b.terms()) out.add_term(mono, coef);
  return out;
}

}  // namespace pbq::test
