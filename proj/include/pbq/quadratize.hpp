#pragma once

// Quadratization constructions for symmetric functions. Each constructor
// returns a quadratic form g over x and fresh binary auxiliaries y with
//
//   f(x) = min { g(x,y) : y in {0,1}^m }   for every x,
//
// together with the auxiliary count, the documented bound for the family,
// and structurally computed y-linearity / x-symmetry flags.

#include <string>

#include "pbq/core.hpp"
#include "pbq/representation.hpp"

namespace pbq {

enum class Family {
  general_symmetric,
  pos_monomial,
  pos_monomial_split,
  neg_monomial_standard,
  neg_monomial_half,
  neg_monomial_asymmetric,
  t_out_of_n,
  exact_t,
  parity,
  parity_complement,
  from_rep,
};

std::string family_name(Family family);
Family family_from_name(const std::string& name);

struct QuadratizationResult {
  QuadForm g;
  Family family;
  unsigned aux_count;
  unsigned paper_bound;
  bool y_linear;
  bool x_symmetric;
};

// Direct translation of a representation with non-negative coefficients:
// each alpha_i > 0 contributes one auxiliary via alpha_i * y (i - eps_i - l),
// and the affine/quadratic prefix expands into x-terms. Rejects any
// negative coefficient; that translation does not minimize correctly.
QuadratizationResult from_nonneg_rep(const NegPartRep& rep);

// Any symmetric function, at most n-2 auxiliaries for n >= 3: balance the
// eps=1/2 representation by subtracting the even- and odd-slot minima via
// the zero identities, then translate. n <= 2 returns the interpolant.
QuadratizationResult quadratize_symmetric_general(const SymmetricSpec& spec);

// Positive monomial, exactly floor((n-1)/2) auxiliaries.
QuadratizationResult quadratize_pos_monomial(unsigned n);

// Odd-n alternative: split off x_n, quadratize the even-size monomial and a
// negative monomial in x_1..x_{n-1}, (1-x_n). Same auxiliary count, not
// symmetric in the x variables.
QuadratizationResult quadratize_pos_monomial_split(unsigned n);

// Negative monomial: y (n - 1 - l), one auxiliary.
QuadratizationResult quadratize_neg_monomial_standard(unsigned n);

// Negative monomial via the eps=1/2 representation: 2 y (n - 1/2 - l).
QuadratizationResult quadratize_neg_monomial_half(unsigned n);

// One-auxiliary quadratization that is not symmetric in the x variables:
// (n-2) x_n y - sum_{i<n} x_i (y - (1 - x_n)), expanded.
QuadratizationResult quadratize_neg_monomial_asymmetric(unsigned n);

// Indicator of weight >= t, at most ceil(n/2) auxiliaries.
QuadratizationResult quadratize_t_out_of_n(unsigned t, unsigned n);

// Indicator of weight == t, at most floor(n/2) auxiliaries
// (floor((n-1)/2) for t = n, where it is the positive monomial).
QuadratizationResult quadratize_exact_t(unsigned t, unsigned n);

// Parity, exactly floor(n/2) auxiliaries:
// 2 sum_{i<j} x_i x_j + sum_j x_j + 4 sum_{odd i<n} y_i (i - l).
QuadratizationResult quadratize_parity(unsigned n);

// Parity complement, exactly floor((n-1)/2) auxiliaries.
QuadratizationResult quadratize_parity_complement(unsigned n);

}  // namespace pbq
