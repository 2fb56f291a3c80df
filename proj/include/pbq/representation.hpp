#pragma once

// Negative-part representations of symmetric functions:
//
//   f(x) = c0 + c1*l + c2*l^2 + sum_i alpha_i * min(i - eps_i - l, 0),
//
// where l is the Hamming weight of x. Every constructor here produces a
// representation whose identity holds exactly at every l in {0..n}.
//
// Slot convention: a term (i, eps) always means min(i - eps - l, 0), for any
// eps in (0,1]. The closed form with eps = 1 in the literature is usually
// written with terms min(i - l, 0); those live at slot i+1 here, so that one
// formula evaluates every term. A slot's kink activates at weight l = i
// regardless of eps.

#include <vector>

#include "pbq/core.hpp"
#include "pbq/rational.hpp"

namespace pbq {

struct NegPartTerm {
  unsigned i;      // slot index, 0..n
  Rational alpha;  // coefficient (may be zero)
  Rational eps;    // in (0, 1]

  friend bool operator==(const NegPartTerm&, const NegPartTerm&) = default;
};

struct NegPartRep {
  unsigned n = 0;
  Rational affine_const;   // c0
  Rational affine_linear;  // c1, coefficient of l
  Rational affine_quad;    // c2, coefficient of l^2 (appears once zero
                           // identities with quadratic heads are folded in)
  std::vector<NegPartTerm> alphas;  // sorted by (i, eps); (i, eps) unique

  friend bool operator==(const NegPartRep&, const NegPartRep&) = default;
};

// Solves the lower-triangular system defining the unique representation with
// the given per-slot eps vector (one entry per slot 0..n, each in (0,1]).
// The affine prefix of the result is zero.
NegPartRep solve_representation(const SymmetricSpec& spec, const std::vector<Rational>& eps);

// Closed form for a constant eps: alpha_j is an explicit signed sum of
// k_0..k_j with powers of (eps-1) and eps. Identical to solve_representation
// with a constant eps vector.
NegPartRep closed_form_alphas(const SymmetricSpec& spec, const Rational& eps);

// Specialization of the closed form to eps = 1/2:
//   alpha_i = -8 * sum_{j<=i} (-1)^{i-j} k_j - 2 k_{i-1} + 6 k_i.
NegPartRep alphas_half(const SymmetricSpec& spec);

// The eps = 1 representation with its two affine-only leading terms folded
// into an affine prefix:
//   f = k_0 + (k_1-k_0) l + sum (-k_{i-1} + 2 k_i - k_{i+1}) min(i - l, 0),
// the min(i - l, 0) term stored at slot i+1. All slots carry eps = 1.
NegPartRep fix_representation(const SymmetricSpec& spec);

// Right-hand side of the representation at a single weight.
Rational eval_rep(const NegPartRep& rep, unsigned l);

// Locates the term at (slot, eps); nullptr when absent.
const NegPartTerm* find_term(const NegPartRep& rep, unsigned slot, const Rational& eps);

}  // namespace pbq
