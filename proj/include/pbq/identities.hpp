#pragma once

// The identically-zero expressions of weight l used to clear negative
// coefficients from a negative-part representation:
//
//   E   = l(l-1)   + 2 * sum_{i=1}^{n-1} min(i - l, 0)          (eps = 1)
//   E'  = l(l-1)/2 + 2 * sum_{even i=2}^{n} min(i - 1/2 - l, 0) (eps = 1/2)
//   E'' = l(l+1)/2 + 2 * sum_{odd i=1}^{n}  min(i - 1/2 - l, 0) (eps = 1/2)
//
// Each vanishes at every l in {0..n}, so any rational multiple can be added
// to a representation without changing the function it represents.

#include "pbq/rational.hpp"
#include "pbq/representation.hpp"

namespace pbq {

enum class IdentityKind { E, EPrime, EDoublePrime };

struct ZeroIdentity {
  IdentityKind kind;
  unsigned n;
  Rational quad_c2;  // coefficient of l^2
  Rational quad_c1;  // coefficient of l
  std::vector<NegPartTerm> negpart;  // slot-encoded, see representation.hpp
};

ZeroIdentity make_identity(IdentityKind kind, unsigned n);

Rational eval_identity(const ZeroIdentity& id, unsigned l);

// rep' with alpha'_i = alpha_i + c * (identity coefficient at slot i) and the
// identity's quadratic head folded into the affine/quadratic prefix. The
// identity's terms must match the rep's eps at every touched slot; mixing
// eps families would silently change which kinks the slots denote.
NegPartRep add_scaled_identity(const NegPartRep& rep, const ZeroIdentity& id, const Rational& c);

}  // namespace pbq
