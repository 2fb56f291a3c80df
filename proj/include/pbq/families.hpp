#pragma once

// Weight-value vectors of the named symmetric functions.

#include "pbq/core.hpp"

namespace pbq {

SymmetricSpec spec_constant(unsigned n, const Rational& c);
SymmetricSpec spec_neg_monomial(unsigned n);   // -x_1 x_2 ... x_n
SymmetricSpec spec_pos_monomial(unsigned n);   // x_1 x_2 ... x_n
SymmetricSpec spec_parity(unsigned n);         // 1 iff weight odd
SymmetricSpec spec_parity_complement(unsigned n);
SymmetricSpec spec_t_out_of_n(unsigned t, unsigned n);  // 1 iff weight >= t, 1 <= t <= n
SymmetricSpec spec_exact_t(unsigned t, unsigned n);     // 1 iff weight == t, 0 <= t <= n

}  // namespace pbq
