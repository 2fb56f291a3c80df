#include "pbq/families.hpp"

namespace pbq {

namespace {

SymmetricSpec from_indicator(unsigned n, bool (*pred)(unsigned l, unsigned t), unsigned t) {
  std::vector<Rational> k;
  k.reserve(n + 1);
  for (unsigned l = 0; l <= n; ++l) k.emplace_back(pred(l, t) ? 1 : 0);
  return SymmetricSpec(n, std::move(k));
}

}  // namespace

SymmetricSpec spec_constant(unsigned n, const Rational& c) {
  return SymmetricSpec(n, std::vector<Rational>(n + 1, c));
}

SymmetricSpec spec_neg_monomial(unsigned n) {
  std::vector<Rational> k(n + 1, Rational(0));
  k[n] = Rational(-1);
  return SymmetricSpec(n, std::move(k));
}

SymmetricSpec spec_pos_monomial(unsigned n) {
  std::vector<Rational> k(n + 1, Rational(0));
  k[n] = Rational(1);
  return SymmetricSpec(n, std::move(k));
}

SymmetricSpec spec_parity(unsigned n) {
  return from_indicator(n, [](unsigned l, unsigned) { return l % 2 == 1; }, 0);
}

SymmetricSpec spec_parity_complement(unsigned n) {
  return from_indicator(n, [](unsigned l, unsigned) { return l % 2 == 0; }, 0);
}

SymmetricSpec spec_t_out_of_n(unsigned t, unsigned n) {
  if (t < 1 || t > n) throw InputError("spec_t_out_of_n: t must satisfy 1 <= t <= n");
  return from_indicator(n, [](unsigned l, unsigned tt) { return l >= tt; }, t);
}

SymmetricSpec spec_exact_t(unsigned t, unsigned n) {
  if (t > n) throw InputError("spec_exact_t: t must satisfy 0 <= t <= n");
  return from_indicator(n, [](unsigned l, unsigned tt) { return l == tt; }, t);
}

}  // namespace pbq
