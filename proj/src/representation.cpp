#include "pbq/representation.hpp"

#include <algorithm>

namespace pbq {

namespace {

const Rational kZero(0);
const Rational kOne(1);

void check_eps(const Rational& eps) {
  if (!(eps > kZero) || !(eps <= kOne))
    throw InputError("representation: eps must lie in (0, 1]");
}

}  // namespace

NegPartRep solve_representation(const SymmetricSpec& spec, const std::vector<Rational>& eps) {
  unsigned n = spec.n();
  if (eps.size() != static_cast<size_t>(n) + 1)
    throw InputError("solve_representation: eps must have n+1 entries");
  for (const Rational& e : eps) check_eps(e);

  // Forward substitution on the system  k_j = sum_{i<=j} alpha_i (i - eps_i - j),
  // whose matrix is lower triangular with diagonal -eps_j.
  std::vector<Rational> alpha(n + 1);
  for (unsigned j = 0; j <= n; ++j) {
    Rational acc = spec.k()[j];
    for (unsigned i = 0; i < j; ++i) {
      acc -= alpha[i] * (Rational(static_cast<long long>(i) - static_cast<long long>(j)) - eps[i]);
    }
    alpha[j] = -(acc / eps[j]);
  }

  NegPartRep rep;
  rep.n = n;
  for (unsigned i = 0; i <= n; ++i) rep.alphas.push_back({i, alpha[i], eps[i]});
  return rep;
}

NegPartRep closed_form_alphas(const SymmetricSpec& spec, const Rational& eps) {
  check_eps(eps);
  unsigned n = spec.n();
  const std::vector<Rational>& k = spec.k();
  Rational inv = kOne / eps;

  NegPartRep rep;
  rep.n = n;
  for (unsigned j = 0; j <= n; ++j) {
    Rational a(0);
    // First sum is empty for j < 2 (k_{-1} = 0 by convention).
    for (unsigned i = 0; i + 2 <= j; ++i) {
      unsigned e = j - i - 2;
      a -= pow(eps - kOne, e) / pow(eps, e + 3) * k[i];
    }
    if (j >= 1) a += (inv + inv * inv) * k[j - 1];
    a -= inv * k[j];
    rep.alphas.push_back({j, a, eps});
  }
  return rep;
}

NegPartRep alphas_half(const SymmetricSpec& spec) {
  unsigned n = spec.n();
  const std::vector<Rational>& k = spec.k();
  const Rational half(1, 2);

  NegPartRep rep;
  rep.n = n;
  for (unsigned i = 0; i <= n; ++i) {
    Rational signed_sum(0);  // sum_{j<=i} (-1)^{i-j} k_j
    for (unsigned j = 0; j <= i; ++j) {
      if ((i - j) % 2 == 0)
        signed_sum += k[j];
      else
        signed_sum -= k[j];
    }
    Rational a = Rational(-8) * signed_sum + Rational(6) * k[i];
    if (i >= 1) a -= Rational(2) * k[i - 1];
    rep.alphas.push_back({i, a, half});
  }
  return rep;
}

NegPartRep fix_representation(const SymmetricSpec& spec) {
  unsigned n = spec.n();
  const std::vector<Rational>& k = spec.k();

  NegPartRep rep;
  rep.n = n;
  rep.affine_const = k[0];
  rep.affine_linear = k[1] - k[0];
  // Slots 0 and 1 (the affine-only kinks) are already folded into the prefix.
  rep.alphas.push_back({0, kZero, kOne});
  rep.alphas.push_back({1, kZero, kOne});
  for (unsigned i = 1; i + 1 <= n; ++i) {
    Rational a = Rational(2) * k[i] - k[i - 1] - k[i + 1];
    rep.alphas.push_back({i + 1, a, kOne});
  }
  return rep;
}

Rational eval_rep(const NegPartRep& rep, unsigned l) {
  if (l > rep.n) throw InputError("eval_rep: weight out of range");
  Rational weight(static_cast<long long>(l));
  Rational total = rep.affine_const + rep.affine_linear * weight + rep.affine_quad * weight * weight;
  for (const NegPartTerm& t : rep.alphas) {
    if (t.alpha.is_zero()) continue;
    total += t.alpha * neg_part(Rational(static_cast<long long>(t.i)) - t.eps - weight);
  }
  return total;
}

const NegPartTerm* find_term(const NegPartRep& rep, unsigned slot, const Rational& eps) {
  for (const NegPartTerm& t : rep.alphas) {
    if (t.i == slot && t.eps == eps) return &t;
  }
  return nullptr;
}

}  // namespace pbq
