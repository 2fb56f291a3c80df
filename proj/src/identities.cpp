#include "pbq/identities.hpp"

namespace pbq {

ZeroIdentity make_identity(IdentityKind kind, unsigned n) {
  if (n < 1) throw InputError("make_identity: n must be >= 1");
  ZeroIdentity id;
  id.kind = kind;
  id.n = n;
  const Rational two(2);
  const Rational half(1, 2);
  switch (kind) {
    case IdentityKind::E:
      // l(l-1) + 2 sum_{i=1}^{n-1} min(i - l, 0); slot i+1 holds min(i - l, 0).
      id.quad_c2 = Rational(1);
      id.quad_c1 = Rational(-1);
      for (unsigned i = 1; i + 1 <= n; ++i) id.negpart.push_back({i + 1, two, Rational(1)});
      break;
    case IdentityKind::EPrime:
      id.quad_c2 = half;
      id.quad_c1 = -half;
      for (unsigned i = 2; i <= n; i += 2) id.negpart.push_back({i, two, half});
      break;
    case IdentityKind::EDoublePrime:
      id.quad_c2 = half;
      id.quad_c1 = half;
      for (unsigned i = 1; i <= n; i += 2) id.negpart.push_back({i, two, half});
      break;
    default:
      throw InputError("make_identity: unknown identity kind");
  }
  return id;
}

Rational eval_identity(const ZeroIdentity& id, unsigned l) {
  if (l > id.n) throw InputError("eval_identity: weight out of range");
  Rational weight(static_cast<long long>(l));
  Rational total = id.quad_c2 * weight * weight + id.quad_c1 * weight;
  for (const NegPartTerm& t : id.negpart)
    total += t.alpha * neg_part(Rational(static_cast<long long>(t.i)) - t.eps - weight);
  return total;
}

NegPartRep add_scaled_identity(const NegPartRep& rep, const ZeroIdentity& id, const Rational& c) {
  if (rep.n != id.n)
    throw StructuralError("add_scaled_identity: representation and identity differ in n");

  NegPartRep out = rep;
  out.affine_quad += c * id.quad_c2;
  out.affine_linear += c * id.quad_c1;
  if (c.is_zero()) return out;

  for (const NegPartTerm& t : id.negpart) {
    NegPartTerm* match = nullptr;
    bool slot_seen = false;
    for (NegPartTerm& r : out.alphas) {
      if (r.i != t.i) continue;
      slot_seen = true;
      if (r.eps == t.eps) {
        match = &r;
        break;
      }
    }
    if (match == nullptr) {
      throw StructuralError(slot_seen
                                ? "add_scaled_identity: eps mismatch at slot " + std::to_string(t.i)
                                : "add_scaled_identity: representation lacks slot " + std::to_string(t.i));
    }
    match->alpha += c * t.alpha;
  }
  return out;
}

}  // namespace pbq
