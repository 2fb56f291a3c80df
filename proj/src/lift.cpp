#include "pbq/lift.hpp"

#include <algorithm>
#include <bit>

#include "pbq/quadratize.hpp"

namespace pbq {

LiftSpec lift_function(const MultilinearPoly& f) {
  unsigned n = f.n();
  if (n > kMaxLiftVars)
    throw ResourceError("lift_function: n exceeds the lift cap of 4");

  LiftSpec lift;
  lift.n = n;
  lift.N = (1u << n) - 1;
  lift.k.reserve(lift.N + 1);
  for (uint64_t w = 0; w <= lift.N; ++w) lift.k.push_back(eval_poly(f, w));
  for (unsigned j = 1; j <= n; ++j) lift.block_map.emplace_back(1u << (j - 1), (1u << j) - 1);
  return lift;
}

SymmetricSpec lifted_spec(const LiftSpec& lift) { return SymmetricSpec(lift.N, lift.k); }

uint64_t embed_point(const LiftSpec& lift, uint64_t x_mask) {
  if (x_mask >> lift.n)
    throw InputError("embed_point: assignment has more bits than variables");
  uint64_t z = 0;
  for (unsigned j = 1; j <= lift.n; ++j) {
    if ((x_mask >> (j - 1)) & 1) {
      const auto& [lo, hi] = lift.block_map[j - 1];
      for (unsigned p = lo; p <= hi; ++p) z |= uint64_t{1} << (p - 1);
    }
  }
  return z;
}

QuadForm project_quadratization(const QuadForm& G, const LiftSpec& lift) {
  if (G.n() != lift.N)
    throw InputError("project_quadratization: form dimension does not match the lift");

  QuadForm g(lift.n, G.m());
  for (const auto& [mono, coef] : G.terms()) {
    Monomial mapped;
    mapped.reserve(mono.size());
    for (const Var& v : mono) {
      if (v.kind == VarKind::y) {
        mapped.push_back(v);
      } else {
        // z_p belongs to block j = bit_width(p).
        mapped.push_back(X(static_cast<unsigned>(std::bit_width(v.index))));
      }
    }
    std::sort(mapped.begin(), mapped.end());
    mapped.erase(std::unique(mapped.begin(), mapped.end()), mapped.end());
    g.add_term(std::move(mapped), coef);
  }
  for (const auto& [aux, threshold] : G.aux_labels()) g.set_aux_label(aux, threshold);
  return g;
}

VerifyReport lift_roundtrip(const MultilinearPoly& f) {
  if (f.n() > kMaxRoundtripVars)
    throw ResourceError("lift_roundtrip: n exceeds the roundtrip cap of 3");
  LiftSpec lift = lift_function(f);
  QuadratizationResult lifted = quadratize_symmetric_general(lifted_spec(lift));
  QuadForm projected = project_quadratization(lifted.g, lift);
  return verify_quadratization(projected, f);
}

}  // namespace pbq
