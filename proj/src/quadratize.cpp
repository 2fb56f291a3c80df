#include "pbq/quadratize.hpp"

#include <algorithm>
#include <map>

#include "pbq/families.hpp"
#include "pbq/identities.hpp"
#include "pbq/verify.hpp"

namespace pbq {

namespace {

const Rational kHalf(1, 2);
const Rational kOne(1);

// c0 + c1*l + c2*l^2 over binary x: l = sum x_j and l^2 = sum x_j + 2 sum_{i<j} x_i x_j.
void emit_prefix(QuadForm& g, const Rational& c2, const Rational& c1, const Rational& c0) {
  if (!c0.is_zero()) g.add_term({}, c0);
  Rational lin = c1 + c2;
  if (!lin.is_zero()) {
    for (unsigned j = 1; j <= g.n(); ++j) g.add_term({X(j)}, lin);
  }
  Rational pair_coef = Rational(2) * c2;
  if (!pair_coef.is_zero()) {
    for (unsigned i = 1; i <= g.n(); ++i)
      for (unsigned j = i + 1; j <= g.n(); ++j) g.add_term({X(i), X(j)}, pair_coef);
  }
}

// alpha * y_aux * (i - eps - sum x_j)
void emit_aux_term(QuadForm& g, unsigned aux, const NegPartTerm& t) {
  g.add_term({Y(aux)}, t.alpha * (Rational(static_cast<long long>(t.i)) - t.eps));
  for (unsigned j = 1; j <= g.n(); ++j) g.add_term({Y(aux), X(j)}, -t.alpha);
  g.set_aux_label(aux, t.i);
}

// Terms that never kink inside {0..n} are affine on the whole cube and do
// not need an auxiliary: slot 0 (min(-eps - l, 0) = -eps - l) and the slot-1
// eps=1 atom (min(-l, 0) = -l).
NegPartRep fold_affine_slots(NegPartRep rep) {
  std::vector<NegPartTerm> kept;
  kept.reserve(rep.alphas.size());
  for (const NegPartTerm& t : rep.alphas) {
    if (t.i == 0) {
      rep.affine_const -= t.alpha * t.eps;
      rep.affine_linear -= t.alpha;
    } else if (t.i == 1 && t.eps == kOne) {
      rep.affine_linear -= t.alpha;
    } else {
      kept.push_back(t);
    }
  }
  rep.alphas = std::move(kept);
  return rep;
}

unsigned positive_count(const NegPartRep& rep) {
  unsigned count = 0;
  for (const NegPartTerm& t : rep.alphas) {
    if (t.alpha > Rational(0)) ++count;
  }
  return count;
}

// Subtracts the even-slot (>= 2) and odd-slot minima of an eps=1/2
// representation through E' and E''. Every slot of the minimizing parity
// reaches zero, so at most n-2 positive coefficients remain among slots >= 1.
NegPartRep balance_half_rep(NegPartRep rep) {
  bool have_even = false;
  bool have_odd = false;
  Rational min_even, min_odd;
  for (const NegPartTerm& t : rep.alphas) {
    if (t.i == 0) continue;
    if (t.eps != kHalf)
      throw StructuralError("balance_half_rep: representation is not an eps=1/2 form");
    if (t.i % 2 == 0) {
      min_even = have_even ? min(min_even, t.alpha) : t.alpha;
      have_even = true;
    } else {
      min_odd = have_odd ? min(min_odd, t.alpha) : t.alpha;
      have_odd = true;
    }
  }
  if (have_even && !min_even.is_zero())
    rep = add_scaled_identity(rep, make_identity(IdentityKind::EPrime, rep.n), -(min_even * kHalf));
  if (have_odd && !min_odd.is_zero())
    rep = add_scaled_identity(rep, make_identity(IdentityKind::EDoublePrime, rep.n), -(min_odd * kHalf));
  return rep;
}

void sort_terms(NegPartRep& rep) {
  std::sort(rep.alphas.begin(), rep.alphas.end(), [](const NegPartTerm& a, const NegPartTerm& b) {
    if (a.i != b.i) return a.i < b.i;
    return a.eps < b.eps;
  });
}

// ---- mixed-eps cover for 0/1-valued specs ----------------------------------
//
// A representation c0 + c1*l + c2*l^2 + sum beta_i * atom_i equals k on
// {0..n} as soon as its second differences match at l = 1..n-1 and the
// values match at l = 0, 1. Atoms contribute to second differences as
//   min(i - l, 0)       -> -1 at position i        (slot i+1, eps 1)
//   min(i - 1/2 - l, 0) -> -1/2 at positions i-1, i (slot i,  eps 1/2)
// and vanish at l <= 1 for the slots used here. Choosing
// c2 = max(0, max second difference)/2 leaves a non-negative integer target
// vector, which a small DP covers with the fewest single- and pair-atoms.
// All resulting coefficients are positive by construction.

struct CoverState {
  std::vector<long long> target;  // positions 1..n-1 at matching indices
  std::vector<std::vector<int>> memo;
  unsigned last = 0;

  static constexpr int kInf = 1 << 20;

  int solve(unsigned p, long long carry) {
    if (p > last) return carry == 0 ? 0 : kInf;
    long long residual = target[p] - carry;
    if (residual < 0) return kInf;
    int& slot = memo[p][static_cast<size_t>(carry)];
    if (slot >= 0) return slot;
    int best = kInf;
    long long cmax = p + 1 <= last ? std::min(residual, target[p + 1]) : 0;
    for (long long c = 0; c <= cmax; ++c) {
      int cost = (c > 0 ? 1 : 0) + (residual - c > 0 ? 1 : 0) + solve(p + 1, c);
      best = std::min(best, cost);
    }
    return slot = best;
  }
};

NegPartRep indicator_cover_rep(const SymmetricSpec& spec) {
  unsigned n = spec.n();
  const std::vector<Rational>& k = spec.k();

  std::vector<long long> d(n, 0);  // d[p] = k(p+1) - 2k(p) + k(p-1), p = 1..n-1
  long long dmax = 0;
  for (unsigned p = 1; p + 1 <= n; ++p) {
    Rational second = k[p + 1] - Rational(2) * k[p] + k[p - 1];
    if (second.denominator() != 1)
      throw StructuralError("indicator_cover_rep: spec has non-integer second differences");
    d[p] = static_cast<long long>(second.numerator());
    dmax = std::max(dmax, d[p]);
  }

  CoverState cover;
  cover.target.assign(n, 0);
  cover.last = n - 1;
  long long max_target = 0;
  for (unsigned p = 1; p + 1 <= n; ++p) {
    cover.target[p] = dmax - d[p];
    max_target = std::max(max_target, cover.target[p]);
  }
  cover.memo.assign(n + 1, std::vector<int>(static_cast<size_t>(max_target) + 1, -1));

  NegPartRep rep;
  rep.n = n;
  rep.affine_quad = Rational(dmax, 2);
  rep.affine_const = k[0];
  rep.affine_linear = k[1] - k[0] - rep.affine_quad;

  if (n >= 2) {
    cover.solve(1, 0);
    // Walk the optimal choices again to materialize the atoms.
    long long carry = 0;
    for (unsigned p = 1; p + 1 <= n; ++p) {
      long long residual = cover.target[p] - carry;
      long long cmax = p + 1 <= cover.last ? std::min(residual, cover.target[p + 1]) : 0;
      long long chosen = 0;
      int best = CoverState::kInf;
      for (long long c = 0; c <= cmax; ++c) {
        int cost = (c > 0 ? 1 : 0) + (residual - c > 0 ? 1 : 0) + cover.solve(p + 1, c);
        if (cost < best) {
          best = cost;
          chosen = c;
        }
      }
      if (residual - chosen > 0)
        rep.alphas.push_back({p + 1, Rational(residual - chosen), kOne});
      if (chosen > 0)
        rep.alphas.push_back({p + 1, Rational(2 * chosen), kHalf});
      carry = chosen;
    }
  }
  sort_terms(rep);

  for (unsigned l = 0; l <= n; ++l) {
    if (eval_rep(rep, l) != k[l])
      throw StructuralError("indicator_cover_rep: cover failed to reproduce the weight values");
  }
  return rep;
}

QuadratizationResult finalize(QuadForm g, Family family, unsigned paper_bound) {
  unsigned aux_count = g.m();
  bool y_lin = is_y_linear(g);
  bool x_sym = is_x_symmetric(g);
  return QuadratizationResult{std::move(g), family, aux_count, paper_bound, y_lin, x_sym};
}

QuadForm quadform_from_poly(const MultilinearPoly& poly) {
  QuadForm g(poly.n(), 0);
  for (const auto& [mono, coef] : poly.terms()) g.add_term(mono, coef);
  return g;
}

std::vector<Rational> full_table(const SymmetricSpec& spec) {
  std::vector<Rational> table(uint64_t{1} << spec.n());
  for (uint64_t w = 0; w < table.size(); ++w) table[w] = eval_symmetric(spec, w);
  return table;
}

}  // namespace

std::string family_name(Family family) {
  switch (family) {
    case Family::general_symmetric: return "general_symmetric";
    case Family::pos_monomial: return "pos_monomial";
    case Family::pos_monomial_split: return "pos_monomial_split";
    case Family::neg_monomial_standard: return "neg_monomial_standard";
    case Family::neg_monomial_half: return "neg_monomial_half";
    case Family::neg_monomial_asymmetric: return "neg_monomial_asymmetric";
    case Family::t_out_of_n: return "t_out_of_n";
    case Family::exact_t: return "exact_t";
    case Family::parity: return "parity";
    case Family::parity_complement: return "parity_complement";
    case Family::from_rep: return "from_rep";
  }
  throw InputError("family_name: unknown family");
}

Family family_from_name(const std::string& name) {
  static const std::map<std::string, Family> table = {
      {"general_symmetric", Family::general_symmetric},
      {"pos_monomial", Family::pos_monomial},
      {"pos_monomial_split", Family::pos_monomial_split},
      {"neg_monomial_standard", Family::neg_monomial_standard},
      {"neg_monomial_half", Family::neg_monomial_half},
      {"neg_monomial_asymmetric", Family::neg_monomial_asymmetric},
      {"t_out_of_n", Family::t_out_of_n},
      {"exact_t", Family::exact_t},
      {"parity", Family::parity},
      {"parity_complement", Family::parity_complement},
      {"from_rep", Family::from_rep},
  };
  auto it = table.find(name);
  if (it == table.end()) throw InputError("unknown family '" + name + "'");
  return it->second;
}

QuadratizationResult from_nonneg_rep(const NegPartRep& rep) {
  unsigned m = 0;
  for (const NegPartTerm& t : rep.alphas) {
    if (t.alpha < Rational(0))
      throw PreconditionError(
          "from_nonneg_rep: negative coefficient at slot " + std::to_string(t.i) +
          "; the term-wise translation requires alpha_i >= 0");
    if (t.alpha > Rational(0)) ++m;
  }

  NegPartRep sorted = rep;
  sort_terms(sorted);

  QuadForm g(rep.n, m);
  emit_prefix(g, rep.affine_quad, rep.affine_linear, rep.affine_const);
  unsigned aux = 0;
  for (const NegPartTerm& t : sorted.alphas) {
    if (t.alpha > Rational(0)) emit_aux_term(g, ++aux, t);
  }
  return finalize(std::move(g), Family::from_rep, m);
}

QuadratizationResult quadratize_symmetric_general(const SymmetricSpec& spec) {
  unsigned n = spec.n();
  if (n <= 2) {
    // Already at most quadratic; interpolate directly.
    return finalize(quadform_from_poly(interpolate_multilinear(full_table(spec))),
                    Family::general_symmetric, n >= 2 ? n - 2 : 0);
  }
  NegPartRep rep = fold_affine_slots(balance_half_rep(alphas_half(spec)));
  QuadratizationResult res = from_nonneg_rep(rep);
  res.family = Family::general_symmetric;
  res.paper_bound = n - 2;
  return res;
}

QuadratizationResult quadratize_pos_monomial(unsigned n) {
  if (n < 1) throw InputError("quadratize_pos_monomial: n must be >= 1");
  NegPartRep rep = fold_affine_slots(balance_half_rep(alphas_half(spec_pos_monomial(n))));
  QuadratizationResult res = from_nonneg_rep(rep);
  res.family = Family::pos_monomial;
  res.paper_bound = (n - 1) / 2;
  return res;
}

QuadratizationResult quadratize_pos_monomial_split(unsigned n) {
  if (n < 3 || n % 2 == 0)
    throw InputError("quadratize_pos_monomial_split: n must be odd and >= 3");

  // P = A - A*(1-x_n) with A the monomial over x_1..x_{n-1}. The first term
  // uses the even-size construction; the second is a negative monomial over
  // x_1..x_{n-1}, (1-x_n) with its standard one-auxiliary quadratization
  // y (n - 2 + x_n - sum_{i<n} x_i). Auxiliary blocks are disjoint, so the
  // minima add.
  QuadratizationResult part_a = quadratize_pos_monomial(n - 1);
  unsigned m = part_a.aux_count + 1;
  QuadForm g(n, m);
  for (const auto& [mono, coef] : part_a.g.terms()) g.add_term(mono, coef);
  for (const auto& [aux, threshold] : part_a.g.aux_labels()) g.set_aux_label(aux, threshold);

  unsigned yb = m;
  g.add_term({Y(yb)}, Rational(static_cast<long long>(n) - 2));
  g.add_term({Y(yb), X(n)}, Rational(1));
  for (unsigned i = 1; i + 1 <= n; ++i) g.add_term({Y(yb), X(i)}, Rational(-1));

  return finalize(std::move(g), Family::pos_monomial_split, (n - 1) / 2);
}

QuadratizationResult quadratize_neg_monomial_standard(unsigned n) {
  if (n < 1) throw InputError("quadratize_neg_monomial_standard: n must be >= 1");
  QuadForm g(n, 1);
  g.add_term({Y(1)}, Rational(static_cast<long long>(n) - 1));
  for (unsigned i = 1; i <= n; ++i) g.add_term({Y(1), X(i)}, Rational(-1));
  g.set_aux_label(1, n);
  return finalize(std::move(g), Family::neg_monomial_standard, 1);
}

QuadratizationResult quadratize_neg_monomial_half(unsigned n) {
  if (n < 1) throw InputError("quadratize_neg_monomial_half: n must be >= 1");
  QuadForm g(n, 1);
  g.add_term({Y(1)}, Rational(2 * static_cast<long long>(n) - 1, 1));
  for (unsigned i = 1; i <= n; ++i) g.add_term({Y(1), X(i)}, Rational(-2));
  g.set_aux_label(1, n);
  return finalize(std::move(g), Family::neg_monomial_half, 1);
}

QuadratizationResult quadratize_neg_monomial_asymmetric(unsigned n) {
  if (n < 2) throw InputError("quadratize_neg_monomial_asymmetric: n must be >= 2");
  QuadForm g(n, 1);
  g.add_term({X(n), Y(1)}, Rational(static_cast<long long>(n) - 2));
  for (unsigned i = 1; i + 1 <= n; ++i) {
    g.add_term({X(i), Y(1)}, Rational(-1));
    g.add_term({X(i)}, Rational(1));
    g.add_term({X(i), X(n)}, Rational(-1));
  }
  return finalize(std::move(g), Family::neg_monomial_asymmetric, 1);
}

QuadratizationResult quadratize_t_out_of_n(unsigned t, unsigned n) {
  SymmetricSpec spec = spec_t_out_of_n(t, n);  // validates 1 <= t <= n
  unsigned bound = (n + 1) / 2;

  NegPartRep rep = fold_affine_slots(balance_half_rep(alphas_half(spec)));
  if (positive_count(rep) > bound) rep = indicator_cover_rep(spec);

  QuadratizationResult res = from_nonneg_rep(rep);
  res.family = Family::t_out_of_n;
  res.paper_bound = bound;
  return res;
}

QuadratizationResult quadratize_exact_t(unsigned t, unsigned n) {
  if (t > n) throw InputError("quadratize_exact_t: t must satisfy 0 <= t <= n");
  if (t == n) {
    // The weight-n indicator is the positive monomial; the t+1 slot of the
    // generic recipe does not exist here.
    QuadratizationResult res = quadratize_pos_monomial(n);
    res.family = Family::exact_t;
    res.paper_bound = (n - 1) / 2;
    return res;
  }
  SymmetricSpec spec = spec_exact_t(t, n);
  unsigned bound = n / 2;

  NegPartRep rep = fold_affine_slots(balance_half_rep(alphas_half(spec)));
  if (positive_count(rep) > bound) rep = indicator_cover_rep(spec);

  QuadratizationResult res = from_nonneg_rep(rep);
  res.family = Family::exact_t;
  res.paper_bound = bound;
  return res;
}

QuadratizationResult quadratize_parity(unsigned n) {
  if (n < 1) throw InputError("quadratize_parity: n must be >= 1");
  NegPartRep rep = fix_representation(spec_parity(n));
  rep = add_scaled_identity(rep, make_identity(IdentityKind::E, n), Rational(1));
  QuadratizationResult res = from_nonneg_rep(fold_affine_slots(rep));
  res.family = Family::parity;
  res.paper_bound = n / 2;
  return res;
}

QuadratizationResult quadratize_parity_complement(unsigned n) {
  if (n < 1) throw InputError("quadratize_parity_complement: n must be >= 1");
  NegPartRep rep = fix_representation(spec_parity_complement(n));
  rep = add_scaled_identity(rep, make_identity(IdentityKind::E, n), Rational(1));
  QuadratizationResult res = from_nonneg_rep(fold_affine_slots(rep));
  res.family = Family::parity_complement;
  res.paper_bound = (n - 1) / 2;
  return res;
}

}  // namespace pbq
