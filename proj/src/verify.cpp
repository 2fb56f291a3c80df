#include "pbq/verify.hpp"

#include <algorithm>
#include <bit>
#include <tuple>
#include <vector>

namespace pbq {

namespace {

// Term lists regrouped for fast repeated evaluation.
struct CompiledQuad {
  unsigned n = 0;
  unsigned m = 0;
  Rational constant;
  std::vector<std::pair<unsigned, Rational>> linear_x;                   // x_j
  std::vector<std::tuple<unsigned, unsigned, Rational>> quad_xx;         // x_i x_j
  std::vector<Rational> aux_const;                                       // y_i
  std::vector<std::vector<std::pair<unsigned, Rational>>> aux_linear;    // y_i x_j
  std::vector<std::tuple<unsigned, unsigned, Rational>> quad_yy;         // y_i y_j

  bool y_linear() const { return quad_yy.empty(); }

  // q(x): the y-free part.
  Rational eval_x_part(uint64_t x_mask) const {
    Rational total = constant;
    for (const auto& [j, c] : linear_x) {
      if ((x_mask >> (j - 1)) & 1) total += c;
    }
    for (const auto& [i, j, c] : quad_xx) {
      if (((x_mask >> (i - 1)) & 1) && ((x_mask >> (j - 1)) & 1)) total += c;
    }
    return total;
  }

  // a_i(x): the full linear multiplier of y_i, constant included.
  Rational eval_aux_multiplier(unsigned aux, uint64_t x_mask) const {
    Rational total = aux_const[aux - 1];
    for (const auto& [j, c] : aux_linear[aux - 1]) {
      if ((x_mask >> (j - 1)) & 1) total += c;
    }
    return total;
  }
};

CompiledQuad compile(const QuadForm& g) {
  CompiledQuad cq;
  cq.n = g.n();
  cq.m = g.m();
  cq.aux_const.assign(g.m(), Rational(0));
  cq.aux_linear.assign(g.m(), {});
  for (const auto& [mono, coef] : g.terms()) {
    if (mono.empty()) {
      cq.constant = coef;
    } else if (mono.size() == 1) {
      const Var& v = mono[0];
      if (v.kind == VarKind::x)
        cq.linear_x.emplace_back(v.index, coef);
      else
        cq.aux_const[v.index - 1] = coef;
    } else {
      const Var& a = mono[0];
      const Var& b = mono[1];
      if (a.kind == VarKind::x && b.kind == VarKind::x)
        cq.quad_xx.emplace_back(a.index, b.index, coef);
      else if (a.kind == VarKind::x && b.kind == VarKind::y)
        cq.aux_linear[b.index - 1].emplace_back(a.index, coef);
      else
        cq.quad_yy.emplace_back(a.index, b.index, coef);
    }
  }
  return cq;
}

Rational minimize_compiled(const CompiledQuad& cq, const QuadForm& g, uint64_t x_mask) {
  if (cq.m == 0) return cq.eval_x_part(x_mask);
  if (cq.y_linear()) {
    Rational total = cq.eval_x_part(x_mask);
    for (unsigned aux = 1; aux <= cq.m; ++aux)
      total += neg_part(cq.eval_aux_multiplier(aux, x_mask));
    return total;
  }
  if (cq.m > kMaxBruteAuxVars)
    throw ResourceError("minimize_over_y: too many auxiliaries for brute-force minimization");
  Rational best = eval_quadform(g, x_mask, 0);
  for (uint64_t y = 1; y < (uint64_t{1} << cq.m); ++y)
    best = min(best, eval_quadform(g, x_mask, y));
  return best;
}

// Lexicographic sweep order on (x_1, ..., x_n): x_1 is the most significant
// digit of the counter, while masks store x_j at bit j-1.
uint64_t lex_to_mask(uint64_t counter, unsigned n) {
  uint64_t mask = 0;
  for (unsigned j = 1; j <= n; ++j) {
    if ((counter >> (n - j)) & 1) mask |= uint64_t{1} << (j - 1);
  }
  return mask;
}

}  // namespace

bool is_y_linear(const QuadForm& g) {
  for (const auto& [mono, coef] : g.terms()) {
    if (mono.size() == 2 && mono[0].kind == VarKind::y && mono[1].kind == VarKind::y) return false;
  }
  return true;
}

bool is_x_symmetric(const QuadForm& g) {
  for (unsigned p = 1; p + 1 <= g.n(); ++p) {
    for (const auto& [mono, coef] : g.terms()) {
      Monomial swapped = mono;
      for (Var& v : swapped) {
        if (v.kind != VarKind::x) continue;
        if (v.index == p)
          v.index = p + 1;
        else if (v.index == p + 1)
          v.index = p;
      }
      std::sort(swapped.begin(), swapped.end());
      if (g.coefficient(swapped) != coef) return false;
    }
  }
  return true;
}

Rational minimize_over_y(const QuadForm& g, uint64_t x_mask) {
  if (g.n() < 64 && (x_mask >> g.n()))
    throw InputError("minimize_over_y: assignment has more bits than variables");
  CompiledQuad cq = compile(g);
  return minimize_compiled(cq, g, x_mask);
}

VerifyReport verify_quadratization(const QuadForm& g, const PointFn& f) {
  unsigned n = g.n();
  if (n > kMaxVerifyVars)
    throw ResourceError("verify_quadratization: n exceeds the sweep cap of 22");
  CompiledQuad cq = compile(g);
  if (!cq.y_linear() && n + g.m() > kMaxBruteTotalBits)
    throw ResourceError("verify_quadratization: n+m exceeds the enumeration cap of 24");

  VerifyReport report;
  report.y_linear = cq.y_linear();
  report.x_symmetric = is_x_symmetric(g);
  report.checked_points = uint64_t{1} << n;
  report.passed = true;

  bool have_min = false;
  Rational min_f, min_g;
  for (uint64_t counter = 0; counter < (uint64_t{1} << n); ++counter) {
    uint64_t x = lex_to_mask(counter, n);
    Rational expected = f(x);
    Rational got = minimize_compiled(cq, g, x);
    if (!have_min) {
      min_f = expected;
      min_g = got;
      have_min = true;
    } else {
      min_f = min(min_f, expected);
      min_g = min(min_g, got);
    }
    if (report.passed && got != expected) {
      report.passed = false;
      report.counterexample = Counterexample{x, expected, got};
    }
  }
  report.global_min_match = (min_f == min_g);
  return report;
}

VerifyReport verify_quadratization(const QuadForm& g, const SymmetricSpec& f) {
  if (f.n() != g.n())
    throw InputError("verify_quadratization: spec and form differ in variable count");
  return verify_quadratization(g, PointFn([&f](uint64_t x) { return eval_symmetric(f, x); }));
}

VerifyReport verify_quadratization(const QuadForm& g, const MultilinearPoly& f) {
  if (f.n() != g.n())
    throw InputError("verify_quadratization: polynomial and form differ in variable count");
  return verify_quadratization(g, PointFn([&f](uint64_t x) { return eval_poly(f, x); }));
}

unsigned parity_3cube_degree_oracle() {
  std::vector<Rational> table(8);
  for (uint64_t w = 0; w < 8; ++w) table[w] = Rational(std::popcount(w) & 1);
  return interpolate_multilinear(table).degree();
}

}  // namespace pbq
