#pragma once

// Certification of quadratizations against the defining property
//
//   f(x) = min { g(x,y) : y in {0,1}^m }   for all x in {0,1}^n,
//
// by exhaustive sweep over the x-cube, with exact minimization over y.
// y-linear forms (no product of two auxiliaries) minimize term-wise:
// each a_i(x) * y_i contributes min(0, a_i(x)).

#include <cstdint>
#include <functional>
#include <optional>

#include "pbq/core.hpp"

namespace pbq {

inline constexpr unsigned kMaxVerifyVars = 22;       // x-cube sweep cap
inline constexpr unsigned kMaxBruteAuxVars = 20;     // 2^m minimization cap
inline constexpr unsigned kMaxBruteTotalBits = 24;   // n+m cap for non-y-linear forms

struct Counterexample {
  uint64_t x_mask = 0;
  Rational expected;
  Rational got;

  friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

struct VerifyReport {
  bool passed = false;
  std::optional<Counterexample> counterexample;
  uint64_t checked_points = 0;
  bool y_linear = false;
  bool x_symmetric = false;
  bool global_min_match = false;

  friend bool operator==(const VerifyReport&, const VerifyReport&) = default;
};

using PointFn = std::function<Rational(uint64_t x_mask)>;

bool is_y_linear(const QuadForm& g);

// True when the coefficient map is invariant under every adjacent
// transposition of x indices (y indices fixed).
bool is_x_symmetric(const QuadForm& g);

Rational minimize_over_y(const QuadForm& g, uint64_t x_mask);

// Sweeps all 2^n points in lexicographic order of (x_1, ..., x_n) and
// records the first mismatch. Also reports whether the global minima of f
// and g agree.
VerifyReport verify_quadratization(const QuadForm& g, const PointFn& f);
VerifyReport verify_quadratization(const QuadForm& g, const SymmetricSpec& f);
VerifyReport verify_quadratization(const QuadForm& g, const MultilinearPoly& f);

// Degree of the unique multilinear interpolant of parity on the 3-cube.
// Returns 3; a quadratic representation of parity on any 3-dimensional
// subcube would contradict this.
unsigned parity_3cube_degree_oracle();

}  // namespace pbq
