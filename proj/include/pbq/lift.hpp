#pragma once

// Embedding of an arbitrary function on n variables into a symmetric
// function on N = 2^n - 1 variables, and the projection of quadratizations
// back down. Block j of the z variables (indices 2^{j-1} .. 2^j - 1, which
// has size 2^{j-1}) is identified with x_j; a point x embeds to the z whose
// Hamming weight is sum 2^{j-1} x_j, so the lifted weight-value vector reads
// off f at the binary representation of the weight.

#include <cstdint>
#include <utility>
#include <vector>

#include "pbq/core.hpp"
#include "pbq/verify.hpp"

namespace pbq {

inline constexpr unsigned kMaxLiftVars = 4;
inline constexpr unsigned kMaxRoundtripVars = 3;

struct LiftSpec {
  unsigned n = 0;  // original variable count
  unsigned N = 0;  // 2^n - 1
  std::vector<Rational> k;  // N+1 values, k[w] = f(binary(w))
  std::vector<std::pair<unsigned, unsigned>> block_map;  // block_map[j-1] = [lo, hi] for x_j

  friend bool operator==(const LiftSpec&, const LiftSpec&) = default;
};

LiftSpec lift_function(const MultilinearPoly& f);

// The lifted symmetric function as a spec on N variables.
SymmetricSpec lifted_spec(const LiftSpec& lift);

// z assignment with every block j set to x_j.
uint64_t embed_point(const LiftSpec& lift, uint64_t x_mask);

// Identifies each z variable with the x variable of its block, merging
// monomials multilinearly (z_p z_q with p, q in one block collapses to x_j).
// Auxiliaries are untouched; the result keeps G's auxiliary count.
QuadForm project_quadratization(const QuadForm& G, const LiftSpec& lift);

// lift f -> quadratize the symmetric lift -> project -> certify against f.
VerifyReport lift_roundtrip(const MultilinearPoly& f);

}  // namespace pbq
