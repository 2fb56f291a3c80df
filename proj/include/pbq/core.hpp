#pragma once

// Core algebra: tagged variables, canonical multilinear term maps, symmetric
// function specs (weight-value vectors), and exact point evaluation.
//
// Bit conventions used throughout: an assignment to x_1..x_n is a mask whose
// bit j-1 holds x_j. Tables indexed by assignments use the same mapping, so
// table[w] is the value at the point whose bits are the binary digits of w.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "pbq/errors.hpp"
#include "pbq/rational.hpp"

namespace pbq {

enum class VarKind : uint8_t { x = 0, y = 1 };

struct Var {
  VarKind kind;
  unsigned index;  // 1-based
  friend auto operator<=>(const Var&, const Var&) = default;
};

inline Var X(unsigned i) { return Var{VarKind::x, i}; }
inline Var Y(unsigned i) { return Var{VarKind::y, i}; }

std::string var_name(const Var& v);

// A multilinear monomial: strictly increasing variables, empty = constant.
using Monomial = std::vector<Var>;

// Canonical term order: total degree first, then lexicographic variables.
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

using TermMap = std::map<Monomial, Rational, MonomialOrder>;

// Symmetric pseudo-Boolean function given by its weight-value vector:
// the function equals k[l] on every point of Hamming weight l.
class SymmetricSpec {
 public:
  SymmetricSpec(unsigned n, std::vector<Rational> k);

  unsigned n() const { return n_; }
  const std::vector<Rational>& k() const { return k_; }
  const Rational& value_at_weight(unsigned l) const;

  friend bool operator==(const SymmetricSpec&, const SymmetricSpec&) = default;

 private:
  unsigned n_;
  std::vector<Rational> k_;
};

// Multilinear polynomial over x_1..x_n, arbitrary degree.
class MultilinearPoly {
 public:
  explicit MultilinearPoly(unsigned n);

  // Merges into the term for the given variable set; drops zero results.
  // The index list need not be sorted; repeats are rejected.
  void add_term(std::vector<unsigned> x_indices, const Rational& coef);

  unsigned n() const { return n_; }
  const TermMap& terms() const { return terms_; }
  unsigned degree() const;
  Rational coefficient(std::vector<unsigned> x_indices) const;

  friend bool operator==(const MultilinearPoly&, const MultilinearPoly&) = default;

 private:
  unsigned n_;
  TermMap terms_;
};

// Degree <= 2 multilinear polynomial over x_1..x_n and auxiliaries y_1..y_m.
class QuadForm {
 public:
  QuadForm(unsigned n, unsigned m);

  void add_term(Monomial vars, const Rational& coef);
  void set_aux_label(unsigned aux_index, unsigned threshold);

  unsigned n() const { return n_; }
  unsigned m() const { return m_; }
  const TermMap& terms() const { return terms_; }
  const std::map<unsigned, unsigned>& aux_labels() const { return aux_labels_; }
  Rational coefficient(Monomial vars) const;

  friend bool operator==(const QuadForm&, const QuadForm&) = default;

 private:
  unsigned n_;
  unsigned m_;
  TermMap terms_;
  std::map<unsigned, unsigned> aux_labels_;  // compact aux index -> threshold
};

inline constexpr unsigned kMaxTableVars = 20;

Rational eval_symmetric(const SymmetricSpec& spec, uint64_t x_mask);
Rational eval_poly(const MultilinearPoly& f, uint64_t x_mask);
Rational eval_quadform(const QuadForm& g, uint64_t x_mask, uint64_t y_mask);

// Unique multilinear interpolant of a full 2^n value table (Mobius
// transform over the subset lattice). Table size must be a power of two.
MultilinearPoly interpolate_multilinear(const std::vector<Rational>& table);

// Terms are kept canonical by construction; this returns a normalized copy
// and is idempotent.
QuadForm canonicalize(const QuadForm& g);

}  // namespace pbq
