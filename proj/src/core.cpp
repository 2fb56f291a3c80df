#include "pbq/core.hpp"

#include <algorithm>
#include <bit>

namespace pbq {

namespace {

void check_mask(uint64_t mask, unsigned bits, const char* what) {
  if (bits >= 64) return;
  if (mask >> bits)
    throw InputError(std::string(what) + ": assignment has more bits than variables");
}

}  // namespace

std::string var_name(const Var& v) {
  return (v.kind == VarKind::x ? "x" : "y") + std::to_string(v.index);
}

SymmetricSpec::SymmetricSpec(unsigned n, std::vector<Rational> k) : n_(n), k_(std::move(k)) {
  if (n_ < 1) throw InputError("SymmetricSpec: n must be >= 1");
  if (k_.size() != static_cast<size_t>(n_) + 1)
    throw InputError("SymmetricSpec: k must have exactly n+1 entries");
}

const Rational& SymmetricSpec::value_at_weight(unsigned l) const {
  if (l > n_) throw InputError("SymmetricSpec: weight out of range");
  return k_[l];
}

MultilinearPoly::MultilinearPoly(unsigned n) : n_(n) {
  if (n_ < 1) throw InputError("MultilinearPoly: n must be >= 1");
}

void MultilinearPoly::add_term(std::vector<unsigned> x_indices, const Rational& coef) {
  std::sort(x_indices.begin(), x_indices.end());
  Monomial mono;
  mono.reserve(x_indices.size());
  for (size_t i = 0; i < x_indices.size(); ++i) {
    unsigned idx = x_indices[i];
    if (idx < 1 || idx > n_) throw InputError("MultilinearPoly: variable index out of range");
    if (i > 0 && idx == x_indices[i - 1])
      throw InputError("MultilinearPoly: repeated variable in monomial");
    mono.push_back(X(idx));
  }
  Rational& slot = terms_[mono];
  slot += coef;
  if (slot.is_zero()) terms_.erase(mono);
}

unsigned MultilinearPoly::degree() const {
  unsigned d = 0;
  for (const auto& [mono, coef] : terms_) d = std::max<unsigned>(d, mono.size());
  return d;
}

Rational MultilinearPoly::coefficient(std::vector<unsigned> x_indices) const {
  std::sort(x_indices.begin(), x_indices.end());
  Monomial mono;
  for (unsigned idx : x_indices) mono.push_back(X(idx));
  auto it = terms_.find(mono);
  return it == terms_.end() ? Rational(0) : it->second;
}

QuadForm::QuadForm(unsigned n, unsigned m) : n_(n), m_(m) {
  if (n_ < 1) throw InputError("QuadForm: n must be >= 1");
}

void QuadForm::add_term(Monomial vars, const Rational& coef) {
  std::sort(vars.begin(), vars.end());
  if (vars.size() > 2) throw InputError("QuadForm: monomial degree exceeds 2");
  for (size_t i = 0; i < vars.size(); ++i) {
    const Var& v = vars[i];
    unsigned limit = v.kind == VarKind::x ? n_ : m_;
    if (v.index < 1 || v.index > limit)
      throw InputError("QuadForm: variable " + var_name(v) + " out of range");
    if (i > 0 && vars[i] == vars[i - 1])
      throw InputError("QuadForm: squared variable " + var_name(v));
  }
  Rational& slot = terms_[vars];
  slot += coef;
  if (slot.is_zero()) terms_.erase(vars);
}

void QuadForm::set_aux_label(unsigned aux_index, unsigned threshold) {
  if (aux_index < 1 || aux_index > m_)
    throw InputError("QuadForm: aux label index out of range");
  aux_labels_[aux_index] = threshold;
}

Rational QuadForm::coefficient(Monomial vars) const {
  std::sort(vars.begin(), vars.end());
  auto it = terms_.find(vars);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational eval_symmetric(const SymmetricSpec& spec, uint64_t x_mask) {
  check_mask(x_mask, spec.n(), "eval_symmetric");
  return spec.value_at_weight(static_cast<unsigned>(std::popcount(x_mask)));
}

Rational eval_poly(const MultilinearPoly& f, uint64_t x_mask) {
  check_mask(x_mask, f.n(), "eval_poly");
  Rational total(0);
  for (const auto& [mono, coef] : f.terms()) {
    bool live = true;
    for (const Var& v : mono) {
      if (!((x_mask >> (v.index - 1)) & 1)) {
        live = false;
        break;
      }
    }
    if (live) total += coef;
  }
  return total;
}

Rational eval_quadform(const QuadForm& g, uint64_t x_mask, uint64_t y_mask) {
  check_mask(x_mask, g.n(), "eval_quadform");
  check_mask(y_mask, g.m(), "eval_quadform");
  Rational total(0);
  for (const auto& [mono, coef] : g.terms()) {
    bool live = true;
    for (const Var& v : mono) {
      uint64_t mask = v.kind == VarKind::x ? x_mask : y_mask;
      if (!((mask >> (v.index - 1)) & 1)) {
        live = false;
        break;
      }
    }
    if (live) total += coef;
  }
  return total;
}

MultilinearPoly interpolate_multilinear(const std::vector<Rational>& table) {
  size_t size = table.size();
  if (size < 2 || (size & (size - 1)) != 0)
    throw InputError("interpolate_multilinear: table size must be a power of two >= 2");
  unsigned n = static_cast<unsigned>(std::countr_zero(size));
  if (n > kMaxTableVars)
    throw InputError("interpolate_multilinear: n exceeds the table cap of 20");

  // In-place Mobius transform over the subset lattice.
  std::vector<Rational> a = table;
  for (unsigned b = 0; b < n; ++b) {
    uint64_t bit = uint64_t{1} << b;
    for (uint64_t mask = 0; mask < size; ++mask) {
      if (mask & bit) a[mask] -= a[mask ^ bit];
    }
  }

  MultilinearPoly poly(n);
  for (uint64_t mask = 0; mask < size; ++mask) {
    if (a[mask].is_zero()) continue;
    std::vector<unsigned> vars;
    for (unsigned b = 0; b < n; ++b) {
      if ((mask >> b) & 1) vars.push_back(b + 1);
    }
    poly.add_term(std::move(vars), a[mask]);
  }
  return poly;
}

QuadForm canonicalize(const QuadForm& g) {
  QuadForm out(g.n(), g.m());
  for (const auto& [mono, coef] : g.terms()) out.add_term(mono, coef);
  for (const auto& [aux, threshold] : g.aux_labels()) out.set_aux_label(aux, threshold);
  return out;
}

}  // namespace pbq
