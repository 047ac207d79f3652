#pragma once

// Multivariate polynomials as flat monomial lists, in a signed and a
// nonnegative flavour, plus the exact split of a signed polynomial into its
// positive and negative halves.
//
// Evaluation pairs each variable with the exponent at the same position and
// ignores whichever tail is longer. That truncation is part of the semantics,
// not an error: the structural operations stay total, and the side condition
// all_len states when length-sensitive facts about them apply.
// validate_poly_arity surfaces mismatches for interactive use.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "dio/ints.hpp"

namespace dio {

// coeff * x0^exps[0] * x1^exps[1] * ...
struct Monomial {
  Int coeff;
  std::vector<std::uint64_t> exps;

  bool operator==(const Monomial&) const = default;
};

// Same shape with a nonnegative coefficient.
struct NatMonomial {
  Nat coeff;
  std::vector<std::uint64_t> exps;

  bool operator==(const NatMonomial&) const = default;
};

using Poly = std::vector<Monomial>;
using NatPoly = std::vector<NatMonomial>;

inline Int eval_monomial(const Monomial& m, const std::vector<Nat>& vars) {
  Nat term = 1;
  std::size_t n = std::min(vars.size(), m.exps.size());
  for (std::size_t i = 0; i < n; ++i) term *= nat_pow(vars[i], m.exps[i]);
  return m.coeff * term;
}

inline Int eval_poly(const Poly& p, const std::vector<Nat>& vars) {
  Int sum = 0;
  for (const auto& m : p) sum += eval_monomial(m, vars);
  return sum;
}

inline Nat eval_nat_mono(const NatMonomial& m, const std::vector<Nat>& vars) {
  Nat term = 1;
  std::size_t n = std::min(vars.size(), m.exps.size());
  for (std::size_t i = 0; i < n; ++i) term *= nat_pow(vars[i], m.exps[i]);
  return m.coeff * term;
}

inline Nat eval_nat_poly(const NatPoly& p, const std::vector<Nat>& vars) {
  Nat sum = 0;
  for (const auto& m : p) sum += eval_nat_mono(m, vars);
  return sum;
}

// Monomials with coeff > 0, coefficient kept as a natural. Zero-coefficient
// monomials belong to neither half.
inline NatPoly pos_monomials(const Poly& p) {
  NatPoly out;
  for (const auto& m : p)
    if (m.coeff > 0) out.push_back({Nat(m.coeff), m.exps});
  return out;
}

// Monomials with coeff < 0, coefficient negated into a natural.
inline NatPoly neg_monomials(const Poly& p) {
  NatPoly out;
  for (const auto& m : p)
    if (m.coeff < 0) out.push_back({Nat(-m.coeff), m.exps});
  return out;
}

// eval_poly(p, vars) == eval_nat_poly(pos, vars) - eval_nat_poly(neg, vars),
// exactly, at every vars.
struct SplitPoly {
  NatPoly pos, neg;
};

inline SplitPoly split_poly(const Poly& p) { return {pos_monomials(p), neg_monomials(p)}; }

// Pointwise exponent sum, truncated to the shorter vector.
inline std::vector<std::uint64_t> map2_add(const std::vector<std::uint64_t>& a,
                                           const std::vector<std::uint64_t>& b) {
  std::size_t n = std::min(a.size(), b.size());
  std::vector<std::uint64_t> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = a[i] + b[i];
  return out;
}

template <class M>
M mono_mult(const M& a, const M& b) {
  return {a.coeff * b.coeff, map2_add(a.exps, b.exps)};
}

// Every cross product, left factors outermost. Evaluates to the product of
// the evaluations whenever all exponent rows share one length.
template <class M>
std::vector<M> poly_mult(const std::vector<M>& p1, const std::vector<M>& p2) {
  std::vector<M> out;
  out.reserve(p1.size() * p2.size());
  for (const auto& m1 : p1)
    for (const auto& m2 : p2) out.push_back(mono_mult(m1, m2));
  return out;
}

template <class M, class C>
std::vector<M> poly_scale(const C& c, const std::vector<M>& p) {
  std::vector<M> out;
  out.reserve(p.size());
  for (const auto& m : p) out.push_back({c * m.coeff, m.exps});
  return out;
}

template <class M>
std::vector<M> poly_sq(const std::vector<M>& p) {
  return poly_mult(p, p);
}

// Every exponent row has exactly k entries.
template <class M>
bool all_len(std::size_t k, const std::vector<M>& p) {
  for (const auto& m : p)
    if (m.exps.size() != k) return false;
  return true;
}

// Mismatch report for a polynomial meant to be read at nvars variables.
// Empty means clean; entries describe what evaluation will quietly truncate.
inline std::vector<std::string> validate_poly_arity(const Poly& p, std::size_t nvars) {
  std::vector<std::string> issues;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i].exps.size() != nvars)
      issues.push_back("monomial " + std::to_string(i) + " has " +
                       std::to_string(p[i].exps.size()) + " exponents, expected " +
                       std::to_string(nvars) + "; evaluation truncates to the shorter list");
  return issues;
}

}  // namespace dio
