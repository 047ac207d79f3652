#pragma once

// A three-constraint arithmetic language over naturals (x = 1, x + y = z,
// x * y = z) and its reduction to a single root-search instance. Each
// constraint becomes a pair of nonnegative polynomials that agree exactly on
// the assignments satisfying it; the conjunction is folded with the
// sum-of-squares identity
//
//   a^2 + b^2 = 2ab   iff   a = b,      and always   a^2 + b^2 >= 2ab,
//
// so one equation between two nonnegative polynomials expresses every
// constraint at once. reduce closes the loop by reading assignments through
// the tuple codec, turning satisfiability into bounded root search.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "dio/cantor.hpp"
#include "dio/ints.hpp"
#include "dio/poly.hpp"

namespace dio {

struct H10cOne {  // phi(x) = 1
  std::size_t x;
  bool operator==(const H10cOne&) const = default;
};
struct H10cPlus {  // phi(x) + phi(y) = phi(z)
  std::size_t x, y, z;
  bool operator==(const H10cPlus&) const = default;
};
struct H10cMult {  // phi(x) * phi(y) = phi(z)
  std::size_t x, y, z;
  bool operator==(const H10cMult&) const = default;
};

using H10cConstraint = std::variant<H10cOne, H10cPlus, H10cMult>;

// Variable values by index.
using Assignment = std::vector<Nat>;

inline std::size_t max_var(const H10cConstraint& c) {
  return std::visit(
      [](const auto& k) -> std::size_t {
        if constexpr (std::is_same_v<std::decay_t<decltype(k)>, H10cOne>) return k.x;
        else return std::max({k.x, k.y, k.z});
      },
      c);
}

// Largest index mentioned anywhere; 0 for an empty list.
inline std::size_t list_max_var(const std::vector<H10cConstraint>& cs) {
  std::size_t m = 0;
  for (const auto& c : cs) m = std::max(m, max_var(c));
  return m;
}

namespace detail {
inline const Nat& phi_at(const Assignment& phi, std::size_t i) {
  if (i >= phi.size())
    throw std::out_of_range("h10c: variable " + std::to_string(i) +
                            " outside assignment of length " + std::to_string(phi.size()));
  return phi[i];
}
}  // namespace detail

// Truth of one constraint under phi. Every mentioned index must lie inside
// the assignment.
inline bool h10c_sem(const H10cConstraint& c, const Assignment& phi) {
  using detail::phi_at;
  return std::visit(
      [&](const auto& k) -> bool {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, H10cOne>) return phi_at(phi, k.x) == 1;
        else if constexpr (std::is_same_v<T, H10cPlus>)
          return phi_at(phi, k.x) + phi_at(phi, k.y) == phi_at(phi, k.z);
        else return phi_at(phi, k.x) * phi_at(phi, k.y) == phi_at(phi, k.z);
      },
      c);
}

// Conjunction over the list. An empty list is vacuously true under any
// assignment; a nonempty list requires phi to cover every mentioned index.
inline bool sat_check(const std::vector<H10cConstraint>& cs, const Assignment& phi) {
  if (!cs.empty() && phi.size() <= list_max_var(cs))
    throw std::out_of_range("sat_check: assignment of length " + std::to_string(phi.size()) +
                            " too short for variables up to " +
                            std::to_string(list_max_var(cs)));
  for (const auto& c : cs)
    if (!h10c_sem(c, phi)) return false;
  return true;
}

// Exponent row of length k selecting variable i.
inline std::vector<std::uint64_t> unit_exp(std::size_t k, std::size_t i) {
  if (i >= k) throw std::invalid_argument("unit_exp: index " + std::to_string(i) +
                                          " not below arity " + std::to_string(k));
  std::vector<std::uint64_t> e(k, 0);
  e[i] = 1;
  return e;
}

// Row for x_i * x_j, doubling up when i = j.
inline std::vector<std::uint64_t> mul_exp(std::size_t k, std::size_t i, std::size_t j) {
  if (i >= k || j >= k)
    throw std::invalid_argument("mul_exp: index not below arity " + std::to_string(k));
  std::vector<std::uint64_t> e(k, 0);
  e[i] += 1;
  e[j] += 1;
  return e;
}

inline NatMonomial const_one(std::size_t k) { return {1, std::vector<std::uint64_t>(k, 0)}; }
inline NatMonomial var_mono(std::size_t k, std::size_t i) { return {1, unit_exp(k, i)}; }
inline NatMonomial mul_mono(std::size_t k, std::size_t i, std::size_t j) {
  return {1, mul_exp(k, i, j)};
}

using NatPolyPair = std::pair<NatPoly, NatPoly>;

// One constraint as a pair of nonnegative polynomials over k variables that
// agree exactly on the satisfying assignments. Requires max_var(c) < k.
inline NatPolyPair encode_c(std::size_t k, const H10cConstraint& c) {
  return std::visit(
      [&](const auto& v) -> NatPolyPair {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, H10cOne>)
          return {{const_one(k)}, {var_mono(k, v.x)}};
        else if constexpr (std::is_same_v<T, H10cPlus>)
          return {{var_mono(k, v.x), var_mono(k, v.y)}, {var_mono(k, v.z)}};
        else
          return {{mul_mono(k, v.x, v.y)}, {var_mono(k, v.z)}};
      },
      c);
}

// Fold a list of pairs into one with the sum-of-squares identity: per pair
// (p, n), POS gains p^2 and n^2 and NEG gains 2pn, head pair leading. POS and
// NEG are equal at an assignment exactly when every pair agrees there, and
// POS >= NEG holds everywhere. All exponent rows must share one length.
inline NatPolyPair conj_encode(const std::vector<NatPolyPair>& pairs) {
  bool seen = false;
  std::size_t k = 0;
  for (const auto& [p, n] : pairs)
    for (const auto* poly : {&p, &n})
      for (const auto& m : *poly) {
        if (!seen) {
          k = m.exps.size();
          seen = true;
        } else if (m.exps.size() != k) {
          throw std::invalid_argument("conj_encode: exponent rows of mixed lengths");
        }
      }
  NatPoly pos, neg;
  for (const auto& [p, n] : pairs) {
    auto sp = poly_sq(p);
    auto sn = poly_sq(n);
    auto cross = poly_scale(Nat(2), poly_mult(p, n));
    pos.insert(pos.end(), sp.begin(), sp.end());
    pos.insert(pos.end(), sn.begin(), sn.end());
    neg.insert(neg.end(), cross.begin(), cross.end());
  }
  return {std::move(pos), std::move(neg)};
}

// A root-search instance: two nonnegative polynomials over ar variables,
// compared at tuples read through the codec.
struct H10cInst {
  std::size_t ar = 0;
  NatPoly pos, neg;

  bool operator==(const H10cInst&) const = default;
};

// pos and neg agree at the ar-tuple coded by n.
inline bool inst_sat_at(const H10cInst& inst, const Nat& n) {
  auto vars = decode_k(inst.ar, n);
  return eval_nat_poly(inst.pos, vars) == eval_nat_poly(inst.neg, vars);
}

// Whole-list reduction: one variable per index up to the largest mentioned
// (always at least one variable), each constraint encoded at that arity, the
// conjunction folded. Satisfying assignments of length ar correspond exactly
// to root codes of the instance.
inline H10cInst reduce(const std::vector<H10cConstraint>& cs) {
  std::size_t k = list_max_var(cs) + 1;
  std::vector<NatPolyPair> pairs;
  pairs.reserve(cs.size());
  for (const auto& c : cs) pairs.push_back(encode_c(k, c));
  auto [pos, neg] = conj_encode(pairs);
  return {k, std::move(pos), std::move(neg)};
}

// View a signed polynomial as an instance through its split halves. Exponent
// rows must all have length ar so the instance reads variables the same way
// the polynomial does.
inline H10cInst poly_encode(std::size_t ar, const Poly& p) {
  if (!all_len(ar, p))
    throw std::invalid_argument("poly_encode: exponent rows must all have length " +
                                std::to_string(ar));
  return {ar, pos_monomials(p), neg_monomials(p)};
}

// Lift an instance back to one signed polynomial, pos minus neg.
inline Poly h10c_to_poly(const H10cInst& inst) {
  Poly out;
  out.reserve(inst.pos.size() + inst.neg.size());
  for (const auto& m : inst.pos) out.push_back({Int(m.coeff), m.exps});
  for (const auto& m : inst.neg) out.push_back({-Int(m.coeff), m.exps});
  return out;
}

}  // namespace dio
