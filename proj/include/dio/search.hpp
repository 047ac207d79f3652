#pragma once

// Bounded root search for signed polynomials over tuple codes. A fuel bound
// turns "does p have a root" into the decidable "does p have a root with
// code <= fuel"; only the bounded question is ever answered here, and every
// verdict carries the bound it was established at.

#include <cstddef>
#include <optional>
#include <utility>

#include "dio/cantor.hpp"
#include "dio/ints.hpp"
#include "dio/poly.hpp"

namespace dio {

// p vanishes at the ar-tuple coded by n.
inline bool check_solution(std::size_t ar, const Poly& p, const Nat& n) {
  return eval_poly(p, decode_k(ar, n)) == 0;
}

// Least n <= fuel with check_solution(ar, p, n), if any. Scans upward from
// zero, so fuel caps the search without changing which root gets reported:
// raising fuel after a hit returns the same index forever.
inline std::optional<Nat> find_sol(std::size_t ar, const Poly& p, const Nat& fuel) {
  for (Nat n = 0; n <= fuel; ++n)
    if (check_solution(ar, p, n)) return n;
  return std::nullopt;
}

// Verdict of a bounded scan: found carries the least root code, exhausted
// the bound searched without success.
struct SearchOutcome {
  enum class Kind { found, exhausted };

  Kind kind;
  Nat value;

  static SearchOutcome found(Nat index) { return {Kind::found, std::move(index)}; }
  static SearchOutcome exhausted(Nat bound) { return {Kind::exhausted, std::move(bound)}; }

  bool operator==(const SearchOutcome&) const = default;
};

inline SearchOutcome bounded_solvable(std::size_t ar, const Poly& p, const Nat& bound) {
  if (auto n = find_sol(ar, p, bound)) return SearchOutcome::found(std::move(*n));
  return SearchOutcome::exhausted(bound);
}

}  // namespace dio
