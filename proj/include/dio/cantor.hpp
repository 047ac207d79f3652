#pragma once

// Cantor pairing and its fixed-arity extension. cantor_pair is a bijection
// N^2 -> N; encode_tuple folds it left over a tuple, so the last component
// sits in the outermost pair and decode_k peels it off first. The unpair
// direction rests entirely on nat_isqrt being a true floor square root.

#include <cstddef>
#include <utility>
#include <vector>

#include "dio/ints.hpp"

namespace dio {

inline Nat cantor_pair(const Nat& a, const Nat& b) {
  Nat s = a + b;
  return s * (s + 1) / 2 + b;
}

// Index of the diagonal containing code n: the largest w with w(w+1)/2 <= n.
inline Nat cantor_w(const Nat& n) { return (nat_isqrt(8 * n + 1) - 1) / 2; }

inline Nat cantor_unpair_snd(const Nat& n) {
  Nat w = cantor_w(n);
  return n - w * (w + 1) / 2;  // nonnegative by the choice of w
}

inline Nat cantor_unpair_fst(const Nat& n) {
  Nat w = cantor_w(n);
  Nat snd = n - w * (w + 1) / 2;
  return w - snd;  // snd <= w since n < (w+1)(w+2)/2
}

// Both components with one diagonal computation.
inline std::pair<Nat, Nat> cantor_unpair(const Nat& n) {
  Nat w = cantor_w(n);
  Nat snd = n - w * (w + 1) / 2;
  Nat fst = w - snd;
  return {std::move(fst), std::move(snd)};
}

// The ar-tuple coded by n. decode_k(0, n) ignores n and is empty;
// the result always has exactly ar entries.
inline std::vector<Nat> decode_k(std::size_t ar, const Nat& n) {
  std::vector<Nat> out(ar);
  if (ar == 0) return out;
  Nat cur = n;
  for (std::size_t i = ar - 1; i > 0; --i) {
    auto [fst, snd] = cantor_unpair(cur);
    out[i] = std::move(snd);
    cur = std::move(fst);
  }
  out[0] = std::move(cur);
  return out;
}

// [] -> 0, [v] -> v, vs ++ [v] -> cantor_pair(encode_tuple(vs), v).
// Inverse of decode_k at every arity >= 1.
inline Nat encode_tuple(const std::vector<Nat>& values) {
  if (values.empty()) return 0;
  Nat acc = values[0];
  for (std::size_t i = 1; i < values.size(); ++i) acc = cantor_pair(acc, values[i]);
  return acc;
}

// A code bundled with the arity it should be read at.
struct TupleCode {
  Nat value;
  std::size_t arity = 0;

  std::vector<Nat> decode() const { return decode_k(arity, value); }
  bool operator==(const TupleCode&) const = default;
};

}  // namespace dio
