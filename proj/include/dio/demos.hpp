#pragma once

// Two self-contained demonstrations. The decidable one solves a Diophantine
// family by honest bounded search. The separator one shows what any
// termination decider would be forced to do on gated programs: split them
// whenever a root lies within its sight, agree on them whenever it does not,
// and miss roots planted past its fuel, which is why no fixed budget can
// decide every instance.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "dio/cantor.hpp"
#include "dio/ints.hpp"
#include "dio/poly.hpp"
#include "dio/program.hpp"
#include "dio/search.hpp"

namespace dio {

// x^2 - y^2 - z^2 - 1 over three natural variables. Root: (1, 0, 0).
inline Poly decidable_demo_poly() {
  return {{1, {2, 0, 0}}, {-1, {0, 2, 0}}, {-1, {0, 0, 2}}, {-1, {0, 0, 0}}};
}

struct DecidableReport {
  SearchOutcome outcome;
  std::vector<Nat> decoded;  // empty when exhausted
  Nat tuples_checked;
};

inline DecidableReport demo_decidable(const Nat& budget) {
  auto out = bounded_solvable(3, decidable_demo_poly(), budget);
  if (out.kind == SearchOutcome::Kind::found) {
    Nat checked = out.value + 1;
    return {out, decode_k(3, out.value), std::move(checked)};
  }
  return {out, {}, budget + 1};
}

enum class RiceClass {
  solvable_within_probe,  // least root code <= probe fuel: the gates split, delta is 1
  solvable_beyond_probe,  // a root exists but past the probe fuel: the probe cannot see it
  no_root_found,          // no root up to classify_fuel; consistent with an unsolvable instance
};

struct RiceReport {
  Int a, b, delta;  // probe on the true gate, on the false gate, difference
  Nat probe_fuel;
  Nat classify_fuel;
  SearchOutcome classify;
  RiceClass cls;
  Int expected_delta;
  bool budget_flag;  // the probe missed a root that exists
};

// Gate the witness pair (diverge, halt) on d and ask a bounded termination
// probe to tell the two gates apart. classify_fuel only informs the report's
// commentary via a separate, larger search; the probe itself never looks
// past probe_fuel, which is the point of the exercise.
inline RiceReport demo_rice(std::size_t ar, const Poly& d, const Nat& probe_fuel,
                            std::optional<Nat> classify_fuel_opt = std::nullopt) {
  Nat classify_fuel =
      classify_fuel_opt ? std::move(*classify_fuel_opt) : std::max(Nat(probe_fuel * 10), Nat(10000));
  ProgramDecider probe = [probe_fuel](const Program& p) -> Int {
    return terminates_check(p, probe_fuel) ? 1 : 0;
  };
  Program e0 = Program::diverge();
  Program e1 = Program::halt();
  Int a = probe(Program::s_d(e0, e1, ar, d, true));
  Int b = probe(Program::s_d(e0, e1, ar, d, false));
  Int delta = induced_separator(probe, e0, e1)(ar, d);
  auto classify = bounded_solvable(ar, d, classify_fuel);
  RiceClass cls;
  Int expected;
  if (classify.kind == SearchOutcome::Kind::found) {
    if (classify.value <= probe_fuel) {
      cls = RiceClass::solvable_within_probe;
      expected = 1;
    } else {
      cls = RiceClass::solvable_beyond_probe;
      expected = 0;
    }
  } else {
    cls = RiceClass::no_root_found;
    expected = 0;
  }
  return {std::move(a),           std::move(b),  std::move(delta),
          probe_fuel,             classify_fuel, std::move(classify),
          cls,                    expected,      cls == RiceClass::solvable_beyond_probe};
}

}  // namespace dio
