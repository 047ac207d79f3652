#pragma once

// Fuel-indexed programs with a closed constructor set. eval(input, fuel) is
// total and returns an optional natural: "no answer at this fuel" is an
// ordinary value, and divergence is only ever approximated by asking again
// with more fuel.
//
// s_d is the load-bearing combinator. It gates on a bounded root search for
// a polynomial d: when no root exists within the caller's fuel the program
// answers none, and when one does it defers to one of two embedded programs
// with input and fuel passed through unchanged. Giving the embedded program
// the full fuel (rather than fuel minus the search cost) is what makes the
// gated program agree with the embedded one exactly, from the least root
// code onward, with no totality assumption about the embedded programs.
//
// Nothing here caches or mutates: eval is stateless and deterministic, so
// two structurally equal programs are interchangeable under eval.

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>

#include "dio/ints.hpp"
#include "dio/poly.hpp"
#include "dio/search.hpp"

namespace dio {

namespace detail {
struct ProgramNode;
}  // namespace detail

class Program {
 public:
  using TableKey = std::pair<Nat, Nat>;  // (input, fuel)
  using Table = std::map<TableKey, std::optional<Nat>>;

  // none at every input and fuel.
  static Program diverge();

  // some 0 at every input and fuel.
  static Program halt();

  // some v at every input and fuel.
  static Program constant(Nat v);

  // Finite lookup with a fallback for unlisted keys. Free to be fuel-unstable
  // (an answer may appear and later vanish), which is exactly what makes it
  // useful for probing the stability check in terminates_check.
  static Program table(Table entries, std::optional<Nat> fallback);

  // Gate on find_sol(ar, d, fuel): none when the bounded search fails, else
  // defer to e1 (b true) or e0 (b false) at the same input and fuel.
  static Program s_d(Program e0, Program e1, std::size_t ar, Poly d, bool b);

  std::optional<Nat> eval(const Nat& input, const Nat& fuel) const;

  // Structural comparison, not semantic equivalence.
  friend bool operator==(const Program& a, const Program& b);

  std::string describe() const;

 private:
  explicit Program(std::shared_ptr<const detail::ProgramNode> n) : node_(std::move(n)) {}

  std::shared_ptr<const detail::ProgramNode> node_;
};

namespace detail {

struct DivergeNode {
  bool operator==(const DivergeNode&) const = default;
};
struct HaltNode {
  bool operator==(const HaltNode&) const = default;
};
struct ConstNode {
  Nat v;
  bool operator==(const ConstNode&) const = default;
};
struct TableNode {
  Program::Table entries;
  std::optional<Nat> fallback;
  bool operator==(const TableNode&) const = default;
};
struct GateNode {
  Program e0, e1;
  std::size_t ar;
  Poly d;
  bool b;
  bool operator==(const GateNode& o) const {
    return e0 == o.e0 && e1 == o.e1 && ar == o.ar && d == o.d && b == o.b;
  }
};

struct ProgramNode : std::variant<DivergeNode, HaltNode, ConstNode, TableNode, GateNode> {
  using variant::variant;
  bool operator==(const ProgramNode&) const = default;
};

}  // namespace detail

inline Program Program::diverge() {
  return Program(std::make_shared<const detail::ProgramNode>(detail::DivergeNode{}));
}

inline Program Program::halt() {
  return Program(std::make_shared<const detail::ProgramNode>(detail::HaltNode{}));
}

inline Program Program::constant(Nat v) {
  return Program(std::make_shared<const detail::ProgramNode>(detail::ConstNode{std::move(v)}));
}

inline Program Program::table(Table entries, std::optional<Nat> fallback) {
  return Program(std::make_shared<const detail::ProgramNode>(
      detail::TableNode{std::move(entries), std::move(fallback)}));
}

inline Program Program::s_d(Program e0, Program e1, std::size_t ar, Poly d, bool b) {
  return Program(std::make_shared<const detail::ProgramNode>(
      detail::GateNode{std::move(e0), std::move(e1), ar, std::move(d), b}));
}

inline std::optional<Nat> Program::eval(const Nat& input, const Nat& fuel) const {
  const detail::ProgramNode& n = *node_;
  if (std::holds_alternative<detail::DivergeNode>(n)) return std::nullopt;
  if (std::holds_alternative<detail::HaltNode>(n)) return Nat(0);
  if (const auto* c = std::get_if<detail::ConstNode>(&n)) return c->v;
  if (const auto* t = std::get_if<detail::TableNode>(&n)) {
    auto it = t->entries.find({input, fuel});
    return it != t->entries.end() ? it->second : t->fallback;
  }
  const auto& g = std::get<detail::GateNode>(n);
  if (!find_sol(g.ar, g.d, fuel)) return std::nullopt;
  return (g.b ? g.e1 : g.e0).eval(input, fuel);
}

inline bool operator==(const Program& a, const Program& b) {
  if (a.node_ == b.node_) return true;
  return *a.node_ == *b.node_;
}

inline std::string Program::describe() const {
  const detail::ProgramNode& n = *node_;
  if (std::holds_alternative<detail::DivergeNode>(n)) return "diverge";
  if (std::holds_alternative<detail::HaltNode>(n)) return "halt";
  if (const auto* c = std::get_if<detail::ConstNode>(&n)) return "const " + c->v.str();
  if (const auto* t = std::get_if<detail::TableNode>(&n))
    return "table(" + std::to_string(t->entries.size()) + " entries, fallback " +
           (t->fallback ? t->fallback->str() : std::string("none")) + ")";
  const auto& g = std::get<detail::GateNode>(n);
  return "s_d(ar=" + std::to_string(g.ar) + ", " + std::to_string(g.d.size()) +
         " monomials, b=" + (g.b ? "true" : "false") + ", e0=" + g.e0.describe() +
         ", e1=" + g.e1.describe() + ")";
}

// Exact agreement of two programs at one input, at every fuel in [lo, hi].
// The window must be nonempty.
inline bool obs_agree(const Program& p1, const Program& p2, const Nat& x, const Nat& lo,
                      const Nat& hi) {
  if (lo > hi) throw std::invalid_argument("obs_agree: empty fuel window");
  for (Nat f = lo; f <= hi; ++f)
    if (p1.eval(x, f) != p2.eval(x, f)) return false;
  return true;
}

// Record of a successful agreement check.
struct EquivalenceWitness {
  Nat input, lo, hi;
  bool operator==(const EquivalenceWitness&) const = default;
};

inline std::optional<EquivalenceWitness> agree_witness(const Program& p1, const Program& p2,
                                                       const Nat& x, const Nat& lo,
                                                       const Nat& hi) {
  if (obs_agree(p1, p2, x, lo, hi)) return EquivalenceWitness{x, lo, hi};
  return std::nullopt;
}

// Evidence that a program settles on input 0 within a fuel budget: the least
// fuel whose answer is present and persists through every fuel up to the
// bound. An answer that appears and later vanishes is instability, not
// termination, and is rejected.
struct Termination {
  Nat fuel;   // least stable fuel
  Nat value;  // the settled output
  bool operator==(const Termination&) const = default;
};

inline std::optional<Termination> terminates_check(const Program& p, const Nat& fuel_bound) {
  auto at_bound = p.eval(0, fuel_bound);
  if (!at_bound) return std::nullopt;
  // Walk the maximal constant run ending at the bound back to its start.
  Nat start = fuel_bound;
  while (start > 0) {
    Nat prev = start - 1;
    if (p.eval(0, prev) != at_bound) break;
    start = std::move(prev);
  }
  return Termination{std::move(start), std::move(*at_bound)};
}

using ProgramDecider = std::function<Int(const Program&)>;
using PolySeparator = std::function<Int(std::size_t, const Poly&)>;
using PolyPredicate = std::function<bool(std::size_t, const Poly&)>;

// Collapse an integer-valued separator to "is the answer exactly 1".
inline PolyPredicate z_to_bool_separator(PolySeparator f) {
  return [f = std::move(f)](std::size_t ar, const Poly& p) { return f(ar, p) == 1; };
}

// The two-witness probe: how differently does dec treat the two gated
// programs built from (ar, d)? A root of d makes the gates behave as e1 and
// e0 from the root code onward; if d has no root at all, both gates compute
// none everywhere and no dec whatsoever can tell them apart.
inline PolySeparator induced_separator(ProgramDecider dec, Program e0, Program e1) {
  return [dec = std::move(dec), e0 = std::move(e0), e1 = std::move(e1)](std::size_t ar,
                                                                        const Poly& d) {
    Int on_true = dec(Program::s_d(e0, e1, ar, d, true));
    Int on_false = dec(Program::s_d(e0, e1, ar, d, false));
    return on_true - on_false;
  };
}

}  // namespace dio
