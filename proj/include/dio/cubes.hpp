#pragma once

// Frontier search for sums of three cubes: for each target k in turn, scan
// candidate triples until x^3 + y^3 + z^3 = k, then move to the next target.
// The candidate order is canonical and normative for checkpoints: code n
// decodes through the tuple codec to three naturals, which map componentwise
// through the zigzag 0, -1, 1, -2, 2, ... to a signed triple. Targets
// congruent to 4 or 5 mod 9 have no solutions (cubes are 0 or +-1 mod 9) and
// are skipped without consuming budget. Counters are unbounded, and a run
// can be paused, checkpointed and resumed bit for bit.

#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "dio/cantor.hpp"
#include "dio/fileio.hpp"
#include "dio/ints.hpp"

namespace dio {

// 0, -1, 1, -2, 2, ...
inline Int zigzag(const Nat& n) {
  if (n % 2 == 0) return Int(n / 2);
  return -Int((n + 1) / 2);
}

inline Nat zigzag_inv(const Int& v) {
  if (v >= 0) return Nat(2 * v);
  return Nat(-2 * v - 1);
}

inline bool cubes_skipped(const Nat& k) {
  Nat r = k % 9;
  return r == 4 || r == 5;
}

// A solved target: the first triple met in canonical order, with its code.
struct CubeHit {
  Nat k;
  Int x, y, z;
  Nat code;

  bool operator==(const CubeHit&) const = default;
};

// Complete progress of a frontier run: the target currently being searched,
// the next candidate code for it, and every hit so far.
struct CubesState {
  Nat k = 0;
  Nat next_code = 0;
  std::vector<CubeHit> found;

  bool operator==(const CubesState&) const = default;
};

enum class CubesStatus {
  completed,  // every target up to max_k is solved or skipped
  stalled,    // the per-target budget ran out on state.k
  paused,     // step limit reached; resuming continues from the same state
};

struct CubesReport {
  CubesStatus status;
  Nat codes_checked;  // candidates evaluated during this call
};

// Advance the search in place. Each step checks one candidate code
// (0 <= code < per_k_budget for the current target); a hit is appended to
// state.found and the frontier moves on. Deterministic in the state alone:
// running with step limits a then b leaves exactly the state of one run
// with limit a+b.
inline CubesReport cubes_run(CubesState& state, const Nat& max_k, const Nat& per_k_budget,
                             const std::optional<Nat>& step_limit = std::nullopt) {
  Nat checked = 0;
  while (state.k <= max_k) {
    if (cubes_skipped(state.k)) {
      ++state.k;
      state.next_code = 0;
      continue;
    }
    if (state.next_code >= per_k_budget) return {CubesStatus::stalled, std::move(checked)};
    if (step_limit && checked >= *step_limit) return {CubesStatus::paused, std::move(checked)};
    auto t = decode_k(3, state.next_code);
    Int x = zigzag(t[0]), y = zigzag(t[1]), z = zigzag(t[2]);
    if (x * x * x + y * y * y + z * z * z == Int(state.k)) {
      state.found.push_back({state.k, std::move(x), std::move(y), std::move(z), state.next_code});
      ++state.k;
      state.next_code = 0;
    } else {
      ++state.next_code;
    }
    ++checked;
  }
  return {CubesStatus::completed, std::move(checked)};
}

inline constexpr const char* kCubesStateMagic = "dio-cubes-state v1";

// Line-oriented checkpoint: a versioned magic line, then k, the next
// candidate code, and one line per hit. The candidate order documented above
// is part of the format; a state written by one run means the same thing to
// any other.
inline std::string serialize_cubes_state(const CubesState& st) {
  std::ostringstream out;
  out << kCubesStateMagic << "\n";
  out << "# order: code n -> decode_k(3, n) -> componentwise zigzag 0,-1,1,-2,2,...\n";
  out << "k " << st.k.str() << "\n";
  out << "n " << st.next_code.str() << "\n";
  for (const auto& h : st.found)
    out << "sol " << h.k.str() << " " << h.x.str() << " " << h.y.str() << " " << h.z.str() << " "
        << h.code.str() << "\n";
  return out.str();
}

inline CubesState parse_cubes_state(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != kCubesStateMagic)
    throw std::runtime_error("state file: missing or incompatible version line");
  CubesState st;
  bool saw_k = false, saw_n = false;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    auto fail = [&](const std::string& why) {
      throw std::runtime_error("state file, line " + std::to_string(lineno) + ": " + why);
    };
    if (tag == "k") {
      std::string v;
      if (!(ls >> v)) fail("missing value");
      st.k = parse_nat(v);
      saw_k = true;
    } else if (tag == "n") {
      std::string v;
      if (!(ls >> v)) fail("missing value");
      st.next_code = parse_nat(v);
      saw_n = true;
    } else if (tag == "sol") {
      std::string k, x, y, z, code, extra;
      if (!(ls >> k >> x >> y >> z >> code) || (ls >> extra)) fail("'sol' takes five fields");
      st.found.push_back(
          {parse_nat(k), parse_int(x), parse_int(y), parse_int(z), parse_nat(code)});
    } else {
      fail("unknown directive '" + tag + "'");
    }
  }
  if (!saw_k || !saw_n) throw std::runtime_error("state file: missing k or n line");
  return st;
}

inline void save_cubes_state(const std::string& path, const CubesState& st) {
  write_file_durable(path, serialize_cubes_state(st));
}

inline CubesState load_cubes_state(const std::string& path) {
  try {
    return parse_cubes_state(read_text_file(path));
  } catch (const std::exception& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

}  // namespace dio
