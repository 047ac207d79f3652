#pragma once

// Text formats for the constraint language and its instances.
//
// Constraints: one per line, mirroring the constructors verbatim, chosen to
// keep corpora diff-friendly. Blank lines and lines starting with '#' are
// ignored.
//
//   one 0
//   plus 0 1 2
//   mult 1 1 3
//
// Instances: JSON {"ar": k, "pos": [[c, [e...]], ...], "neg": [...]} with
// coefficients as decimal strings (bare nonnegative JSON integers accepted).

#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "dio/fileio.hpp"
#include "dio/h10c.hpp"
#include "dio/poly_io.hpp"

namespace dio {

inline std::vector<H10cConstraint> parse_constraints(const std::string& text) {
  std::vector<H10cConstraint> out;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  auto fail = [&](const std::string& why) {
    throw std::runtime_error("constraints, line " + std::to_string(lineno) + ": " + why);
  };
  auto index = [&](const std::string& tok) -> std::size_t {
    try {
      return nat_to_size(parse_nat(tok));
    } catch (const std::exception&) {
      fail("bad variable index '" + tok + "'");
      return 0;  // unreachable
    }
  };
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string op;
    if (!(ls >> op)) continue;  // blank or comment-only line
    std::vector<std::string> args;
    std::string tok;
    while (ls >> tok) args.push_back(tok);
    if (op == "one") {
      if (args.size() != 1) fail("'one' takes one index");
      out.push_back(H10cOne{index(args[0])});
    } else if (op == "plus") {
      if (args.size() != 3) fail("'plus' takes three indices");
      out.push_back(H10cPlus{index(args[0]), index(args[1]), index(args[2])});
    } else if (op == "mult") {
      if (args.size() != 3) fail("'mult' takes three indices");
      out.push_back(H10cMult{index(args[0]), index(args[1]), index(args[2])});
    } else {
      fail("unknown constraint '" + op + "'");
    }
  }
  return out;
}

inline std::vector<H10cConstraint> load_constraints_file(const std::string& path) {
  try {
    return parse_constraints(read_text_file(path));
  } catch (const std::exception& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

inline H10cInst parse_inst(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded()) throw std::runtime_error("instance: not valid JSON");
  if (!j.is_object() || !j.contains("ar") || !j.contains("pos") || !j.contains("neg"))
    throw std::runtime_error("instance: expected an object with ar, pos, neg");
  if (!j["ar"].is_number_unsigned()) throw std::runtime_error("instance: ar must be a natural");
  H10cInst inst;
  inst.ar = j["ar"].get<std::size_t>();
  inst.pos = detail::mono_list_from_json<NatMonomial>(j["pos"], "instance pos", true);
  inst.neg = detail::mono_list_from_json<NatMonomial>(j["neg"], "instance neg", true);
  return inst;
}

inline std::string serialize_inst(const H10cInst& inst) {
  nlohmann::json j;
  j["ar"] = inst.ar;
  j["pos"] = detail::mono_list_to_json(inst.pos);
  j["neg"] = detail::mono_list_to_json(inst.neg);
  return j.dump();
}

inline H10cInst load_inst_file(const std::string& path) {
  try {
    return parse_inst(read_text_file(path));
  } catch (const std::exception& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

}  // namespace dio
