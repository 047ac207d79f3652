// Command-line front end. Subcommands cover polynomial evaluation, bounded
// root search, the tuple codec, the constraint reduction and its bridge back
// to signed polynomials, and the three demos. Exit codes: 0 on success or a
// found verdict, 2 on an exhausted or stalled verdict, 1 on any error.
// All numeric input and output is decimal.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dio/cantor.hpp"
#include "dio/cubes.hpp"
#include "dio/demos.hpp"
#include "dio/h10c_io.hpp"
#include "dio/ints.hpp"
#include "dio/poly_io.hpp"
#include "dio/program.hpp"
#include "dio/search.hpp"

namespace {

using namespace dio;

std::string format_tuple(const std::vector<Nat>& vs) {
  std::string out = "[";
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i > 0) out += ",";
    out += vs[i].str();
  }
  return out + "]";
}

std::vector<Nat> parse_nat_list(const std::vector<std::string>& toks) {
  std::vector<Nat> out;
  out.reserve(toks.size());
  for (const auto& t : toks) out.push_back(parse_nat(t));
  return out;
}

void warn_arity(const Poly& p, std::size_t nvars) {
  for (const auto& issue : validate_poly_arity(p, nvars))
    std::cerr << "warning: " << issue << "\n";
}

int cmd_eval(const std::string& poly_path, const std::vector<std::string>& var_toks) {
  Poly p = load_poly_file(poly_path);
  auto vars = parse_nat_list(var_toks);
  warn_arity(p, vars.size());
  std::cout << eval_poly(p, vars).str() << "\n";
  return 0;
}

int cmd_solve(const std::string& poly_path, std::size_t arity, const std::string& fuel_tok) {
  Poly p = load_poly_file(poly_path);
  Nat fuel = parse_nat(fuel_tok);
  warn_arity(p, arity);
  if (auto n = find_sol(arity, p, fuel)) {
    std::cout << "found " << n->str() << " decoded=" << format_tuple(decode_k(arity, *n)) << "\n";
    return 0;
  }
  std::cout << "exhausted " << fuel.str() << "\n";
  return 2;
}

int cmd_codec_encode(const std::vector<std::string>& value_toks) {
  std::cout << encode_tuple(parse_nat_list(value_toks)).str() << "\n";
  return 0;
}

int cmd_codec_decode(std::size_t arity, const std::string& code_tok) {
  TupleCode code{parse_nat(code_tok), arity};
  std::cout << format_tuple(code.decode()) << "\n";
  return 0;
}

int cmd_encode(const std::string& constraints_path) {
  auto cs = load_constraints_file(constraints_path);
  std::cout << serialize_inst(reduce(cs)) << "\n";
  return 0;
}

int cmd_bridge(const std::string& inst_path) {
  auto inst = load_inst_file(inst_path);
  std::cout << serialize_poly(h10c_to_poly(inst)) << "\n";
  return 0;
}

int cmd_rice_demo(const std::string& poly_path, std::size_t arity, const std::string& probe_tok,
                  const std::string& classify_tok) {
  Poly d = load_poly_file(poly_path);
  warn_arity(d, arity);
  std::optional<Nat> classify;
  if (!classify_tok.empty()) classify = parse_nat(classify_tok);
  auto r = demo_rice(arity, d, parse_nat(probe_tok), classify);
  std::cout << "a_D=" << r.a.str() << "\n";
  std::cout << "b_D=" << r.b.str() << "\n";
  std::cout << "delta_D=" << r.delta.str() << "\n";
  std::cout << "probe_fuel=" << r.probe_fuel.str() << "\n";
  switch (r.cls) {
    case RiceClass::solvable_within_probe:
      std::cout << "classification: root at code " << r.classify.value.str()
                << " within probe fuel; the gates split, expected delta 1\n";
      break;
    case RiceClass::solvable_beyond_probe:
      std::cout << "classification: root at code " << r.classify.value.str()
                << " beyond probe fuel " << r.probe_fuel.str()
                << "; the probe cannot see it, expected delta 0\n";
      std::cout << "flag: probe budget too small; no finite probe fuel decides every instance\n";
      break;
    case RiceClass::no_root_found:
      std::cout << "classification: no root up to classify fuel " << r.classify_fuel.str()
                << "; consistent with an unsolvable instance, expected delta 0\n";
      break;
  }
  if (r.delta != r.expected_delta)
    std::cout << "warning: delta diverges from the classification's expectation\n";
  return 0;
}

int cmd_demo_decidable(const std::string& budget_tok) {
  auto r = demo_decidable(parse_nat(budget_tok));
  if (r.outcome.kind == SearchOutcome::Kind::found) {
    std::cout << "found " << r.outcome.value.str() << " decoded=" << format_tuple(r.decoded)
              << " tuples_checked=" << r.tuples_checked.str() << "\n";
    return 0;
  }
  std::cout << "exhausted " << r.outcome.value.str()
            << " tuples_checked=" << r.tuples_checked.str() << "\n";
  return 2;
}

int cmd_demo_cubes(const std::string& max_k_tok, const std::string& budget_tok,
                   const std::string& state_path, bool resume, std::uint64_t progress_every,
                   double time_limit) {
  Nat max_k = parse_nat(max_k_tok);
  Nat budget = parse_nat(budget_tok);
  CubesState st;
  if (resume) {
    st = load_cubes_state(state_path);
    std::cerr << "resumed at k=" << st.k.str() << " code=" << st.next_code.str() << " with "
              << st.found.size() << " solutions\n";
  }
  auto started = std::chrono::steady_clock::now();
  std::size_t reported = st.found.size();  // on resume, report only new hits
  Nat total_checked = 0;
  Nat next_progress = progress_every;
  const Nat chunk = 65536;
  for (;;) {
    auto rep = cubes_run(st, max_k, budget, chunk);
    total_checked += rep.codes_checked;
    for (; reported < st.found.size(); ++reported) {
      const auto& h = st.found[reported];
      std::cout << "k=" << h.k.str() << " x=" << h.x.str() << " y=" << h.y.str()
                << " z=" << h.z.str() << " code=" << h.code.str() << "\n";
    }
    if (!state_path.empty()) save_cubes_state(state_path, st);
    if (progress_every > 0 && total_checked >= next_progress) {
      std::cerr << "progress k=" << st.k.str() << " code=" << st.next_code.str()
                << " checked=" << total_checked.str() << "\n";
      while (next_progress <= total_checked) next_progress += progress_every;
    }
    if (rep.status == CubesStatus::completed) {
      std::cout << "frontier complete max_k=" << max_k.str() << " checked=" << total_checked.str()
                << "\n";
      return 0;
    }
    if (rep.status == CubesStatus::stalled) {
      std::cout << "stalled k=" << st.k.str() << " budget=" << budget.str()
                << " checked=" << total_checked.str() << "\n";
      return 2;
    }
    if (time_limit > 0) {
      std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - started;
      if (elapsed.count() >= time_limit) {
        std::cout << "paused k=" << st.k.str() << " code=" << st.next_code.str()
                  << " checked=" << total_checked.str() << "\n";
        return 0;
      }
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Workbench for bounded Diophantine search, fuel-indexed programs,"
               " and constraint reductions"};
  app.require_subcommand(1);
  int rc = 0;

  std::string poly_path, fuel_tok, budget_tok, probe_tok, classify_tok, max_k_tok, state_path;
  std::string code_tok;
  std::size_t arity = 0;
  std::vector<std::string> var_toks, value_toks;
  bool resume = false;
  std::uint64_t progress_every = 0;
  double time_limit = 0.0;

  auto* eval = app.add_subcommand("eval", "Evaluate a polynomial at natural arguments");
  eval->add_option("--poly", poly_path, "Polynomial file")->required();
  eval->add_option("vars", var_toks, "Variable values, leftmost first");
  eval->callback([&] { rc = cmd_eval(poly_path, var_toks); });

  auto* solve = app.add_subcommand("solve", "Search tuple codes for a root, up to a fuel bound");
  solve->add_option("--poly", poly_path, "Polynomial file")->required();
  solve->add_option("--arity", arity, "Number of variables")->required();
  solve->add_option("--fuel", fuel_tok, "Largest code to try")->required();
  solve->callback([&] { rc = cmd_solve(poly_path, arity, fuel_tok); });

  auto* codec = app.add_subcommand("codec", "Tuple codec utilities");
  codec->require_subcommand(1);
  auto* cenc = codec->add_subcommand("encode", "Code of a tuple");
  cenc->add_option("values", value_toks, "Tuple entries, leftmost first");
  cenc->callback([&] { rc = cmd_codec_encode(value_toks); });
  auto* cdec = codec->add_subcommand("decode", "Tuple of a code at a given arity");
  cdec->add_option("--arity", arity, "Tuple length")->required();
  cdec->add_option("code", code_tok, "Code to decode")->required();
  cdec->callback([&] { rc = cmd_codec_decode(arity, code_tok); });

  auto* enc = app.add_subcommand("encode", "Reduce a constraint file to one instance");
  enc->add_option("--constraints", poly_path, "Constraint file, one per line")->required();
  enc->callback([&] { rc = cmd_encode(poly_path); });

  auto* bridge = app.add_subcommand("bridge", "Lift an instance to a signed polynomial");
  bridge->add_option("--inst", poly_path, "Instance file")->required();
  bridge->callback([&] { rc = cmd_bridge(poly_path); });

  auto* rice = app.add_subcommand("rice-demo",
                                  "Probe the two gated programs of a polynomial with a bounded"
                                  " termination check");
  rice->add_option("--poly", poly_path, "Polynomial file")->required();
  rice->add_option("--arity", arity, "Number of variables")->required();
  rice->add_option("--probe-fuel", probe_tok, "Fuel budget of the termination probe")->required();
  rice->add_option("--classify-fuel", classify_tok,
                   "Larger search bound used only to label the instance");
  rice->callback([&] { rc = cmd_rice_demo(poly_path, arity, probe_tok, classify_tok); });

  auto* dd = app.add_subcommand("demo-decidable",
                                "Bounded search on x^2 - y^2 - z^2 - 1 over three naturals");
  dd->add_option("--budget", budget_tok, "Largest code to try")->required();
  dd->callback([&] { rc = cmd_demo_decidable(budget_tok); });

  auto* dc = app.add_subcommand("demo-cubes", "Frontier search for sums of three cubes");
  dc->add_option("--max-k", max_k_tok, "Highest target value")->required();
  dc->add_option("--budget", budget_tok, "Candidate codes per target")->required();
  auto* state_opt = dc->add_option("--state", state_path, "Checkpoint file, written after each chunk");
  dc->add_flag("--resume", resume, "Continue from the checkpoint file")->needs(state_opt);
  dc->add_option("--progress-every", progress_every,
                 "Report progress to stderr every N candidates (0 = off)");
  dc->add_option("--time-limit", time_limit,
                 "Pause after this many seconds, saving the checkpoint (0 = off)");
  dc->callback([&] {
    rc = cmd_demo_cubes(max_k_tok, budget_tok, state_path, resume, progress_every, time_limit);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return rc;
}
