// Command-line front end: regularity, Betti tables, Alexander duals,
// chordality certificates, and the property-suite harness.
//
// Exit codes: 0 success, 2 usage or parse failure, 3 verification failure.

#include <cctype>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cmreg/betti.hpp"
#include "cmreg/errors.hpp"
#include "cmreg/graph.hpp"
#include "cmreg/ideal.hpp"
#include "cmreg/json_io.hpp"
#include "cmreg/reduction.hpp"
#include "cmreg/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitInconsistent = 3;

struct CommonOptions {
  std::string field = "q";
  std::string format = "auto";
  std::string output = "table";
  bool verify = false;
  bool trace = false;
  int max_n = 6;
  std::uint64_t seed = 20240914;
  int separator_cap = 3;
};

std::string read_all(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open input file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string trimmed(const std::string& text) {
  std::size_t lo = 0, hi = text.size();
  while (lo < hi && std::isspace(static_cast<unsigned char>(text[lo]))) ++lo;
  while (hi > lo && std::isspace(static_cast<unsigned char>(text[hi - 1]))) --hi;
  return text.substr(lo, hi - lo);
}

bool looks_like_graph6(const std::string& line) {
  if (line.empty()) return false;
  for (char c : line)
    if (c < 63 || c > 126) return false;
  return true;
}

cmreg::Graph parse_graph_text(const std::string& text, const std::string& format) {
  std::string line = trimmed(text);
  if (format == "graph6") return cmreg::parse_graph6(line);
  if (format == "edgelist") return cmreg::parse_edge_list(text);
  return looks_like_graph6(line) ? cmreg::parse_graph6(line) : cmreg::parse_edge_list(text);
}

cmreg::Graph load_graph(const std::string& input, const CommonOptions& opts) {
  if (opts.format == "ideal")
    throw std::runtime_error("--format ideal applies to --ideal input, not a graph");
  return parse_graph_text(read_all(input), opts.format);
}

/** --ideal takes a path or inline text; a name of an existing file wins. */
cmreg::SquarefreeIdeal load_ideal(const std::string& spec) {
  std::error_code ec;
  if (spec != "-" && std::filesystem::exists(spec, ec))
    return cmreg::parse_ideal_text(read_all(spec));
  if (spec == "-") return cmreg::parse_ideal_text(read_all(spec));
  return cmreg::parse_ideal_text(spec);
}

cmreg::FieldSpec parse_field(const std::string& name) {
  if (name == "q" || name == "Q") return cmreg::FieldSpec::rationals();
  if (name.rfind("gf:", 0) == 0) {
    unsigned long p = std::stoul(name.substr(3));
    return cmreg::FieldSpec::prime(static_cast<std::uint32_t>(p));
  }
  throw std::runtime_error("--field expects q or gf:<p>, got: " + name);
}

std::string join_ints(const std::vector<int>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += " ";
    out += std::to_string(values[i]);
  }
  return out;
}

std::string describe_step(const cmreg::ReductionStep& step) {
  std::string out = cmreg::rule_name(step.rule);
  switch (step.rule) {
    case cmreg::ReductionRule::remove_simplicial:
    case cmreg::ReductionRule::base_complete_minus_simplicial:
      out += " v=" + std::to_string(step.v);
      break;
    case cmreg::ReductionRule::smooth:
      out += " w=" + std::to_string(step.w) + " (neighbors " + std::to_string(step.a) + "," +
             std::to_string(step.b) + ")";
      break;
    case cmreg::ReductionRule::split:
    case cmreg::ReductionRule::base_decomposable_both_complete:
      out += " P={" + join_ints(step.p_vertices) + "} Q={" + join_ints(step.q_vertices) +
             "} overlap=" + std::to_string(step.overlap);
      break;
    case cmreg::ReductionRule::base_cycle:
      out += " length=" + std::to_string(step.cycle_length);
      break;
    case cmreg::ReductionRule::fallback_oracle:
      break;
  }
  out += "  [" + step.before;
  if (!step.after.empty() && step.after != step.before) out += " -> " + step.after;
  if (!step.after_p.empty()) out += " -> " + step.after_p + " | " + step.after_q;
  out += "]";
  if (step.verified) out += *step.verified ? "  verified" : "  VERIFY-FAILED";
  return out;
}

int cmd_reg(const std::string& input, const CommonOptions& opts) {
  cmreg::Graph g = load_graph(input, opts);
  cmreg::FieldSpec field = parse_field(opts.field);
  cmreg::ReductionOptions ropts;
  ropts.field = field;
  ropts.verify = opts.verify;
  ropts.separator_cap = opts.separator_cap;
  cmreg::ReductionOutcome outcome = cmreg::regularity_via_reduction(g, ropts);

  if (opts.output == "json") {
    nlohmann::json payload = nlohmann::json::parse(cmreg::trace_to_json(outcome.trace));
    if (opts.verify) {
      payload["consistent"] = outcome.consistent;
      if (outcome.reg)
        payload["oracle_reg"] =
            cmreg::regularity(cmreg::edge_ideal(cmreg::complement(g)), field);
    }
    if (!opts.trace) payload.erase("steps");
    std::cout << payload.dump() << "\n";
  } else {
    if (outcome.reg)
      std::cout << "reg = " << *outcome.reg << "\n";
    else
      std::cout << "reg = null (complete graph: zero ideal)\n";
    if (opts.trace) {
      for (std::size_t i = 0; i < outcome.trace.steps.size(); ++i)
        std::cout << "step " << (i + 1) << ": " << describe_step(outcome.trace.steps[i]) << "\n";
      for (const auto& flag : outcome.trace.flags) std::cout << "flag: " << flag << "\n";
    }
    if (opts.verify)
      std::cout << "oracle agreement: " << (outcome.consistent ? "ok" : "MISMATCH") << "\n";
  }
  return outcome.consistent ? kExitOk : kExitInconsistent;
}

int cmd_betti(const std::string& input, const std::string& ideal_spec,
              const CommonOptions& opts) {
  cmreg::FieldSpec field = parse_field(opts.field);
  cmreg::SquarefreeIdeal ideal = cmreg::SquarefreeIdeal::zero(1);
  if (!ideal_spec.empty())
    ideal = load_ideal(ideal_spec);
  else if (opts.format == "ideal")
    ideal = cmreg::parse_ideal_text(read_all(input));
  else
    ideal = cmreg::edge_ideal(cmreg::complement(load_graph(input, opts)));

  cmreg::BettiTable table = cmreg::betti_table(ideal, field);
  cmreg::InvariantReport report = cmreg::invariant_report(ideal, field);
  if (opts.output == "json") {
    std::cout << cmreg::betti_to_json(table, report) << "\n";
    return kExitOk;
  }
  std::cout << "ambient n = " << table.ambient_n << ", field = " << field.name() << "\n";
  for (const auto& [key, value] : table.entries)
    std::cout << "beta(" << key.first << "," << key.second << ") = " << value << "\n";
  std::cout << "reg = " << report.reg << "\npd = " << report.pd_ideal
            << "\ndepth S/I = " << report.depth_quotient
            << "\ndim S/I = " << report.dim_quotient << "\nCohen-Macaulay = "
            << (report.is_cohen_macaulay ? "yes" : "no") << "\nlinear resolution = ";
  switch (report.linear) {
    case cmreg::LinearStatus::linear: std::cout << "yes"; break;
    case cmreg::LinearStatus::not_linear: std::cout << "no"; break;
    case cmreg::LinearStatus::mixed_degrees: std::cout << "mixed degrees"; break;
  }
  std::cout << "\n";
  return kExitOk;
}

int cmd_dual(const std::string& ideal_spec, const CommonOptions& opts) {
  cmreg::SquarefreeIdeal dual = cmreg::alexander_dual(load_ideal(ideal_spec));
  if (opts.output == "json") {
    std::cout << cmreg::ideal_to_json(dual) << "\n";
    return kExitOk;
  }
  std::cout << "ambient n = " << dual.ambient_n() << "\n";
  for (const auto& support : dual.generators()) std::cout << join_ints(support) << "\n";
  return kExitOk;
}

int cmd_chordal(const std::string& input, const CommonOptions& opts) {
  cmreg::Graph g = load_graph(input, opts);
  cmreg::ChordalityCertificate cert = cmreg::is_chordal(g);
  if (opts.output == "json") {
    nlohmann::json payload;
    payload["chordal"] = cert.chordal;
    if (cert.chordal)
      payload["elimination_order"] = cert.elimination_order;
    else
      payload["chordless_cycle"] = cert.chordless_cycle;
    std::cout << payload.dump() << "\n";
    return kExitOk;
  }
  if (cert.chordal) {
    std::cout << "chordal: yes\nelimination order: " << join_ints(cert.elimination_order)
              << "\n";
  } else {
    std::cout << "chordal: no\nchordless cycle: " << join_ints(cert.chordless_cycle) << "\n";
  }
  return kExitOk;
}

/** Check one graph the way the named suite would. */
bool stream_check(const std::string& suite, const cmreg::Graph& g,
                  const cmreg::SuiteOptions& sopts) {
  if (suite == "froberg") {
    if (cmreg::is_complete(g)) return true;
    if (!cmreg::froberg_classify(g, sopts.field).consistent) return false;
    if (sopts.field.is_rationals() &&
        !cmreg::froberg_classify(g, cmreg::FieldSpec::prime(2)).consistent)
      return false;
    return true;
  }
  // reductions
  if (cmreg::is_complete(g)) return true;
  cmreg::ReductionOptions ropts;
  ropts.field = sopts.field;
  ropts.verify = true;
  ropts.separator_cap = sopts.separator_cap;
  cmreg::ReductionOutcome outcome = cmreg::regularity_via_reduction(g, ropts);
  if (!outcome.consistent || !outcome.reg) return false;
  for (const auto& step : outcome.trace.steps) {
    if (!step.verified.value_or(false)) return false;
    if (!cmreg::revalidate_step(step, sopts.separator_cap)) return false;
  }
  return true;
}

int cmd_verify(const std::string& suite, const std::string& graphs_file,
               const CommonOptions& opts) {
  cmreg::SuiteOptions sopts;
  sopts.field = parse_field(opts.field);
  sopts.max_n = opts.max_n;
  sopts.seed = opts.seed;
  sopts.separator_cap = opts.separator_cap;

  cmreg::SuiteReport report;
  if (!graphs_file.empty()) {
    if (suite != "froberg" && suite != "reductions")
      throw std::runtime_error("--graphs applies to the froberg and reductions suites only");
    report.suite = suite + " (stream)";
    std::istringstream lines(read_all(graphs_file));
    std::string line;
    while (std::getline(lines, line)) {
      line = trimmed(line);
      if (line.empty()) continue;
      cmreg::Graph g = cmreg::parse_graph6(line);
      ++report.checked;
      if (!stream_check(suite, g, sopts)) {
        ++report.failed;
        if (report.first_counterexample.empty()) report.first_counterexample = line;
      }
    }
  } else {
    report = cmreg::run_suite(suite, sopts);
  }

  if (opts.output == "json") {
    nlohmann::json payload;
    payload["suite"] = report.suite;
    payload["checked"] = report.checked;
    payload["failed"] = report.failed;
    payload["passed"] = report.passed();
    payload["first_counterexample"] = report.first_counterexample;
    payload["notes"] = report.notes;
    std::cout << payload.dump() << "\n";
  } else {
    std::cout << "suite: " << report.suite << "\nchecked: " << report.checked
              << "\nfailed: " << report.failed << "\n";
    for (const auto& note : report.notes) std::cout << "  " << note << "\n";
    if (!report.first_counterexample.empty())
      std::cout << "first counterexample: " << report.first_counterexample << "\n";
    std::cout << (report.passed() ? "PASS" : "FAIL") << "\n";
  }
  return report.passed() ? kExitOk : kExitInconsistent;
}

void add_common_flags(CLI::App* cmd, CommonOptions& opts, bool with_verify_knobs) {
  cmd->add_option("--field", opts.field, "Coefficient field: q or gf:<p>");
  cmd->add_option("--format", opts.format, "Input format: graph6, edgelist, or ideal")
      ->check(CLI::IsMember({"auto", "graph6", "edgelist", "ideal"}));
  cmd->add_option("--output", opts.output, "Output style")
      ->check(CLI::IsMember({"table", "json"}));
  if (with_verify_knobs) {
    cmd->add_option("--max-n", opts.max_n, "Exhaustive enumeration bound")
        ->check(CLI::Range(1, 10));
    cmd->add_option("--seed", opts.seed, "Randomized-suite seed");
  }
  cmd->add_option("--separator-cap", opts.separator_cap,
                  "Largest clique separator size tried by the split rule");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Regularity of complement edge ideals via certified graph reductions"};
  app.require_subcommand(1);

  CommonOptions reg_opts, betti_opts, dual_opts, chordal_opts, verify_opts;
  std::string reg_input, betti_input, chordal_input;
  std::string betti_ideal, dual_ideal;
  std::string verify_suite, verify_graphs;

  CLI::App* reg = app.add_subcommand("reg", "Regularity of I(complement G) via reductions");
  reg->add_option("input", reg_input, "Graph file, or - for stdin")->required();
  add_common_flags(reg, reg_opts, false);
  reg->add_flag("--verify", reg_opts.verify, "Cross-check every step against the oracle");
  reg->add_flag("--trace", reg_opts.trace, "Print the reduction steps");

  CLI::App* betti = app.add_subcommand("betti", "Graded Betti table and derived invariants");
  betti->add_option("input", betti_input, "Graph file, or - for stdin");
  betti->add_option("--ideal", betti_ideal, "Ideal input: path or inline text");
  add_common_flags(betti, betti_opts, false);

  CLI::App* dual = app.add_subcommand("dual", "Alexander dual of a squarefree ideal");
  dual->add_option("--ideal", dual_ideal, "Ideal input: path or inline text")->required();
  add_common_flags(dual, dual_opts, false);

  CLI::App* chordal = app.add_subcommand("chordal", "Chordality verdict with certificate");
  chordal->add_option("input", chordal_input, "Graph file, or - for stdin")->required();
  add_common_flags(chordal, chordal_opts, false);

  CLI::App* verify = app.add_subcommand("verify", "Run a property suite");
  verify
      ->add_option("suite", verify_suite,
                   "froberg|cycles|reductions|gluing|terai|eagon-reiner|monotonicity|lemmas")
      ->required();
  verify->add_option("--graphs", verify_graphs,
                     "Check a graph6 stream (one per line) instead of the built-in source");
  add_common_flags(verify, verify_opts, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (reg->parsed()) return cmd_reg(reg_input, reg_opts);
    if (betti->parsed()) {
      if (betti_input.empty() == betti_ideal.empty())
        throw std::runtime_error("betti needs exactly one of: input path, --ideal");
      return cmd_betti(betti_input, betti_ideal, betti_opts);
    }
    if (dual->parsed()) return cmd_dual(dual_ideal, dual_opts);
    if (chordal->parsed()) return cmd_chordal(chordal_input, chordal_opts);
    if (verify->parsed()) return cmd_verify(verify_suite, verify_graphs, verify_opts);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
