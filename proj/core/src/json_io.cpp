#include "cmreg/json_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include <json.hpp>

#include "cmreg/errors.hpp"

namespace cmreg {

using nlohmann::json;

namespace {

json ideal_json(const SquarefreeIdeal& ideal) {
  json gens = json::array();
  for (const auto& g : ideal.generators()) gens.push_back(g);
  return json{{"n", ideal.ambient_n()}, {"gens", gens}};
}

}  // namespace

std::string ideal_to_json(const SquarefreeIdeal& ideal) { return ideal_json(ideal).dump(); }

std::string betti_to_json(const BettiTable& table, const InvariantReport& report) {
  json entries = json::array();
  for (const auto& [key, value] : table.entries) {
    if (value == 0) continue;
    entries.push_back(json{{"i", key.first}, {"j", key.second}, {"beta", value}});
  }
  json out{
      {"n", table.ambient_n},
      {"field", table.field.name()},
      {"entries", entries},
      {"reg", report.reg},
      {"pd", report.pd_ideal},
      {"depth", report.depth_quotient},
      {"dim", report.dim_quotient},
      {"linear", report.linear == LinearStatus::linear},
  };
  return out.dump();
}

std::string trace_to_json(const ReductionTrace& trace) {
  json steps = json::array();
  for (const auto& s : trace.steps) {
    json step{{"rule", rule_name(s.rule)}, {"before", s.before}};
    switch (s.rule) {
      case ReductionRule::split:
      case ReductionRule::base_decomposable_both_complete:
        step["after"] = json{{"P", s.after_p}, {"Q", s.after_q}};
        step["P_vertices"] = s.p_vertices;
        step["Q_vertices"] = s.q_vertices;
        step["overlap"] = s.overlap;
        if (s.rule == ReductionRule::split) {
          step["case"] = s.split_case == SplitCase::neither_complete ? "neither-complete"
                         : s.split_case == SplitCase::left_complete  ? "left-complete"
                                                                     : "right-complete";
        }
        break;
      case ReductionRule::remove_simplicial:
        step["after"] = s.after;
        step["v"] = s.v;
        break;
      case ReductionRule::smooth:
        step["after"] = s.after;
        step["w"] = s.w;
        step["a"] = s.a;
        step["b"] = s.b;
        break;
      case ReductionRule::base_complete_minus_simplicial:
        step["after"] = s.before;
        step["v"] = s.v;
        break;
      case ReductionRule::base_cycle:
        step["after"] = s.before;
        step["n"] = s.cycle_length;
        break;
      case ReductionRule::fallback_oracle:
        step["after"] = s.before;
        break;
    }
    step["verified"] = s.verified ? json(*s.verified) : json(nullptr);
    steps.push_back(std::move(step));
  }
  json out{
      {"input", trace.input},
      {"steps", steps},
      {"reg", trace.reg ? json(*trace.reg) : json(nullptr)},
      {"flags", trace.flags},
  };
  return out.dump();
}

namespace {

SquarefreeIdeal ideal_from_json_text(std::string_view text) {
  json parsed = json::parse(text, nullptr, false);
  if (parsed.is_discarded() || !parsed.is_object() || !parsed.contains("n") ||
      !parsed.contains("gens")) {
    throw parse_error("ideal: malformed JSON object, need {\"n\", \"gens\"}", 0);
  }
  int n = parsed["n"].get<int>();
  std::vector<std::vector<int>> supports;
  for (const auto& g : parsed["gens"]) supports.push_back(g.get<std::vector<int>>());
  return SquarefreeIdeal::from_supports(n, supports);
}

/** "(x1x2, x2x3)" or "(x1*x2, x2*x3)": variables are x<k>, monomials
 *  separated by commas. */
SquarefreeIdeal ideal_from_monomial_list(std::string_view text) {
  std::vector<std::vector<int>> supports{{}};
  int max_index = 0;
  std::size_t at = 0;
  auto bad = [&](const char* why) { return parse_error(std::string("ideal: ") + why, at); };
  while (at < text.size()) {
    char c = text[at];
    if (c == '(' || c == ')' || c == '*' || std::isspace(static_cast<unsigned char>(c))) {
      ++at;
    } else if (c == ',') {
      supports.emplace_back();
      ++at;
    } else if (c == 'x' || c == 'X') {
      ++at;
      int value = 0;
      auto [ptr, ec] = std::from_chars(text.data() + at, text.data() + text.size(), value);
      if (ec != std::errc() || value < 1) throw bad("expected a variable index after 'x'");
      at = static_cast<std::size_t>(ptr - text.data());
      supports.back().push_back(value);
      max_index = std::max(max_index, value);
    } else {
      throw bad("unexpected character in monomial list");
    }
  }
  for (const auto& s : supports) {
    if (s.empty()) throw parse_error("ideal: empty monomial in list", 0);
  }
  return SquarefreeIdeal::from_supports(max_index, supports);
}

SquarefreeIdeal ideal_from_lines(std::string_view text) {
  std::vector<std::vector<int>> supports;
  int max_index = 0;
  std::size_t at = 0;
  while (at < text.size()) {
    std::size_t eol = text.find('\n', at);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(at, eol - at);
    std::vector<int> support;
    std::size_t k = 0;
    while (k < line.size()) {
      if (std::isspace(static_cast<unsigned char>(line[k]))) {
        ++k;
        continue;
      }
      int value = 0;
      auto [ptr, ec] = std::from_chars(line.data() + k, line.data() + line.size(), value);
      if (ec != std::errc() || value < 1) {
        throw parse_error("ideal: expected a positive variable index", at + k);
      }
      k = static_cast<std::size_t>(ptr - line.data());
      support.push_back(value);
      max_index = std::max(max_index, value);
    }
    if (!support.empty()) supports.push_back(std::move(support));
    at = eol + 1;
  }
  if (supports.empty()) throw parse_error("ideal: no generators in input", 0);
  return SquarefreeIdeal::from_supports(max_index, supports);
}

}  // namespace

SquarefreeIdeal parse_ideal_text(std::string_view text) {
  std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) throw parse_error("ideal: empty input", 0);
  if (text[first] == '{') return ideal_from_json_text(text);
  if (text[first] == '(' || text[first] == 'x' || text[first] == 'X') {
    return ideal_from_monomial_list(text);
  }
  return ideal_from_lines(text);
}

}  // namespace cmreg
