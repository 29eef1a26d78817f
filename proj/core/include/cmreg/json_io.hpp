#ifndef CMREG_JSON_IO_HPP
#define CMREG_JSON_IO_HPP

#include <string>
#include <string_view>

#include "cmreg/betti.hpp"
#include "cmreg/ideal.hpp"
#include "cmreg/reduction.hpp"

namespace cmreg {

/** {"n": int, "gens": [[int]]} with generators sorted. */
std::string ideal_to_json(const SquarefreeIdeal& ideal);

/** Betti table plus derived invariants:
 *  {"n", "field", "entries": [{"i","j","beta"}], "reg", "pd", "depth",
 *   "dim", "linear"}. */
std::string betti_to_json(const BettiTable& table, const InvariantReport& report);

/** {"input", "steps": [...], "reg": int|null, "flags": [string]}; split
 *  steps carry {"P","Q"} in "after", terminal steps repeat the before
 *  graph there. */
std::string trace_to_json(const ReductionTrace& trace);

/** Accepts any of: one generator per line as space-separated variable
 *  indices; the JSON object form {"n", "gens"}; or a parenthesized monomial
 *  list like "(x1x2, x2x3)". For the two textual forms the ambient size is
 *  the largest index mentioned. Throws parse_error on malformed input. */
SquarefreeIdeal parse_ideal_text(std::string_view text);

}  // namespace cmreg

#endif
