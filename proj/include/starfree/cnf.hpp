#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "starfree/errors.hpp"

namespace starfree {

/// CNF formula over variables 1..num_vars; literals are signed ints.
struct CnfFormula {
  int num_vars = 0;
  std::vector<std::vector<int>> clauses;
};

/// Parses DIMACS cnf: "p cnf <vars> <clauses>" header, clauses as signed
/// integers terminated by 0, 'c' comment lines.
CnfFormula parse_dimacs(const std::string& text);

std::string format_dimacs(const CnfFormula& f);

/// Checks the restricted form: every clause has size 2 or 3 and every
/// variable occurs exactly twice positively and once negatively. Throws
/// ValidationError naming the first offending clause or variable.
void validate_2p1n(const CnfFormula& f);

/// DPLL with unit propagation; accepts arbitrary clause lists (an empty
/// clause makes the formula unsatisfiable). assignment[i] is variable i+1.
std::optional<std::vector<bool>> sat_solve(const CnfFormula& f);

/// validate_2p1n followed by sat_solve.
std::optional<std::vector<bool>> sat_2p1n(const CnfFormula& f);

/// Seeded random 2P1N instance: clause sizes 2 and 3, occurrence counts
/// exactly (2 positive, 1 negative) per variable.
CnfFormula random_2p1n(int num_vars, std::uint64_t seed);

std::uint64_t formula_digest(const CnfFormula& f);

}  // namespace starfree
