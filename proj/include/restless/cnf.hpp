#pragma once

#include <cstddef>
#include <vector>

#include "restless/model.hpp"

namespace restless {

// CNF over variables 1..variables; literals are signed DIMACS integers.
struct CnfFormula {
  std::size_t variables = 0;
  std::vector<std::vector<int>> clauses;

  friend bool operator==(const CnfFormula&, const CnfFormula&) = default;
};

// Empty report iff every clause has exactly 3 literals over known variables
// and every variable occurs in exactly 4 literal slots.
ValidationReport validate_exact_34(const CnfFormula& f);

}  // namespace restless
