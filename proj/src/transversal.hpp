#pragma once

#include <cstdint>
#include <vector>

namespace oddholes::detail {

// Requirement that variable `var` reach at least `level` (level >= 1).
struct LeveledLiteral {
  int var;
  int level;
};

// Satisfied when at least one literal is met.
using LeveledClause = std::vector<LeveledLiteral>;

// All exponent vectors that satisfy every clause and are minimal under
// the componentwise order.
//
// Incremental fold: maintain the minimal transversals of the clauses
// seen so far, extend each member that misses the next clause by one
// literal in every way, and prune the extensions back to an antichain.
// The family stays exactly the minimal transversals of the prefix, so
// no post hoc filtering over a large candidate pool is ever needed.
std::vector<std::vector<int>> minimal_transversals(
    int nvars, const std::vector<LeveledClause>& clauses);

}  // namespace oddholes::detail
