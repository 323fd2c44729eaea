#include "transversal.hpp"

#include <algorithm>
#include <bit>
#include <cassert>

namespace oddholes::detail {

namespace {

// Clause and transversal share one layout: masks[l-1] holds the
// variables at level >= l, so "clause satisfied" and "vector dominates
// vector" are both a few word operations. For a transversal the level
// sets are nested; for a clause, masks[l-1] holds the literals whose
// threshold is exactly l.
struct Masks {
  std::vector<std::uint64_t> at;

  explicit Masks(int levels) : at(levels, 0) {}

  bool meets(const Masks& reached) const {
    for (std::size_t l = 0; l < at.size(); ++l)
      if (at[l] & reached.at[l]) return true;
    return false;
  }

  // Componentwise <= on the exponent vectors the masks encode.
  bool below(const Masks& other) const {
    for (std::size_t l = 0; l < at.size(); ++l)
      if (at[l] & ~other.at[l]) return false;
    return true;
  }

  bool operator==(const Masks& other) const { return at == other.at; }
  bool operator<(const Masks& other) const { return at < other.at; }
};

}  // namespace

std::vector<std::vector<int>> minimal_transversals(
    int nvars, const std::vector<LeveledClause>& clauses) {
  assert(nvars >= 0 && nvars <= 64);
  int levels = 1;
  for (const LeveledClause& c : clauses)
    for (const LeveledLiteral& lit : c) {
      assert(lit.var >= 0 && lit.var < nvars);
      assert(lit.level >= 1);
      if (lit.level > levels) levels = lit.level;
    }

  std::vector<Masks> clause_masks;
  clause_masks.reserve(clauses.size());
  for (const LeveledClause& c : clauses) {
    Masks m(levels);
    for (const LeveledLiteral& lit : c) m.at[lit.level - 1] |= 1ull << lit.var;
    clause_masks.push_back(std::move(m));
  }

  // Fold clauses one at a time, keeping the family of minimal
  // transversals of the prefix. A member that meets the next clause
  // survives unchanged; one that misses it spawns a copy per literal,
  // raised to that literal's level. Every minimal transversal of the
  // extended prefix is such a member or such a copy, so pruning the
  // copies against the family keeps it exactly the minimal ones.
  std::vector<Masks> family;
  family.push_back(Masks(levels));
  std::vector<Masks> kept;
  std::vector<Masks> grown;
  for (const Masks& c : clause_masks) {
    kept.clear();
    grown.clear();
    for (const Masks& t : family) {
      if (c.meets(t)) {
        kept.push_back(t);
        continue;
      }
      for (int l = 0; l < levels; ++l) {
        std::uint64_t word = c.at[l];
        while (word) {
          int v = std::countr_zero(word);
          word &= word - 1;
          Masks raised = t;
          for (int k = 0; k <= l; ++k) raised.at[k] |= 1ull << v;
          grown.push_back(std::move(raised));
        }
      }
    }
    std::sort(grown.begin(), grown.end());
    grown.erase(std::unique(grown.begin(), grown.end()), grown.end());

    // A surviving member never dominates a raised copy, so only the
    // copies need filtering: against the members and each other.
    family = std::move(kept);
    std::size_t member_count = family.size();
    for (std::size_t i = 0; i < grown.size(); ++i) {
      bool minimal = true;
      for (std::size_t j = 0; j < member_count && minimal; ++j)
        minimal = !family[j].below(grown[i]);
      for (std::size_t j = 0; j < grown.size() && minimal; ++j)
        minimal = j == i || !grown[j].below(grown[i]);
      if (minimal) family.push_back(grown[i]);
    }
  }

  std::vector<std::vector<int>> result;
  result.reserve(family.size());
  for (const Masks& t : family) {
    std::vector<int> expo(nvars, 0);
    for (int l = 0; l < levels; ++l) {
      std::uint64_t word = t.at[l];
      while (word) {
        int v = std::countr_zero(word);
        word &= word - 1;
        expo[v] = std::max(expo[v], l + 1);
      }
    }
    result.push_back(std::move(expo));
  }
  return result;
}

}  // namespace oddholes::detail
