#pragma once

#include <vector>

#include "oddholes/decomposition.hpp"
#include "oddholes/ideal.hpp"
#include "oddholes/monomial.hpp"
#include "oddholes/vertex_set.hpp"

namespace oddholes {

// Pair (m, z) with supp(m) disjoint from z, describing the set of
// monomials m * (anything in the z variables).
struct StandardPair {
  Monomial m;
  VertexSet z;

  bool operator==(const StandardPair&) const = default;
};

// The standard pairs of a proper nonzero monomial ideal: pairs whose
// monomial set avoids the ideal, minimal in the order
// (m0, z0) <= (m, z) iff m0 | m and supp(m/m0) and z both lie in z0.
// Avoidance holds iff no generator, with its z-exponents deleted,
// divides m. Runs over all 2^nvars free sets, so only sensible for
// small variable counts. Sorted by monomial, then free set.
std::vector<StandardPair> standard_pairs(const MonomialIdeal& ideal);

// Number of standard pairs with free set exactly z; positive exactly
// when the prime on the complement of z is associated.
int multiplicity(const MonomialIdeal& ideal, VertexSet z);

// Total number of standard pairs.
long long arithmetic_degree(const MonomialIdeal& ideal);

// Standard pairs counted over the minimal associated primes only.
long long degree(const MonomialIdeal& ideal);

}  // namespace oddholes
