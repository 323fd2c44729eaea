#pragma once

#include <vector>

#include "oddholes/ideal.hpp"
#include "oddholes/monomial.hpp"
#include "oddholes/vertex_set.hpp"

namespace oddholes {

// Ideal generated by pure powers, (x_i^{b_i} : b_i >= 1), recorded by
// its exponent vector b.
struct IrreducibleComponent {
  Monomial exponents;

  VertexSet support() const { return exponents.support(); }
  MonomialIdeal to_ideal() const;

  bool operator==(const IrreducibleComponent& other) const {
    return exponents == other.exponents;
  }
  bool operator<(const IrreducibleComponent& other) const {
    return exponents < other.exponents;
  }
};

// Prime monomial ideal (x_i : i in support).
struct MonomialPrime {
  VertexSet support;

  int height() const { return support.size(); }
  MonomialIdeal to_ideal(int nvars) const;

  bool operator==(const MonomialPrime& other) const {
    return support == other.support;
  }
};

// Sorts by height, then by the sorted vertex sequences.
bool prime_order(const MonomialPrime& a, const MonomialPrime& b);

// The irredundant decomposition of a proper nonzero monomial ideal
// into irreducible components. Components are pairwise incomparable
// and sorted by exponent vector.
//
// Route: with a the componentwise maximum of the generators, the
// components of I embed among the exponent vectors below a, and they
// are exactly the minimal vectors c (counted from a downwards) whose
// mirrored vector fails to lie in I. That makes each generator g a
// leveled clause { (i, a_i + 1 - g_i) : g_i >= 1 } and the components
// the minimal leveled transversals, mirrored back.
std::vector<IrreducibleComponent> irreducible_decomposition(
    const MonomialIdeal& ideal);

// Reference algorithm for the same decomposition: pick a generator
// that is a product of coprime factors, split the ideal along the two
// factors, recurse, then drop redundant components. Exponential; used
// to cross-check the transversal route on small inputs.
std::vector<IrreducibleComponent> irreducible_decomposition_by_splitting(
    const MonomialIdeal& ideal);

// Supports of the irreducible components, deduplicated, sorted by
// height then by vertex sequence.
std::vector<MonomialPrime> associated_primes(const MonomialIdeal& ideal);

// For squarefree proper I: the intersection of the primes on the
// generator supports, which swaps generators and components.
MonomialIdeal alexander_dual_squarefree(const MonomialIdeal& ideal);

// Dual with respect to a bound a with every generator dividing x^a:
// one generator per irreducible component b, with exponents
// a_i + 1 - b_i where b_i >= 1 and 0 elsewhere.
MonomialIdeal generalized_dual(const MonomialIdeal& ideal, const Monomial& bound);

}  // namespace oddholes
