#pragma once

#include <vector>

#include "oddholes/graph.hpp"
#include "oddholes/ideal.hpp"
#include "oddholes/monomial.hpp"
#include "oddholes/vertex_set.hpp"

namespace oddholes {

// Vertex weight vector, stored as a monomial exponent vector.
using CoverVector = Monomial;

// All minimal vertex covers, sorted by size then by vertex sequence.
// Requires at least one edge.
std::vector<VertexSet> minimal_vertex_covers(const Graph& g);

// Generated by the products of the variables over each minimal vertex
// cover. Requires at least one edge.
MonomialIdeal cover_ideal(const Graph& g);

// The same ideal computed the other way: intersecting the edge primes
// (x_u, x_v) over all edges. Cross-check for cover_ideal.
MonomialIdeal cover_ideal_by_intersection(const Graph& g);

// Generated by x_u * x_v over the edges; zero for an edgeless graph.
MonomialIdeal edge_ideal(const Graph& g);

// Nonzero weights with a_u + a_v >= k on every edge.
bool is_k_cover(const Graph& g, const CoverVector& a, int k);

enum class SplitKind { one_and_one, two_and_zero };

// Result of trying to write a 2-cover as b + c with b an i-cover and
// c a (2-i)-cover, both nonzero.
struct TwoCoverSplit {
  bool reducible;
  SplitKind kind;     // meaningful only when reducible
  CoverVector first;  // 1-cover, or the part that stays a 2-cover
  CoverVector second; // 1-cover, or the nonzero leftover
};

// Splits into two 1-covers when possible, otherwise sheds a unit
// vector that leaves a 2-cover behind; irreducible when neither works.
TwoCoverSplit decompose_2cover(const Graph& g, const CoverVector& a);

// Vertex partition certifying an irreducible 2-cover: weights are 0 on
// an independent set, 2 on exactly its neighbourhood, 1 elsewhere, and
// the weight-1 part induces a subgraph that is non-bipartite with no
// isolated vertices while the weight-2 part covers no graph on its own.
struct IrreducibleCoverCertificate {
  VertexSet zero_part;
  VertexSet two_part;
  VertexSet one_part;
};

// Verifies the certificate properties for an irreducible 2-cover and
// returns the partition. Throws std::invalid_argument if a is not an
// irreducible 2-cover.
IrreducibleCoverCertificate classify_irreducible_2cover(const Graph& g,
                                                const CoverVector& a);

// Intersection over the edges of (x_u^2, x_v) cap (x_u, x_v^2): the
// ideal generated by the 2-covers. Requires at least one edge.
MonomialIdeal symbolic_square(const Graph& g);

}  // namespace oddholes
