#pragma once

#include <vector>

#include "oddholes/covers.hpp"
#include "oddholes/decomposition.hpp"
#include "oddholes/graph.hpp"
#include "oddholes/ideal.hpp"
#include "oddholes/vertex_set.hpp"

namespace oddholes {

// Odd cycle structure of a graph, read off the irreducible components
// of the square of its cover ideal.
struct OddCycleReport {
  // Height-2 associated primes; always exactly the edges of the graph.
  std::vector<MonomialPrime> edges_found;
  // Supports of the taller components, sorted by size then by vertex
  // sequence; always exactly the induced odd cycles.
  std::vector<VertexSet> odd_cycles;
};

// Decomposes the square of the cover ideal and classifies the component
// supports. Every support of three or more vertices is checked to
// induce an odd chordless cycle, the height-2 supports are checked to
// be the edge set, and any other height throws std::logic_error.
// Requires at least one edge.
OddCycleReport odd_induced_cycles_algebraic(const Graph& g);

// Some induced odd cycle longer than a triangle, by the ideal route.
// Requires at least one edge.
bool has_odd_hole(const Graph& g);

// True when the square of the cover ideal has no associated prime of
// height >= threshold. Requires threshold > 1 and at least one edge.
bool saturation_test(const Graph& g, int threshold);

struct PerfectionVerdict {
  bool perfect;
  // When imperfect: vertex set of a smallest odd hole, lex-least among
  // those, taken from the graph itself if it has one, otherwise from
  // the complement.
  VertexSet witness;
  bool in_complement;
};

// Odd-hole test on the graph and its complement; a side without edges
// trivially has no odd holes and is skipped. Requires at least two
// vertices.
PerfectionVerdict is_perfect(const Graph& g);

struct AdegReport {
  long long adeg;      // standard pair count for the squared cover ideal
  long long expected;  // 3 * edges + triangles
  bool odd_hole_free;  // holds exactly when adeg == expected
};

// Compares the arithmetic degree of the squared cover ideal with its
// odd-hole-free closed form; disagreement with the decomposition-based
// odd hole test throws std::logic_error. Requires at least one edge.
AdegReport adeg_test(const Graph& g);

// Standard pairs of the squared cover ideal counted over the minimal
// primes; always 3 * edges, enforced here via std::logic_error.
// Requires at least one edge.
long long degree_check(const Graph& g);

// Squarefree generators of the bound-2 dual of the squared cover
// ideal: one generator per induced odd cycle, the product of its
// vertices. Zero when there are none. Requires at least one edge.
MonomialIdeal secant_ideal(const Graph& g);

struct DepthBounds {
  bool applicable;  // false when the graph has no induced odd cycle
  int largest_odd_cycle;
  // For the quotient by the squared cover ideal, from the tallest
  // component: depth at most n - t, projective dimension at least t.
  int depth_upper;
  int projdim_lower;
};

// Requires at least one edge.
DepthBounds depth_bounds(const Graph& g);

}  // namespace oddholes
