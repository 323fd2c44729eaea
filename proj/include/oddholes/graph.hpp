#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "oddholes/vertex_set.hpp"

namespace oddholes {

// Finite simple graph on at most 64 vertices. Vertices are indexed
// 0..n-1 and carry string labels; edges are unordered pairs without
// loops or repeats.
class Graph {
 public:
  // Labels default to "1".."n". Throws std::invalid_argument on a loop,
  // a repeated edge, an out-of-range endpoint, n > 64, or labels that
  // are not unique and of size n.
  Graph(int n, std::vector<std::pair<int, int>> edges,
        std::vector<std::string> labels = {});

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  // Canonical edge list: each pair (u, v) has u < v, sorted ascending.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  bool adjacent(int u, int v) const;
  VertexSet neighbors(int v) const;
  VertexSet vertices() const { return VertexSet::first_n(n_); }

  const std::string& label(int v) const;
  const std::vector<std::string>& labels() const { return labels_; }

 private:
  int n_ = 0;
  std::vector<std::uint64_t> adj_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::string> labels_;
};

// Input error with the 1-based line it was found on (0 when the problem
// is not tied to a single line).
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message);
  int line() const { return line_; }

 private:
  int line_;
};

// Reads either of two plain-text formats, deciding by content:
//   - DIMACS: "c" comment lines, one "p edge <n> <m>" header, then
//     "e <u> <v>" lines with 1-based endpoints.
//   - edge list: one edge per line, two whitespace-separated tokens;
//     "#" starts a comment line. If every token is a positive integer
//     the tokens are 1-based vertex numbers and n is the largest one;
//     otherwise tokens are labels, numbered in order of first use.
// Loops and repeated edges are rejected, not simplified away.
Graph parse_graph(const std::string& text);

Graph complement(const Graph& g);

// Subgraph induced on `s`, vertices renumbered in increasing original
// order; labels follow their vertices.
Graph induced_subgraph(const Graph& g, VertexSet s);

struct BipartitenessResult {
  bool bipartite = false;
  // Valid 2-coloring when bipartite: side[0] and side[1] partition the
  // vertices and every edge crosses.
  VertexSet side[2];
  // Otherwise an odd cycle, listed in traversal order. It comes from
  // BFS layering so it is simple but not necessarily chordless.
  std::vector<int> odd_cycle;
};

BipartitenessResult is_bipartite(const Graph& g);

// All vertex sets inducing a chordless cycle of odd length >= min_len
// (an even min_len is raised to the next odd value). Sets are returned
// sorted by size, then lex. Cycles are found by growing chordless paths
// from each cycle's minimum vertex, never by scanning all subsets.
std::vector<VertexSet> enumerate_induced_odd_cycles(const Graph& g,
                                                    int min_len = 3);

int count_triangles(const Graph& g);

// N(a): vertices outside a with a neighbor inside a.
VertexSet neighbors(const Graph& g, VertexSet a);

bool is_independent(const Graph& g, VertexSet s);

}  // namespace oddholes
