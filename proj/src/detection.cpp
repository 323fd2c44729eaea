#include "oddholes/detection.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "oddholes/standard_pairs.hpp"

namespace oddholes {

namespace {

// s induces a chordless cycle: 2-regular, as many edges as vertices,
// connected.
bool induces_cycle(const Graph& g, VertexSet s) {
  if (s.size() < 3) return false;
  Graph h = induced_subgraph(g, s);
  if (h.edge_count() != h.vertex_count()) return false;
  for (int v = 0; v < h.vertex_count(); ++v)
    if (h.neighbors(v).size() != 2) return false;
  VertexSet seen = VertexSet::single(0);
  for (bool grew = true; grew;) {
    grew = false;
    for (int v : seen.to_vector()) {
      VertexSet next = seen | h.neighbors(v);
      if (!(next == seen)) {
        seen = next;
        grew = true;
      }
    }
  }
  return seen == h.vertices();
}

void require_edge(const Graph& g, const char* op) {
  if (g.edge_count() == 0)
    throw std::invalid_argument(std::string(op) + ": graph has no edges");
}

}  // namespace

OddCycleReport odd_induced_cycles_algebraic(const Graph& g) {
  require_edge(g, "odd cycle detection");
  OddCycleReport report;

  MonomialIdeal squared = power(cover_ideal(g), 2);
  for (const MonomialPrime& p : associated_primes(squared)) {
    if (p.height() == 2) {
      report.edges_found.push_back(p);
    } else if (p.height() >= 3 && p.height() % 2 == 1) {
      if (!induces_cycle(g, p.support))
        throw std::logic_error(
            "component support is not an induced cycle");
      report.odd_cycles.push_back(p.support);
    } else {
      throw std::logic_error("component support of impossible height");
    }
  }

  std::vector<MonomialPrime> edges;
  for (const auto& [u, v] : g.edges()) {
    VertexSet e = VertexSet::single(u);
    e.add(v);
    edges.push_back(MonomialPrime{e});
  }
  std::sort(edges.begin(), edges.end(),
            [](const MonomialPrime& a, const MonomialPrime& b) {
              return lex_less(a.support, b.support);
            });
  if (!(report.edges_found == edges))
    throw std::logic_error("height-2 components differ from the edge set");
  return report;
}

bool has_odd_hole(const Graph& g) {
  OddCycleReport report = odd_induced_cycles_algebraic(g);
  long long at_least_4 = 0;
  long long at_least_5 = 0;
  for (VertexSet s : report.odd_cycles) {
    at_least_4 += s.size() >= 4;
    at_least_5 += s.size() >= 5;
  }
  if (at_least_4 != at_least_5)
    throw std::logic_error("component of height exactly 4");
  return at_least_5 > 0;
}

bool saturation_test(const Graph& g, int threshold) {
  if (threshold <= 1)
    throw std::invalid_argument("saturation test: threshold must exceed 1");
  require_edge(g, "saturation test");
  MonomialIdeal squared = power(cover_ideal(g), 2);
  for (const MonomialPrime& p : associated_primes(squared))
    if (p.height() >= threshold) return false;
  return true;
}

PerfectionVerdict is_perfect(const Graph& g) {
  if (g.vertex_count() < 2)
    throw std::invalid_argument("perfection test: need at least 2 vertices");

  for (bool complement_side : {false, true}) {
    Graph side = complement_side ? complement(g) : g;
    if (side.edge_count() == 0) continue;
    OddCycleReport report = odd_induced_cycles_algebraic(side);
    // odd_cycles are sorted by size then vertex sequence, so the first
    // hole is the lex-least among the smallest.
    for (VertexSet s : report.odd_cycles)
      if (s.size() >= 5)
        return {false, s, complement_side};
  }
  return {true, VertexSet(), false};
}

AdegReport adeg_test(const Graph& g) {
  require_edge(g, "arithmetic degree test");
  MonomialIdeal squared = power(cover_ideal(g), 2);
  AdegReport report;
  report.adeg = arithmetic_degree(squared);
  report.expected = 3ll * g.edge_count() + count_triangles(g);
  report.odd_hole_free = report.adeg == report.expected;
  if (report.odd_hole_free != !has_odd_hole(g))
    throw std::logic_error("arithmetic degree disagrees with the hole test");
  return report;
}

long long degree_check(const Graph& g) {
  require_edge(g, "degree check");
  MonomialIdeal squared = power(cover_ideal(g), 2);
  long long deg = degree(squared);
  if (deg != 3ll * g.edge_count())
    throw std::logic_error("degree differs from three times the edge count");
  return deg;
}

MonomialIdeal secant_ideal(const Graph& g) {
  require_edge(g, "secant ideal");
  int n = g.vertex_count();

  MonomialIdeal squared = power(cover_ideal(g), 2);
  std::vector<int> twos(n, 2);
  MonomialIdeal dual = generalized_dual(squared, Monomial(std::move(twos)));
  std::vector<Monomial> squarefree;
  for (const Monomial& m : dual.generators()) {
    bool keep = true;
    for (int i = 0; i < n && keep; ++i) keep = m.exponent(i) <= 1;
    if (keep) squarefree.push_back(m);
  }
  return MonomialIdeal(n, std::move(squarefree));
}

DepthBounds depth_bounds(const Graph& g) {
  require_edge(g, "depth bounds");
  DepthBounds bounds{false, 0, 0, 0};
  OddCycleReport report = odd_induced_cycles_algebraic(g);
  for (VertexSet s : report.odd_cycles)
    bounds.largest_odd_cycle = std::max(bounds.largest_odd_cycle, s.size());
  if (bounds.largest_odd_cycle == 0) return bounds;
  bounds.applicable = true;
  bounds.depth_upper = g.vertex_count() - bounds.largest_odd_cycle;
  bounds.projdim_lower = bounds.largest_odd_cycle;
  return bounds;
}

}  // namespace oddholes
