#include "oddholes/covers.hpp"

#include <algorithm>
#include <stdexcept>

namespace oddholes {

namespace {

struct CoverSearch {
  const std::vector<std::pair<int, int>>& edges;
  std::vector<VertexSet> found;

  void run(VertexSet in, VertexSet forbidden) {
    for (const auto& [u, v] : edges) {
      if (in.contains(u) || in.contains(v)) continue;
      // Cover the edge by u, or forbid u and cover it by v; every
      // minimal cover omits some endpoint of its edges, so both
      // branches together reach all of them.
      if (!forbidden.contains(u)) {
        VertexSet next = in;
        next.add(u);
        run(next, forbidden);
      }
      if (!forbidden.contains(v)) {
        VertexSet next = in;
        next.add(v);
        VertexSet banned = forbidden;
        banned.add(u);
        run(next, banned);
      }
      return;
    }
    found.push_back(in);
  }
};

}  // namespace

std::vector<VertexSet> minimal_vertex_covers(const Graph& g) {
  if (g.edge_count() == 0)
    throw std::invalid_argument("vertex covers: graph has no edges");
  CoverSearch search{g.edges(), {}};
  search.run(VertexSet(), VertexSet());

  std::vector<VertexSet> out;
  for (std::size_t i = 0; i < search.found.size(); ++i) {
    bool minimal = true;
    for (std::size_t j = 0; j < search.found.size() && minimal; ++j) {
      if (j == i) continue;
      if (search.found[j].subset_of(search.found[i]) &&
          (search.found[j] != search.found[i] || j < i))
        minimal = false;
    }
    if (minimal) out.push_back(search.found[i]);
  }
  std::sort(out.begin(), out.end(), [](VertexSet a, VertexSet b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return lex_less(a, b);
  });
  return out;
}

MonomialIdeal cover_ideal(const Graph& g) {
  int n = g.vertex_count();
  std::vector<Monomial> gens;
  for (VertexSet cover : minimal_vertex_covers(g)) {
    std::vector<int> e(n, 0);
    for (int v : cover.to_vector()) e[v] = 1;
    gens.push_back(Monomial(std::move(e)));
  }
  return MonomialIdeal(n, std::move(gens));
}

MonomialIdeal cover_ideal_by_intersection(const Graph& g) {
  if (g.edge_count() == 0)
    throw std::invalid_argument("cover ideal: graph has no edges");
  int n = g.vertex_count();
  MonomialIdeal result = MonomialIdeal::unit(n);
  for (const auto& [u, v] : g.edges()) {
    MonomialIdeal edge_prime(
        n, {Monomial::variable(n, u), Monomial::variable(n, v)});
    result = intersect(result, edge_prime);
  }
  return result;
}

MonomialIdeal edge_ideal(const Graph& g) {
  int n = g.vertex_count();
  std::vector<Monomial> gens;
  for (const auto& [u, v] : g.edges())
    gens.push_back(
        Monomial::variable(n, u).times(Monomial::variable(n, v)));
  return MonomialIdeal(n, std::move(gens));
}

bool is_k_cover(const Graph& g, const CoverVector& a, int k) {
  if (a.nvars() != g.vertex_count())
    throw std::invalid_argument("k-cover: weight count differs from graph");
  if (k < 0) throw std::invalid_argument("k-cover: negative k");
  if (a.is_unit()) return false;
  for (const auto& [u, v] : g.edges())
    if (a.exponent(u) + a.exponent(v) < k) return false;
  return true;
}

namespace {

// DFS over weight vectors b <= a for a part that leaves a - b workable:
// on each edge both b and a - b must reach 1.
bool find_one_one_split(const Graph& g, const CoverVector& a,
                        std::vector<int>& b, int pos) {
  int n = g.vertex_count();
  if (pos == n) {
    CoverVector part(b);
    return is_k_cover(g, part, 1) &&
           is_k_cover(g, a.quotient_by(part), 1);
  }
  for (int c = 0; c <= a.exponent(pos); ++c) {
    b[pos] = c;
    bool feasible = true;
    for (const auto& [u, v] : g.edges()) {
      if (u > pos || v > pos) continue;
      if (b[u] + b[v] < 1 ||
          a.exponent(u) - b[u] + a.exponent(v) - b[v] < 1) {
        feasible = false;
        break;
      }
    }
    if (feasible && find_one_one_split(g, a, b, pos + 1)) return true;
  }
  b[pos] = 0;
  return false;
}

}  // namespace

TwoCoverSplit decompose_2cover(const Graph& g, const CoverVector& a) {
  if (!is_k_cover(g, a, 2))
    throw std::invalid_argument("2-cover split: not a 2-cover");
  int n = g.vertex_count();

  std::vector<int> b(n, 0);
  if (find_one_one_split(g, a, b, 0)) {
    CoverVector part(b);
    return {true, SplitKind::one_and_one, part, a.quotient_by(part)};
  }

  for (int i = 0; i < n; ++i) {
    if (a.exponent(i) == 0) continue;
    Monomial unit_vec = Monomial::variable(n, i);
    CoverVector rest = a.quotient_by(unit_vec);
    if (is_k_cover(g, rest, 2))
      return {true, SplitKind::two_and_zero, rest, unit_vec};
  }

  return {false, SplitKind::one_and_one, Monomial::unit(n),
          Monomial::unit(n)};
}

IrreducibleCoverCertificate classify_irreducible_2cover(const Graph& g,
                                                const CoverVector& a) {
  if (decompose_2cover(g, a).reducible)
    throw std::invalid_argument("2-cover classification: cover is reducible");
  int n = g.vertex_count();

  IrreducibleCoverCertificate parts{VertexSet(), VertexSet(), VertexSet()};
  for (int i = 0; i < n; ++i) {
    int w = a.exponent(i);
    if (w > 2)
      throw std::logic_error("irreducible 2-cover with a weight above 2");
    if (w == 0) parts.zero_part.add(i);
    else if (w == 2) parts.two_part.add(i);
    else parts.one_part.add(i);
  }

  VertexSet neighbourhood = neighbors(g, parts.zero_part);
  bool two_is_cover = true;
  for (const auto& [u, v] : g.edges())
    if (!parts.two_part.contains(u) && !parts.two_part.contains(v)) {
      two_is_cover = false;
      break;
    }
  Graph inner = induced_subgraph(g, parts.one_part);
  bool inner_isolated = false;
  for (int v = 0; v < inner.vertex_count(); ++v)
    if (inner.neighbors(v).empty()) {
      inner_isolated = true;
      break;
    }

  if (!is_independent(g, parts.zero_part) ||
      !(parts.two_part == neighbourhood) || parts.one_part.empty() ||
      two_is_cover || inner_isolated || is_bipartite(inner).bipartite)
    throw std::logic_error("irreducible 2-cover violates its partition shape");
  return parts;
}

MonomialIdeal symbolic_square(const Graph& g) {
  if (g.edge_count() == 0)
    throw std::invalid_argument("symbolic square: graph has no edges");
  int n = g.vertex_count();

  std::vector<MonomialIdeal> parts;
  for (const auto& [u, v] : g.edges()) {
    MonomialIdeal up(
        n, {Monomial::variable(n, u, 2), Monomial::variable(n, v)});
    MonomialIdeal vp(
        n, {Monomial::variable(n, u), Monomial::variable(n, v, 2)});
    parts.push_back(intersect(up, vp));
  }
  // Balanced pairwise folding keeps the intermediate generator sets
  // close in size, which the minimalization pass rewards.
  while (parts.size() > 1) {
    std::vector<MonomialIdeal> next;
    for (std::size_t i = 0; i + 1 < parts.size(); i += 2)
      next.push_back(intersect(parts[i], parts[i + 1]));
    if (parts.size() % 2 == 1) next.push_back(parts.back());
    parts = std::move(next);
  }
  return parts.front();
}

}  // namespace oddholes
