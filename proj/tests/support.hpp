#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "oddholes/covers.hpp"
#include "oddholes/decomposition.hpp"
#include "oddholes/graph.hpp"
#include "oddholes/ideal.hpp"
#include "oddholes/monomial.hpp"
#include "oddholes/standard_pairs.hpp"
#include "oddholes/vertex_set.hpp"

// Fixtures and brute-force oracles for the tests. The oracles favour
// exhaustive subset or box enumeration over anything clever, so they
// share no logic with the code under test.
namespace testsupport {

inline oddholes::VertexSet vs(std::initializer_list<int> members) {
  oddholes::VertexSet s;
  for (int v : members) s.add(v);
  return s;
}

inline oddholes::Monomial mono(std::vector<int> exponents) {
  return oddholes::Monomial(std::move(exponents));
}

inline oddholes::Graph cycle_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return oddholes::Graph(n, std::move(edges));
}

inline oddholes::Graph complete_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
  return oddholes::Graph(n, std::move(edges));
}

inline oddholes::Graph path_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return oddholes::Graph(n, std::move(edges));
}

inline oddholes::Graph petersen() {
  return oddholes::Graph(
      10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
           {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5},
           {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9}});
}

// 5-cycle on 0..4 with a pendant vertex 5 attached to 0.
inline oddholes::Graph pendant_c5() {
  return oddholes::Graph(
      6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}});
}

inline oddholes::Graph random_graph(int n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution flip(p);
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (flip(rng)) edges.push_back({i, j});
  return oddholes::Graph(n, std::move(edges));
}

inline oddholes::MonomialIdeal random_ideal(int nvars, int gens, int maxexp,
                                            std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, maxexp);
  std::vector<oddholes::Monomial> monomials;
  while (static_cast<int>(monomials.size()) < gens) {
    std::vector<int> e(nvars);
    int total = 0;
    for (int& x : e) total += x = pick(rng);
    if (total == 0) continue;  // a unit generator would make the ideal unit
    monomials.push_back(oddholes::Monomial(std::move(e)));
  }
  return oddholes::MonomialIdeal(nvars, std::move(monomials));
}

// Does s induce a chordless cycle? Checked directly on the adjacency
// relation: every member has exactly two neighbours inside s, the edge
// count inside s equals |s|, and s is connected.
inline bool induces_chordless_cycle(const oddholes::Graph& g,
                                    oddholes::VertexSet s) {
  if (s.size() < 3) return false;
  int inner_edges = 0;
  for (const auto& [u, v] : g.edges())
    inner_edges += s.contains(u) && s.contains(v);
  if (inner_edges != s.size()) return false;
  for (int v : s.to_vector())
    if ((g.neighbors(v) & s).size() != 2) return false;
  oddholes::VertexSet seen = oddholes::VertexSet::single(s.min());
  for (bool grew = true; grew;) {
    grew = false;
    for (int v : seen.to_vector()) {
      oddholes::VertexSet next = seen | (g.neighbors(v) & s);
      if (!(next == seen)) {
        seen = next;
        grew = true;
      }
    }
  }
  return seen == s;
}

// All odd chordless cycles found by scanning every vertex subset.
inline std::vector<oddholes::VertexSet> brute_odd_cycles(
    const oddholes::Graph& g, int min_len = 3) {
  int effective = min_len + (min_len % 2 == 0 ? 1 : 0);
  int n = g.vertex_count();
  if (n > 20) throw std::invalid_argument("subset scan limited to 20 vertices");
  std::vector<oddholes::VertexSet> out;
  for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << n); ++bits) {
    oddholes::VertexSet s(bits);
    if (s.size() % 2 == 1 && s.size() >= effective &&
        induces_chordless_cycle(g, s))
      out.push_back(s);
  }
  std::sort(out.begin(), out.end(),
            [](oddholes::VertexSet a, oddholes::VertexSet b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return lex_less(a, b);
            });
  return out;
}

inline bool covers_all_edges(const oddholes::Graph& g, oddholes::VertexSet s) {
  for (const auto& [u, v] : g.edges())
    if (!s.contains(u) && !s.contains(v)) return false;
  return true;
}

// All inclusion-minimal vertex covers found by scanning every subset.
inline std::vector<oddholes::VertexSet> brute_minimal_covers(
    const oddholes::Graph& g) {
  int n = g.vertex_count();
  if (n > 20) throw std::invalid_argument("subset scan limited to 20 vertices");
  std::vector<oddholes::VertexSet> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    oddholes::VertexSet s(bits);
    if (!covers_all_edges(g, s)) continue;
    bool minimal = true;
    for (int v : s.to_vector()) {
      oddholes::VertexSet smaller = s;
      smaller.remove(v);
      minimal = minimal && !covers_all_edges(g, smaller);
    }
    if (minimal) out.push_back(s);
  }
  std::sort(out.begin(), out.end(),
            [](oddholes::VertexSet a, oddholes::VertexSet b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return lex_less(a, b);
            });
  return out;
}

// m lies in the ideal of pure powers (x_i^{b_i} : b_i >= 1).
inline bool pure_power_member(const std::vector<int>& b,
                              const std::vector<int>& m) {
  for (std::size_t i = 0; i < b.size(); ++i)
    if (b[i] >= 1 && m[i] >= b[i]) return true;
  return false;
}

inline bool generator_member(const oddholes::MonomialIdeal& ideal,
                             const std::vector<int>& m) {
  for (const oddholes::Monomial& g : ideal.generators()) {
    bool divides = true;
    for (int i = 0; i < ideal.nvars() && divides; ++i)
      divides = g.exponent(i) <= m[i];
    if (divides) return true;
  }
  return false;
}

// Steps v through the box 0 <= v <= a; false after the last vector.
inline bool next_in_box(std::vector<int>& v, const std::vector<int>& a) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] < a[i]) {
      ++v[i];
      return true;
    }
    v[i] = 0;
  }
  return false;
}

// Irredundant irreducible decomposition by box enumeration: every
// candidate exponent vector below the generator maximum is tested for
// containing the ideal, the inclusion-minimal ideals among those are
// kept, and a final pass removes any component the others already cut
// out. Exponential in every direction; trustworthy and slow.
inline std::vector<oddholes::Monomial> brute_irreducible_components(
    const oddholes::MonomialIdeal& ideal) {
  int n = ideal.nvars();
  if (ideal.is_zero() || ideal.is_unit())
    throw std::invalid_argument("decomposition needs a proper nonzero ideal");
  std::vector<int> a(n, 0);
  for (const oddholes::Monomial& g : ideal.generators())
    for (int i = 0; i < n; ++i) a[i] = std::max(a[i], g.exponent(i));

  // m^b contains m^c exactly when every generator x_i^{c_i} clears the
  // matching pure power of b.
  auto contains_pure = [n](const std::vector<int>& b,
                           const std::vector<int>& c) {
    for (int i = 0; i < n; ++i)
      if (c[i] >= 1 && !(b[i] >= 1 && b[i] <= c[i])) return false;
    return true;
  };

  std::vector<std::vector<int>> family;
  std::vector<int> b(n, 0);
  while (next_in_box(b, a)) {
    bool holds = true;
    for (const oddholes::Monomial& g : ideal.generators())
      holds = holds && pure_power_member(b, g.exponents());
    if (holds) family.push_back(b);
  }

  std::vector<std::vector<int>> kept;
  for (const auto& candidate : family) {
    bool minimal = true;
    for (const auto& other : family)
      if (other != candidate && contains_pure(candidate, other))
        minimal = false;
    if (minimal) kept.push_back(candidate);
  }

  // Memberships agree on the box iff the ideals are equal, since all
  // exponents in play are bounded by a.
  auto intersection_matches = [&](const std::vector<std::vector<int>>& comps,
                                  int skip) {
    std::vector<int> m(n, 0);
    do {
      bool in_all = true;
      for (int j = 0; j < static_cast<int>(comps.size()) && in_all; ++j)
        if (j != skip) in_all = pure_power_member(comps[j], m);
      if (in_all != generator_member(ideal, m)) return false;
    } while (next_in_box(m, a));
    return true;
  };

  for (bool removed = true; removed;) {
    removed = false;
    for (std::size_t k = 0; k < kept.size(); ++k) {
      if (intersection_matches(kept, static_cast<int>(k))) {
        kept.erase(kept.begin() + k);
        removed = true;
        break;
      }
    }
  }
  if (!intersection_matches(kept, -1))
    throw std::logic_error("box oracle lost the ideal");

  std::vector<oddholes::Monomial> out;
  for (auto& c : kept) out.push_back(oddholes::Monomial(std::move(c)));
  std::sort(out.begin(), out.end());
  return out;
}

// Standard pairs by full enumeration: every free set, every monomial
// below the global per-variable bound, the divisibility test for
// avoidance, and a quadratic minimality filter.
inline std::vector<oddholes::StandardPair> brute_standard_pairs(
    const oddholes::MonomialIdeal& ideal) {
  int n = ideal.nvars();
  if (n > 16) throw std::invalid_argument("free-set scan limited to 16 vars");
  std::vector<int> bound(n, 0);
  for (const oddholes::Monomial& g : ideal.generators())
    for (int i = 0; i < n; ++i)
      bound[i] = std::max(bound[i], g.exponent(i) - 1);

  std::vector<oddholes::StandardPair> admissible;
  for (std::uint64_t zbits = 0; zbits < (std::uint64_t{1} << n); ++zbits) {
    oddholes::VertexSet z(zbits);
    std::vector<int> cap = bound;
    for (int i : z.to_vector()) cap[i] = 0;
    std::vector<int> m(n, 0);
    do {
      bool avoided = true;
      for (const oddholes::Monomial& g : ideal.generators()) {
        bool deleted_divides = true;
        for (int i = 0; i < n && deleted_divides; ++i)
          if (!z.contains(i)) deleted_divides = g.exponent(i) <= m[i];
        if (deleted_divides) {
          avoided = false;
          break;
        }
      }
      if (avoided)
        admissible.push_back({oddholes::Monomial(std::vector<int>(m)), z});
    } while (next_in_box(m, cap));
  }

  // q covers p when q.m divides p.m and both the quotient's support and
  // p's free set lie inside q's free set.
  auto covers = [](const oddholes::StandardPair& q,
                   const oddholes::StandardPair& p) {
    if (!q.m.divides(p.m)) return false;
    oddholes::VertexSet extra = p.m.quotient_by(q.m).support() | p.z;
    return extra.subset_of(q.z);
  };

  std::vector<oddholes::StandardPair> out;
  for (const auto& p : admissible) {
    bool minimal = true;
    for (const auto& q : admissible)
      if (!(q == p) && covers(q, p)) minimal = false;
    if (minimal) out.push_back(p);
  }
  std::sort(out.begin(), out.end(),
            [](const oddholes::StandardPair& x, const oddholes::StandardPair& y) {
              if (!(x.m == y.m)) return x.m < y.m;
              return x.z.bits() < y.z.bits();
            });
  return out;
}

inline bool brute_is_k_cover(const oddholes::Graph& g,
                             const std::vector<int>& a, int k) {
  bool nonzero = false;
  for (int x : a) nonzero = nonzero || x > 0;
  if (!nonzero) return false;
  for (const auto& [u, v] : g.edges())
    if (a[u] + a[v] < k) return false;
  return true;
}

// Exhaustive reducibility check over all componentwise decompositions
// a = b + c: either both parts are 1-covers or one part is a 2-cover
// and the other is merely nonzero.
inline bool brute_reducible_2cover(const oddholes::Graph& g,
                                   const oddholes::Monomial& a) {
  std::vector<int> top = a.exponents();
  std::vector<int> b(top.size(), 0);
  while (next_in_box(b, top)) {
    std::vector<int> c(top.size());
    bool c_nonzero = false;
    for (std::size_t i = 0; i < top.size(); ++i) {
      c[i] = top[i] - b[i];
      c_nonzero = c_nonzero || c[i] > 0;
    }
    if (!c_nonzero) continue;
    if (brute_is_k_cover(g, b, 1) && brute_is_k_cover(g, c, 1)) return true;
    if (brute_is_k_cover(g, b, 2) || brute_is_k_cover(g, c, 2)) return true;
  }
  return false;
}

// Minimal generators of the ideal of 2-covers: scan {0,1,2}^n for
// 2-covers and keep the componentwise-minimal ones. A vector is
// minimal exactly when no single decrement stays a 2-cover.
inline std::vector<oddholes::Monomial> brute_minimal_2covers(
    const oddholes::Graph& g) {
  int n = g.vertex_count();
  std::vector<int> top(n, 2);
  std::vector<int> v(n, 0);
  std::vector<oddholes::Monomial> out;
  while (next_in_box(v, top)) {
    if (!brute_is_k_cover(g, v, 2)) continue;
    bool minimal = true;
    for (int i = 0; i < n && minimal; ++i) {
      if (v[i] == 0) continue;
      std::vector<int> down = v;
      --down[i];
      minimal = !brute_is_k_cover(g, down, 2);
    }
    if (minimal) out.push_back(oddholes::Monomial(std::vector<int>(v)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace testsupport
