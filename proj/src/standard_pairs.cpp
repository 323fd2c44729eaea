#include "oddholes/standard_pairs.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>
#include <stdexcept>

namespace oddholes {

namespace {

struct Candidate {
  std::vector<int> e;
  std::uint64_t zbits;
  int deg;
  std::uint64_t supp;
};

struct FreeSetSearch {
  int nvars;
  std::uint64_t zbits;
  std::vector<std::vector<int>> reduced;  // generators with z deleted
  std::vector<int> vars;                  // variables off z, ascending
  std::vector<int> bound;                 // per-variable exponent cap
  std::vector<int> e;
  std::vector<Candidate>* out;

  bool avoids() const {
    for (const std::vector<int>& r : reduced) {
      bool divides = true;
      for (int v : vars)
        if (r[v] > e[v]) {
          divides = false;
          break;
        }
      if (divides) return false;
    }
    return true;
  }

  void run(std::size_t pos) {
    if (pos == vars.size()) {
      std::uint64_t supp = 0;
      int deg = 0;
      for (int v : vars)
        if (e[v] > 0) {
          supp |= 1ull << v;
          deg += e[v];
        }
      out->push_back({e, zbits, deg, supp});
      return;
    }
    int v = vars[pos];
    for (int c = 0; c <= bound[v]; ++c) {
      e[v] = c;
      // Raising an exponent only makes more reduced generators divide,
      // so the first failure cuts the rest of the range.
      if (c > 0 && !avoids()) break;
      run(pos + 1);
    }
    e[v] = 0;
  }
};

// q <= p in the pair order; strict whenever the pairs differ.
bool pair_below(const Candidate& q, const Candidate& p) {
  if ((p.zbits & ~q.zbits) != 0) return false;
  std::uint64_t extra = 0;
  for (std::size_t i = 0; i < q.e.size(); ++i) {
    if (q.e[i] > p.e[i]) return false;
    if (q.e[i] < p.e[i]) extra |= 1ull << i;
  }
  return (extra & ~q.zbits) == 0;
}

}  // namespace

std::vector<StandardPair> standard_pairs(const MonomialIdeal& ideal) {
  if (ideal.is_zero())
    throw std::invalid_argument("standard pairs: zero ideal");
  if (ideal.is_unit())
    throw std::invalid_argument("standard pairs: unit ideal");
  int n = ideal.nvars();

  std::vector<Candidate> candidates;
  std::uint64_t all = VertexSet::first_n(n).bits();
  for (std::uint64_t zbits = 0;; ++zbits) {
    // A generator supported inside z divides every monomial once its
    // z-exponents are deleted; no pair can use such a free set.
    bool dead = false;
    for (const Monomial& g : ideal.generators())
      if ((g.support().bits() & ~zbits) == 0) {
        dead = true;
        break;
      }
    if (!dead) {
      FreeSetSearch search;
      search.nvars = n;
      search.zbits = zbits;
      search.vars = (VertexSet(all) - VertexSet(zbits)).to_vector();
      search.bound.assign(n, 0);
      std::vector<Monomial> cut;
      for (const Monomial& g : ideal.generators()) {
        std::vector<int> r = g.exponents();
        for (int i = 0; i < n; ++i)
          if (zbits >> i & 1) r[i] = 0;
        cut.push_back(Monomial(std::move(r)));
      }
      for (const Monomial& r : minimalize(std::move(cut))) {
        search.reduced.push_back(r.exponents());
        for (int v : search.vars)
          search.bound[v] = std::max(search.bound[v], r.exponent(v) - 1);
      }
      search.e.assign(n, 0);
      search.out = &candidates;
      search.run(0);
    }
    if (zbits == all) break;
  }

  // Scan a linear extension of the pair order, keeping each candidate
  // with nothing kept below it. Degree can only grow and the free set
  // only shrink going up, so (degree asc, free set size desc) works.
  std::sort(candidates.begin(), candidates.end(),
            [](const Candidate& a, const Candidate& b) {
              if (a.deg != b.deg) return a.deg < b.deg;
              int za = std::popcount(a.zbits);
              int zb = std::popcount(b.zbits);
              if (za != zb) return za > zb;
              if (a.e != b.e) return a.e < b.e;
              return a.zbits < b.zbits;
            });
  std::vector<Candidate> kept;
  for (const Candidate& p : candidates) {
    bool minimal = true;
    for (const Candidate& q : kept)
      if (pair_below(q, p)) {
        minimal = false;
        break;
      }
    if (minimal) kept.push_back(p);
  }

  std::vector<StandardPair> out;
  out.reserve(kept.size());
  for (Candidate& c : kept)
    out.push_back({Monomial(std::move(c.e)), VertexSet(c.zbits)});
  std::sort(out.begin(), out.end(),
            [](const StandardPair& a, const StandardPair& b) {
              if (!(a.m == b.m)) return a.m < b.m;
              return a.z.bits() < b.z.bits();
            });
  return out;
}

int multiplicity(const MonomialIdeal& ideal, VertexSet z) {
  int count = 0;
  for (const StandardPair& p : standard_pairs(ideal))
    if (p.z == z) ++count;
  return count;
}

long long arithmetic_degree(const MonomialIdeal& ideal) {
  return static_cast<long long>(standard_pairs(ideal).size());
}

long long degree(const MonomialIdeal& ideal) {
  std::vector<MonomialPrime> primes = associated_primes(ideal);
  std::set<std::uint64_t> minimal;
  for (const MonomialPrime& p : primes) {
    bool is_minimal = true;
    for (const MonomialPrime& q : primes)
      if (!(q == p) && q.support.subset_of(p.support)) {
        is_minimal = false;
        break;
      }
    if (is_minimal) minimal.insert(p.support.bits());
  }
  VertexSet all = VertexSet::first_n(ideal.nvars());
  long long total = 0;
  for (const StandardPair& p : standard_pairs(ideal))
    if (minimal.count((all - p.z).bits())) ++total;
  return total;
}

}  // namespace oddholes
