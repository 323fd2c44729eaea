#include "oddholes/decomposition.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "transversal.hpp"

namespace oddholes {

MonomialIdeal IrreducibleComponent::to_ideal() const {
  int n = exponents.nvars();
  std::vector<Monomial> gens;
  for (int i : exponents.support().to_vector())
    gens.push_back(Monomial::variable(n, i, exponents.exponent(i)));
  return MonomialIdeal(n, std::move(gens));
}

MonomialIdeal MonomialPrime::to_ideal(int nvars) const {
  std::vector<Monomial> gens;
  for (int i : support.to_vector())
    gens.push_back(Monomial::variable(nvars, i));
  return MonomialIdeal(nvars, std::move(gens));
}

bool prime_order(const MonomialPrime& a, const MonomialPrime& b) {
  if (a.height() != b.height()) return a.height() < b.height();
  return lex_less(a.support, b.support);
}

namespace {

void require_proper_nonzero(const MonomialIdeal& ideal, const char* what) {
  if (ideal.is_zero())
    throw std::invalid_argument(std::string(what) + ": zero ideal");
  if (ideal.is_unit())
    throw std::invalid_argument(std::string(what) + ": unit ideal");
}

std::vector<int> componentwise_max(const MonomialIdeal& ideal) {
  std::vector<int> a(ideal.nvars(), 0);
  for (const Monomial& g : ideal.generators())
    for (int i = 0; i < ideal.nvars(); ++i)
      a[i] = std::max(a[i], g.exponent(i));
  return a;
}

}  // namespace

std::vector<IrreducibleComponent> irreducible_decomposition(
    const MonomialIdeal& ideal) {
  require_proper_nonzero(ideal, "irreducible decomposition");
  int n = ideal.nvars();
  std::vector<int> a = componentwise_max(ideal);

  std::vector<detail::LeveledClause> clauses;
  clauses.reserve(ideal.generator_count());
  for (const Monomial& g : ideal.generators()) {
    detail::LeveledClause clause;
    for (int i : g.support().to_vector())
      clause.push_back({i, a[i] + 1 - g.exponent(i)});
    clauses.push_back(std::move(clause));
  }

  std::vector<IrreducibleComponent> out;
  for (const std::vector<int>& c :
       detail::minimal_transversals(n, clauses)) {
    std::vector<int> b(n, 0);
    for (int i = 0; i < n; ++i)
      if (c[i] >= 1) b[i] = a[i] + 1 - c[i];
    out.push_back({Monomial(std::move(b))});
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// m^b contained in m^c: every pure power x_i^{b_i} must be a multiple
// of some x_i^{c_i}.
bool component_contains(const std::vector<int>& c, const std::vector<int>& b) {
  for (std::size_t i = 0; i < b.size(); ++i)
    if (b[i] > 0 && (c[i] == 0 || c[i] > b[i])) return false;
  return true;
}

bool ideal_in_component(const MonomialIdeal& ideal, const std::vector<int>& c) {
  for (const Monomial& g : ideal.generators()) {
    bool inside = false;
    for (std::size_t i = 0; i < c.size() && !inside; ++i)
      inside = c[i] > 0 && g.exponent(static_cast<int>(i)) >= c[i];
    if (!inside) return false;
  }
  return true;
}

MonomialIdeal component_ideal(int nvars, const std::vector<int>& b) {
  std::vector<Monomial> gens;
  for (int i = 0; i < nvars; ++i)
    if (b[i] > 0) gens.push_back(Monomial::variable(nvars, i, b[i]));
  return MonomialIdeal(nvars, std::move(gens));
}

struct Splitter {
  int nvars;
  std::set<std::vector<std::vector<int>>> visited;
  std::set<std::vector<int>> components;

  void run(const MonomialIdeal& ideal) {
    std::vector<std::vector<int>> key;
    for (const Monomial& g : ideal.generators()) key.push_back(g.exponents());
    if (!visited.insert(std::move(key)).second) return;

    const Monomial* mixed = nullptr;
    for (const Monomial& g : ideal.generators())
      if (g.support().size() >= 2) {
        mixed = &g;
        break;
      }

    if (mixed == nullptr) {
      // Every generator is a pure power: the ideal is irreducible.
      std::vector<int> b(nvars, 0);
      for (const Monomial& g : ideal.generators()) {
        int i = g.support().min();
        b[i] = g.exponent(i);
      }
      components.insert(std::move(b));
      return;
    }

    // Split (.., u*v, ..) = (.., u, ..) cap (.., v, ..) for coprime u, v.
    int i = mixed->support().min();
    Monomial u = Monomial::variable(nvars, i, mixed->exponent(i));
    Monomial v = mixed->quotient_by(u);
    for (const Monomial& piece : {u, v}) {
      std::vector<Monomial> gens;
      for (const Monomial& g : ideal.generators())
        if (!(g == *mixed)) gens.push_back(g);
      gens.push_back(piece);
      run(MonomialIdeal(nvars, std::move(gens)));
    }
  }
};

}  // namespace

std::vector<IrreducibleComponent> irreducible_decomposition_by_splitting(
    const MonomialIdeal& ideal) {
  require_proper_nonzero(ideal, "irreducible decomposition");
  Splitter splitter{ideal.nvars(), {}, {}};
  splitter.run(ideal);
  std::vector<std::vector<int>> comps(splitter.components.begin(),
                                      splitter.components.end());

  // Drop components containing another one outright, then components
  // containing the intersection of all the others.
  std::vector<std::vector<int>> kept;
  for (const std::vector<int>& c : comps) {
    bool redundant = false;
    for (const std::vector<int>& b : comps)
      if (!(b == c) && component_contains(c, b)) {
        redundant = true;
        break;
      }
    if (!redundant) kept.push_back(c);
  }
  for (bool changed = true; changed && kept.size() > 1;) {
    changed = false;
    for (std::size_t k = 0; k < kept.size(); ++k) {
      MonomialIdeal rest = MonomialIdeal::unit(ideal.nvars());
      bool first = true;
      for (std::size_t j = 0; j < kept.size(); ++j) {
        if (j == k) continue;
        MonomialIdeal part = component_ideal(ideal.nvars(), kept[j]);
        rest = first ? part : intersect(rest, part);
        first = false;
      }
      if (ideal_in_component(rest, kept[k])) {
        kept.erase(kept.begin() + static_cast<std::ptrdiff_t>(k));
        changed = true;
        break;
      }
    }
  }

  std::vector<IrreducibleComponent> out;
  for (std::vector<int>& b : kept) out.push_back({Monomial(std::move(b))});
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<MonomialPrime> associated_primes(const MonomialIdeal& ideal) {
  std::set<std::uint64_t> seen;
  for (const IrreducibleComponent& c : irreducible_decomposition(ideal))
    seen.insert(c.support().bits());
  std::vector<MonomialPrime> out;
  for (std::uint64_t bits : seen) out.push_back({VertexSet(bits)});
  std::sort(out.begin(), out.end(), prime_order);
  return out;
}

MonomialIdeal alexander_dual_squarefree(const MonomialIdeal& ideal) {
  require_proper_nonzero(ideal, "squarefree dual");
  for (const Monomial& g : ideal.generators())
    for (int i = 0; i < ideal.nvars(); ++i)
      if (g.exponent(i) > 1)
        throw std::invalid_argument("squarefree dual: ideal is not squarefree");

  std::vector<detail::LeveledClause> clauses;
  for (const Monomial& g : ideal.generators()) {
    detail::LeveledClause clause;
    for (int i : g.support().to_vector()) clause.push_back({i, 1});
    clauses.push_back(std::move(clause));
  }
  std::vector<Monomial> gens;
  for (std::vector<int>& t : detail::minimal_transversals(ideal.nvars(), clauses))
    gens.push_back(Monomial(std::move(t)));
  return MonomialIdeal(ideal.nvars(), std::move(gens));
}

MonomialIdeal generalized_dual(const MonomialIdeal& ideal,
                               const Monomial& bound) {
  require_proper_nonzero(ideal, "dual");
  if (bound.nvars() != ideal.nvars())
    throw std::invalid_argument("dual: bound has wrong variable count");
  for (const Monomial& g : ideal.generators())
    if (!g.divides(bound))
      throw std::invalid_argument("dual: generator exceeds the bound");

  std::vector<Monomial> gens;
  for (const IrreducibleComponent& c : irreducible_decomposition(ideal)) {
    std::vector<int> e(ideal.nvars(), 0);
    for (int i : c.support().to_vector())
      e[i] = bound.exponent(i) + 1 - c.exponents.exponent(i);
    gens.push_back(Monomial(std::move(e)));
  }
  return MonomialIdeal(ideal.nvars(), std::move(gens));
}

}  // namespace oddholes
