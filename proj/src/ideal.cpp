#include "oddholes/ideal.hpp"

#include <algorithm>
#include <stdexcept>

namespace oddholes {

std::vector<Monomial> minimalize(std::vector<Monomial> monomials) {
  std::sort(monomials.begin(), monomials.end(),
            [](const Monomial& a, const Monomial& b) {
              if (a.degree() != b.degree()) return a.degree() < b.degree();
              return a < b;
            });
  monomials.erase(std::unique(monomials.begin(), monomials.end()),
                  monomials.end());

  // Processing by ascending degree means any divisor of m was already
  // accepted, so one pass against the accepted antichain suffices.
  std::vector<Monomial> kept;
  std::vector<std::uint64_t> kept_support;
  for (const Monomial& m : monomials) {
    const std::uint64_t support = m.support().bits();
    bool divisible = false;
    for (std::size_t k = 0; k < kept.size() && !divisible; ++k)
      divisible = (kept_support[k] & ~support) == 0 && kept[k].divides(m);
    if (!divisible) {
      kept.push_back(m);
      kept_support.push_back(support);
    }
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

MonomialIdeal::MonomialIdeal(int nvars, std::vector<Monomial> generators)
    : nvars_(nvars) {
  if (nvars < 0 || nvars > 64)
    throw std::invalid_argument("variable count out of range");
  for (const Monomial& g : generators)
    if (g.nvars() != nvars)
      throw std::invalid_argument("generator has the wrong variable count");
  gens_ = minimalize(std::move(generators));
}

MonomialIdeal MonomialIdeal::zero(int nvars) {
  return MonomialIdeal(nvars, {});
}

MonomialIdeal MonomialIdeal::unit(int nvars) {
  return MonomialIdeal(nvars, {Monomial::unit(nvars)});
}

bool contains(const MonomialIdeal& ideal, const Monomial& m) {
  for (const Monomial& g : ideal.generators())
    if (g.divides(m)) return true;
  return false;
}

bool contains(const MonomialIdeal& outer, const MonomialIdeal& inner) {
  for (const Monomial& g : inner.generators())
    if (!contains(outer, g)) return false;
  return true;
}

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.nvars() != b.nvars())
    throw std::invalid_argument("mismatched variable counts");
  std::vector<Monomial> gens;
  gens.reserve(a.generators().size() * b.generators().size());
  for (const Monomial& g : a.generators())
    for (const Monomial& h : b.generators()) gens.push_back(g.times(h));
  return MonomialIdeal(a.nvars(), std::move(gens));
}

MonomialIdeal power(const MonomialIdeal& ideal, int s) {
  if (s < 0) throw std::invalid_argument("negative power");
  MonomialIdeal result = MonomialIdeal::unit(ideal.nvars());
  for (int k = 0; k < s; ++k) result = product(result, ideal);
  return result;
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.nvars() != b.nvars())
    throw std::invalid_argument("mismatched variable counts");
  std::vector<Monomial> gens;
  gens.reserve(a.generators().size() * b.generators().size());
  for (const Monomial& g : a.generators())
    for (const Monomial& h : b.generators()) gens.push_back(g.lcm_with(h));
  return MonomialIdeal(a.nvars(), std::move(gens));
}

MonomialIdeal colon_by_monomial(const MonomialIdeal& ideal,
                                const Monomial& m) {
  if (m.nvars() != ideal.nvars())
    throw std::invalid_argument("mismatched variable counts");
  std::vector<Monomial> gens;
  gens.reserve(ideal.generators().size());
  for (const Monomial& g : ideal.generators())
    gens.push_back(g.quotient_by(g.gcd_with(m)));
  return MonomialIdeal(ideal.nvars(), std::move(gens));
}

}  // namespace oddholes
