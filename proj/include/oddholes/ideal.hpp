#pragma once

#include <vector>

#include "oddholes/monomial.hpp"

namespace oddholes {

// Monomial ideal held by its unique minimal generating set, kept in
// lexicographic order on exponent vectors. The zero ideal has no
// generators; the unit ideal is generated by 1.
class MonomialIdeal {
 public:
  // Minimalizes and sorts the given generators.
  MonomialIdeal(int nvars, std::vector<Monomial> generators);
  static MonomialIdeal zero(int nvars);
  static MonomialIdeal unit(int nvars);

  int nvars() const { return nvars_; }
  const std::vector<Monomial>& generators() const { return gens_; }
  int generator_count() const { return static_cast<int>(gens_.size()); }

  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_[0].is_unit(); }

  bool operator==(const MonomialIdeal&) const = default;

 private:
  int nvars_;
  std::vector<Monomial> gens_;
};

// Divisibility antichain of the input: drops every monomial some other
// one divides, dedupes, sorts lexicographically.
std::vector<Monomial> minimalize(std::vector<Monomial> monomials);

bool contains(const MonomialIdeal& ideal, const Monomial& m);

// Every generator of inner lies in outer.
bool contains(const MonomialIdeal& outer, const MonomialIdeal& inner);

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b);

// s-fold product; s = 0 gives the unit ideal.
MonomialIdeal power(const MonomialIdeal& ideal, int s);

// Generated by the pairwise least common multiples.
MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);

// (ideal : m), generated by g / gcd(g, m) over the generators g.
MonomialIdeal colon_by_monomial(const MonomialIdeal& ideal,
                                const Monomial& m);

}  // namespace oddholes
