#pragma once

#include <string>
#include <vector>

#include "oddholes/vertex_set.hpp"

namespace oddholes {

// Monomial in a fixed polynomial ring k[x_1..x_n], stored as its
// exponent vector. Exponents are non-negative; the unit monomial 1 has
// all exponents zero.
class Monomial {
 public:
  explicit Monomial(std::vector<int> exponents);
  static Monomial unit(int nvars);
  static Monomial variable(int nvars, int i, int power = 1);

  int nvars() const { return static_cast<int>(e_.size()); }
  int exponent(int i) const { return e_[i]; }
  const std::vector<int>& exponents() const { return e_; }
  int degree() const;
  bool is_unit() const;
  VertexSet support() const;

  bool divides(const Monomial& o) const;
  Monomial times(const Monomial& o) const;
  Monomial lcm_with(const Monomial& o) const;
  Monomial gcd_with(const Monomial& o) const;
  // this / o, requiring o | this.
  Monomial quotient_by(const Monomial& o) const;

  bool operator==(const Monomial&) const = default;
  // Lexicographic on exponent vectors; the canonical generator order.
  bool operator<(const Monomial& o) const { return e_ < o.e_; }

 private:
  std::vector<int> e_;
};

// "2 0 1" style: space-separated exponents, one per variable.
std::string format_exponents(const Monomial& m);

// "x1^2*x3" style, using the given variable names ("1" when the
// monomial is the unit). Names are those from variable_names().
std::string format_human(const Monomial& m,
                         const std::vector<std::string>& names);

// One name per variable: label "k" (as produced for unlabeled input)
// becomes "xk"; any other label becomes "x[label]".
std::vector<std::string> variable_names(
    const std::vector<std::string>& labels);

// Accepts either syntax above. Exponent form must list exactly nvars
// numbers; human form accepts factors in any order, '*'-separated, with
// optional ^power. Throws std::invalid_argument on malformed input.
Monomial parse_monomial(const std::string& text, int nvars,
                        const std::vector<std::string>& names);

}  // namespace oddholes
