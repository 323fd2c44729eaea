#include <vector>

#include "doctest.h"
#include "oddholes/ideal.hpp"
#include "support.hpp"

using namespace oddholes;
using testsupport::mono;

TEST_CASE("construction minimalizes and sorts the generators") {
  MonomialIdeal ideal(2, {mono({2, 1}), mono({1, 0}), mono({1, 2}),
                          mono({1, 0})});
  CHECK(ideal.generators() == std::vector<Monomial>{mono({1, 0})});

  MonomialIdeal sorted(2, {mono({2, 0}), mono({0, 1})});
  CHECK(sorted.generators() ==
        std::vector<Monomial>{mono({0, 1}), mono({2, 0})});
}

TEST_CASE("zero and unit ideals") {
  CHECK(MonomialIdeal::zero(3).is_zero());
  CHECK(MonomialIdeal::zero(3).generator_count() == 0);
  CHECK(MonomialIdeal::unit(3).is_unit());
  CHECK_FALSE(MonomialIdeal::unit(3).is_zero());
  CHECK(MonomialIdeal(3, {mono({0, 0, 0}), mono({1, 2, 0})}).is_unit());
}

TEST_CASE("minimalize is a divisibility antichain") {
  std::vector<Monomial> out = minimalize(
      {mono({2, 2}), mono({1, 1}), mono({3, 0}), mono({1, 1})});
  CHECK(out == std::vector<Monomial>{mono({1, 1}), mono({3, 0})});
  CHECK(minimalize({}).empty());
}

TEST_CASE("monomial membership") {
  MonomialIdeal ideal(2, {mono({2, 0}), mono({1, 1})});
  CHECK(contains(ideal, mono({2, 0})));
  CHECK(contains(ideal, mono({3, 2})));
  CHECK(contains(ideal, mono({1, 1})));
  CHECK_FALSE(contains(ideal, mono({1, 0})));
  CHECK_FALSE(contains(ideal, mono({0, 5})));
  CHECK_FALSE(contains(MonomialIdeal::zero(2), mono({1, 0})));
  CHECK(contains(MonomialIdeal::unit(2), mono({0, 0})));
}

TEST_CASE("ideal containment") {
  MonomialIdeal big(2, {mono({1, 0}), mono({0, 1})});
  MonomialIdeal small(2, {mono({1, 1})});
  CHECK(contains(big, small));
  CHECK_FALSE(contains(small, big));
  CHECK(contains(big, big));
}

TEST_CASE("products and powers") {
  MonomialIdeal edge(2, {mono({1, 0}), mono({0, 1})});
  MonomialIdeal square = power(edge, 2);
  CHECK(square.generators() ==
        std::vector<Monomial>{mono({0, 2}), mono({1, 1}), mono({2, 0})});
  CHECK(power(edge, 0).is_unit());
  CHECK(power(edge, 1) == edge);
  CHECK(product(edge, edge) == square);
}

TEST_CASE("the squared triangle cover ideal has six generators") {
  MonomialIdeal j(3, {mono({1, 1, 0}), mono({1, 0, 1}), mono({0, 1, 1})});
  MonomialIdeal j2 = power(j, 2);
  CHECK(j2.generator_count() == 6);
  CHECK(contains(j2, mono({2, 2, 0})));
  CHECK(contains(j2, mono({2, 1, 1})));
  CHECK_FALSE(contains(j2, mono({1, 1, 1})));
}

TEST_CASE("intersection") {
  MonomialIdeal x1(2, {mono({1, 0})});
  MonomialIdeal x2(2, {mono({0, 1})});
  CHECK(intersect(x1, x2) == MonomialIdeal(2, {mono({1, 1})}));

  MonomialIdeal a(2, {mono({2, 0}), mono({0, 1})});
  MonomialIdeal b(2, {mono({1, 0}), mono({0, 2})});
  MonomialIdeal both = intersect(a, b);
  CHECK(contains(both, mono({2, 0})));
  CHECK(contains(both, mono({0, 2})));
  CHECK(contains(both, mono({1, 1})));
  CHECK_FALSE(contains(both, mono({1, 0})));
  CHECK_FALSE(contains(both, mono({0, 1})));
}

TEST_CASE("membership distributes over intersection") {
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    MonomialIdeal a = testsupport::random_ideal(4, 4, 3, seed);
    MonomialIdeal b = testsupport::random_ideal(4, 3, 3, seed + 100);
    MonomialIdeal meet = intersect(a, b);
    std::vector<int> m(4, 0);
    std::vector<int> top(4, 4);
    do {
      Monomial probe = mono(std::vector<int>(m));
      CHECK(contains(meet, probe) ==
            (contains(a, probe) && contains(b, probe)));
    } while (testsupport::next_in_box(m, top));
  }
}

TEST_CASE("colon by a monomial") {
  MonomialIdeal ideal(2, {mono({2, 1})});
  CHECK(colon_by_monomial(ideal, mono({1, 0})) ==
        MonomialIdeal(2, {mono({1, 1})}));
  CHECK(colon_by_monomial(ideal, Monomial::unit(2)) == ideal);

  MonomialIdeal square(2, {mono({2, 0}), mono({1, 1}), mono({0, 2})});
  CHECK(colon_by_monomial(square, mono({1, 1})).is_unit());
}
