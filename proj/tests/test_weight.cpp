#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "wzk/weight.hpp"

#include <limits>
#include <random>
#include <stdexcept>

using namespace wzk;

namespace {

LieType lt(char f, int n) { return make_lie_type(static_cast<Family>(f), n); }

Weight w(char f, int n, std::vector<long long> coeffs) {
  return make_weight(lt(f, n), std::move(coeffs));
}

}  // namespace

TEST_CASE("constructors and predicates") {
  CHECK(is_zero(zero_weight(lt('B', 4))));
  CHECK(fundamental_weight(lt('C', 3), 2) == w('C', 3, {0, 1, 0}));
  CHECK_THROWS_AS(fundamental_weight(lt('C', 3), 4), std::invalid_argument);
  CHECK_THROWS_AS(fundamental_weight(lt('C', 3), 0), std::invalid_argument);
  CHECK_THROWS_AS(make_weight(lt('A', 2), {1}), std::invalid_argument);

  CHECK(is_dominant(w('A', 2, {0, 3})));
  CHECK_FALSE(is_dominant(w('A', 2, {1, -1})));
  CHECK(is_p_restricted(w('A', 2, {1, 2}), 3));
  CHECK_FALSE(is_p_restricted(w('A', 2, {1, 3}), 3));
  CHECK_FALSE(is_p_restricted(w('A', 2, {-1, 0}), 3));
}

TEST_CASE("arithmetic is checked") {
  const Weight u = w('A', 2, {1, 2});
  const Weight v = w('A', 2, {3, -1});
  CHECK(add(u, v) == w('A', 2, {4, 1}));
  CHECK(sub(u, v) == w('A', 2, {-2, 3}));
  CHECK(scale(u, 3) == w('A', 2, {3, 6}));
  CHECK_THROWS_AS(add(u, w('A', 3, {0, 0, 0})), std::invalid_argument);

  const long long big = std::numeric_limits<long long>::max();
  CHECK_THROWS_AS(scale(w('A', 1, {big}), 2), std::overflow_error);
  CHECK_THROWS_AS(add(w('A', 1, {big}), w('A', 1, {1})), std::overflow_error);
}

TEST_CASE("root coordinates: pinned values") {
  const RootCoords a1 = to_root_coords(w('A', 1, {1}));
  CHECK(a1.coords == std::vector<Rational>{Rational(1, 2)});

  const RootCoords c2 = to_root_coords(w('C', 2, {0, 1}));
  CHECK(c2.coords == std::vector<Rational>{1, 1});

  const RootCoords g1 = to_root_coords(w('G', 2, {1, 0}));
  CHECK(g1.coords == std::vector<Rational>{2, 1});
  const RootCoords g2 = to_root_coords(w('G', 2, {0, 1}));
  CHECK(g2.coords == std::vector<Rational>{3, 2});
}

TEST_CASE("root coordinate round trips over random weights") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long long> coeff(-6, 9);
  for (LieType t : {lt('A', 3), lt('B', 4), lt('C', 4), lt('D', 5), lt('F', 4),
                    lt('G', 2), lt('E', 6)}) {
    for (int rep = 0; rep < 50; ++rep) {
      std::vector<long long> c(t.rank);
      for (auto& x : c) x = coeff(rng);
      const Weight u = make_weight(t, c);
      CHECK(from_root_coords(to_root_coords(u)) == u);
    }
  }
}

TEST_CASE("from_root_coords rejects non-weight coordinates") {
  RootCoords c{lt('A', 1), {Rational(1, 3)}};
  CHECK_THROWS_AS(from_root_coords(c), std::invalid_argument);
}

TEST_CASE("root lattice membership: pinned values") {
  CHECK(is_radical(w('A', 1, {2})));
  CHECK_FALSE(is_radical(w('A', 1, {3})));
  CHECK(is_radical(w('A', 2, {1, 1})));
  CHECK_FALSE(is_radical(w('A', 2, {1, 0})));
  CHECK(is_radical(w('B', 3, {1, 1, 0})));
  CHECK_FALSE(is_radical(w('B', 3, {0, 0, 1})));
  CHECK(is_radical(w('C', 3, {1, 0, 1})));
  CHECK_FALSE(is_radical(w('C', 3, {1, 0, 0})));
  CHECK(is_radical(w('G', 2, {1, 0})));
  CHECK(is_radical(w('G', 2, {0, 1})));
  CHECK(is_radical(w('F', 4, {1, 0, 0, 0})));
  CHECK(is_radical(w('E', 8, {1, 0, 0, 0, 0, 0, 0, 0})));
}

TEST_CASE("congruence table agrees with coordinate integrality") {
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<long long> coeff(-5, 8);
  for (LieType t : {lt('A', 4), lt('B', 5), lt('C', 5), lt('D', 4), lt('D', 5),
                    lt('E', 6), lt('E', 7), lt('E', 8), lt('F', 4), lt('G', 2)}) {
    for (int rep = 0; rep < 200; ++rep) {
      std::vector<long long> c(t.rank);
      for (auto& x : c) x = coeff(rng);
      const Weight u = make_weight(t, c);
      CHECK(is_radical(u) == is_radical_by_table(u));
    }
  }
}

TEST_CASE("inner products: pinned values") {
  CHECK(inner(w('A', 1, {1}), w('A', 1, {1})) == Rational(1, 2));
  // B_2: (omega_2, omega_2) = 1/2, (omega_1, omega_2) = 1/2, (omega_1, omega_1) = 1.
  CHECK(inner(w('B', 2, {0, 1}), w('B', 2, {0, 1})) == Rational(1, 2));
  CHECK(inner(w('B', 2, {1, 0}), w('B', 2, {0, 1})) == Rational(1, 2));
  CHECK(inner(w('B', 2, {1, 0}), w('B', 2, {1, 0})) == 1);
  CHECK(inner(w('B', 2, {2, 1}), w('B', 2, {0, 1})) == Rational(3, 2));
  // G_2: (omega_1, omega_1) = 2 with short roots of squared length 2.
  CHECK(inner(w('G', 2, {1, 0}), w('G', 2, {1, 0})) == 2);
  CHECK(inner(w('G', 2, {0, 1}), w('G', 2, {0, 1})) == 6);
  // Symmetry and bilinearity spot check.
  const Weight u = w('C', 3, {1, 2, 0});
  const Weight v = w('C', 3, {0, 1, 3});
  CHECK(inner(u, v) == inner(v, u));
  CHECK(inner(add(u, u), v) == 2 * inner(u, v));
}

TEST_CASE("dominance order") {
  CHECK(dominance_geq(w('A', 1, {3}), w('A', 1, {1})));
  CHECK_FALSE(dominance_geq(w('A', 1, {2}), w('A', 1, {1})));
  CHECK(dominance_geq(w('A', 2, {1, 1}), w('A', 2, {0, 0})));
  CHECK_FALSE(dominance_geq(w('A', 2, {1, 0}), w('A', 2, {0, 0})));
  CHECK(dominance_geq(w('C', 3, {1, 1, 0}), w('C', 3, {0, 0, 1})));
  CHECK(dominance_geq(w('B', 3, {0, 1, 0}), w('B', 3, {0, 0, 0})));

  // Reflexive, antisymmetric on distinct weights, transitive.
  const Weight a = w('A', 2, {2, 2});
  const Weight b = w('A', 2, {1, 1});
  const Weight z = w('A', 2, {0, 0});
  CHECK(dominance_geq(a, a));
  CHECK(dominance_geq(a, b));
  CHECK_FALSE(dominance_geq(b, a));
  CHECK(dominance_geq(b, z));
  CHECK(dominance_geq(a, z));
}

TEST_CASE("dominance over a multiple of a fundamental weight") {
  // A_1: 5 omega >= 3 omega (difference is a root), but not >= 4 omega.
  CHECK(dominates_multiple_fundamental(w('A', 1, {5}), 3, 1));
  CHECK_FALSE(dominates_multiple_fundamental(w('A', 1, {5}), 4, 1));
  CHECK_FALSE(dominates_multiple_fundamental(w('A', 1, {5}), 7, 1));
  // Agreement with direct dominance on a small sample.
  for (long long m = 0; m <= 4; ++m)
    for (long long x = 0; x <= 4; ++x)
      for (long long y = 0; y <= 4; ++y) {
        const Weight u = w('B', 2, {x, y});
        CHECK(dominates_multiple_fundamental(u, m, 2) ==
              dominance_geq(u, scale(fundamental_weight(lt('B', 2), 2), m)));
      }
}

TEST_CASE("duality permutes coefficients") {
  CHECK(dual(w('A', 3, {1, 2, 3})) == w('A', 3, {3, 2, 1}));
  CHECK(dual(w('B', 3, {1, 2, 3})) == w('B', 3, {1, 2, 3}));
  CHECK(dual(w('D', 4, {1, 2, 3, 4})) == w('D', 4, {1, 2, 3, 4}));
  CHECK(dual(w('D', 5, {1, 2, 3, 4, 5})) == w('D', 5, {1, 2, 3, 5, 4}));
  CHECK(dual(w('E', 6, {1, 0, 0, 0, 0, 0})) == w('E', 6, {0, 0, 0, 0, 0, 1}));
  CHECK(dual(dual(w('E', 6, {1, 2, 3, 4, 5, 6}))) == w('E', 6, {1, 2, 3, 4, 5, 6}));
}

TEST_CASE("p-adic expansion") {
  CHECK(p_adic_expansion(w('A', 1, {7}), 2) ==
        std::vector<Weight>{w('A', 1, {1}), w('A', 1, {1}), w('A', 1, {1})});
  CHECK(p_adic_expansion(w('A', 2, {3, 27}), 3) ==
        std::vector<Weight>{w('A', 2, {0, 0}), w('A', 2, {1, 0}),
                            w('A', 2, {0, 0}), w('A', 2, {0, 1})});
  CHECK(p_adic_expansion(zero_weight(lt('A', 2)), 5).empty());
  CHECK_THROWS_AS(p_adic_expansion(w('A', 1, {-1}), 2), std::invalid_argument);

  // Digits reassemble to the original weight.
  const Weight u = w('C', 3, {9, 4, 17});
  Weight acc = zero_weight(lt('C', 3));
  long long f = 1;
  for (const Weight& d : p_adic_expansion(u, 3)) {
    acc = add(acc, scale(d, f));
    f *= 3;
  }
  CHECK(acc == u);
}

TEST_CASE("weight parsing and printing") {
  CHECK(parse_weight("C:3 1,0,2") == w('C', 3, {1, 0, 2}));
  CHECK(parse_weight(lt('A', 2), "4,-1") == w('A', 2, {4, -1}));
  CHECK(to_string(w('C', 3, {1, 0, 2})) == "C:3 1,0,2");
  CHECK(coeffs_to_string(w('A', 2, {4, -1})) == "4,-1");
  CHECK_THROWS_AS(parse_weight(lt('A', 2), "1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_weight(lt('A', 2), "1,2,3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_weight(lt('A', 2), "1,x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_weight(lt('A', 2), ""), std::invalid_argument);
  CHECK_THROWS_AS(parse_weight("C:3"), std::invalid_argument);
}
