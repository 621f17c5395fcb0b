#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "wzk/oracle.hpp"
#include "wzk/sweep.hpp"

#include <algorithm>
#include <stdexcept>

using namespace wzk;

namespace {

LieType lt(char f, int n) { return make_lie_type(static_cast<Family>(f), n); }

Weight w(char f, int n, std::vector<long long> coeffs) {
  return make_weight(lt(f, n), std::move(coeffs));
}

std::vector<Weight> sorted(std::vector<Weight> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_CASE("dominant subweights by box enumeration") {
  CHECK(dominant_subweights(w('A', 1, {4})).weights ==
        sorted({w('A', 1, {0}), w('A', 1, {2}), w('A', 1, {4})}));
  CHECK(dominant_subweights(w('A', 1, {3})).weights ==
        sorted({w('A', 1, {1}), w('A', 1, {3})}));
  CHECK(dominant_subweights(w('A', 2, {1, 1})).weights ==
        sorted({w('A', 2, {0, 0}), w('A', 2, {1, 1})}));
  CHECK(dominant_subweights(w('G', 2, {0, 1})).weights ==
        sorted({w('G', 2, {0, 0}), w('G', 2, {1, 0}), w('G', 2, {0, 1})}));
  CHECK(dominant_subweights(w('B', 2, {1, 0})).weights ==
        sorted({w('B', 2, {0, 0}), w('B', 2, {1, 0})}));
  CHECK(dominant_subweights(w('C', 2, {1, 0})).weights ==
        std::vector<Weight>{w('C', 2, {1, 0})});
  CHECK(dominant_subweights(w('B', 3, {0, 1, 0})).weights ==
        sorted({w('B', 3, {0, 0, 0}), w('B', 3, {1, 0, 0}), w('B', 3, {0, 1, 0})}));
  CHECK(dominant_subweights(w('C', 3, {0, 1, 0})).weights ==
        sorted({w('C', 3, {0, 0, 0}), w('C', 3, {0, 1, 0})}));
  CHECK_THROWS_AS(dominant_subweights(w('A', 2, {-1, 0})), std::invalid_argument);

  // Every member is dominant and dominated by the input.
  const DominantWeightSet s = dominant_subweights(w('F', 4, {1, 0, 0, 1}));
  for (const Weight& nu : s.weights) {
    CHECK(is_dominant(nu));
    CHECK(dominance_geq(w('F', 4, {1, 0, 0, 1}), nu));
  }
  CHECK(s.contains(w('F', 4, {0, 0, 0, 0})));
}

TEST_CASE("module dominant weights away from special characteristics") {
  CHECK(module_dominant_weights(lt('A', 1), 7, w('A', 1, {4})).weights ==
        sorted({w('A', 1, {0}), w('A', 1, {2}), w('A', 1, {4})}));
  CHECK(module_dominant_weights(lt('G', 2), 5, w('G', 2, {0, 1})).weights ==
        sorted({w('G', 2, {0, 0}), w('G', 2, {1, 0}), w('G', 2, {0, 1})}));
  // Zero weight module.
  CHECK(module_dominant_weights(lt('A', 2), 3, w('A', 2, {0, 0})).weights ==
        std::vector<Weight>{w('A', 2, {0, 0})});
  // Frobenius twists scale the whole set.
  CHECK(module_dominant_weights(lt('A', 1), 2, w('A', 1, {4})).weights ==
        std::vector<Weight>{w('A', 1, {4})});
  CHECK(module_dominant_weights(lt('A', 1), 7, w('A', 1, {28})).weights ==
        sorted({w('A', 1, {0}), w('A', 1, {14}), w('A', 1, {28})}));
}

TEST_CASE("module dominant weights: symplectic family at p = 2") {
  const DominantWeightSet spin = module_dominant_weights(lt('C', 4), 2, w('C', 4, {0, 0, 0, 1}));
  CHECK(spin.weights == std::vector<Weight>{w('C', 4, {0, 0, 0, 1})});
  REQUIRE(spin.notes.size() == 1);
  CHECK(spin.notes[0] == "the symplectic spin module has a single dominant weight");

  CHECK(module_dominant_weights(lt('C', 3), 2, w('C', 3, {0, 1, 0})).weights ==
        sorted({w('C', 3, {0, 0, 0}), w('C', 3, {0, 1, 0})}));
}

TEST_CASE("module dominant weights: orthogonal family at p = 2") {
  const DominantWeightSet spin = module_dominant_weights(lt('B', 3), 2, w('B', 3, {0, 0, 1}));
  CHECK(spin.weights == std::vector<Weight>{w('B', 3, {0, 0, 1})});
  CHECK(spin.notes == std::vector<std::string>{"the spin module has a single dominant weight"});

  // The p = 2 vector module loses the zero weight of its characteristic-zero
  // weight system; the transported set reflects that.
  const DominantWeightSet vec = module_dominant_weights(lt('B', 2), 2, w('B', 2, {1, 0}));
  CHECK(vec.weights == std::vector<Weight>{w('B', 2, {1, 0})});
  CHECK(vec.notes ==
        std::vector<std::string>{"weights carried across the special isogeny from type C"});

  CHECK(module_dominant_weights(lt('B', 3), 2, w('B', 3, {1, 0, 0})).weights ==
        std::vector<Weight>{w('B', 3, {1, 0, 0})});
  CHECK(module_dominant_weights(lt('B', 3), 2, w('B', 3, {0, 1, 0})).weights ==
        sorted({w('B', 3, {0, 0, 0}), w('B', 3, {0, 1, 0})}));
}

TEST_CASE("module dominant weights: G_2 at p = 2 and the assumption notes") {
  const LieType g = lt('G', 2);
  CHECK(module_dominant_weights(g, 2, w('G', 2, {1, 0})).weights ==
        std::vector<Weight>{w('G', 2, {1, 0})});
  CHECK(module_dominant_weights(g, 2, w('G', 2, {1, 0})).notes.empty());

  const DominantWeightSet adj = module_dominant_weights(g, 2, w('G', 2, {0, 1}));
  CHECK(adj.weights == sorted({w('G', 2, {0, 0}), w('G', 2, {1, 0}), w('G', 2, {0, 1})}));
  REQUIRE(adj.notes.size() == 1);
  CHECK(adj.notes[0] == "membership of omega_1 read off from the characteristic-zero system");

  const DominantWeightSet st = module_dominant_weights(g, 2, w('G', 2, {1, 1}));
  CHECK(st.weights == sorted({w('G', 2, {0, 0}), w('G', 2, {1, 0}), w('G', 2, {2, 0}),
                              w('G', 2, {0, 1}), w('G', 2, {1, 1})}));
  CHECK(st.notes.size() == 1);

  const DominantWeightSet f4 = module_dominant_weights(lt('F', 4), 2, w('F', 4, {0, 0, 1, 0}));
  REQUIRE(f4.notes.size() == 1);
  CHECK(f4.notes[0] == "characteristic-zero weight system assumed at this special characteristic");
  CHECK(f4.weights == dominant_subweights(w('F', 4, {0, 0, 1, 0})).weights);

  const DominantWeightSet g3 = module_dominant_weights(g, 3, w('G', 2, {1, 0}));
  REQUIRE(g3.notes.size() == 1);
  CHECK(g3.notes[0] == "characteristic-zero weight system assumed at this special characteristic");
}

TEST_CASE("module dominant weights: rejected inputs") {
  CHECK_THROWS_AS(module_dominant_weights(lt('B', 2), 2, w('B', 2, {1, 1})),
                  std::invalid_argument);
  CHECK_THROWS_AS(module_dominant_weights(lt('A', 1), 2, w('A', 1, {3})),
                  std::invalid_argument);
  CHECK_THROWS_AS(module_dominant_weights(lt('A', 1), 4, w('A', 1, {1})),
                  std::invalid_argument);
  CHECK_THROWS_AS(module_dominant_weights(lt('A', 2), 3, w('A', 2, {0, -1})),
                  std::invalid_argument);
}

TEST_CASE("zero weight of a twisted tensor product") {
  const LieType a1 = lt('A', 1);
  CHECK_FALSE(tensor_has_zero_weight(a1, 3, {0, w('A', 1, {1})}, {1, w('A', 1, {1})}));
  CHECK(tensor_has_zero_weight(a1, 3, {0, w('A', 1, {2})}, {1, w('A', 1, {2})}));
  CHECK(tensor_has_zero_weight(a1, 3, {1, w('A', 1, {2})}, {0, w('A', 1, {2})}));
  CHECK_FALSE(tensor_has_zero_weight(a1, 3, {2, w('A', 1, {1})}, {0, w('A', 1, {2})}));

  // A_2: dual pairing across the twist gap.
  const LieType a2 = lt('A', 2);
  CHECK(tensor_has_zero_weight(a2, 5, {0, w('A', 2, {0, 2})}, {0, w('A', 2, {2, 0})}));
  CHECK_FALSE(tensor_has_zero_weight(a2, 5, {0, w('A', 2, {0, 2})}, {0, w('A', 2, {0, 2})}));

  // G_2 at p = 2: the Steinberg pair reaches zero, the short pair does not.
  const LieType g = lt('G', 2);
  CHECK(tensor_has_zero_weight(g, 2, {0, w('G', 2, {1, 1})}, {1, w('G', 2, {1, 0})}));
  CHECK_FALSE(tensor_has_zero_weight(g, 2, {0, w('G', 2, {1, 0})}, {1, w('G', 2, {1, 0})}));
  CHECK(tensor_has_zero_weight(g, 2, {0, w('G', 2, {0, 1})}, {1, w('G', 2, {0, 1})}));

  CHECK_THROWS_AS(tensor_has_zero_weight(a1, 2, {-1, w('A', 1, {1})}, {0, w('A', 1, {1})}),
                  std::invalid_argument);
}

TEST_CASE("instance enumeration covers twists and merged digits") {
  const TwoFactorBox box = enumerate_two_factor_instances(lt('C', 2), 2, 2, true);
  // Digits: (1,0), (0,1); (1,1) splits at p = 2 and is excluded.
  CHECK(box.restricted == sorted({w('C', 2, {1, 0}), w('C', 2, {0, 1})}));
  // 2 twists x 4 pairs, plus one merged instance (1,0) + omega_2.
  CHECK(box.instances.size() == 9);
  int merged = 0;
  for (const TwoFactorInstance& inst : box.instances)
    if (inst.i == 0) {
      ++merged;
      CHECK(box.restricted[static_cast<size_t>(inst.a)].coeffs[1] == 0);
      CHECK(box.restricted[static_cast<size_t>(inst.b)] == w('C', 2, {0, 1}));
    }
  CHECK(merged == 1);

  const TwoFactorBox gbox = enumerate_two_factor_instances(lt('G', 2), 3, 1, true);
  // Digits: all of {0,1,2}^2 minus zero minus the four mixed-support ones.
  CHECK(gbox.restricted.size() == 4);
  int split = 0;
  for (const TwoFactorInstance& inst : gbox.instances)
    if (inst.i == 0) ++split;
  CHECK(split == 4);
  CHECK(gbox.instances.size() == 16 + 4);

  CHECK(enumerate_two_factor_instances(lt('A', 2), 3, 1, true).instances.size() == 64);
  CHECK_THROWS_AS(enumerate_two_factor_instances(lt('A', 2), 4, 1, true),
                  std::invalid_argument);
}

TEST_CASE("oracle cache agrees with the direct tensor evaluation") {
  for (long long p : {2, 3}) {
    const LieType t = lt('C', 2);
    const TwoFactorBox box = enumerate_two_factor_instances(t, p, 2, true);
    const OracleCache cache(t, p, box.restricted);
    CHECK(cache.size() == box.restricted.size());
    for (const TwoFactorInstance& inst : box.instances) {
      const auto a = static_cast<size_t>(inst.a);
      const auto b = static_cast<size_t>(inst.b);
      const bool direct = tensor_has_zero_weight(
          t, p, {0, box.restricted[a]}, {inst.i, box.restricted[b]});
      long long m = 1;
      for (int x = 0; x < inst.i; ++x) m *= p;
      CHECK(cache.tensor_zero(a, b, m) == direct);
    }
  }
}
