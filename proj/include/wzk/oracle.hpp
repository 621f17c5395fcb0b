#pragma once

#include <string>
#include <vector>

#include "wzk/weight.hpp"

namespace wzk {

// Set of dominant weights, sorted in coefficient order.  Notes record any
// assumption that went into building the set.
struct DominantWeightSet {
  LieType type;
  std::vector<Weight> weights;
  std::vector<std::string> notes;

  bool contains(const Weight& w) const;
};

// All dominant mu with mu <= lambda in the dominance order, by direct
// enumeration of non-negative integral root coordinates.  lambda must be
// dominant.  The box has prod_k (1 + floor c_k) cells, where c_k are the
// root coordinates of lambda, so this is only usable for moderate weights.
DominantWeightSet dominant_subweights(const Weight& lambda);

// Dominant weights of the irreducible module with highest weight w, for w of
// the form p^k * (p-restricted, tensor-indecomposable).  Throws
// std::invalid_argument when w is not of that form.
DominantWeightSet module_dominant_weights(LieType t, long long p, const Weight& w);

// One tensor factor: the module with the given restricted highest weight,
// twisted by the twist-th power of Frobenius.
struct TwistedFactor {
  long long twist = 0;
  Weight restricted;
};

// Whether L(f0) (x) L(f1) has the zero weight, decided from the full dominant
// weight sets of the two factors.
bool tensor_has_zero_weight(LieType t, long long p, const TwistedFactor& f0,
                            const TwistedFactor& f1);

}  // namespace wzk
