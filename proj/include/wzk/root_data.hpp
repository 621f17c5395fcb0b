#pragma once

#include "wzk/lie_type.hpp"
#include "wzk/matrix.hpp"

#include <vector>

namespace wzk {

/// Exact root datum of one simple type.  Matrices are 0-indexed internally;
/// the node arguments of the free functions below are 1-based, matching the
/// usual tables.
///
/// Conventions: cartan[i][j] = 2(alpha_i, alpha_j)/(alpha_j, alpha_j), so the
/// simple roots expand as alpha_i = sum_j cartan[i][j] omega_j.  Its inverse
/// `delta` gives omega_i = sum_k delta(i,k) alpha_k, and the Gram matrix of
/// the fundamental weights is gram(j,k) = (omega_j, omega_k)
/// = half_length[k] * delta(j,k).  Root lengths are normalized so short roots
/// of B_n and F_4 have (alpha,alpha) = 1, short roots of C_n have
/// (alpha,alpha) = 2, and short roots of G_2 have (alpha,alpha) = 2.
struct RootData {
  LieType type;
  IntMatrix cartan;
  RationalMatrix delta;
  RationalMatrix gram;
  std::vector<Rational> half_length;  // (alpha_k, alpha_k)/2, index 0-based
  std::vector<int> miniscule;         // 1-based nodes, ascending
  int squared_length_ratio;           // long/short: 1 (ADE), 2 (BCF), 3 (G)
  std::vector<int> dual_perm;         // 1-based; (w*)_k = w_{dual_perm[k-1]}
  std::vector<bool> short_node;       // 0-based; meaningful when ratio > 1
};

/// Cached accessor; safe to call concurrently.  Throws on invalid type.
const RootData& root_data(LieType t);

IntMatrix cartan_matrix(LieType t);
RationalMatrix inverse_cartan(LieType t);
Rational half_root_length(LieType t, int node);
RationalMatrix gram_fundamental(LieType t);
std::vector<int> miniscule_weights(LieType t);
int squared_length_ratio(LieType t);
std::vector<int> dual_permutation(LieType t);

}  // namespace wzk
