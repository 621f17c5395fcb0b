#pragma once

#include "wzk/root_data.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace wzk {

/// Integral weight in the fundamental basis: w = sum_i coeffs[i-1] * omega_i.
/// Coefficients may be negative; dominance and p-restriction are predicates,
/// not representation invariants.
struct Weight {
  LieType type;
  std::vector<long long> coeffs;

  friend bool operator==(const Weight&, const Weight&) = default;
  friend auto operator<=>(const Weight&, const Weight&) = default;
};

/// Coordinates of a weight in the simple-root basis; rational in general,
/// integral exactly for weights of the root lattice.
struct RootCoords {
  LieType type;
  std::vector<Rational> coords;
};

Weight zero_weight(LieType t);
Weight fundamental_weight(LieType t, int node);
Weight make_weight(LieType t, std::vector<long long> coeffs);

bool is_zero(const Weight& w);
bool is_dominant(const Weight& w);
bool is_p_restricted(const Weight& w, long long p);

Weight add(const Weight& u, const Weight& v);
Weight sub(const Weight& u, const Weight& v);
Weight scale(const Weight& w, long long m);

/// w = sum_k coords[k-1] * alpha_k, computed exactly through the inverse
/// Cartan matrix.
RootCoords to_root_coords(const Weight& w);

/// Inverse of to_root_coords; throws unless the coordinates describe an
/// integral weight.
Weight from_root_coords(const RootCoords& c);

/// Membership in the root lattice (all root coordinates integral).
bool is_radical(const Weight& w);

/// Same predicate through the per-family congruence table instead of the
/// inverse Cartan matrix; kept separate so the two routes can be compared.
bool is_radical_by_table(const Weight& w);

/// Exact inner product (u, v) induced by the Gram matrix of the fundamental
/// weights.
Rational inner(const Weight& u, const Weight& v);

/// Dominance order: u >= v iff u - v is a non-negative integral combination
/// of simple roots.
bool dominance_geq(const Weight& u, const Weight& v);

/// Decides w >= m * omega_node via the inner-product criterion: w - m*omega
/// must lie in the root lattice and (w, omega) >= m (omega, omega).
bool dominates_multiple_fundamental(const Weight& w, long long m, int node);

/// Highest weight of the dual module: coefficients permuted by the graph
/// automorphism induced by -w0.
Weight dual(const Weight& w);

/// Base-p digits of a dominant weight, least significant first, trailing
/// zero digits trimmed.  Empty for the zero weight.
std::vector<Weight> p_adic_expansion(const Weight& w, long long p);

std::string coeffs_to_string(const Weight& w);             // "1,0,2"
std::string to_string(const Weight& w);                    // "C:3 1,0,2"
Weight parse_weight(std::string_view text);                // "C:3 1,0,2"
Weight parse_weight(LieType t, std::string_view csv);      // "1,0,2"

}  // namespace wzk
