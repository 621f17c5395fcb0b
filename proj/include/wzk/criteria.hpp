#pragma once

#include "wzk/weight.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace wzk {

/// Shape of an irreducible module that factors into exactly two non-trivial
/// tensor-indecomposable pieces.  GENERIC covers two p-adic digits when every
/// p-restricted module is indecomposable (and always has i >= 1).  The BC*
/// shapes are the p = 2 patterns for B_n/C_n, where the restricted
/// indecomposables are the spin/last fundamental weight omega_n and the
/// weights with last coefficient 0 (written Omega0 below):
///   BC1: i = 0, lambda0 in Omega0, lambda1 = omega_n  (one two-sided digit)
///   BC2: i >= 1, lambda0 in Omega0, lambda1 = omega_n
///   BC3: i >= 1, lambda0, lambda1 in Omega0
///   BC4: i >= 1, lambda0 = lambda1 = omega_n
///   BC5: i >= 1, lambda0 = omega_n, lambda1 in Omega0
/// EG_SHORTLONG is the i = 0 split of a single restricted digit into its
/// short-node and long-node parts for F_4 at p = 2 and G_2 at p = 3.
enum class ShapeCase { Generic, BC1, BC2, BC3, BC4, BC5, ShortLong };

std::string_view to_string(ShapeCase c);

/// lambda = p^k (lambda0 + p^i lambda1), both parts non-zero, p-restricted
/// and tensor-indecomposable.
struct TensorShape {
  LieType type;
  long long p{};
  long long k{};
  long long i{};
  Weight lambda0;
  Weight lambda1;
  ShapeCase shape{};

  Weight stripped() const;     // lambda0 + p^i lambda1
  Weight reconstruct() const;  // p^k * stripped()
};

struct ClassifyResult {
  std::optional<TensorShape> shape;
  std::string reason;  // set when the module is not a two-factor product

  explicit operator bool() const { return shape.has_value(); }
};

/// Verdict plus a human-readable audit trail.  `case_label` names the single
/// terminal rule that produced the verdict; `trace` records the facts that
/// were evaluated on the way, in order.
struct Decision {
  bool has_zero_weight{};
  std::string case_label;
  std::vector<std::pair<std::string, std::string>> trace;
};

struct NotTwoFactorError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// 2x2-minor inequality m(i,j) * m(k,k) >= m(i,k) * m(k,j), evaluated
/// exactly.  All nodes 1-based.
bool minor_inequality(const RationalMatrix& m, int i, int j, int k);

/// Same inequality on the Gram matrix of the fundamental weights.
bool minor_inequality(LieType t, int i, int j, int k);

/// Checks the minor inequality for every node triple, on both the Gram
/// matrix and the inverse Cartan matrix.
bool all_minor_inequalities_hold(LieType t);

/// True when the irreducible module with this p-restricted highest weight
/// does not split as a tensor product.  Splitting happens exactly when
/// p equals the squared length ratio and the weight has support on both
/// short and long nodes.
bool is_tensor_indecomposable(LieType t, long long p, const Weight& w);

/// Decomposes V_lambda into p^k-twist, two digits and a shape case, or
/// reports why the module is not a product of exactly two non-trivial
/// indecomposable factors.
ClassifyResult classify_two_factor(LieType t, long long p, const Weight& lambda);

/// Decides whether the two-factor module has the zero weight.
Decision decide_two_factor(const TensorShape& shape);

/// classify + decide; throws NotTwoFactorError when classification fails.
Decision zero_weight_two_factor(LieType t, long long p, const Weight& lambda);

/// Independent evaluation for the B-family at p = 2, stated directly in
/// terms of images under the exceptional isogeny instead of transporting the
/// whole decision to C_n.  Kept as a cross-check of the primary route.
Decision decide_two_factor_b_direct(const TensorShape& shape);

/// Zero-weight test for a tensor-indecomposable module V_w, w = p^k w' with
/// w' p-restricted: w' must lie in the root lattice, and three p = 2
/// exceptional families are excluded.
Decision zero_weight_indecomposable(LieType t, long long p, const Weight& w);

/// The unique minimal dominant weight of the tensor-indecomposable module
/// V_w under the dominance order.
Weight minimal_dominant_weight(LieType t, long long p, const Weight& w);

/// Comorphism images under the exceptional isogenies between B_n and C_n in
/// characteristic 2.  isogeny_cb maps a B_n weight to the C_n weight lattice
/// (doubling all but the last coefficient); isogeny_bc maps a C_n weight to
/// the B_n weight lattice (doubling the last coefficient).
Weight isogeny_cb(const Weight& b_weight);
Weight isogeny_bc(const Weight& c_weight);

/// Same coefficients read over the partner family of equal rank (B <-> C).
Weight corresponding_weight(const Weight& w, Family target);

/// Closed-form per-family evaluation of
///   (dual(lambda0), omega_node) >= p^i * (omega_node, omega_node)
/// written directly in the coefficients of lambda0; `node` must be
/// miniscule.  Kept independent of `inner` so the two can be compared.
bool miniscule_inequality(LieType t, const Weight& lambda0, int node, long long p, long long i);

/// A-family normalized coefficient form of w >= m * omega_node; equivalent
/// to dominance whenever w - m*omega_node lies in the root lattice.
bool a_series_multiple_inequality(const Weight& w, long long m, int node);

}  // namespace wzk
