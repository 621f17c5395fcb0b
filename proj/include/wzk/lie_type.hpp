#pragma once

#include <compare>
#include <string>
#include <string_view>

namespace wzk {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

/// Simple type X_n with nodes numbered as in Bourbaki.  Valid ranks are
/// A: n >= 1, B: n >= 2, C: n >= 2, D: n >= 3, E: n in {6,7,8}, F: n = 4,
/// G: n = 2.  D_3 is accepted and treated with the D-family formulas; it is
/// isomorphic to A_3 (nodes 2,3 of D_3 are the outer nodes 1,3 of A_3) and
/// all results agree under that relabelling.
struct LieType {
  Family family{Family::A};
  int rank{1};

  friend auto operator<=>(const LieType&, const LieType&) = default;
};

/// Accepted ranks are capped to keep accidental huge inputs from allocating
/// absurd matrices; the arithmetic itself is exact at any rank.
int max_rank();
void set_max_rank(int cap);

bool is_valid(LieType t);

/// Validating constructors; both throw std::invalid_argument on bad input.
LieType make_lie_type(Family f, int rank);
LieType parse_lie_type(std::string_view token);  // "C:3"

std::string to_string(LieType t);

}  // namespace wzk
