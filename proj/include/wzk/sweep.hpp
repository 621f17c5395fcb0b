#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "wzk/criteria.hpp"
#include "wzk/oracle.hpp"

namespace wzk {

// One sweep instance: the module L(r[a]) (x) L(r[b])^{[p^i]} where r is the
// digit list of the enclosing box.  i = 0 encodes the merged-digit modules.
struct TwoFactorInstance {
  std::int32_t a = 0;
  std::int32_t b = 0;
  std::int16_t i = 1;
};

struct TwoFactorBox {
  LieType type;
  long long p = 2;
  std::vector<Weight> restricted;  // non-zero one-factor restricted digits, sorted
  std::vector<TwoFactorInstance> instances;
};

// All two-factor instances over (t, p) with twist 1 <= i <= max_i, plus the
// admissible i = 0 instances when include_i0 is set.
TwoFactorBox enumerate_two_factor_instances(LieType t, long long p, long long max_i,
                                            bool include_i0);

// Precomputed dominant weight sets for every digit of a box, stored as plain
// coefficient vectors together with their duals, both sorted.
class OracleCache {
 public:
  OracleCache(LieType t, long long p, const std::vector<Weight>& restricted);

  // Whether L(r[a]) (x) L(r[b])^{[m]} has the zero weight, m a power of p.
  bool tensor_zero(std::size_t a, std::size_t b, long long m) const;

  std::size_t size() const { return entries_.size(); }

 private:
  struct Entry {
    std::vector<std::vector<long long>> sorted;
    std::vector<std::vector<long long>> dual_sorted;
  };
  std::vector<Entry> entries_;
};

struct SweepReport {
  LieType type;
  long long p = 0;
  long long instances = 0;
  long long zero_weight_count = 0;
  long long shape_mismatches = 0;
  long long oracle_mismatches = 0;
  long long direct_mismatches = 0;  // transport vs direct cross-check, B at p = 2
  std::vector<std::string> examples;
  double seconds = 0;

  bool pass() const {
    return shape_mismatches == 0 && oracle_mismatches == 0 && direct_mismatches == 0;
  }
};

SweepReport run_pair_sweep(LieType t, long long p, long long max_i, bool include_i0,
                           int workers);

struct SweepConfig {
  std::vector<LieType> types;      // empty: use the default pair list
  std::vector<long long> primes;   // empty: {2, 3, 5}
  long long max_i = 2;
  bool include_i0_exceptional = true;
  int worker_count = 1;

  std::vector<std::pair<LieType, long long>> pairs() const;
};

// The (type, p) pairs exercised by the standard verification run.
std::vector<std::pair<LieType, long long>> default_verification_pairs();

std::vector<SweepReport> run_verify_sweep(const SweepConfig& config);

// Every type of the stated families up to the given rank.
std::vector<LieType> standard_types(int max_rank);

struct CheckReport {
  std::string name;
  bool pass = true;
  long long checked = 0;
  long long failed = 0;
  std::vector<std::string> failures;  // first renderings, see failed for the count
  double seconds = 0;
};

// 2x2-minor inequalities of the fundamental Gram matrix and of the inverse
// Cartan matrix, for every type up to max_rank.
CheckReport check_minor_inequalities(int max_rank);

// Congruence table for root-lattice membership against direct integrality of
// root coordinates.  Exhaustive over {0..5}^n for rank <= 5, seeded random
// samples in {-4..7}^n for ranks 6 to 8.
CheckReport check_radicality_equivalence(std::uint64_t seed);

// Lattice-plus-inner-product form of "w dominates m omega_j" against direct
// dominance, exhaustive over dominant coefficients <= 4 for rank <= 5 types.
CheckReport check_multiple_fundamental_equivalence();

// Closed-form single-row inequalities against the inner-product form they
// restate, over the same coefficient box.
CheckReport check_miniscule_inequality_forms();

// decision(lambda) == decision(p * lambda) on seeded random sweep instances.
CheckReport check_frobenius_invariance(std::uint64_t seed, int count);

// minimal_dominant_weight against the actual minimum of the enumerated
// dominant weight set, for every one-factor module of the standard sweep.
CheckReport check_minimal_weight_consistency();

}  // namespace wzk
