// Acceptance gate: nine checks, one line of output each, non-zero exit when
// any of them fails or overruns its time budget.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "wzk/criteria.hpp"
#include "wzk/sweep.hpp"

using namespace wzk;

namespace {

constexpr std::uint64_t kSeed = 0x20260817ULL;

int g_failures = 0;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void report(int criterion, const std::string& name, bool pass, double elapsed,
            double budget, const std::string& detail) {
  const bool in_time = elapsed <= budget;
  const bool ok = pass && in_time;
  if (!ok) ++g_failures;
  std::printf("criterion %d [%s]: %s (%.2f s of %.0f s budget%s%s)\n", criterion,
              name.c_str(), ok ? "PASS" : "FAIL", elapsed, budget,
              detail.empty() ? "" : ", ", detail.c_str());
  std::fflush(stdout);
}

void run_check(int criterion, const std::string& name, double budget,
               CheckReport (*fn)(), long long expect_checked = -1) {
  const auto start = Clock::now();
  const CheckReport rep = fn();
  const double elapsed = seconds_since(start);
  bool pass = rep.pass;
  std::string detail = std::to_string(rep.checked) + " checked";
  if (expect_checked >= 0 && rep.checked != expect_checked) {
    pass = false;
    detail += ", expected " + std::to_string(expect_checked);
  }
  if (!rep.pass) {
    detail += ", " + std::to_string(rep.failed) + " failed";
    if (!rep.failures.empty()) detail += ": " + rep.failures.front();
  }
  report(criterion, name, pass, elapsed, budget, detail);
}

Weight w(LieType t, std::vector<long long> coeffs) {
  return make_weight(t, std::move(coeffs));
}

}  // namespace

int main() {
  run_check(1, "2x2-minor inequalities over 33 types", 1.0,
            +[] { return check_minor_inequalities(8); }, 33);
  run_check(2, "root-lattice congruences vs coordinate integrality", 10.0,
            +[] { return check_radicality_equivalence(kSeed); });
  run_check(3, "lattice-plus-length dominance form vs direct dominance", 30.0,
            +[] { return check_multiple_fundamental_equivalence(); });
  run_check(4, "closed-form inequality rows vs inner products", 30.0,
            +[] { return check_miniscule_inequality_forms(); });

  {
    const auto start = Clock::now();
    SweepConfig config;  // default types and primes, i <= 2, merged digits on
    config.worker_count = 1;
    bool pass = true;
    long long instances = 0;
    long long disagreements = 0;
    std::string first;
    for (const SweepReport& rep : run_verify_sweep(config)) {
      instances += rep.instances;
      disagreements +=
          rep.shape_mismatches + rep.oracle_mismatches + rep.direct_mismatches;
      if (!rep.pass()) {
        pass = false;
        if (first.empty() && !rep.examples.empty()) first = rep.examples.front();
      }
    }
    std::string detail = std::to_string(instances) + " instances, " +
                         std::to_string(disagreements) + " disagreements";
    if (!first.empty()) detail += ": " + first;
    report(5, "decision procedure vs brute-force oracle, single worker", pass,
           seconds_since(start), 300.0, detail);
  }

  run_check(6, "Frobenius twist invariance on 500 sampled instances", 30.0,
            +[] { return check_frobenius_invariance(kSeed, 500); }, 500);
  run_check(7, "minimal dominant weight vs enumerated minimum", 60.0,
            +[] { return check_minimal_weight_consistency(); });

  {
    const auto start = Clock::now();
    const LieType g2 = make_lie_type(Family::G, 2);
    const LieType c3 = make_lie_type(Family::C, 3);
    int bad = 0;
    auto expect = [&](LieType t, std::vector<long long> coeffs, bool want) {
      const Decision d = zero_weight_two_factor(t, 2, w(t, std::move(coeffs)));
      if (d.has_zero_weight != want) ++bad;
    };
    expect(g2, {3, 1}, true);
    expect(c3, {0, 0, 3}, false);
    expect(g2, {3, 0}, false);
    report(8, "pinned single instances", bad == 0, seconds_since(start), 1.0,
           bad == 0 ? "3 verdicts confirmed" : std::to_string(bad) + " wrong verdicts");
  }

  {
    const auto start = Clock::now();
    bool pass = true;
    long long instances = 0;
    std::string first;
    for (int n : {2, 3}) {
      const SweepReport rep =
          run_pair_sweep(make_lie_type(Family::B, n), 2, 2, true, 1);
      instances += rep.instances;
      if (rep.instances == 0 || rep.direct_mismatches != 0 || !rep.pass()) {
        pass = false;
        if (first.empty() && !rep.examples.empty()) first = rep.examples.front();
      }
    }
    std::string detail = std::to_string(instances) + " instances cross-checked";
    if (!first.empty()) detail += ": " + first;
    report(9, "transported vs direct B-family rules", pass, seconds_since(start),
           30.0, detail);
  }

  if (g_failures == 0) {
    std::printf("acceptance: PASS\n");
    return 0;
  }
  std::printf("acceptance: FAIL (%d of 9 criteria)\n", g_failures);
  return 1;
}
