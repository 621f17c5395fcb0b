#include "wzk/sweep.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <random>
#include <stdexcept>
#include <thread>

#include "wzk/root_data.hpp"

namespace wzk {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_seconds(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

constexpr std::size_t kMaxExamples = 100;

void note_failure(std::vector<std::string>& failures, std::string text) {
  if (failures.size() < kMaxExamples) failures.push_back(std::move(text));
}

void fail(CheckReport& rep, std::string text) {
  rep.pass = false;
  ++rep.failed;
  note_failure(rep.failures, std::move(text));
}

// Digits contributing exactly one tensor factor: everything when p differs
// from the squared length ratio, one-sided support otherwise.
std::vector<Weight> one_factor_digits(LieType t, long long p) {
  const int n = t.rank;
  std::vector<Weight> out;
  std::vector<long long> c(n, 0);
  for (;;) {
    int k = 0;
    while (k < n && c[k] == p - 1) c[k++] = 0;
    if (k == n) break;
    ++c[k];
    Weight w{t, c};
    if (is_tensor_indecomposable(t, p, w)) out.push_back(std::move(w));
  }
  std::sort(out.begin(), out.end());
  return out;
}

ShapeCase expected_case(const RootData& rd, const Weight& l0, const Weight& l1,
                        long long p, long long i) {
  const Family f = rd.type.family;
  if (i == 0)
    return (f == Family::B || f == Family::C) ? ShapeCase::BC1 : ShapeCase::ShortLong;
  if (p != rd.squared_length_ratio) return ShapeCase::Generic;
  if (f == Family::B || f == Family::C) {
    const Weight spin = fundamental_weight(rd.type, rd.type.rank);
    const bool l0spin = l0 == spin;
    const bool l1spin = l1 == spin;
    return l0spin ? (l1spin ? ShapeCase::BC4 : ShapeCase::BC5)
                  : (l1spin ? ShapeCase::BC2 : ShapeCase::BC3);
  }
  return ShapeCase::Generic;
}

std::string render_instance(LieType t, long long p, const Weight& lambda, long long i,
                            const std::string& detail) {
  return to_string(t) + " p=" + std::to_string(p) + " lambda=" + coeffs_to_string(lambda) +
         " i=" + std::to_string(i) + " " + detail;
}

int cmp_scaled(const std::vector<long long>& x, const std::vector<long long>& y,
               long long m) {
  for (std::size_t k = 0; k < x.size(); ++k) {
    const long long ym = m * y[k];
    if (x[k] != ym) return x[k] < ym ? -1 : 1;
  }
  return 0;
}

}  // namespace

TwoFactorBox enumerate_two_factor_instances(LieType t, long long p, long long max_i,
                                            bool include_i0) {
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
  if (max_i < 1 || max_i > 30000) throw std::invalid_argument("twist range out of bounds");
  const RootData& rd = root_data(t);
  TwoFactorBox box{t, p, one_factor_digits(t, p), {}};
  const auto count = static_cast<std::int32_t>(box.restricted.size());

  for (std::int16_t i = 1; i <= max_i; ++i)
    for (std::int32_t a = 0; a < count; ++a)
      for (std::int32_t b = 0; b < count; ++b)
        box.instances.push_back({a, b, i});

  if (!include_i0) return box;
  const Family f = t.family;
  if ((f == Family::B || f == Family::C) && p == 2) {
    const Weight spin = fundamental_weight(t, t.rank);
    const auto spin_it = std::lower_bound(box.restricted.begin(), box.restricted.end(), spin);
    const auto spin_idx = static_cast<std::int32_t>(spin_it - box.restricted.begin());
    for (std::int32_t a = 0; a < count; ++a)
      if (box.restricted[a].coeffs[t.rank - 1] == 0)
        box.instances.push_back({a, spin_idx, 0});
  } else if ((f == Family::F && p == 2) || (f == Family::G && p == 3)) {
    for (std::int32_t a = 0; a < count; ++a) {
      bool a_short = true;
      for (int x = 0; x < t.rank; ++x)
        if (box.restricted[a].coeffs[x] != 0 && !rd.short_node[x]) a_short = false;
      if (!a_short) continue;
      for (std::int32_t b = 0; b < count; ++b) {
        bool b_long = true;
        for (int x = 0; x < t.rank; ++x)
          if (box.restricted[b].coeffs[x] != 0 && rd.short_node[x]) b_long = false;
        if (b_long) box.instances.push_back({a, b, 0});
      }
    }
  }
  return box;
}

OracleCache::OracleCache(LieType t, long long p, const std::vector<Weight>& restricted) {
  entries_.reserve(restricted.size());
  for (const Weight& w : restricted) {
    Entry e;
    const DominantWeightSet s = module_dominant_weights(t, p, w);
    e.sorted.reserve(s.weights.size());
    e.dual_sorted.reserve(s.weights.size());
    for (const Weight& mu : s.weights) e.sorted.push_back(mu.coeffs);
    for (const Weight& mu : s.weights) e.dual_sorted.push_back(dual(mu).coeffs);
    std::sort(e.dual_sorted.begin(), e.dual_sorted.end());
    entries_.push_back(std::move(e));
  }
}

bool OracleCache::tensor_zero(std::size_t a, std::size_t b, long long m) const {
  const auto& s0 = entries_.at(a).sorted;
  const auto& s1d = entries_.at(b).dual_sorted;
  std::size_t x = 0, y = 0;
  while (x < s0.size() && y < s1d.size()) {
    const int c = cmp_scaled(s0[x], s1d[y], m);
    if (c == 0) return true;
    if (c < 0)
      ++x;
    else
      ++y;
  }
  return false;
}

SweepReport run_pair_sweep(LieType t, long long p, long long max_i, bool include_i0,
                           int workers) {
  const auto start = Clock::now();
  const TwoFactorBox box = enumerate_two_factor_instances(t, p, max_i, include_i0);
  const OracleCache cache(t, p, box.restricted);
  const RootData& rd = root_data(t);
  const bool cross_check_b = t.family == Family::B && p == 2;

  std::vector<long long> pw(static_cast<std::size_t>(max_i) + 1, 1);
  for (std::size_t e = 1; e < pw.size(); ++e) pw[e] = checked_mul(pw[e - 1], p);

  struct Partial {
    long long zero_count = 0;
    long long shape_mismatches = 0;
    long long oracle_mismatches = 0;
    long long direct_mismatches = 0;
    std::vector<std::pair<std::size_t, std::string>> examples;
  };

  auto note_indexed = [](Partial& out, std::size_t idx, std::string text) {
    if (out.examples.size() < kMaxExamples) out.examples.emplace_back(idx, std::move(text));
  };

  // Instances are partitioned by lambda0 index so the split is independent of
  // the worker count.
  auto work = [&](std::int32_t residue, std::int32_t used, Partial& out) {
    for (std::size_t idx = 0; idx < box.instances.size(); ++idx) {
      const TwoFactorInstance inst = box.instances[idx];
      if (inst.a % used != residue) continue;
      const Weight& l0 = box.restricted[inst.a];
      const Weight& l1 = box.restricted[inst.b];
      const Weight lambda = add(l0, scale(l1, pw[inst.i]));
      try {
        const ClassifyResult cls = classify_two_factor(t, p, lambda);
        bool shape_ok = static_cast<bool>(cls);
        if (shape_ok) {
          const TensorShape& s = *cls.shape;
          shape_ok = s.k == 0 && s.i == inst.i && s.lambda0 == l0 && s.lambda1 == l1 &&
                     s.shape == expected_case(rd, l0, l1, p, inst.i);
        }
        if (!shape_ok) {
          ++out.shape_mismatches;
          note_indexed(out, idx,
                       render_instance(t, p, lambda, inst.i,
                                       cls ? "classified into an unexpected shape"
                                           : "rejected: " + cls.reason));
          continue;
        }
        const Decision dec = decide_two_factor(*cls.shape);
        if (dec.has_zero_weight) ++out.zero_count;
        const bool expected = cache.tensor_zero(inst.a, inst.b, pw[inst.i]);
        if (dec.has_zero_weight != expected) {
          ++out.oracle_mismatches;
          note_indexed(out, idx,
                       render_instance(t, p, lambda, inst.i,
                                       std::string("criterion=") +
                                           (dec.has_zero_weight ? "true" : "false") +
                                           " oracle=" + (expected ? "true" : "false") +
                                           " [" + dec.case_label + "]"));
        }
        if (cross_check_b) {
          const Decision direct = decide_two_factor_b_direct(*cls.shape);
          if (direct.has_zero_weight != dec.has_zero_weight) {
            ++out.direct_mismatches;
            note_indexed(out, idx,
                         render_instance(t, p, lambda, inst.i,
                                         "transport and direct rules disagree [" +
                                             dec.case_label + " vs " + direct.case_label +
                                             "]"));
          }
        }
      } catch (const std::exception& ex) {
        ++out.shape_mismatches;
        note_indexed(out, idx, render_instance(t, p, lambda, inst.i,
                                               std::string("exception: ") + ex.what()));
      }
    }
  };

  const std::size_t total = box.instances.size();
  const auto max_workers = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  const int used = std::clamp(workers, 1, max_workers);
  std::vector<Partial> parts(used);
  if (used == 1) {
    work(0, 1, parts[0]);
  } else {
    std::vector<std::thread> threads;
    for (int v = 0; v < used; ++v) threads.emplace_back(work, v, used, std::ref(parts[v]));
    for (auto& th : threads) th.join();
  }

  SweepReport rep;
  rep.type = t;
  rep.p = p;
  rep.instances = static_cast<long long>(total);
  std::vector<std::pair<std::size_t, std::string>> merged;
  for (Partial& part : parts) {
    rep.zero_weight_count += part.zero_count;
    rep.shape_mismatches += part.shape_mismatches;
    rep.oracle_mismatches += part.oracle_mismatches;
    rep.direct_mismatches += part.direct_mismatches;
    for (auto& ex : part.examples) merged.push_back(std::move(ex));
  }
  std::sort(merged.begin(), merged.end());
  for (auto& [idx, text] : merged) note_failure(rep.examples, std::move(text));
  rep.seconds = elapsed_seconds(start);
  return rep;
}

std::vector<std::pair<LieType, long long>> default_verification_pairs() {
  std::vector<LieType> base = {
      make_lie_type(Family::A, 1), make_lie_type(Family::A, 2), make_lie_type(Family::A, 3),
      make_lie_type(Family::B, 2), make_lie_type(Family::B, 3), make_lie_type(Family::C, 2),
      make_lie_type(Family::C, 3), make_lie_type(Family::D, 4), make_lie_type(Family::G, 2)};
  std::vector<std::pair<LieType, long long>> out;
  for (LieType t : base)
    for (long long p : {2LL, 3LL, 5LL}) out.emplace_back(t, p);
  out.emplace_back(make_lie_type(Family::F, 4), 2);
  out.emplace_back(make_lie_type(Family::F, 4), 3);
  return out;
}

std::vector<std::pair<LieType, long long>> SweepConfig::pairs() const {
  if (types.empty() && primes.empty()) return default_verification_pairs();
  const std::vector<long long> ps = primes.empty() ? std::vector<long long>{2, 3, 5} : primes;
  for (long long p : ps)
    if (!is_prime(p)) throw std::invalid_argument("sweep primes must be prime");
  if (max_i < 1) throw std::invalid_argument("max_i must be at least 1");
  std::vector<LieType> ts = types;
  if (ts.empty()) {
    for (const auto& [t, p] : default_verification_pairs())
      if (std::find(ts.begin(), ts.end(), t) == ts.end()) ts.push_back(t);
  }
  std::vector<std::pair<LieType, long long>> out;
  for (LieType t : ts)
    for (long long p : ps) out.emplace_back(t, p);
  return out;
}

std::vector<SweepReport> run_verify_sweep(const SweepConfig& config) {
  std::vector<SweepReport> out;
  const auto pair_list = config.pairs();
  out.reserve(pair_list.size());
  for (const auto& [t, p] : pair_list)
    out.push_back(run_pair_sweep(t, p, config.max_i, config.include_i0_exceptional,
                                 config.worker_count));
  return out;
}

std::vector<LieType> standard_types(int max_rank) {
  std::vector<LieType> out;
  for (int n = 1; n <= max_rank; ++n) out.push_back(make_lie_type(Family::A, n));
  for (int n = 2; n <= max_rank; ++n) out.push_back(make_lie_type(Family::B, n));
  for (int n = 2; n <= max_rank; ++n) out.push_back(make_lie_type(Family::C, n));
  for (int n = 3; n <= max_rank; ++n) out.push_back(make_lie_type(Family::D, n));
  for (int n = 6; n <= std::min(8, max_rank); ++n) out.push_back(make_lie_type(Family::E, n));
  if (max_rank >= 4) out.push_back(make_lie_type(Family::F, 4));
  if (max_rank >= 2) out.push_back(make_lie_type(Family::G, 2));
  return out;
}

CheckReport check_minor_inequalities(int max_rank) {
  const auto start = Clock::now();
  CheckReport rep;
  rep.name = "2x2-minor inequalities";
  for (LieType t : standard_types(max_rank)) {
    ++rep.checked;
    if (!all_minor_inequalities_hold(t)) {
      fail(rep, "minor inequality fails for " + to_string(t));
    }
  }
  rep.seconds = elapsed_seconds(start);
  return rep;
}

namespace {

// Runs fn over every coefficient vector in {lo..hi}^n.
template <typename Fn>
void coefficient_box(int n, long long lo, long long hi, Fn&& fn) {
  std::vector<long long> c(n, lo);
  for (;;) {
    fn(c);
    int k = 0;
    while (k < n && c[k] == hi) c[k++] = lo;
    if (k == n) break;
    ++c[k];
  }
}

}  // namespace

CheckReport check_radicality_equivalence(std::uint64_t seed) {
  const auto start = Clock::now();
  CheckReport rep;
  rep.name = "root-lattice congruence table";
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long long> coeff(-4, 7);
  for (LieType t : standard_types(8)) {
    auto probe = [&](const std::vector<long long>& c) {
      Weight w{t, c};
      ++rep.checked;
      if (is_radical(w) != is_radical_by_table(w)) {
        fail(rep, "table disagrees at " + to_string(w));
      }
    };
    if (t.rank <= 5) {
      coefficient_box(t.rank, 0, 5, probe);
    } else {
      std::vector<long long> c(t.rank);
      for (int s = 0; s < 10000; ++s) {
        for (auto& a : c) a = coeff(rng);
        probe(c);
      }
    }
  }
  rep.seconds = elapsed_seconds(start);
  return rep;
}

CheckReport check_multiple_fundamental_equivalence() {
  const auto start = Clock::now();
  CheckReport rep;
  rep.name = "lattice-plus-length form of dominance over a fundamental multiple";
  for (LieType t : standard_types(5)) {
    std::vector<Weight> fundamentals;
    for (int j = 1; j <= t.rank; ++j) fundamentals.push_back(fundamental_weight(t, j));
    coefficient_box(t.rank, 0, 4, [&](const std::vector<long long>& c) {
      const Weight w{t, c};
      for (int j = 1; j <= t.rank; ++j)
        for (long long m = 1; m <= 6; ++m) {
          ++rep.checked;
          const bool direct = dominance_geq(w, scale(fundamentals[j - 1], m));
          const bool form = dominates_multiple_fundamental(w, m, j);
          if (direct != form) {
            fail(rep, "forms disagree at " + to_string(w) + " j=" +
                                           std::to_string(j) + " m=" + std::to_string(m));
          }
        }
    });
  }
  rep.seconds = elapsed_seconds(start);
  return rep;
}

CheckReport check_miniscule_inequality_forms() {
  const auto start = Clock::now();
  CheckReport rep;
  rep.name = "closed-form inequality rows";
  for (LieType t : standard_types(5)) {
    const RootData& rd = root_data(t);
    if (rd.miniscule.empty()) continue;
    coefficient_box(t.rank, 0, 4, [&](const std::vector<long long>& c) {
      const Weight w{t, c};
      const Weight wd = dual(w);
      for (int j : rd.miniscule) {
        const Weight omega = fundamental_weight(t, j);
        const Rational lhs = inner(wd, omega);
        const Rational ww = inner(omega, omega);
        for (long long p : {2LL, 3LL, 5LL})
          for (long long i = 1; i <= 3; ++i) {
            ++rep.checked;
            const bool row = miniscule_inequality(t, w, j, p, i);
            const bool direct = lhs >= to_rational(checked_pow(p, i)) * ww;
            if (row != direct) {
              fail(rep, "row disagrees at " + to_string(w) + " j=" +
                                             std::to_string(j) + " p=" + std::to_string(p) +
                                             " i=" + std::to_string(i));
            }
          }
      }
      if (t.family == Family::A) {
        for (int j = 1; j <= t.rank; ++j) {
          const Weight omega = fundamental_weight(t, j);
          const Rational lhs = inner(w, omega);
          const Rational ww = inner(omega, omega);
          for (long long m = 1; m <= 6; ++m) {
            ++rep.checked;
            const bool row = a_series_multiple_inequality(w, m, j);
            const bool direct = lhs >= to_rational(m) * ww;
            if (row != direct) {
              fail(rep, "normalized row disagrees at " + to_string(w) +
                                             " j=" + std::to_string(j) +
                                             " m=" + std::to_string(m));
            }
          }
        }
      }
    });
  }
  rep.seconds = elapsed_seconds(start);
  return rep;
}

CheckReport check_frobenius_invariance(std::uint64_t seed, int count) {
  const auto start = Clock::now();
  CheckReport rep;
  rep.name = "Frobenius twist invariance";
  const auto pairs = default_verification_pairs();
  std::map<std::pair<LieType, long long>, std::vector<Weight>> digits;
  for (const auto& [t, p] : pairs) digits[{t, p}] = one_factor_digits(t, p);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick_pair(0, pairs.size() - 1);
  std::uniform_int_distribution<long long> pick_i(1, 2);
  for (int s = 0; s < count; ++s) {
    const auto& [t, p] = pairs[pick_pair(rng)];
    const auto& ds = digits[{t, p}];
    std::uniform_int_distribution<std::size_t> pick_digit(0, ds.size() - 1);
    const Weight& l0 = ds[pick_digit(rng)];
    const Weight& l1 = ds[pick_digit(rng)];
    const long long i = pick_i(rng);
    const Weight lambda = add(l0, scale(l1, checked_pow(p, i)));
    ++rep.checked;
    try {
      const Decision base = zero_weight_two_factor(t, p, lambda);
      const Decision twisted = zero_weight_two_factor(t, p, scale(lambda, p));
      if (base.has_zero_weight != twisted.has_zero_weight) {
        fail(rep, "twisting changes the verdict at " + to_string(lambda) +
                                       " p=" + std::to_string(p));
      }
    } catch (const std::exception& ex) {
      fail(rep,
                   "exception at " + to_string(lambda) + ": " + std::string(ex.what()));
    }
  }
  rep.seconds = elapsed_seconds(start);
  return rep;
}

CheckReport check_minimal_weight_consistency() {
  const auto start = Clock::now();
  CheckReport rep;
  rep.name = "minimal dominant weight";
  for (const auto& [t, p] : default_verification_pairs()) {
    for (const Weight& w : one_factor_digits(t, p)) {
      for (long long k = 0; k <= 1; ++k) {
        const Weight scaled_w = scale(w, checked_pow(p, k));
        ++rep.checked;
        const Weight m0 = minimal_dominant_weight(t, p, scaled_w);
        const DominantWeightSet s = module_dominant_weights(t, p, scaled_w);
        bool ok = s.contains(m0);
        if (ok)
          for (const Weight& nu : s.weights)
            if (!dominance_geq(nu, m0)) {
              ok = false;
              break;
            }
        if (!ok) {
          fail(rep, "claimed minimum " + to_string(m0) +
                                         " is wrong for " + to_string(scaled_w) +
                                         " p=" + std::to_string(p));
        }
      }
    }
  }
  rep.seconds = elapsed_seconds(start);
  return rep;
}

}  // namespace wzk
