#include "wzk/oracle.hpp"

#include <algorithm>
#include <stdexcept>

#include "wzk/criteria.hpp"
#include "wzk/root_data.hpp"

namespace wzk {

namespace {

// Strips the largest power of p dividing every coefficient.
long long strip_twist(long long p, Weight& w) {
  long long k = 0;
  while (std::all_of(w.coeffs.begin(), w.coeffs.end(),
                     [p](long long a) { return a % p == 0; })) {
    for (auto& a : w.coeffs) a /= p;
    ++k;
  }
  return k;
}

DominantWeightSet scaled(DominantWeightSet s, long long factor) {
  if (factor != 1)
    for (auto& w : s.weights) w = scale(w, factor);
  return s;
}

DominantWeightSet g2_p2_table(LieType t, const Weight& core) {
  const Weight w1 = fundamental_weight(t, 1);
  const Weight w2 = fundamental_weight(t, 2);
  DominantWeightSet s{t, {}, {}};
  if (core == w1) {
    s.weights = {w1};
  } else if (core == w2) {
    s.weights = {zero_weight(t), w1, w2};
    s.notes.push_back("membership of omega_1 read off from the characteristic-zero system");
  } else {
    s.weights = {zero_weight(t), w1, make_weight(t, {2, 0}), w2, make_weight(t, {1, 1})};
    s.notes.push_back("membership of omega_1 and omega_2 read off from the characteristic-zero system");
  }
  std::sort(s.weights.begin(), s.weights.end());
  return s;
}

}  // namespace

bool DominantWeightSet::contains(const Weight& w) const {
  return std::binary_search(weights.begin(), weights.end(), w);
}

DominantWeightSet dominant_subweights(const Weight& lambda) {
  if (!is_dominant(lambda))
    throw std::invalid_argument("dominant weight expected");
  const LieType t = lambda.type;
  const RootData& rd = root_data(t);
  const int n = t.rank;

  const RootCoords rc = to_root_coords(lambda);
  std::vector<long long> bound(n);
  for (int k = 0; k < n; ++k) bound[k] = rational_floor(rc.coords[k]);

  std::vector<long long> b(n, 0);
  std::vector<long long> cur = lambda.coeffs;
  DominantWeightSet out{t, {}, {}};
  for (;;) {
    if (std::all_of(cur.begin(), cur.end(), [](long long a) { return a >= 0; }))
      out.weights.push_back(Weight{t, cur});
    int k = 0;
    while (k < n) {
      if (b[k] < bound[k]) {
        ++b[k];
        for (int j = 0; j < n; ++j) cur[j] -= rd.cartan[k][j];
        break;
      }
      for (int j = 0; j < n; ++j) cur[j] += b[k] * rd.cartan[k][j];
      b[k] = 0;
      ++k;
    }
    if (k == n) break;
  }
  std::sort(out.weights.begin(), out.weights.end());
  return out;
}

DominantWeightSet module_dominant_weights(LieType t, long long p, const Weight& w) {
  if (w.type != t) throw std::invalid_argument("weight typed over the wrong root datum");
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
  if (!is_dominant(w)) throw std::invalid_argument("highest weight must be dominant");
  if (is_zero(w)) return {t, {w}, {}};

  Weight core = w;
  const long long k = strip_twist(p, core);
  if (!is_p_restricted(core, p))
    throw std::invalid_argument("not of the form p^k * (p-restricted weight): module decomposes");
  if (!is_tensor_indecomposable(t, p, core))
    throw std::invalid_argument("restricted weight splits into short and long parts: module decomposes");
  const long long twist_factor = checked_pow(p, k);
  const RootData& rd = root_data(t);
  const int n = t.rank;

  if (p == 2 && t.family == Family::C) {
    if (core == fundamental_weight(t, n)) {
      DominantWeightSet s{t, {core}, {"the symplectic spin module has a single dominant weight"}};
      return scaled(std::move(s), twist_factor);
    }
    return scaled(dominant_subweights(core), twist_factor);
  }
  if (p == 2 && t.family == Family::B) {
    if (core == fundamental_weight(t, n)) {
      DominantWeightSet s{t, {core}, {"the spin module has a single dominant weight"}};
      return scaled(std::move(s), twist_factor);
    }
    DominantWeightSet cs = dominant_subweights(corresponding_weight(core, Family::C));
    DominantWeightSet s{t, {}, {"weights carried across the special isogeny from type C"}};
    s.weights.reserve(cs.weights.size());
    for (const Weight& nu : cs.weights) s.weights.push_back(isogeny_bc(nu));
    std::sort(s.weights.begin(), s.weights.end());
    return scaled(std::move(s), twist_factor);
  }
  if (p == 2 && t.family == Family::G)
    return scaled(g2_p2_table(t, core), twist_factor);
  if ((p == 2 && t.family == Family::F) || (p == 3 && t.family == Family::G)) {
    DominantWeightSet s = dominant_subweights(core);
    s.notes.push_back("characteristic-zero weight system assumed at this special characteristic");
    return scaled(std::move(s), twist_factor);
  }
  if (p <= rd.squared_length_ratio)
    throw std::logic_error("unhandled special characteristic");
  return scaled(dominant_subweights(core), twist_factor);
}

bool tensor_has_zero_weight(LieType t, long long p, const TwistedFactor& f0,
                            const TwistedFactor& f1) {
  if (f0.twist < 0 || f1.twist < 0) throw std::invalid_argument("negative twist");
  const TwistedFactor& lo = f0.twist <= f1.twist ? f0 : f1;
  const TwistedFactor& hi = f0.twist <= f1.twist ? f1 : f0;
  const DominantWeightSet s_lo = module_dominant_weights(t, p, lo.restricted);
  const DominantWeightSet s_hi = module_dominant_weights(t, p, hi.restricted);
  const long long m = checked_pow(p, hi.twist - lo.twist);
  for (const Weight& nu : s_hi.weights)
    if (s_lo.contains(scale(dual(nu), m))) return true;
  return false;
}

}  // namespace wzk
