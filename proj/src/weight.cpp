#include "wzk/weight.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace wzk {

namespace {

void require_same_type(const Weight& u, const Weight& v) {
  if (u.type != v.type)
    throw std::invalid_argument("weights over different types: " + to_string(u.type) +
                                " vs " + to_string(v.type));
}

void require_node(LieType t, int node) {
  if (node < 1 || node > t.rank) throw std::invalid_argument("node out of range");
}

long long mod_reduce(long long x, long long m) {
  long long r = x % m;
  return r < 0 ? r + m : r;
}

}  // namespace

Weight zero_weight(LieType t) {
  root_data(t);
  return Weight{t, std::vector<long long>(t.rank, 0)};
}

Weight fundamental_weight(LieType t, int node) {
  require_node(t, node);
  Weight w = zero_weight(t);
  w.coeffs[node - 1] = 1;
  return w;
}

Weight make_weight(LieType t, std::vector<long long> coeffs) {
  root_data(t);
  if (static_cast<int>(coeffs.size()) != t.rank)
    throw std::invalid_argument("expected " + std::to_string(t.rank) + " coefficients for " +
                                to_string(t));
  return Weight{t, std::move(coeffs)};
}

bool is_zero(const Weight& w) {
  return std::all_of(w.coeffs.begin(), w.coeffs.end(), [](long long a) { return a == 0; });
}

bool is_dominant(const Weight& w) {
  return std::all_of(w.coeffs.begin(), w.coeffs.end(), [](long long a) { return a >= 0; });
}

bool is_p_restricted(const Weight& w, long long p) {
  return std::all_of(w.coeffs.begin(), w.coeffs.end(),
                     [p](long long a) { return a >= 0 && a < p; });
}

Weight add(const Weight& u, const Weight& v) {
  require_same_type(u, v);
  Weight out = u;
  for (size_t i = 0; i < out.coeffs.size(); ++i)
    out.coeffs[i] = checked_add(out.coeffs[i], v.coeffs[i]);
  return out;
}

Weight sub(const Weight& u, const Weight& v) {
  require_same_type(u, v);
  Weight out = u;
  for (size_t i = 0; i < out.coeffs.size(); ++i)
    out.coeffs[i] = checked_sub(out.coeffs[i], v.coeffs[i]);
  return out;
}

Weight scale(const Weight& w, long long m) {
  Weight out = w;
  for (auto& a : out.coeffs) a = checked_mul(a, m);
  return out;
}

RootCoords to_root_coords(const Weight& w) {
  const RootData& rd = root_data(w.type);
  const int n = w.type.rank;
  std::vector<Rational> c(n, 0);
  for (int i = 0; i < n; ++i) {
    if (w.coeffs[i] == 0) continue;
    for (int k = 0; k < n; ++k) {
      Rational term = rd.delta(i, k);
      term *= to_rational(w.coeffs[i]);
      c[k] += term;
    }
  }
  return RootCoords{w.type, std::move(c)};
}

Weight from_root_coords(const RootCoords& c) {
  const RootData& rd = root_data(c.type);
  const int n = c.type.rank;
  if (static_cast<int>(c.coords.size()) != n)
    throw std::invalid_argument("coordinate count does not match rank");
  Weight w = zero_weight(c.type);
  for (int j = 0; j < n; ++j) {
    Rational a = 0;
    for (int k = 0; k < n; ++k) {
      if (c.coords[k] == 0) continue;
      a += c.coords[k] * to_rational(rd.cartan[k][j]);
    }
    if (!is_integral(a))
      throw std::invalid_argument("root coordinates do not describe an integral weight");
    if (!a.get_num().fits_slong_p())
      throw std::overflow_error("weight coefficient exceeds machine range");
    w.coeffs[j] = a.get_num().get_si();
  }
  return w;
}

bool is_radical(const Weight& w) {
  RootCoords c = to_root_coords(w);
  return std::all_of(c.coords.begin(), c.coords.end(),
                     [](const Rational& q) { return is_integral(q); });
}

bool is_radical_by_table(const Weight& w) {
  const int n = w.type.rank;
  const auto& a = w.coeffs;
  auto at = [&](int node) { return a[node - 1]; };  // 1-based
  switch (w.type.family) {
    case Family::A: {
      long long s = 0;
      for (int i = 1; i <= n; ++i) s = mod_reduce(s + i * mod_reduce(at(i), n + 1), n + 1);
      return s == 0;
    }
    case Family::B:
      return mod_reduce(at(n), 2) == 0;
    case Family::C: {
      long long s = 0;
      for (int i = 1; i <= n; i += 2) s = mod_reduce(s + at(i), 2);
      return s == 0;
    }
    case Family::D: {
      if (n % 2 == 0) {
        long long s = 0;
        for (int i = 1; i <= n - 3; i += 2) s = mod_reduce(s + at(i), 2);
        return s == mod_reduce(at(n - 1), 2) && s == mod_reduce(at(n), 2);
      }
      long long s = 0;
      for (int i = 1; i <= n - 2; i += 2) s = mod_reduce(s + mod_reduce(at(i), 4), 4);
      return mod_reduce(2 * s + at(n - 1) - at(n), 4) == 0;
    }
    case Family::E:
      if (n == 6) return mod_reduce(at(1) - at(3) + at(5) - at(6), 3) == 0;
      if (n == 7) return mod_reduce(at(2) + at(5) + at(7), 2) == 0;
      return true;
    case Family::F:
    case Family::G:
      return true;
  }
  return true;
}

Rational inner(const Weight& u, const Weight& v) {
  require_same_type(u, v);
  const RootData& rd = root_data(u.type);
  const int n = u.type.rank;
  Rational acc = 0;
  for (int i = 0; i < n; ++i) {
    if (u.coeffs[i] == 0) continue;
    for (int j = 0; j < n; ++j) {
      if (v.coeffs[j] == 0) continue;
      Rational term = rd.gram(i, j);
      term *= to_rational(u.coeffs[i]);
      term *= to_rational(v.coeffs[j]);
      acc += term;
    }
  }
  return acc;
}

bool dominance_geq(const Weight& u, const Weight& v) {
  RootCoords c = to_root_coords(sub(u, v));
  return std::all_of(c.coords.begin(), c.coords.end(),
                     [](const Rational& q) { return is_integral(q) && q >= 0; });
}

bool dominates_multiple_fundamental(const Weight& w, long long m, int node) {
  require_node(w.type, node);
  if (m < 0) throw std::invalid_argument("negative multiple");
  Weight omega = fundamental_weight(w.type, node);
  if (!is_radical(sub(w, scale(omega, m)))) return false;
  return inner(w, omega) >= to_rational(m) * inner(omega, omega);
}

Weight dual(const Weight& w) {
  const RootData& rd = root_data(w.type);
  Weight out = w;
  for (int k = 0; k < w.type.rank; ++k) out.coeffs[k] = w.coeffs[rd.dual_perm[k] - 1];
  return out;
}

std::vector<Weight> p_adic_expansion(const Weight& w, long long p) {
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
  if (!is_dominant(w)) throw std::invalid_argument("p-adic expansion needs a dominant weight");
  std::vector<Weight> digits;
  std::vector<long long> rest = w.coeffs;
  while (std::any_of(rest.begin(), rest.end(), [](long long a) { return a != 0; })) {
    Weight d = zero_weight(w.type);
    for (size_t i = 0; i < rest.size(); ++i) {
      d.coeffs[i] = rest[i] % p;
      rest[i] /= p;
    }
    digits.push_back(std::move(d));
  }
  return digits;
}

std::string coeffs_to_string(const Weight& w) {
  std::string s;
  for (size_t i = 0; i < w.coeffs.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(w.coeffs[i]);
  }
  return s;
}

std::string to_string(const Weight& w) { return to_string(w.type) + " " + coeffs_to_string(w); }

Weight parse_weight(LieType t, std::string_view csv) {
  std::vector<long long> coeffs;
  std::string token;
  std::istringstream in{std::string(csv)};
  while (std::getline(in, token, ',')) {
    size_t pos = 0;
    long long v = 0;
    try {
      v = std::stoll(token, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad weight coefficient '" + token + "'");
    }
    if (pos != token.size())
      throw std::invalid_argument("bad weight coefficient '" + token + "'");
    coeffs.push_back(v);
  }
  return make_weight(t, std::move(coeffs));
}

Weight parse_weight(std::string_view text) {
  size_t sp = text.find(' ');
  if (sp == std::string_view::npos)
    throw std::invalid_argument("expected 'TYPE:RANK a1,...,an'");
  LieType t = parse_lie_type(text.substr(0, sp));
  return parse_weight(t, text.substr(sp + 1));
}

}  // namespace wzk
