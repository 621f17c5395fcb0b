#include "wzk/root_data.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace wzk {

namespace {

IntMatrix build_cartan(LieType t) {
  const int n = t.rank;
  IntMatrix c(n, std::vector<long long>(n, 0));
  for (int i = 0; i < n; ++i) c[i][i] = 2;
  auto link = [&](int a, int b) { c[a][b] = c[b][a] = -1; };
  switch (t.family) {
    case Family::A:
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      break;
    case Family::B:
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
      c[n - 2][n - 1] = -2;  // alpha_{n-1} long, alpha_n short
      c[n - 1][n - 2] = -1;
      break;
    case Family::C:
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
      c[n - 2][n - 1] = -1;  // alpha_{n-1} short, alpha_n long
      c[n - 1][n - 2] = -2;
      break;
    case Family::D:
      for (int i = 0; i + 1 < n - 2; ++i) link(i, i + 1);
      link(n - 3, n - 2);
      link(n - 3, n - 1);
      break;
    case Family::E:
      // chain 1-3-4-5-6(-7)(-8), with node 2 attached to node 4
      link(0, 2);
      link(2, 3);
      link(3, 4);
      link(4, 5);
      if (n >= 7) link(5, 6);
      if (n == 8) link(6, 7);
      link(1, 3);
      break;
    case Family::F:
      link(0, 1);
      link(2, 3);
      c[1][2] = -2;  // alpha_1, alpha_2 long; alpha_3, alpha_4 short
      c[2][1] = -1;
      break;
    case Family::G:
      c[0][1] = -1;  // alpha_1 short, alpha_2 long
      c[1][0] = -3;
      break;
  }
  return c;
}

std::vector<Rational> build_half_lengths(LieType t) {
  const int n = t.rank;
  std::vector<Rational> h(n, 1);
  switch (t.family) {
    case Family::B: h[n - 1] = Rational(1, 2); break;
    case Family::C: h[n - 1] = 2; break;
    case Family::F: h[2] = h[3] = Rational(1, 2); break;
    case Family::G: h[1] = 3; break;
    default: break;
  }
  return h;
}

std::vector<bool> build_short_nodes(LieType t) {
  const int n = t.rank;
  std::vector<bool> s(n, false);
  switch (t.family) {
    case Family::B: s[n - 1] = true; break;
    case Family::C:
      for (int i = 0; i + 1 < n; ++i) s[i] = true;
      break;
    case Family::F: s[2] = s[3] = true; break;
    case Family::G: s[0] = true; break;
    default: break;
  }
  return s;
}

std::vector<int> build_miniscule(LieType t) {
  const int n = t.rank;
  switch (t.family) {
    case Family::A: {
      std::vector<int> all(n);
      std::iota(all.begin(), all.end(), 1);
      return all;
    }
    case Family::B: return {n};
    case Family::C: return {1};
    case Family::D: return {1, n - 1, n};
    case Family::E:
      if (n == 6) return {1, 6};
      if (n == 7) return {7};
      return {};
    default: return {};
  }
}

std::vector<int> build_dual_perm(LieType t) {
  const int n = t.rank;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 1);
  switch (t.family) {
    case Family::A:
      for (int k = 0; k < n; ++k) p[k] = n - k;
      break;
    case Family::D:
      if (n % 2 == 1) std::swap(p[n - 2], p[n - 1]);
      break;
    case Family::E:
      if (n == 6) {
        p = {6, 2, 5, 4, 3, 1};
      }
      break;
    default: break;
  }
  return p;
}

std::unique_ptr<RootData> build(LieType t) {
  auto rd = std::make_unique<RootData>();
  rd->type = t;
  rd->cartan = build_cartan(t);
  const int n = t.rank;

  RationalMatrix c(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) c(i, j) = to_rational(rd->cartan[i][j]);
  rd->delta = c.inverse();
  if (!(rd->delta * c == RationalMatrix::identity(n)))
    throw std::logic_error("inverse Cartan matrix failed verification");

  rd->half_length = build_half_lengths(t);
  rd->gram = RationalMatrix(n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) rd->gram(j, k) = rd->half_length[k] * rd->delta(j, k);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < j; ++k)
      if (rd->gram(j, k) != rd->gram(k, j))
        throw std::logic_error("fundamental Gram matrix is not symmetric");

  rd->miniscule = build_miniscule(t);
  switch (t.family) {
    case Family::A: case Family::D: case Family::E: rd->squared_length_ratio = 1; break;
    case Family::B: case Family::C: case Family::F: rd->squared_length_ratio = 2; break;
    case Family::G: rd->squared_length_ratio = 3; break;
  }
  rd->dual_perm = build_dual_perm(t);
  rd->short_node = build_short_nodes(t);
  return rd;
}

}  // namespace

const RootData& root_data(LieType t) {
  if (!is_valid(t)) throw std::invalid_argument("invalid type " + to_string(t));
  static std::mutex mu;
  static std::map<LieType, std::unique_ptr<RootData>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(t);
  if (it == cache.end()) it = cache.emplace(t, build(t)).first;
  return *it->second;
}

IntMatrix cartan_matrix(LieType t) { return root_data(t).cartan; }

RationalMatrix inverse_cartan(LieType t) { return root_data(t).delta; }

Rational half_root_length(LieType t, int node) {
  const RootData& rd = root_data(t);
  if (node < 1 || node > t.rank) throw std::invalid_argument("node out of range");
  return rd.half_length[node - 1];
}

RationalMatrix gram_fundamental(LieType t) { return root_data(t).gram; }

std::vector<int> miniscule_weights(LieType t) { return root_data(t).miniscule; }

int squared_length_ratio(LieType t) { return root_data(t).squared_length_ratio; }

std::vector<int> dual_permutation(LieType t) { return root_data(t).dual_perm; }

}  // namespace wzk
