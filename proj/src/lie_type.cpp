#include "wzk/lie_type.hpp"

#include <atomic>
#include <charconv>
#include <stdexcept>

namespace wzk {

namespace {
std::atomic<int> g_max_rank{64};
}

int max_rank() { return g_max_rank.load(); }

void set_max_rank(int cap) {
  if (cap < 1) throw std::invalid_argument("rank cap must be positive");
  g_max_rank.store(cap);
}

bool is_valid(LieType t) {
  if (t.rank > max_rank()) return false;
  switch (t.family) {
    case Family::A: return t.rank >= 1;
    case Family::B: return t.rank >= 2;
    case Family::C: return t.rank >= 2;
    case Family::D: return t.rank >= 3;
    case Family::E: return t.rank >= 6 && t.rank <= 8;
    case Family::F: return t.rank == 4;
    case Family::G: return t.rank == 2;
  }
  return false;
}

LieType make_lie_type(Family f, int rank) {
  LieType t{f, rank};
  if (!is_valid(t))
    throw std::invalid_argument("invalid type " + to_string(t) +
                                (rank > max_rank() ? " (rank cap " + std::to_string(max_rank()) + ")" : ""));
  return t;
}

LieType parse_lie_type(std::string_view token) {
  if (token.size() < 3 || token[1] != ':')
    throw std::invalid_argument("expected TYPE:RANK, e.g. C:3");
  char f = token[0];
  if (f < 'A' || f > 'G')
    throw std::invalid_argument("unknown family letter in type token");
  int rank = 0;
  auto [ptr, ec] = std::from_chars(token.data() + 2, token.data() + token.size(), rank);
  if (ec != std::errc{} || ptr != token.data() + token.size())
    throw std::invalid_argument("bad rank in type token");
  return make_lie_type(static_cast<Family>(f), rank);
}

std::string to_string(LieType t) {
  return std::string(1, static_cast<char>(t.family)) + ":" + std::to_string(t.rank);
}

}  // namespace wzk
