#include "monotone/kernels.hpp"

namespace monotone::kernels::scalar {
namespace {

void creator(std::uint32_t* states, std::size_t n, unsigned bit) {
  const std::uint32_t low = (2u << bit) - 1u;
  const std::uint32_t set = 1u << bit;
  for (std::size_t x = 0; x < n; ++x) {
    // kNone has every bit set, so it never passes the test.
    states[x] = (states[x] & low) == 0 ? (states[x] | set) : kNone;
  }
}

void annihilator(std::uint32_t* states, std::size_t n, unsigned bit) {
  const std::uint32_t low = (2u << bit) - 1u;
  const std::uint32_t set = 1u << bit;
  for (std::size_t x = 0; x < n; ++x) {
    const std::uint32_t s = states[x];
    states[x] = (s != kNone && (s & low) == set) ? (s & ~set) : kNone;
  }
}

void gather(std::uint32_t* out, const std::uint32_t* outer, const std::uint32_t* inner, std::size_t n) {
  for (std::size_t x = 0; x < n; ++x) {
    out[x] = inner[x] == kNone ? kNone : outer[inner[x]];
  }
}

std::size_t count_fixed(const std::uint32_t* map, std::size_t n) {
  std::size_t count = 0;
  for (std::size_t x = 0; x < n; ++x) count += map[x] == x;
  return count;
}

constexpr Table kTable{"scalar", creator, annihilator, gather, count_fixed};

}  // namespace

const Table& table() { return kTable; }

}  // namespace monotone::kernels::scalar
