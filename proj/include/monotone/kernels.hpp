#pragma once

// Data-parallel kernels over arrays of basis states encoded as bitmasks.
//
// A state on a window [lo, hi] is a bitmask with bit j set iff index lo+j
// is occupied. kNone marks "annihilated" (the operator sends the column to
// zero). Every operator built from creators and annihilators maps basis
// states to basis states or to zero, so a word acting on a window is fully
// described by one uint32 per column.

#include <cstddef>
#include <cstdint>
#include <span>

namespace monotone::kernels {

inline constexpr std::uint32_t kNone = 0xFFFFFFFFu;

/// Widest window (in indices) the kernels accept; 2^24 states.
inline constexpr int kMaxWidth = 24;

struct Table {
  const char* name;
  // states[x] := a†_bit states[x]  (prepend when bit is below every occupied bit)
  void (*creator)(std::uint32_t* states, std::size_t n, unsigned bit);
  // states[x] := a_bit states[x]   (remove bit when it is the lowest occupied one)
  void (*annihilator)(std::uint32_t* states, std::size_t n, unsigned bit);
  // out[x] := inner[x] == kNone ? kNone : outer[inner[x]]
  void (*gather)(std::uint32_t* out, const std::uint32_t* outer, const std::uint32_t* inner, std::size_t n);
  // #{x : map[x] == x}
  std::size_t (*count_fixed)(const std::uint32_t* map, std::size_t n);
};

namespace scalar {
const Table& table();
}

namespace avx2 {
/// nullptr when the library was built without AVX2 support.
const Table* table();
}

/// Whether the running CPU can execute the AVX2 kernels.
bool avx2_available();

/// Kernel table chosen at first use: AVX2 when available, unless the
/// environment variable MONOTONE_FORCE_SCALAR is set.
const Table& active();

inline void apply_creator(std::span<std::uint32_t> states, unsigned bit) {
  active().creator(states.data(), states.size(), bit);
}

inline void apply_annihilator(std::span<std::uint32_t> states, unsigned bit) {
  active().annihilator(states.data(), states.size(), bit);
}

inline void gather(std::span<std::uint32_t> out, std::span<const std::uint32_t> outer,
                   std::span<const std::uint32_t> inner) {
  active().gather(out.data(), outer.data(), inner.data(), out.size());
}

inline std::size_t count_fixed(std::span<const std::uint32_t> map) {
  return active().count_fixed(map.data(), map.size());
}

}  // namespace monotone::kernels
