#pragma once

#include <cstdint>

namespace sqc {

/// Selects the serial reference loop or the OpenMP kernel. Both produce
/// bit-identical results.
enum class Exec { Serial, Parallel };

/// Deterministic sub-seed for work item `index` of a run seeded with `master`
/// (splitmix64 finalizer).
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

} // namespace sqc
