#pragma once

#include <random>

#include "nclab/linked_partition.hpp"
#include "nclab/nc_enumerate.hpp"
#include "nclab/partition.hpp"
#include "oracles.hpp"

namespace fixture {

// The worked 11-point example used throughout.
inline const char* const kPi = "{1,2,4}{2,3}{4,5,6}{6,7}{8,9,11}{9,10}";
inline const char* const kHat = "{1,2,3,4,5,6,7}{8,9,10,11}";
inline const char* const kCheck = "{1,2,4}{3}{5,6}{7}{8,9,11}{10}";
inline const char* const kCircle = "{1,3,7}{2}{4,5}{6}{8,10,11}{9}";
inline const char* const kCycles = "(1,2,3,4,5,6,7)(8,9,10,11)";

inline nclab::Partition from_oracle(int n, const oracle::Blocks& b) { return nclab::make_partition(n, b); }

inline oracle::Blocks to_oracle(const nclab::Partition& p) { return oracle::sorted_blocks(p.blocks()); }

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(77031);
  return gen;
}

/// Uniform element of NC(n) by picking from the full enumeration.
inline nclab::Partition random_nc(int n) {
  auto all = nclab::enumerate_nc(n);
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  return all[pick(rng())];
}

}  // namespace fixture
