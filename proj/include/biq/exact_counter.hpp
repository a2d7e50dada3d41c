#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

#include "biq/count_table.hpp"
#include "biq/exec.hpp"
#include "biq/term_lattice.hpp"

namespace biq {

inline constexpr std::size_t kDefaultOracleCap = 100'000;

// f_{p,q}(n) for n = 0..n_max by 0/1-knapsack counting over the term grid.
//
// The serial kernel updates one array in place with a descending index sweep.
// The parallel kernel double-buffers each term step so every index is
// independent: next[n] = cur[n] + cur[n - t].
//
// Throws std::length_error if n_max exceeds cap.
CountTable count_distinct_representations(const BasePair& base, std::size_t n_max,
                                          Exec exec = Exec::parallel,
                                          std::size_t cap = kDefaultOracleCap);

// Same count with the terms processed in the caller's order (any permutation of
// the grid values <= n_max). Used to check order insensitivity.
CountTable count_distinct_representations_ordered(const BasePair& base, std::size_t n_max,
                                                  std::span<const std::uint64_t> term_order);

// b_m(n) for n = 0..n_max by unbounded-knapsack counting over powers of m.
//
// Each power t is an ascending sweep values[n] += values[n - t]; the chains
// n = r, r + t, r + 2t, ... for distinct residues r are independent, which is
// what the parallel kernel splits on.
CountTable count_mary_partitions_oracle(std::uint64_t m, std::size_t n_max,
                                        Exec exec = Exec::parallel,
                                        std::size_t cap = kDefaultOracleCap);

}  // namespace biq
