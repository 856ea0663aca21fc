#ifndef INCPATH_EXACT_HPP
#define INCPATH_EXACT_HPP

#include <cstddef>
#include <cstdint>

#include "incpath/ordering.hpp"

namespace incpath {

inline constexpr std::size_t default_exact_cap = 20;
inline constexpr std::size_t brute_force_cap = 8;

// Subset dynamic programs over (visited set, last vertex), fed the edges in
// ascending label order. Each throws capacity_error when n > cap; the
// message carries the memory the table would need.

// Edge count of the longest increasing path.
std::size_t longest_increasing_path_len(const EdgeOrdering& ordering,
                                        std::size_t cap = default_exact_cap);

// Number of vertex sequences visiting all n vertices whose consecutive
// edge labels increase (H_n). Throws std::overflow_error if a count
// exceeds 64 bits.
std::uint64_t count_increasing_ham_paths(const EdgeOrdering& ordering,
                                         std::size_t cap = default_exact_cap);

// Stops as soon as a full vertex set is reached.
bool has_increasing_ham_path(const EdgeOrdering& ordering, std::size_t cap = default_exact_cap);

// Depth-first search over every simple increasing path; n <= 8.
std::size_t brute_force_longest(const EdgeOrdering& ordering);

}  // namespace incpath

#endif  // INCPATH_EXACT_HPP
