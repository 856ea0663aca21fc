#include "incpath/exact.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "incpath/errors.hpp"

namespace incpath {

namespace {

void check_cap(std::size_t n, std::size_t cap, std::size_t bytes_per_state, const char* what) {
  if (n <= cap && n < 32) return;
  const double bytes = static_cast<double>(bytes_per_state) * std::ldexp(1.0, static_cast<int>(std::min<std::size_t>(n, 1000)));
  throw capacity_error(std::string(what) + ": n=" + std::to_string(n) + " exceeds cap " + std::to_string(cap) +
                       " (table would need about " + std::to_string(bytes / (1024.0 * 1024.0)) + " MiB)");
}

// Visits every subset of the vertices other than u and v as a bitmask.
template <class F>
void for_each_subset_without(std::uint32_t full, Vertex u, Vertex v, F&& f) {
  const std::uint32_t rest = full & ~((1u << u) | (1u << v));
  std::uint32_t sub = rest;
  for (;;) {
    f(sub);
    if (sub == 0) break;
    sub = (sub - 1) & rest;
  }
}

// reach[S] has bit v set when some increasing path visits exactly S and
// ends at v. Edges arrive in label order; an edge {u,v} only extends paths
// that avoid its other endpoint, and the states it writes contain both u
// and v, so it never reads its own output.
template <class OnReach>
void reachability_dp(const EdgeOrdering& ordering, OnReach&& on_reach) {
  const std::size_t n = ordering.n();
  const std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
  std::vector<std::uint32_t> reach(std::size_t{1} << n, 0);
  for (Vertex v = 0; v < n; ++v) reach[1u << v] = 1u << v;
  const auto endpoints = edge_endpoint_table(n);
  for (EdgeIndex e : ordering.edges_by_label()) {
    auto [u, v] = endpoints[e];
    const std::uint32_t bu = 1u << u, bv = 1u << v;
    bool stop = false;
    for_each_subset_without(full, u, v, [&](std::uint32_t sub) {
      const std::uint32_t target = sub | bu | bv;
      std::uint32_t added = 0;
      if (reach[sub | bu] & bu) added |= bv;
      if (reach[sub | bv] & bv) added |= bu;
      if (added & ~reach[target]) {
        reach[target] |= added;
        if (on_reach(target)) stop = true;
      }
    });
    if (stop) return;
  }
}

}  // namespace

std::size_t longest_increasing_path_len(const EdgeOrdering& ordering, std::size_t cap) {
  check_cap(ordering.n(), cap, sizeof(std::uint32_t), "longest_increasing_path_len");
  int best = 1;
  reachability_dp(ordering, [&](std::uint32_t set) {
    best = std::max(best, std::popcount(set));
    return false;
  });
  return static_cast<std::size_t>(best - 1);
}

bool has_increasing_ham_path(const EdgeOrdering& ordering, std::size_t cap) {
  const std::size_t n = ordering.n();
  check_cap(n, cap, sizeof(std::uint32_t), "has_increasing_ham_path");
  const std::uint32_t full = (1u << n) - 1;
  bool found = false;
  reachability_dp(ordering, [&](std::uint32_t set) {
    if (set == full) found = true;
    return found;
  });
  return found;
}

std::uint64_t count_increasing_ham_paths(const EdgeOrdering& ordering, std::size_t cap) {
  const std::size_t n = ordering.n();
  check_cap(n, cap, n * sizeof(std::uint64_t), "count_increasing_ham_paths");
  const std::uint32_t full = (1u << n) - 1;
  // count[S * n + v]: increasing paths visiting exactly S and ending at v.
  std::vector<std::uint64_t> count((std::size_t{1} << n) * n, 0);
  for (Vertex v = 0; v < n; ++v) count[(std::size_t{1} << v) * n + v] = 1;
  const auto endpoints = edge_endpoint_table(n);
  for (EdgeIndex e : ordering.edges_by_label()) {
    auto [u, v] = endpoints[e];
    const std::uint32_t bu = 1u << u, bv = 1u << v;
    for_each_subset_without(full, u, v, [&](std::uint32_t sub) {
      const std::size_t target = static_cast<std::size_t>(sub | bu | bv) * n;
      const std::uint64_t from_u = count[static_cast<std::size_t>(sub | bu) * n + u];
      const std::uint64_t from_v = count[static_cast<std::size_t>(sub | bv) * n + v];
      if (from_u != 0 && __builtin_add_overflow(count[target + v], from_u, &count[target + v])) {
        throw std::overflow_error("count_increasing_ham_paths: 64-bit overflow");
      }
      if (from_v != 0 && __builtin_add_overflow(count[target + u], from_v, &count[target + u])) {
        throw std::overflow_error("count_increasing_ham_paths: 64-bit overflow");
      }
    });
  }
  std::uint64_t total = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (__builtin_add_overflow(total, count[static_cast<std::size_t>(full) * n + v], &total)) {
      throw std::overflow_error("count_increasing_ham_paths: 64-bit overflow");
    }
  }
  return total;
}

namespace {

template <class Label>
std::size_t dfs_longest(std::span<const Label> labels, std::size_t n, Vertex at, std::uint32_t visited,
                        bool has_last, Label last) {
  std::size_t best = 0;
  for (Vertex next = 0; next < n; ++next) {
    if (visited & (1u << next)) continue;
    const Label label = labels[edge_index_unchecked(at, next, n)];
    if (has_last && !(last < label)) continue;
    best = std::max(best, 1 + dfs_longest(labels, n, next, visited | (1u << next), true, label));
  }
  return best;
}

}  // namespace

std::size_t brute_force_longest(const EdgeOrdering& ordering) {
  const std::size_t n = ordering.n();
  if (n > brute_force_cap) {
    throw capacity_error("brute_force_longest: n=" + std::to_string(n) + " exceeds cap " +
                         std::to_string(brute_force_cap));
  }
  return ordering.visit_labels([&](auto labels) {
    using Label = typename decltype(labels)::value_type;
    std::size_t best = 0;
    for (Vertex start = 0; start < n; ++start) {
      best = std::max(best, dfs_longest<Label>(labels, n, start, 1u << start, false, Label{}));
    }
    return best;
  });
}

}  // namespace incpath
