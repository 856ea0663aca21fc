#ifndef INCPATH_WALKS_HPP
#define INCPATH_WALKS_HPP

#include <cstddef>
#include <vector>

#include "incpath/ordering.hpp"

namespace incpath {

// One trajectory per starting vertex; walks[v] started at v.
struct WalkSet {
  std::vector<VertexWalk> walks;

  std::size_t total_steps() const noexcept;
  std::size_t max_length() const noexcept;
};

struct PathSet {
  std::vector<VertexPath> paths;
  std::size_t walked_edges = 0;
  std::size_t refused_edges = 0;

  std::size_t max_length() const noexcept;
};

// Swap process: a pedestrian stands on every vertex and the edges are
// called in increasing label order; the two pedestrians on a called edge
// trade places. Every trajectory is an increasing walk and the step total
// is n(n-1).
WalkSet pedestrian_walks(const EdgeOrdering& ordering);

// Same process, except an edge is refused (both pedestrians stay) when
// either pedestrian would step onto a vertex it has already visited.
PathSet refusal_paths(const EdgeOrdering& ordering);

// Greedy increasing path from v0: leave each vertex along the smallest
// label that exceeds the previous one and reaches an unvisited vertex.
VertexPath greedy_path(const EdgeOrdering& ordering, Vertex v0);

// Longest increasing walk (vertices may repeat), by one pass over the
// edges in label order.
std::size_t longest_increasing_walk_len(const EdgeOrdering& ordering);

struct JumpSequence {
  std::vector<double> jumps;        // X_1 = f(e_1), X_i = (f(e_i) - f(e_{i-1})) mod 1
  std::vector<double> prefix_sums;  // S_t = X_1 + ... + X_t

  double total() const noexcept { return prefix_sums.empty() ? 0.0 : prefix_sums.back(); }
};

// Cyclic label gaps along a walk. Real-label orderings only; throws
// unsupported_model_error otherwise.
JumpSequence jumps(const EdgeOrdering& ordering, const VertexWalk& walk);

// Hamiltonian vertex sequence from v0 that always takes the edge with the
// smallest jump to an unvisited vertex. It agrees with greedy_path until
// the first non-increasing step. Real-label orderings only.
VertexPath smallest_jump_sequence(const EdgeOrdering& ordering, Vertex v0);

}  // namespace incpath

#endif  // INCPATH_WALKS_HPP
