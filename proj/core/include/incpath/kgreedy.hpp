#ifndef INCPATH_KGREEDY_HPP
#define INCPATH_KGREEDY_HPP

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <string_view>
#include <vector>

#include "incpath/ordering.hpp"

namespace incpath {

enum class KGreedyMode {
  strict,   // stop as soon as no eligible edge exists
  exhaust,  // then also walk down the partial tree through largest subtrees
};

std::string_view to_string(KGreedyMode mode) noexcept;
KGreedyMode parse_kgreedy_mode(std::string_view text);

// One path extension taken with a full k-edge tree.
struct ExtensionRecord {
  std::size_t ell = 0;                    // path length after the extension
  std::size_t retained_subtree_size = 0;  // vertices in the kept root-child subtree, 1..k
  double waiting_time = 0.0;              // tau growth since the previous extension
};

struct KGreedyTrace {
  std::vector<ExtensionRecord> extensions;
};

// Columns: ell,retained_subtree_size,waiting_time
void write_trace_csv(std::ostream& out, const KGreedyTrace& trace);

struct TreeEdge {
  Vertex child = 0;
  Vertex parent = 0;
  double time = 0.0;  // label of the edge, as EdgeOrdering::time
};

// Snapshot of the search state at an extension, just before the path moves.
struct SearchTreeState {
  std::vector<Vertex> path;          // P; its last vertex is the tree root
  std::vector<TreeEdge> tree;        // T, in insertion order
  double tau = 0.0;                  // largest committed label, as a time
  std::vector<std::size_t> root_child_subtree_sizes;  // insertion order of root children
  std::size_t chosen_child = 0;      // index into root_child_subtree_sizes
};

using SearchTreeObserver = std::function<void(const SearchTreeState&)>;

struct KGreedyResult {
  VertexPath path;
  KGreedyTrace trace;
};

// Grows a search tree of k edges from the end of the path by repeatedly
// adding the smallest-label edge (above tau) from the tree to a vertex off
// P and T, then moves the path into the largest root-child subtree (ties go
// to the earliest-added child). Throws std::invalid_argument for k == 0 or
// v0 >= n.
KGreedyResult k_greedy_path(const EdgeOrdering& ordering, Vertex v0, std::size_t k,
                            KGreedyMode mode = KGreedyMode::exhaust,
                            const SearchTreeObserver& observer = {});

}  // namespace incpath

#endif  // INCPATH_KGREEDY_HPP
