#include "incpath/walks.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "incpath/errors.hpp"

namespace incpath {

std::size_t WalkSet::total_steps() const noexcept {
  std::size_t total = 0;
  for (const auto& w : walks) total += w.length();
  return total;
}

std::size_t WalkSet::max_length() const noexcept {
  std::size_t best = 0;
  for (const auto& w : walks) best = std::max(best, w.length());
  return best;
}

std::size_t PathSet::max_length() const noexcept {
  std::size_t best = 0;
  for (const auto& p : paths) best = std::max(best, p.length());
  return best;
}

WalkSet pedestrian_walks(const EdgeOrdering& ordering) {
  const std::size_t n = ordering.n();
  std::vector<std::vector<Vertex>> trails(n);
  std::vector<Vertex> occupant(n);  // pedestrian (named by start vertex) standing on each vertex
  for (Vertex v = 0; v < n; ++v) {
    occupant[v] = v;
    trails[v].reserve(n);
    trails[v].push_back(v);
  }
  const auto endpoints = edge_endpoint_table(n);
  for (EdgeIndex e : ordering.edges_by_label()) {
    auto [u, v] = endpoints[e];
    std::swap(occupant[u], occupant[v]);
    trails[occupant[u]].push_back(u);
    trails[occupant[v]].push_back(v);
  }
  WalkSet result;
  result.walks.reserve(n);
  for (auto& t : trails) result.walks.emplace_back(std::move(t));
  return result;
}

PathSet refusal_paths(const EdgeOrdering& ordering) {
  const std::size_t n = ordering.n();
  std::vector<std::vector<Vertex>> trails(n);
  std::vector<std::vector<bool>> visited(n, std::vector<bool>(n, false));
  std::vector<Vertex> occupant(n);
  for (Vertex v = 0; v < n; ++v) {
    occupant[v] = v;
    trails[v].push_back(v);
    visited[v][v] = true;
  }
  PathSet result;
  const auto endpoints = edge_endpoint_table(n);
  for (EdgeIndex e : ordering.edges_by_label()) {
    auto [u, v] = endpoints[e];
    const Vertex p = occupant[u];
    const Vertex q = occupant[v];
    if (visited[p][v] || visited[q][u]) {
      ++result.refused_edges;
      continue;
    }
    ++result.walked_edges;
    std::swap(occupant[u], occupant[v]);
    visited[p][v] = true;
    visited[q][u] = true;
    trails[p].push_back(v);
    trails[q].push_back(u);
  }
  result.paths.reserve(n);
  for (auto& t : trails) result.paths.emplace_back(std::move(t));
  return result;
}

VertexPath greedy_path(const EdgeOrdering& ordering, Vertex v0) {
  const std::size_t n = ordering.n();
  if (v0 >= n) throw std::invalid_argument("greedy_path: start vertex out of range");
  return ordering.visit_labels([&](auto labels) {
    using Label = typename decltype(labels)::value_type;
    std::vector<bool> used(n, false);
    std::vector<Vertex> path{v0};
    used[v0] = true;
    Vertex current = v0;
    bool first = true;
    Label previous{};
    for (;;) {
      std::size_t best = n;
      Label best_label{};
      for (Vertex x = 0; x < n; ++x) {
        if (used[x]) continue;
        const Label label = labels[edge_index_unchecked(current, x, n)];
        if (!first && !(previous < label)) continue;
        if (best == n || label < best_label) {
          best = x;
          best_label = label;
        }
      }
      if (best == n) break;
      current = static_cast<Vertex>(best);
      used[current] = true;
      path.push_back(current);
      previous = best_label;
      first = false;
    }
    return VertexPath(std::move(path));
  });
}

std::size_t longest_increasing_walk_len(const EdgeOrdering& ordering) {
  const std::size_t n = ordering.n();
  std::vector<std::size_t> best(n, 0);  // longest increasing walk ending at v so far
  std::size_t overall = 0;
  const auto endpoints = edge_endpoint_table(n);
  for (EdgeIndex e : ordering.edges_by_label()) {
    auto [u, v] = endpoints[e];
    const std::size_t into_u = best[v] + 1;
    const std::size_t into_v = best[u] + 1;
    best[u] = std::max(best[u], into_u);
    best[v] = std::max(best[v], into_v);
    overall = std::max({overall, best[u], best[v]});
  }
  return overall;
}

JumpSequence jumps(const EdgeOrdering& ordering, const VertexWalk& walk) {
  const auto labels = ordering.real_labels();
  const std::size_t n = ordering.n();
  JumpSequence result;
  double previous = 0.0;
  double sum = 0.0;
  for (std::size_t i = 1; i < walk.size(); ++i) {
    const double label = labels[edge_index(walk.vertices()[i - 1], walk.vertices()[i], n)];
    const double jump = (i == 1) ? label : (label > previous ? label - previous : 1.0 + label - previous);
    sum += jump;
    result.jumps.push_back(jump);
    result.prefix_sums.push_back(sum);
    previous = label;
  }
  return result;
}

VertexPath smallest_jump_sequence(const EdgeOrdering& ordering, Vertex v0) {
  const auto labels = ordering.real_labels();
  const std::size_t n = ordering.n();
  if (v0 >= n) throw std::invalid_argument("smallest_jump_sequence: start vertex out of range");
  std::vector<bool> used(n, false);
  std::vector<Vertex> sequence{v0};
  used[v0] = true;
  Vertex current = v0;
  double previous = 0.0;
  for (std::size_t step = 1; step < n; ++step) {
    Vertex best = 0;
    double best_jump = std::numeric_limits<double>::infinity();
    for (Vertex x = 0; x < n; ++x) {
      if (used[x]) continue;
      const double label = labels[edge_index_unchecked(current, x, n)];
      const double jump = label > previous ? label - previous : 1.0 + label - previous;
      if (jump < best_jump) {
        best_jump = jump;
        best = x;
      }
    }
    previous = labels[edge_index_unchecked(current, best, n)];
    current = best;
    used[best] = true;
    sequence.push_back(best);
  }
  return VertexPath(std::move(sequence));
}

}  // namespace incpath
