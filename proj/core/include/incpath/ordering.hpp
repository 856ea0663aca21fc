#ifndef INCPATH_ORDERING_HPP
#define INCPATH_ORDERING_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace incpath {

using Vertex = std::uint32_t;
using EdgeIndex = std::size_t;

// Number of edges of K_n.
constexpr std::size_t edge_count(std::size_t n) noexcept { return n * (n - 1) / 2; }

// Rank of {min(u,v), max(u,v)} among all pairs in lexicographic order.
// Throws std::invalid_argument when u == v or either vertex is >= n.
EdgeIndex edge_index(Vertex u, Vertex v, std::size_t n);

// Inverse of edge_index.
std::pair<Vertex, Vertex> edge_endpoints(EdgeIndex e, std::size_t n);

// edge_endpoints for every index, in edge_index order.
std::vector<std::pair<Vertex, Vertex>> edge_endpoint_table(std::size_t n);

// Unchecked edge_index for hot loops; requires u != v, both < n.
constexpr EdgeIndex edge_index_unchecked(Vertex u, Vertex v, std::size_t n) noexcept {
  if (u > v) std::swap(u, v);
  return static_cast<EdgeIndex>(u) * (2 * n - u - 1) / 2 + (v - u - 1);
}

enum class LabelModel { permutation, real };

std::string_view to_string(LabelModel model) noexcept;
// Accepts "perm", "permutation", "real".
LabelModel parse_label_model(std::string_view text);

class EdgeOrdering;

// Uniform random ordering; deterministic in (n, seed, model).
EdgeOrdering random_ordering(std::size_t n, std::uint64_t seed,
                             LabelModel model = LabelModel::permutation);

// A labelling f : E(K_n) -> labels, indexed by edge_index. Immutable once
// built. Permutation labels are a bijection onto 1..n(n-1)/2; real labels
// are pairwise distinct values in (0,1).
class EdgeOrdering {
 public:
  static EdgeOrdering from_permutation(std::size_t n, std::vector<std::uint32_t> labels,
                                       std::optional<std::uint64_t> seed = std::nullopt);
  static EdgeOrdering from_reals(std::size_t n, std::vector<double> labels,
                                 std::optional<std::uint64_t> seed = std::nullopt);

  std::size_t n() const noexcept { return n_; }
  std::size_t edges() const noexcept { return edge_count(n_); }
  LabelModel model() const noexcept { return model_; }
  std::optional<std::uint64_t> seed() const noexcept { return seed_; }

  std::span<const std::uint32_t> permutation_labels() const;  // throws for real model
  std::span<const double> real_labels() const;                // throws for permutation model

  // Label mapped into (0,1): the real label itself, or rank/(N+1).
  double time(EdgeIndex e) const noexcept;
  double time(Vertex u, Vertex v) const noexcept { return time(edge_index_unchecked(u, v, n_)); }

  // True iff edge a carries a smaller label than edge b.
  bool less(EdgeIndex a, EdgeIndex b) const noexcept;

  // Edge indices sorted by ascending label.
  std::vector<EdgeIndex> edges_by_label() const;

  // The permutation-model ordering inducing the same relative order.
  EdgeOrdering induced_permutation() const;

  // Calls f with a span of the stored labels (uint32_t or double).
  template <class F>
  decltype(auto) visit_labels(F&& f) const {
    if (model_ == LabelModel::permutation) {
      return f(std::span<const std::uint32_t>(std::get<std::vector<std::uint32_t>>(labels_)));
    }
    return f(std::span<const double>(std::get<std::vector<double>>(labels_)));
  }

  friend bool operator==(const EdgeOrdering&, const EdgeOrdering&) = default;

 private:
  friend EdgeOrdering random_ordering(std::size_t, std::uint64_t, LabelModel);

  EdgeOrdering(std::size_t n, LabelModel model,
               std::variant<std::vector<std::uint32_t>, std::vector<double>> labels,
               std::optional<std::uint64_t> seed)
      : n_(n), model_(model), labels_(std::move(labels)), seed_(seed) {}

  std::size_t n_ = 0;
  LabelModel model_ = LabelModel::permutation;
  std::variant<std::vector<std::uint32_t>, std::vector<double>> labels_;
  std::optional<std::uint64_t> seed_;
};

// Circle-method 1-factorization of K_n (n even): matching r takes labels
// r*(n/2)+1 .. (r+1)*(n/2), ascending in edge_index within the matching.
EdgeOrdering matching_ordering(std::size_t n);

// The perfect matchings used by matching_ordering, round by round.
std::vector<std::vector<std::pair<Vertex, Vertex>>> round_robin_matchings(std::size_t n);

// A vertex sequence with no two consecutive vertices equal.
class VertexWalk {
 public:
  VertexWalk() = default;
  explicit VertexWalk(std::vector<Vertex> vertices);

  std::span<const Vertex> vertices() const noexcept { return vertices_; }
  std::size_t size() const noexcept { return vertices_.size(); }
  // Number of edges.
  std::size_t length() const noexcept { return vertices_.empty() ? 0 : vertices_.size() - 1; }
  Vertex front() const { return vertices_.front(); }
  Vertex back() const { return vertices_.back(); }

  friend bool operator==(const VertexWalk&, const VertexWalk&) = default;

 private:
  std::vector<Vertex> vertices_;
};

// A self-avoiding walk.
class VertexPath {
 public:
  VertexPath() = default;
  explicit VertexPath(std::vector<Vertex> vertices);

  std::span<const Vertex> vertices() const noexcept { return vertices_; }
  std::size_t size() const noexcept { return vertices_.size(); }
  std::size_t length() const noexcept { return vertices_.empty() ? 0 : vertices_.size() - 1; }
  Vertex front() const { return vertices_.front(); }
  Vertex back() const { return vertices_.back(); }
  VertexWalk as_walk() const { return VertexWalk(vertices_); }

  friend bool operator==(const VertexPath&, const VertexPath&) = default;

 private:
  std::vector<Vertex> vertices_;
};

// Consecutive edge labels strictly increase. Walks with fewer than two
// edges are increasing. Throws std::invalid_argument for vertices >= n.
bool is_increasing(const EdgeOrdering& ordering, std::span<const Vertex> walk);
inline bool is_increasing(const EdgeOrdering& ordering, const VertexWalk& walk) {
  return is_increasing(ordering, walk.vertices());
}
inline bool is_increasing(const EdgeOrdering& ordering, const VertexPath& path) {
  return is_increasing(ordering, path.vertices());
}

// Text format:
//   n <n> <perm|real>
//   <u> <v> <label>        one line per edge, edge_index order
// Real labels use 17 significant digits so doubles round-trip exactly.
void write_ordering(std::ostream& out, const EdgeOrdering& ordering);
EdgeOrdering read_ordering(std::istream& in);

}  // namespace incpath

#endif  // INCPATH_ORDERING_HPP
