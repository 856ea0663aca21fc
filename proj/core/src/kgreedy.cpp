#include "incpath/kgreedy.hpp"

#include <algorithm>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>

namespace incpath {

std::string_view to_string(KGreedyMode mode) noexcept {
  return mode == KGreedyMode::strict ? "strict" : "exhaust";
}

KGreedyMode parse_kgreedy_mode(std::string_view text) {
  if (text == "strict") return KGreedyMode::strict;
  if (text == "exhaust") return KGreedyMode::exhaust;
  throw std::invalid_argument("unknown k-greedy mode '" + std::string(text) + "'");
}

void write_trace_csv(std::ostream& out, const KGreedyTrace& trace) {
  out << "ell,retained_subtree_size,waiting_time\n";
  for (const auto& r : trace.extensions) {
    out << r.ell << ',' << r.retained_subtree_size << ',' << r.waiting_time << '\n';
  }
}

namespace {

constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

template <class Label>
class SearchTree {
 public:
  SearchTree(const EdgeOrdering& ordering, std::span<const Label> labels, std::size_t k,
             const SearchTreeObserver& observer)
      : ordering_(ordering),
        labels_(labels),
        n_(ordering.n()),
        k_(k),
        observer_(observer),
        adjacency_(n_ * (n_ - 1)),
        fill_(n_, 0),
        cursor_(n_, 0),
        candidate_(n_, npos),
        in_path_(n_, false),
        in_tree_(n_, false),
        parent_(n_, kNone),
        children_(n_) {
    // Neighbours of every vertex in ascending label order, built from one
    // pass over the edges in label order.
    const auto endpoints = edge_endpoint_table(n_);
    for (EdgeIndex e : ordering.edges_by_label()) {
      auto [u, v] = endpoints[e];
      adjacency_[u * (n_ - 1) + fill_[u]++] = v;
      adjacency_[v * (n_ - 1) + fill_[v]++] = u;
    }
  }

  KGreedyResult run(Vertex v0, KGreedyMode mode) {
    path_.push_back(v0);
    in_path_[v0] = true;
    tree_.push_back(v0);
    in_tree_[v0] = true;
    refresh_candidate(v0);

    for (;;) {
      while (tree_.size() - 1 < k_) {
        const Vertex x = best_candidate();
        if (x == kNone) {
          if (mode == KGreedyMode::exhaust) drain_tree();
          return finish();
        }
        add_to_tree(x);
      }
      const std::size_t retained = descend(true);
      trace_.extensions.push_back(ExtensionRecord{path_.size() - 1, retained, tau_time_ - last_extension_time_});
      last_extension_time_ = tau_time_;
      for (Vertex v : tree_) refresh_candidate(v);
    }
  }

 private:
  static constexpr Vertex kNone = std::numeric_limits<Vertex>::max();

  Label label(Vertex a, Vertex b) const { return labels_[edge_index_unchecked(a, b, n_)]; }
  Vertex neighbour(Vertex v, std::size_t pos) const { return adjacency_[v * (n_ - 1) + pos]; }

  // Recomputes the smallest eligible edge from tree vertex v. The cursor
  // only skips entries that can never become eligible again (label not
  // above tau, or far end on the path); tree members are skipped per call
  // because they may later be discarded from T.
  void refresh_candidate(Vertex v) {
    std::size_t& pos = cursor_[v];
    const std::size_t end = n_ - 1;
    while (pos < end) {
      const Vertex w = neighbour(v, pos);
      if (in_path_[w] || (started_ && !(tau_ < label(v, w)))) {
        ++pos;
        continue;
      }
      break;
    }
    std::size_t scan = pos;
    while (scan < end) {
      const Vertex w = neighbour(v, scan);
      if (!in_path_[w] && !in_tree_[w]) break;
      ++scan;
    }
    candidate_[v] = scan < end ? scan : npos;
  }

  Vertex best_candidate() const {
    Vertex best = kNone;
    Label best_label{};
    for (Vertex v : tree_) {
      if (candidate_[v] == npos) continue;
      const Label l = label(v, neighbour(v, candidate_[v]));
      if (best == kNone || l < best_label) {
        best = v;
        best_label = l;
      }
    }
    return best;
  }

  void add_to_tree(Vertex from) {
    const Vertex y = neighbour(from, candidate_[from]);
    tau_ = label(from, y);
    tau_time_ = ordering_.time(from, y);
    started_ = true;
    parent_[y] = from;
    children_[from].push_back(y);
    tree_.push_back(y);
    in_tree_[y] = true;
    for (Vertex v : tree_) {
      if (v == y || (candidate_[v] != npos && neighbour(v, candidate_[v]) == y)) refresh_candidate(v);
    }
  }

  std::size_t subtree_size(Vertex v) const {
    std::size_t size = 1;
    for (Vertex c : children_[v]) size += subtree_size(c);
    return size;
  }

  void collect(Vertex v, std::vector<Vertex>& out) const {
    out.push_back(v);
    for (Vertex c : children_[v]) collect(c, out);
  }

  // Moves the path into the largest root-child subtree; returns its size.
  std::size_t descend(bool notify) {
    const Vertex root = path_.back();
    const auto& kids = children_[root];
    std::vector<std::size_t> sizes;
    sizes.reserve(kids.size());
    std::size_t chosen = 0;
    for (std::size_t i = 0; i < kids.size(); ++i) {
      sizes.push_back(subtree_size(kids[i]));
      if (sizes[i] > sizes[chosen]) chosen = i;
    }
    if (notify && observer_) observer_(snapshot(sizes, chosen));

    const Vertex x = kids[chosen];
    std::vector<Vertex> kept;
    collect(x, kept);
    for (Vertex v : tree_) in_tree_[v] = false;
    for (Vertex v : kept) in_tree_[v] = true;
    for (Vertex v : tree_) {
      if (!in_tree_[v]) {
        children_[v].clear();
        parent_[v] = kNone;
        candidate_[v] = npos;
      }
    }
    parent_[x] = kNone;
    tree_ = std::move(kept);
    path_.push_back(x);
    in_path_[x] = true;
    return sizes[chosen];
  }

  void drain_tree() {
    while (!children_[path_.back()].empty()) descend(false);
  }

  SearchTreeState snapshot(const std::vector<std::size_t>& sizes, std::size_t chosen) const {
    SearchTreeState state;
    state.path = path_;
    for (Vertex v : tree_) {
      if (parent_[v] != kNone) state.tree.push_back(TreeEdge{v, parent_[v], ordering_.time(v, parent_[v])});
    }
    // tree_ lists vertices in DFS order after a descent; restore insertion
    // order by edge time, which increases with insertion.
    std::sort(state.tree.begin(), state.tree.end(),
              [](const TreeEdge& a, const TreeEdge& b) { return a.time < b.time; });
    state.tau = tau_time_;
    state.root_child_subtree_sizes = sizes;
    state.chosen_child = chosen;
    return state;
  }

  KGreedyResult finish() { return KGreedyResult{VertexPath(std::move(path_)), std::move(trace_)}; }

  const EdgeOrdering& ordering_;
  std::span<const Label> labels_;
  std::size_t n_;
  std::size_t k_;
  const SearchTreeObserver& observer_;

  std::vector<Vertex> adjacency_;
  std::vector<std::size_t> fill_;
  std::vector<std::size_t> cursor_;
  std::vector<std::size_t> candidate_;
  std::vector<bool> in_path_;
  std::vector<bool> in_tree_;
  std::vector<Vertex> parent_;
  std::vector<std::vector<Vertex>> children_;

  std::vector<Vertex> path_;
  std::vector<Vertex> tree_;
  Label tau_{};
  bool started_ = false;
  double tau_time_ = 0.0;
  double last_extension_time_ = 0.0;
  KGreedyTrace trace_;
};

}  // namespace

KGreedyResult k_greedy_path(const EdgeOrdering& ordering, Vertex v0, std::size_t k,
                            KGreedyMode mode, const SearchTreeObserver& observer) {
  if (k < 1) throw std::invalid_argument("k_greedy_path: k must be at least 1");
  if (v0 >= ordering.n()) throw std::invalid_argument("k_greedy_path: start vertex out of range");
  return ordering.visit_labels([&](auto labels) {
    using Label = typename decltype(labels)::value_type;
    SearchTree<Label> tree(ordering, labels, k, observer);
    return tree.run(v0, mode);
  });
}

}  // namespace incpath
