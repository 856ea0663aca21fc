#include "incpath/ordering.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "incpath/errors.hpp"
#include "incpath/rng.hpp"

namespace incpath {

EdgeIndex edge_index(Vertex u, Vertex v, std::size_t n) {
  if (u == v) throw std::invalid_argument("edge_index: endpoints must differ");
  if (u >= n || v >= n) {
    throw std::invalid_argument("edge_index: vertex out of range for n=" + std::to_string(n));
  }
  return edge_index_unchecked(u, v, n);
}

std::pair<Vertex, Vertex> edge_endpoints(EdgeIndex e, std::size_t n) {
  if (e >= edge_count(n)) throw std::invalid_argument("edge_endpoints: index out of range");
  Vertex u = 0;
  std::size_t row = n - 1;  // edges whose smaller endpoint is u
  while (e >= row) {
    e -= row;
    ++u;
    --row;
  }
  return {u, static_cast<Vertex>(u + 1 + e)};
}

std::vector<std::pair<Vertex, Vertex>> edge_endpoint_table(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> table;
  table.reserve(edge_count(n));
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) table.emplace_back(u, v);
  }
  return table;
}

std::string_view to_string(LabelModel model) noexcept {
  return model == LabelModel::permutation ? "perm" : "real";
}

LabelModel parse_label_model(std::string_view text) {
  if (text == "perm" || text == "permutation") return LabelModel::permutation;
  if (text == "real") return LabelModel::real;
  throw std::invalid_argument("unknown label model '" + std::string(text) + "'");
}

EdgeOrdering EdgeOrdering::from_permutation(std::size_t n, std::vector<std::uint32_t> labels,
                                            std::optional<std::uint64_t> seed) {
  if (n < 2) throw std::invalid_argument("EdgeOrdering: n must be at least 2");
  const std::size_t m = edge_count(n);
  if (labels.size() != m) throw std::invalid_argument("EdgeOrdering: wrong label count");
  std::vector<bool> seen(m + 1, false);
  for (auto label : labels) {
    if (label < 1 || label > m || seen[label]) {
      throw std::invalid_argument("EdgeOrdering: permutation labels must be a bijection onto 1..n(n-1)/2");
    }
    seen[label] = true;
  }
  return EdgeOrdering(n, LabelModel::permutation, std::move(labels), seed);
}

EdgeOrdering EdgeOrdering::from_reals(std::size_t n, std::vector<double> labels,
                                      std::optional<std::uint64_t> seed) {
  if (n < 2) throw std::invalid_argument("EdgeOrdering: n must be at least 2");
  if (labels.size() != edge_count(n)) throw std::invalid_argument("EdgeOrdering: wrong label count");
  for (double x : labels) {
    if (!(x > 0.0 && x < 1.0)) throw std::invalid_argument("EdgeOrdering: real labels must lie in (0,1)");
  }
  std::vector<double> sorted = labels;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("EdgeOrdering: real labels must be distinct");
  }
  return EdgeOrdering(n, LabelModel::real, std::move(labels), seed);
}

std::span<const std::uint32_t> EdgeOrdering::permutation_labels() const {
  if (model_ != LabelModel::permutation) throw unsupported_model_error("ordering uses real labels");
  return std::get<std::vector<std::uint32_t>>(labels_);
}

std::span<const double> EdgeOrdering::real_labels() const {
  if (model_ != LabelModel::real) throw unsupported_model_error("ordering uses permutation labels");
  return std::get<std::vector<double>>(labels_);
}

double EdgeOrdering::time(EdgeIndex e) const noexcept {
  if (model_ == LabelModel::real) return std::get<std::vector<double>>(labels_)[e];
  return static_cast<double>(std::get<std::vector<std::uint32_t>>(labels_)[e]) /
         static_cast<double>(edges() + 1);
}

bool EdgeOrdering::less(EdgeIndex a, EdgeIndex b) const noexcept {
  return visit_labels([&](auto labels) { return labels[a] < labels[b]; });
}

std::vector<EdgeIndex> EdgeOrdering::edges_by_label() const {
  std::vector<EdgeIndex> order(edges());
  visit_labels([&](auto labels) {
    using Label = typename decltype(labels)::value_type;
    if constexpr (std::is_same_v<Label, std::uint32_t>) {
      for (EdgeIndex e = 0; e < labels.size(); ++e) order[labels[e] - 1] = e;
    } else {
      std::iota(order.begin(), order.end(), EdgeIndex{0});
      std::sort(order.begin(), order.end(),
                [&](EdgeIndex a, EdgeIndex b) { return labels[a] < labels[b]; });
    }
  });
  return order;
}

EdgeOrdering EdgeOrdering::induced_permutation() const {
  if (model_ == LabelModel::permutation) return *this;
  const auto order = edges_by_label();
  std::vector<std::uint32_t> ranks(order.size());
  for (std::size_t r = 0; r < order.size(); ++r) ranks[order[r]] = static_cast<std::uint32_t>(r + 1);
  return EdgeOrdering(n_, LabelModel::permutation, std::move(ranks), seed_);
}

EdgeOrdering random_ordering(std::size_t n, std::uint64_t seed, LabelModel model) {
  if (n < 2) throw std::invalid_argument("random_ordering: n must be at least 2");
  const std::size_t m = edge_count(n);
  Rng rng(seed);
  if (model == LabelModel::permutation) {
    std::vector<std::uint32_t> labels(m);
    std::iota(labels.begin(), labels.end(), std::uint32_t{1});
    for (std::size_t i = m - 1; i > 0; --i) {
      std::swap(labels[i], labels[uniform_below(rng, i + 1)]);
    }
    return EdgeOrdering(n, model, std::move(labels), seed);
  }

  std::vector<double> labels(m);
  for (auto& x : labels) x = uniform_open01(rng);
  // Break exact ties: walking in (label, index) order, bump any label that
  // does not exceed its predecessor to the next representable double.
  std::vector<EdgeIndex> order(m);
  std::iota(order.begin(), order.end(), EdgeIndex{0});
  std::sort(order.begin(), order.end(), [&](EdgeIndex a, EdgeIndex b) {
    return labels[a] != labels[b] ? labels[a] < labels[b] : a < b;
  });
  for (std::size_t i = 1; i < m; ++i) {
    double& cur = labels[order[i]];
    const double prev = labels[order[i - 1]];
    if (cur <= prev) {
      cur = std::nextafter(prev, 1.0);
      if (cur >= 1.0) throw std::logic_error("random_ordering: tie-break left (0,1)");
    }
  }
  return EdgeOrdering(n, model, std::move(labels), seed);
}

std::vector<std::vector<std::pair<Vertex, Vertex>>> round_robin_matchings(std::size_t n) {
  if (n < 2 || n % 2 != 0) throw std::invalid_argument("round_robin_matchings: n must be even and >= 2");
  const std::size_t m = n - 1;
  const auto fixed = static_cast<Vertex>(n - 1);
  std::vector<std::vector<std::pair<Vertex, Vertex>>> rounds(m);
  for (std::size_t r = 0; r < m; ++r) {
    auto& round = rounds[r];
    round.emplace_back(static_cast<Vertex>(r), fixed);
    for (std::size_t i = 1; i < n / 2; ++i) {
      auto a = static_cast<Vertex>((r + i) % m);
      auto b = static_cast<Vertex>((r + m - i) % m);
      round.emplace_back(std::min(a, b), std::max(a, b));
    }
  }
  return rounds;
}

EdgeOrdering matching_ordering(std::size_t n) {
  if (n < 2 || n % 2 != 0) throw std::invalid_argument("matching_ordering: n must be even and >= 2");
  std::vector<std::uint32_t> labels(edge_count(n), 0);
  std::uint32_t next = 1;
  for (const auto& round : round_robin_matchings(n)) {
    std::vector<EdgeIndex> ids;
    for (auto [u, v] : round) ids.push_back(edge_index(u, v, n));
    std::sort(ids.begin(), ids.end());
    for (auto e : ids) labels[e] = next++;
  }
  return EdgeOrdering::from_permutation(n, std::move(labels));
}

VertexWalk::VertexWalk(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.empty()) throw std::invalid_argument("VertexWalk: needs at least one vertex");
  for (std::size_t i = 1; i < vertices_.size(); ++i) {
    if (vertices_[i] == vertices_[i - 1]) {
      throw std::invalid_argument("VertexWalk: consecutive vertices must differ");
    }
  }
}

VertexPath::VertexPath(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.empty()) throw std::invalid_argument("VertexPath: needs at least one vertex");
  std::vector<Vertex> sorted = vertices_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("VertexPath: vertices must be distinct");
  }
}

bool is_increasing(const EdgeOrdering& ordering, std::span<const Vertex> walk) {
  const std::size_t n = ordering.n();
  for (auto v : walk) {
    if (v >= n) throw std::invalid_argument("is_increasing: vertex out of range");
  }
  if (walk.size() < 3) return true;
  return ordering.visit_labels([&](auto labels) {
    auto prev = labels[edge_index(walk[0], walk[1], n)];
    for (std::size_t i = 2; i < walk.size(); ++i) {
      auto cur = labels[edge_index(walk[i - 1], walk[i], n)];
      if (!(prev < cur)) return false;
      prev = cur;
    }
    return true;
  });
}

void write_ordering(std::ostream& out, const EdgeOrdering& ordering) {
  const std::size_t n = ordering.n();
  out << "n " << n << ' ' << to_string(ordering.model()) << '\n';
  const auto endpoints = edge_endpoint_table(n);
  ordering.visit_labels([&](auto labels) {
    char buffer[64];
    for (EdgeIndex e = 0; e < labels.size(); ++e) {
      auto [u, v] = endpoints[e];
      out << u << ' ' << v << ' ';
      if constexpr (std::is_same_v<typename decltype(labels)::value_type, double>) {
        std::snprintf(buffer, sizeof buffer, "%.17g", labels[e]);
        out << buffer;
      } else {
        out << labels[e];
      }
      out << '\n';
    }
  });
}

EdgeOrdering read_ordering(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw std::invalid_argument("read_ordering: missing header");
  std::istringstream header(line);
  std::string tag, model_text;
  std::size_t n = 0;
  if (!(header >> tag >> n >> model_text) || tag != "n") {
    throw std::invalid_argument("read_ordering: malformed header '" + line + "'");
  }
  const LabelModel model = parse_label_model(model_text);
  if (n < 2) throw std::invalid_argument("read_ordering: n must be at least 2");
  const std::size_t m = edge_count(n);

  const auto endpoints = edge_endpoint_table(n);
  std::vector<std::uint32_t> ints;
  std::vector<double> reals;
  for (EdgeIndex e = 0; e < m; ++e) {
    if (!std::getline(in, line)) throw std::invalid_argument("read_ordering: truncated edge list");
    std::istringstream row(line);
    Vertex u = 0, v = 0;
    std::string label;
    if (!(row >> u >> v >> label)) throw std::invalid_argument("read_ordering: malformed line '" + line + "'");
    if (endpoints[e] != std::pair{u, v}) {
      throw std::invalid_argument("read_ordering: edges must appear in edge_index order");
    }
    std::size_t used = 0;
    if (model == LabelModel::permutation) {
      unsigned long value = std::stoul(label, &used);
      ints.push_back(static_cast<std::uint32_t>(value));
    } else {
      reals.push_back(std::stod(label, &used));
    }
    if (used != label.size()) throw std::invalid_argument("read_ordering: bad label '" + label + "'");
  }
  if (model == LabelModel::permutation) return EdgeOrdering::from_permutation(n, std::move(ints));
  return EdgeOrdering::from_reals(n, std::move(reals));
}

}  // namespace incpath
