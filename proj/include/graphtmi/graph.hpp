// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <vector>

namespace graphtmi {

using NodeId = std::uint64_t;
using ClassLabel = std::uint32_t;

/// Undirected edge, stored with u < v.
struct Edge {
  NodeId u = 0;
  NodeId v = 0;

  static Edge make(NodeId a, NodeId b) { return a < b ? Edge{a, b} : Edge{b, a}; }
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable undirected graph with integer node ids and an optional class
/// label per node. Nodes are kept sorted by id, so dense index order equals id
/// order and every neighbor list is ascending.
class LabeledGraph {
 public:
  LabeledGraph() = default;

  /// Duplicate nodes and duplicate/reversed edges are collapsed. Throws
  /// InvalidArgument on self-loops, dangling endpoints, labels on unknown
  /// nodes, or labels >= class_count.
  LabeledGraph(std::vector<NodeId> nodes, std::vector<Edge> edges,
               std::map<NodeId, ClassLabel> labels, std::uint32_t class_count);

  std::size_t node_count() const noexcept { return nodes_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  std::uint32_t class_count() const noexcept { return class_count_; }

  std::span<const NodeId> nodes() const noexcept { return nodes_; }
  std::span<const Edge> edges() const noexcept { return edges_; }

  bool contains(NodeId id) const;
  /// Dense index of `id`; throws InvalidArgument for unknown ids.
  std::size_t index_of(NodeId id) const;
  NodeId id_at(std::size_t index) const { return nodes_[index]; }

  std::span<const std::uint32_t> neighbor_indices(std::size_t index) const {
    return adjacency_[index];
  }
  std::vector<NodeId> neighbors(NodeId id) const;
  std::size_t degree(NodeId id) const { return adjacency_[index_of(id)].size(); }
  bool has_edge(NodeId a, NodeId b) const;

  std::optional<ClassLabel> label(NodeId id) const { return labels_[index_of(id)]; }
  std::optional<ClassLabel> label_at(std::size_t index) const { return labels_[index]; }
  std::size_t labeled_count() const noexcept;
  std::map<NodeId, ClassLabel> label_map() const;

  /// Copy of this graph with `id`'s label cleared.
  LabeledGraph without_label(NodeId id) const;

  friend bool operator==(const LabeledGraph& a, const LabeledGraph& b) {
    return a.nodes_ == b.nodes_ && a.edges_ == b.edges_ && a.labels_ == b.labels_ &&
           a.class_count_ == b.class_count_;
  }

 private:
  std::vector<NodeId> nodes_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::uint32_t>> adjacency_;
  std::vector<std::optional<ClassLabel>> labels_;
  std::uint32_t class_count_ = 1;
};

struct LoadResult {
  LabeledGraph graph;
  std::size_t self_loops_dropped = 0;
  std::size_t duplicate_edges = 0;
};

/// Reads a node file ("id<TAB>label" per line; a bare id or "?" leaves the node
/// unlabeled) and an edge file ("src<TAB>dst" per line). Lines starting with
/// '#' are comments, except "# class_count=<n>" in the node file, which
/// declares the class range. When neither the header nor `class_count` is
/// given, the range is max label + 1.
LoadResult load_dataset(const std::filesystem::path& nodes_path,
                        const std::filesystem::path& edges_path,
                        std::optional<std::uint32_t> class_count = std::nullopt);

/// Canonical TSV output readable by load_dataset.
void write_dataset(const LabeledGraph& g, const std::filesystem::path& nodes_path,
                   const std::filesystem::path& edges_path);

struct Diameter {
  enum class Kind { Finite, Infinite, Unknown };
  Kind kind = Kind::Infinite;
  std::size_t value = 0;

  static Diameter finite(std::size_t d) { return {Kind::Finite, d}; }
  static Diameter infinite() { return {Kind::Infinite, 0}; }
  static Diameter unknown() { return {Kind::Unknown, 0}; }
  friend bool operator==(const Diameter&, const Diameter&) = default;
};

struct GraphProperties {
  std::size_t node_count = 0;
  std::size_t edge_count = 0;
  double density = 0.0;
  double average_degree = 0.0;
  double clustering_coefficient = 0.0;
  Diameter diameter;
  std::size_t component_count = 0;
  std::map<std::size_t, std::size_t> degree_histogram;
};

struct PropertyOptions {
  /// Exact all-pairs BFS diameter only up to this many nodes; above it a
  /// connected graph reports Diameter::Kind::Unknown.
  std::size_t diameter_node_cap = 5000;
};

GraphProperties compute_properties(const LabeledGraph& g, const PropertyOptions& options = {});

/// Local clustering coefficient per dense index; degree < 2 yields 0.
std::vector<double> local_clustering(const LabeledGraph& g);

/// Component id per dense index, numbered in order of first node.
std::vector<std::size_t> connected_components(const LabeledGraph& g, std::size_t* count = nullptr);

LabeledGraph induced_subgraph(const LabeledGraph& g, std::span<const NodeId> keep);

/// BFS hop distance from `source` to every dense index; SIZE_MAX when unreachable.
std::vector<std::size_t> hop_distances(const LabeledGraph& g, NodeId source,
                                       std::size_t max_depth = SIZE_MAX);

/// Ascending ids of all nodes within `k` hops of `center` (center included).
std::vector<NodeId> nodes_within_hops(const LabeledGraph& g, NodeId center, std::size_t k);

struct KHopStats {
  std::size_t k = 0;
  std::size_t centers = 0;
  double mean_nodes = 0.0;
  double std_nodes = 0.0;
  double mean_edges = 0.0;
  double std_edges = 0.0;
};

/// Size statistics of depth-k ego subgraphs. `sample_size` = nullopt uses every
/// node as a center; otherwise that many distinct centers are drawn from
/// `rng_seed`. Standard deviations are population (divide by count).
KHopStats k_hop_stats(const LabeledGraph& g, std::size_t k,
                      std::optional<std::size_t> sample_size, std::uint64_t rng_seed);

}  // namespace graphtmi
