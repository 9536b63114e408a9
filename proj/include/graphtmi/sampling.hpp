// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "graphtmi/graph.hpp"

namespace graphtmi {

struct EgoGraph {
  std::size_t hops = 3;
};

struct ForestFire {
  double burn_prob = 0.7;
  std::size_t max_nodes = 200;
};

struct SampleSpec {
  std::variant<EgoGraph, ForestFire> method = EgoGraph{};
  std::uint64_t rng_seed = 0;

  /// "ego" or "forestfire"; used in sample ids.
  std::string method_name() const;
  /// Throws InvalidArgument when hops < 1, burn_prob outside [0,1] or max_nodes < 1.
  void validate() const;
};

/// A target-centered subgraph. The target's label is removed from `subgraph`
/// and kept only in `ground_truth`.
struct SubgraphSample {
  std::string sample_id;
  LabeledGraph subgraph;
  NodeId target = 0;
  ClassLabel ground_truth = 0;
  SampleSpec spec;
  NodeId source_center = 0;

  /// Ascending ids of the target's neighbors.
  std::vector<NodeId> target_neighbors() const { return subgraph.neighbors(target); }
};

/// Builds a sample from an already-selected node set; `target` must be a
/// labeled member of `nodes`.
SubgraphSample make_sample(const LabeledGraph& g, std::span<const NodeId> nodes, NodeId target,
                           SampleSpec spec, std::string sample_id);

SubgraphSample ego_sample(const LabeledGraph& g, NodeId center, std::size_t hops);

/// Breadth-wise burn: every burned node, in FIFO order, burns each unburned
/// neighbor (ascending id) independently with probability `burn_prob`, until
/// the frontier empties or `max_nodes` nodes are burned.
SubgraphSample forest_fire_sample(const LabeledGraph& g, NodeId seed_node, double burn_prob,
                                  std::size_t max_nodes, std::uint64_t rng_seed);

/// The burned node set only (ascending); exposed for statistics sweeps.
std::vector<NodeId> forest_fire_burn(const LabeledGraph& g, NodeId seed_node, double burn_prob,
                                     std::size_t max_nodes, std::uint64_t rng_seed);

/// `n` samples centered on distinct labeled nodes drawn without replacement.
/// Sample i uses sub-seed derive_seed(rng_seed, i) and id
/// "<method>-<rng_seed>-<i>".
std::vector<SubgraphSample> draw_samples(const LabeledGraph& g, std::size_t n, const SampleSpec& spec,
                                         std::uint64_t rng_seed);

}  // namespace graphtmi
