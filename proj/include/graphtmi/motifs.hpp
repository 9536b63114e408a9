// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <vector>

#include "graphtmi/graph.hpp"
#include "graphtmi/sampling.hpp"

namespace graphtmi {

/// Node ids in ascending order.
using Triangle = std::array<NodeId, 3>;
/// Node ids in ascending order.
using Clique = std::vector<NodeId>;

struct Star {
  NodeId center = 0;
  std::vector<NodeId> leaves;  // ascending
  friend auto operator<=>(const Star&, const Star&) = default;
};

struct MotifOptions {
  std::size_t min_leaves = 3;
  std::size_t min_clique = 4;
};

struct MotifSummary {
  std::size_t triangle_count = 0;
  std::size_t star_count = 0;
  std::size_t clique_count = 0;
  std::vector<Triangle> triangles_attached;
  std::vector<Star> stars_attached;
  std::vector<Clique> cliques_containing;
  std::vector<Clique> cliques_attached;
  std::size_t total_motifs = 0;

  friend bool operator==(const MotifSummary&, const MotifSummary&) = default;
};

/// Every triangle once, lexicographically ordered.
std::vector<Triangle> enumerate_triangles(const LabeledGraph& g);

/// Nodes with degree >= min_leaves whose whole neighborhood is an independent
/// set, ordered by center.
std::vector<Star> enumerate_stars(const LabeledGraph& g, std::size_t min_leaves);

/// Maximal cliques with at least `min_size` members (Bron-Kerbosch with
/// Tomita pivoting), lexicographically ordered.
std::vector<Clique> enumerate_maximal_cliques(const LabeledGraph& g, std::size_t min_size);

MotifSummary motif_summary(const SubgraphSample& sample, const MotifOptions& options = {});

}  // namespace graphtmi
