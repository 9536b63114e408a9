// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "graphtmi/encoding.hpp"
#include "graphtmi/sampling.hpp"

namespace graphtmi {

enum class EdgeRepresentation { EdgeList, EdgeText, AdjacencyList, GML, GraphML };

inline constexpr std::array kAllEdgeRepresentations = {
    EdgeRepresentation::EdgeList, EdgeRepresentation::EdgeText, EdgeRepresentation::AdjacencyList,
    EdgeRepresentation::GML, EdgeRepresentation::GraphML};

/// File-name tag: edgelist, edgetext, adjacency, gml, graphml.
std::string_view to_string(EdgeRepresentation r);
std::optional<EdgeRepresentation> parse_edge_representation(std::string_view s);

/// GML and GraphML carry labels inline, so no separate mapping is emitted.
inline bool embeds_labels(EdgeRepresentation r) {
  return r == EdgeRepresentation::GML || r == EdgeRepresentation::GraphML;
}

/// "Node <id>: Label <label>|" entries joined by one space, ascending ids, the
/// target rendered with label "?".
std::string encode_node_label_mapping(const SubgraphSample& sample);

std::string encode_edges(const SubgraphSample& sample, EdgeRepresentation repr);

/// Mapping + '\n' + edge block, or the edge block alone for GML/GraphML.
TextEncoding encode_text(const SubgraphSample& sample, EdgeRepresentation repr,
                         const TokenEstimator& estimator = estimate_tokens);

}  // namespace graphtmi
