// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "graphtmi/encoding.hpp"
#include "graphtmi/motifs.hpp"
#include "graphtmi/sampling.hpp"

namespace graphtmi {

enum class MotifInfoVariant {
  MappingOnly,
  StarCount,
  TriangleCount,
  TrianglesAttached,
  StarsAttached,
  StarAndTriangleCounts,
  StarAndTriangleAttached,
  CliquesContaining,
  CliquesAttached,
  Aggregate,
};

inline constexpr std::array kAllMotifVariants = {
    MotifInfoVariant::MappingOnly,           MotifInfoVariant::StarCount,
    MotifInfoVariant::TriangleCount,         MotifInfoVariant::TrianglesAttached,
    MotifInfoVariant::StarsAttached,         MotifInfoVariant::StarAndTriangleCounts,
    MotifInfoVariant::StarAndTriangleAttached, MotifInfoVariant::CliquesContaining,
    MotifInfoVariant::CliquesAttached,       MotifInfoVariant::Aggregate};

std::string_view to_string(MotifInfoVariant v);
std::optional<MotifInfoVariant> parse_motif_variant(std::string_view s);

/// Individual "|"-terminated pieces of the motif block.
namespace motif_parts {
std::string star_count(const MotifSummary& s);
std::string triangle_count(const MotifSummary& s);
std::string triangles_attached(const MotifSummary& s);
std::string stars_attached(const MotifSummary& s);
std::string cliques_containing(const MotifSummary& s);
std::string cliques_attached(const MotifSummary& s);
}  // namespace motif_parts

/// Node-label mapping, then (except for MappingOnly) a newline and
/// "Graph motif information: " followed by the variant's parts joined by a
/// single space.
TextEncoding encode_motif(const SubgraphSample& sample, const MotifSummary& summary,
                          MotifInfoVariant variant, const TokenEstimator& estimator = estimate_tokens);

}  // namespace graphtmi
