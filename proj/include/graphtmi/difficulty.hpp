// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string_view>

#include "graphtmi/motifs.hpp"
#include "graphtmi/sampling.hpp"

namespace graphtmi {

enum class DifficultyLevel { Easy = 0, Medium = 1, Hard = 2 };

inline constexpr std::array kAllDifficultyLevels = {DifficultyLevel::Easy, DifficultyLevel::Medium,
                                                    DifficultyLevel::Hard};

std::string_view to_string(DifficultyLevel level);
std::optional<DifficultyLevel> parse_difficulty(std::string_view s);

inline DifficultyLevel max_level(DifficultyLevel a, DifficultyLevel b) { return a < b ? b : a; }

/// Distinct labels: < label_medium easy, < label_hard medium, else hard.
/// Motif count: <= motif_medium easy, <= motif_hard medium, else hard.
struct DifficultyThresholds {
  std::size_t label_medium = 3;
  std::size_t label_hard = 5;
  std::size_t motif_medium = 10;
  std::size_t motif_hard = 20;

  void validate() const;
};

struct DifficultyAssessment {
  DifficultyLevel homophily_level = DifficultyLevel::Easy;
  DifficultyLevel motif_level = DifficultyLevel::Easy;
  DifficultyLevel final_level = DifficultyLevel::Easy;
  std::size_t distinct_labels = 0;
  std::size_t total_motifs = 0;
};

/// Distinct labels among the labeled non-target nodes.
std::size_t distinct_label_count(const SubgraphSample& sample);

DifficultyLevel homophily_level(std::size_t distinct_labels, const DifficultyThresholds& t);
DifficultyLevel homophily_level(const SubgraphSample& sample, const DifficultyThresholds& t);
DifficultyLevel motif_level(std::size_t total_motifs, const DifficultyThresholds& t);
DifficultyLevel motif_level(const MotifSummary& summary, const DifficultyThresholds& t);

DifficultyAssessment task_difficulty(const SubgraphSample& sample, const MotifSummary& summary,
                                     const DifficultyThresholds& t);

struct DifficultyStats {
  /// combination[homophily][motif]
  std::array<std::array<std::size_t, 3>, 3> combination{};
  /// Indexed by final level.
  std::array<std::size_t, 3> final_totals{};

  std::size_t& cell(DifficultyLevel homophily, DifficultyLevel motif) {
    return combination[static_cast<int>(homophily)][static_cast<int>(motif)];
  }
  std::size_t total(DifficultyLevel final_level) const {
    return final_totals[static_cast<int>(final_level)];
  }
  /// Final totals recomputed from the combination table by the max rule.
  std::array<std::size_t, 3> projected_totals() const;
};

/// Throws Error if the final totals disagree with the max-projection of the
/// combination table.
DifficultyStats aggregate_difficulty_stats(std::span<const DifficultyAssessment> assessments);

/// Aggregation from pre-counted (homophily, motif) cells.
DifficultyStats aggregate_difficulty_counts(
    const std::array<std::array<std::size_t, 3>, 3>& combination);

}  // namespace graphtmi
