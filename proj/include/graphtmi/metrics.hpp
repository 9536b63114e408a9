// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>

#include "graphtmi/encoding.hpp"
#include "graphtmi/prompting.hpp"

namespace graphtmi {

struct ModelLimits {
  std::size_t token_limit = 8192;

  static ModelLimits text_model() { return {8192}; }
  static ModelLimits vision_model() { return {10000}; }
};

struct PredictionRecord {
  std::string sample_id;
  ClassLabel ground_truth = 0;
  ParsedPrediction prediction = Denial{};
  std::size_t usage_tokens = 0;
  Modality modality = Modality::Text;
  /// Repeated runs over the same samples; std is taken across these groups.
  std::string run_id = "0";
};

enum class Outcome { Correct, Mismatch, Denied };

/// Unparseable responses count as denials.
Outcome classify(const PredictionRecord& record);

struct MetricsReport {
  std::size_t n = 0;
  double accuracy = 0.0;
  double mismatch = 0.0;
  double denial = 0.0;
  double token_fraction = 0.0;
  double std_accuracy = 0.0;
  double std_mismatch = 0.0;
  double std_denial = 0.0;
  double std_token_fraction = 0.0;
  std::size_t run_groups = 0;
  std::size_t unparseable = 0;
  /// Records whose usage exceeded their model's token limit.
  std::size_t over_limit = 0;
};

/// usage / token_limit; may exceed 1.
double token_fraction(std::size_t usage, const ModelLimits& limits);

using LimitsFor = std::function<ModelLimits(const PredictionRecord&)>;

/// Throws InvalidArgument on an empty record list or a zero token limit.
MetricsReport compute_metrics(std::span<const PredictionRecord> records, const ModelLimits& limits);
MetricsReport compute_metrics(std::span<const PredictionRecord> records, const LimitsFor& limits);

}  // namespace graphtmi
