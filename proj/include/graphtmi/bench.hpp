// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "graphtmi/backend.hpp"
#include "graphtmi/difficulty.hpp"
#include "graphtmi/image_encoder.hpp"
#include "graphtmi/metrics.hpp"
#include "graphtmi/motif_encoder.hpp"
#include "graphtmi/motifs.hpp"
#include "graphtmi/sampling.hpp"
#include "graphtmi/text_encoder.hpp"

namespace graphtmi {

namespace fs = std::filesystem;

// ---- dataset conversion ----------------------------------------------------

/// A LINQS-style citation dataset (`.content` rows "<paper> <features...>
/// <class>", `.cites` rows "<cited> <citing>") remapped to dense ids in order
/// of appearance. Class indices follow the sorted class names.
struct LinqsConversion {
  LabeledGraph graph;
  std::vector<std::string> class_names;
  std::vector<std::string> paper_ids;  ///< dense id -> original id
  std::size_t dangling_cites = 0;      ///< cites naming a paper absent from .content
  std::size_t self_loops = 0;
  std::size_t duplicate_edges = 0;
};

LinqsConversion convert_linqs(const fs::path& content_path, const fs::path& cites_path);

/// nodes.tsv and edges.tsv (load_dataset format) plus classes.tsv and ids.tsv.
void write_conversion(const LinqsConversion& conversion, const fs::path& out_dir);

// ---- benchmark generation --------------------------------------------------

struct GenerateOptions {
  std::string dataset = "dataset";
  std::size_t sample_count = 50;
  SampleSpec spec;  ///< spec.rng_seed drives the whole draw
  DifficultyThresholds thresholds;
  MotifOptions motif_options;
  std::vector<MotifInfoVariant> motif_variants{MotifInfoVariant::Aggregate};
  std::vector<ImageStyle> image_styles{ImageStyle::Original};
  RenderConfig render;
  /// Wording and payload of prompt_text.txt / prompt_text_image.txt.
  EdgeRepresentation prompt_representation = EdgeRepresentation::AdjacencyList;
  unsigned workers = 1;

  void validate() const;
};

struct ManifestEntry {
  std::string sample_id;
  NodeId target = 0;
  NodeId source_center = 0;
  std::size_t node_count = 0;
  std::size_t edge_count = 0;
  DifficultyAssessment difficulty;
  /// Directory relative to the manifest.
  std::string dir;
  /// Artifact key ("text/adjacency", "motif/aggregate", "image/original",
  /// "prompt/text", "sample") -> path relative to the manifest.
  std::map<std::string, std::string> artifacts;
};

struct BenchmarkManifest {
  std::string dataset;
  SampleSpec spec;
  DifficultyThresholds thresholds;
  MotifOptions motif_options;
  std::vector<MotifInfoVariant> motif_variants;
  std::vector<ImageStyle> image_styles;
  RenderConfig render;
  EdgeRepresentation prompt_representation = EdgeRepresentation::AdjacencyList;
  std::string answers_file = "answers.tsv";
  std::vector<ManifestEntry> entries;
  /// Directory holding manifest.json; not serialized.
  fs::path root;

  DifficultyStats difficulty_stats() const;
};

/// Writes out_dir/<dataset>/ with one directory per sample, answers.tsv and,
/// last, manifest.json (JSON lines: a header object, then one per sample).
/// Output bytes depend only on the graph, the options and the seed. Throws
/// Error naming the sample index when sampling fails, and Error if any prompt
/// file exposes its target's label.
BenchmarkManifest generate_benchmark(const LabeledGraph& g, const GenerateOptions& options,
                                     const fs::path& out_dir);

BenchmarkManifest read_manifest(const fs::path& manifest_path);
std::map<std::string, ClassLabel> read_answers(const fs::path& answers_path);

/// The masked sample stored next to the artifacts; ground_truth is left 0.
SubgraphSample load_sample(const BenchmarkManifest& manifest, const ManifestEntry& entry);

/// Strings whose presence in a prompt would reveal `ground_truth` for `target`.
std::vector<std::string> leakage_markers(NodeId target, ClassLabel ground_truth);

/// SHA-256 over every regular file under `dir` (relative path and bytes, in
/// sorted path order), hex encoded.
std::string tree_digest(const fs::path& dir);

// ---- experiments -----------------------------------------------------------

struct RunOptions {
  Modality modality = Modality::Text;
  EdgeRepresentation representation = EdgeRepresentation::AdjacencyList;
  MotifInfoVariant motif_variant = MotifInfoVariant::Aggregate;
  ImageStyle image_style = ImageStyle::Original;
  std::size_t run_count = 2;
  unsigned workers = 1;
  fs::path log_path;
};

/// Tag naming the encoding variant a run used, e.g. "adjacency" or
/// "adjacency+original" for text plus image.
std::string representation_tag(const RunOptions& options);

struct RunSummary {
  std::size_t skipped = 0;  ///< already logged before this call
  std::size_t succeeded = 0;
  std::size_t failed = 0;
};

/// Appends one JSON line per (run, sample) to options.log_path. Pairs already
/// logged as predictions are skipped and backend failures are logged as
/// "error" lines without stopping the run. Configuration errors throw.
RunSummary run_experiment(const BenchmarkManifest& manifest, PredictionBackend& backend,
                          const RunOptions& options);

struct LoggedPrediction {
  PredictionRecord record;
  std::string representation;
  DifficultyLevel difficulty = DifficultyLevel::Easy;
};

/// Prediction lines of a run log; error lines are ignored and a truncated
/// final line is tolerated.
std::vector<LoggedPrediction> read_prediction_log(const fs::path& log_path);

enum class GroupBy { Modality, Difficulty, Representation };
std::optional<GroupBy> parse_group_by(std::string_view s);

struct ReportRow {
  std::string group;
  MetricsReport metrics;
};

/// One row per group present, in ascending group order. Text and motif records
/// use `text_limits`, image-bearing ones `vision_limits`. Throws Error when a
/// row violates A + M + D = 1 or the input is empty.
std::vector<ReportRow> build_report(std::span<const LoggedPrediction> records, GroupBy group_by,
                                    const ModelLimits& text_limits = ModelLimits::text_model(),
                                    const ModelLimits& vision_limits = ModelLimits::vision_model());

/// "group,n,A,M,D,T,std_A,std_M,std_D,std_T" then one line per row; numbers in
/// shortest round-trip form.
std::string report_csv(std::span<const ReportRow> rows);

std::vector<ReportRow> emit_report(const fs::path& log_path, const fs::path& csv_path, GroupBy group_by,
                                   const ModelLimits& text_limits = ModelLimits::text_model(),
                                   const ModelLimits& vision_limits = ModelLimits::vision_model());

/// Shortest decimal that round-trips to `x`.
std::string format_number(double x);

/// Writes to a sibling temporary and renames over `path`.
void write_file_atomic(const fs::path& path, std::string_view bytes);
std::string read_file(const fs::path& path);

}  // namespace graphtmi
