// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "graphtmi/encoding.hpp"
#include "graphtmi/graph.hpp"
#include "graphtmi/image_encoder.hpp"
#include "graphtmi/text_encoder.hpp"

namespace graphtmi {

struct PromptBundle {
  Modality modality = Modality::Text;
  std::string instruction;
  std::optional<std::string> text_payload;
  std::optional<ImageEncoding> image_payload;

  /// Instruction followed by the text payload fenced in triple backticks. The
  /// image, if any, travels separately.
  std::string render_text() const;
};

/// Text representation the text clause describes; AdjacencyList is the
/// default wording.
struct PromptOptions {
  EdgeRepresentation representation = EdgeRepresentation::AdjacencyList;
};

/// Throws InvalidArgument when the payloads present do not match `modality`:
/// Text/Motif need text only, Image needs an image only, TextPlusImage needs both.
PromptBundle build_prompt(Modality modality, std::optional<std::string> text_payload,
                          std::optional<ImageEncoding> image_payload, const PromptOptions& options = {});

PromptBundle build_text_prompt(const TextEncoding& text, EdgeRepresentation repr);
PromptBundle build_motif_prompt(const TextEncoding& motif);
PromptBundle build_image_prompt(const ImageEncoding& image);
PromptBundle build_text_image_prompt(const TextEncoding& text, EdgeRepresentation repr,
                                     const ImageEncoding& image);

/// Verbatim instruction for a modality.
std::string instruction_for(Modality modality, EdgeRepresentation repr = EdgeRepresentation::AdjacencyList);

struct LabelPrediction {
  ClassLabel value = 0;
  friend bool operator==(const LabelPrediction&, const LabelPrediction&) = default;
};
struct Denial {
  friend bool operator==(const Denial&, const Denial&) = default;
};
struct Unparseable {
  std::string raw;
  friend bool operator==(const Unparseable&, const Unparseable&) = default;
};

using ParsedPrediction = std::variant<LabelPrediction, Denial, Unparseable>;

/// "Label of Node = <k>" in the canonical answer format.
std::string format_answer(std::optional<ClassLabel> label);

/// Takes the last "Label of Node = <int>" in `raw` (whitespace around '=' and a
/// trailing period tolerated). -1 is a Denial; any other negative, an
/// out-of-range integer, or no match at all is Unparseable.
ParsedPrediction parse_response(std::string_view raw);

}  // namespace graphtmi
