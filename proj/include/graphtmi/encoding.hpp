// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>

namespace graphtmi {

enum class Modality { Text, Motif, Image, TextPlusImage };

std::string_view to_string(Modality m);
std::optional<Modality> parse_modality(std::string_view s);

/// Whether prompts of this modality carry an image.
inline bool needs_image(Modality m) { return m == Modality::Image || m == Modality::TextPlusImage; }

/// Offline stand-in for API-reported prompt usage.
using TokenEstimator = std::function<std::size_t(std::string_view)>;

/// ceil(byte_length / 4).
std::size_t estimate_tokens(std::string_view text);

/// Prompt payload in text form (text or motif modality).
struct TextEncoding {
  Modality modality = Modality::Text;
  std::string payload;
  std::size_t token_estimate = 0;
};

}  // namespace graphtmi
