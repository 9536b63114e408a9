// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "graphtmi/encoding.hpp"
#include "graphtmi/sampling.hpp"

namespace graphtmi {

enum class ImageStyle { Original, NodeSizeIncrease, ContrastText, DistinctColors, HopScaledSize, Aggregate };

inline constexpr std::array kAllImageStyles = {
    ImageStyle::Original,       ImageStyle::NodeSizeIncrease, ImageStyle::ContrastText,
    ImageStyle::DistinctColors, ImageStyle::HopScaledSize,    ImageStyle::Aggregate};

/// File-name tag: original, node_size, contrast_text, distinct_colors, hop_size, aggregate.
std::string_view to_string(ImageStyle s);
std::optional<ImageStyle> parse_image_style(std::string_view s);

struct Rgb {
  std::uint8_t r = 0, g = 0, b = 0;
  std::string hex() const;
  /// WCAG relative luminance in [0, 1].
  double luminance() const;
  friend bool operator==(const Rgb&, const Rgb&) = default;
};

inline constexpr Rgb kTargetRed{255, 0, 0};

/// Eight well-separated hues, none of them red.
std::vector<Rgb> distinct_palette();
/// Eight blue-grey shades used when distinct class colors are not requested.
std::vector<Rgb> muted_palette();

/// Vision prompt cost. With `fixed_tokens` unset the cost is
/// base + per_tile * ceil(w / tile) * ceil(h / tile), which gives 765 for 1024x1024.
struct VisionCostModel {
  std::optional<std::size_t> fixed_tokens;
  std::size_t base_tokens = 85;
  std::size_t tokens_per_tile = 170;
  std::size_t tile_size = 512;

  std::size_t cost(int width, int height) const;
};

struct RenderConfig {
  int width = 1024;
  int height = 1024;
  double margin = 48.0;
  double base_radius = 12.0;
  double size_boost_factor = 1.6;
  double hop_scale_factor = 1.5;
  std::vector<Rgb> palette = distinct_palette();
  std::vector<Rgb> default_palette = muted_palette();
  std::uint64_t layout_seed = 0;
  std::size_t layout_iterations = 300;
  VisionCostModel cost_model;
};

struct Point {
  double x = 0.0;
  double y = 0.0;
  friend bool operator==(const Point&, const Point&) = default;
};

using Layout = std::map<NodeId, Point>;

/// Seeded Fruchterman-Reingold placement inside the canvas margins. A single
/// node sits at the canvas center.
Layout layout(const SubgraphSample& sample, const RenderConfig& config);
Layout layout(const SubgraphSample& sample, std::uint64_t seed, std::size_t iterations);

/// Resolved drawing primitives; SVG and raster output both derive from this.
struct SceneNode {
  NodeId id = 0;
  Point center;
  double radius = 0.0;
  Rgb fill;
  std::string text;
  Rgb text_color;
  double font_size = 0.0;
};

struct SceneEdge {
  Point from;
  Point to;
};

struct Scene {
  int width = 0;
  int height = 0;
  std::vector<SceneEdge> edges;
  std::vector<SceneNode> nodes;
};

struct ImageEncoding {
  Modality modality = Modality::Image;
  std::string svg_document;
  std::size_t token_estimate = 0;
  Scene scene;
};

/// Throws InvalidArgument if either palette is shorter than the class count.
Scene build_scene(const SubgraphSample& sample, ImageStyle style, const RenderConfig& config,
                  const Layout& positions);

std::string scene_to_svg(const Scene& scene);

ImageEncoding render_svg(const SubgraphSample& sample, ImageStyle style, const RenderConfig& config);
/// Same as above with a precomputed layout, so several styles share one placement.
ImageEncoding render_svg(const SubgraphSample& sample, ImageStyle style, const RenderConfig& config,
                         const Layout& positions);

}  // namespace graphtmi
