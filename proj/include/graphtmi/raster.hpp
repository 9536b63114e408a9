// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include "graphtmi/image_encoder.hpp"

namespace graphtmi {

/// True when the library was built with a PNG rasterizer.
bool raster_available() noexcept;

/// PNG bytes for `scene`; throws Error when no rasterizer is compiled in.
std::string rasterize_png(const Scene& scene);

}  // namespace graphtmi
