// Copyright 2026 The selfsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SELFSIM_RENDER_HPP_
#define SELFSIM_RENDER_HPP_

#include <string>
#include <vector>

#include "selfsim/tiling.hpp"

namespace selfsim {

struct RenderStyle {
  std::vector<std::string> palette;  // fill per class
  double stroke_width = 0.0015;      // fraction of the larger view extent
  std::string stroke = "#222222";
  std::string background = "#ffffff";
};

RenderStyle DefaultStyle();

// SVG 1.1 document with one closed path per tile, filled by class.  The
// view box is fitted to the tiles with a 2% margin; y points up.  Throws
// kBadParams if the palette has fewer than M colors.
std::string RenderSvg(const std::vector<Tile>& tiles, int M,
                      const RenderStyle& style = DefaultStyle());

}  // namespace selfsim

#endif  // SELFSIM_RENDER_HPP_
