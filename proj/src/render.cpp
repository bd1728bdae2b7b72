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

#include "selfsim/render.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace selfsim {

namespace {

std::string Num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.9g", v == 0.0 ? 0.0 : v);
  return buf;
}

}  // namespace

RenderStyle DefaultStyle() {
  RenderStyle s;
  s.palette = {"#f2c14e", "#5b8e7d", "#bc4b51", "#8cb369", "#4d6cfa",
               "#f78154", "#9a7aa0", "#4a4e69", "#e9d8a6", "#94d2bd",
               "#ee9b00", "#0a9396"};
  while (s.palette.size() < static_cast<std::size_t>(kMaxExponent)) {
    s.palette.push_back(s.palette[s.palette.size() % 12]);
  }
  return s;
}

std::string RenderSvg(const std::vector<Tile>& tiles, int M,
                      const RenderStyle& style) {
  if (static_cast<int>(style.palette.size()) < M) {
    throw Error(ErrorCode::kBadParams,
                "palette has " + std::to_string(style.palette.size()) +
                    " colors for " + std::to_string(M) + " classes");
  }
  BoundingBox box{0, 0, 1, 1};
  for (std::size_t i = 0; i < tiles.size(); ++i) {
    BoundingBox b = tiles[i].shape.Bounds();
    if (i == 0) {
      box = b;
    } else {
      box.min_x = std::min(box.min_x, b.min_x);
      box.min_y = std::min(box.min_y, b.min_y);
      box.max_x = std::max(box.max_x, b.max_x);
      box.max_y = std::max(box.max_y, b.max_y);
    }
  }
  const double w = box.max_x - box.min_x, h = box.max_y - box.min_y;
  const double extent = std::max(w, h);
  const double mx = 0.02 * w, my = 0.02 * h;
  const double vx = box.min_x - mx, vy = -(box.max_y + my);
  const double vw = w + 2 * mx, vh = h + 2 * my;
  const double px = 800.0;
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\""
      << Num(vx) << " " << Num(vy) << " " << Num(vw) << " " << Num(vh)
      << "\" width=\"" << Num(px) << "\" height=\"" << Num(px * vh / vw)
      << "\">\n";
  out << "<rect x=\"" << Num(vx) << "\" y=\"" << Num(vy) << "\" width=\""
      << Num(vw) << "\" height=\"" << Num(vh) << "\" fill=\""
      << style.background << "\"/>\n";
  out << "<g stroke=\"" << style.stroke << "\" stroke-width=\""
      << Num(style.stroke_width * extent) << "\" stroke-linejoin=\"round\">\n";
  for (const auto& t : tiles) {
    out << "<path d=\"";
    const auto& v = t.shape.vertices();
    for (std::size_t i = 0; i < v.size(); ++i) {
      out << (i == 0 ? "M" : " L") << Num(v[i].x) << " " << Num(-v[i].y);
    }
    out << " Z\" fill=\"" << style.palette.at(t.tile_class) << "\"/>\n";
  }
  out << "</g>\n</svg>\n";
  return out.str();
}

}  // namespace selfsim
