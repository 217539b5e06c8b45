#pragma once

#include <set>
#include <string>
#include <vector>

#include "rosette/geometry.hpp"
#include "rosette/mapping.hpp"

namespace rosette {

enum class Overlay { Features, CuspAxes, FundamentalSet, Hypocycloid };

struct RenderSpec {
  RosetteParams params;
  int radial_lines = 24;
  int circles = 16;
  int samples_per_curve = 128;
  int width_px = 800;
  double margin_frac = 0.08;
  std::set<Overlay> overlays;
  bool all_fundamental_copies = false;  // decompose: draw every rotated copy
};

struct RenderResult {
  std::string svg;
  Polyline boundary_px;            // flattened boundary in pixel coordinates
  std::vector<cplx> feature_px;    // overlay dot centres
  double side = 0;                 // viewport side in model units
  long path_points = 0;
};

void validate(const RenderSpec& spec);
RenderResult render(const RenderSpec& spec);
void write_text_file(const std::string& path, const std::string& text);

// largest distance from an overlay dot to the flattened boundary, in px
double overlay_consistency(const RenderResult& r);

Overlay parse_overlay(const std::string& s);
std::string to_string(Overlay o);

} // namespace rosette
