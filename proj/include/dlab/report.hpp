#pragma once

#include <string>

#include "dlab/exhaust.hpp"
#include "dlab/field.hpp"

namespace dlab {

/// %.17g rendering: always round-trips doubles.
std::string format_g17(double v);

/// Shortest %g precision that still round-trips; for readable labels.
std::string format_shortest(double v);

/// Writes content as-is, creating parent directories. Throws
/// std::runtime_error on I/O failure.
void write_text_file(const std::string& path, const std::string& content);

/// Plain-text field dump: header `nx ny h x0 y0`, then ny rows of nx
/// values, bottom grid row first, space separated, %.17g.
std::string render_field_dump(const ScalarField& f);

/// SVG heatmap over grid cells whose four corners satisfy `inside`.
std::string render_svg_heatmap(const ScalarField& f, const ArrayXXb& inside);

/// SVG snapshot of a node classification (free/clamped/exterior).
std::string render_svg_mask(const NodeMask& mask, const GridSpec& grid);

}  // namespace dlab
