#pragma once

#include "spheresample/shape.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace spheresample {

enum class ShapeFormat { svg_path, polygon_json };

/// Parses `svg`/`svg-path`/`path` and `json`/`polygon-json`.
ShapeFormat parse_shape_format(std::string_view name);

struct ParseOptions {
    // Bezier flattening tolerance as a fraction of the control-point bbox diagonal.
    double flatten_tolerance_frac = 0.0025;
};

/// Reads an element outline. svg_path accepts either a bare path-data string
/// or an SVG document whose drawable content is <path> elements only
/// (M/L/C/Q/Z, absolute and relative). polygon_json reads
/// {"loops":[{"hole":bool,"points":[[x,y],...]},...]}.
/// Throws ParseError for malformed input and ShapeInvalidError for geometry
/// that does not form a valid shape.
ElementShape parse_shape(std::string_view document, ShapeFormat format, const ParseOptions& options = {});

/// Writes the polygon-json form. Coordinates are emitted with round-trip
/// precision so parse(serialize(s)) reproduces s exactly.
std::string serialize_polygon_json(const ElementShape& shape);

enum class SampleKind { boundary, interior };

struct PointSample {
    Point2 position;
    SampleKind kind = SampleKind::boundary;
};

/// `count` points at equal arc-length steps along every loop. Points are
/// apportioned to loops by perimeter (largest remainder) and each loop starts
/// at its lowest (y, x) vertex, which makes the result independent of where
/// the loop's vertex list begins.
std::vector<PointSample> sample_boundary(const ElementShape& shape, int count);

/// `count` interior points from the Halton (2, 3) sequence over the bbox,
/// filtered by point_in_shape. Throws GenerationError if 10^6 candidates do
/// not yield enough hits.
std::vector<PointSample> sample_interior(const ElementShape& shape, int count);

std::vector<Point2> positions(const std::vector<PointSample>& samples);

} // namespace spheresample
