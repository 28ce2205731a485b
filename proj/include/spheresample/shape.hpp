#pragma once

#include "spheresample/geometry.hpp"

#include <span>
#include <vector>

namespace spheresample {

struct Loop {
    std::vector<Point2> vertices;
    bool is_hole = false;

    friend bool operator==(const Loop&, const Loop&) = default;
};

/// Flattened closed boundary of an element: outer loops counter-clockwise,
/// holes clockwise, filled by the even-odd rule.
struct ElementShape {
    std::vector<Loop> loops;
    BBox bbox;
    double area = 0.0;
};

/// Validates and normalizes raw loops into an ElementShape: drops repeated
/// vertices (including a closing duplicate of the first vertex), orients
/// outers CCW and holes CW, checks simplicity and hole containment.
/// Throws ShapeInvalidError on any violated invariant.
ElementShape make_element_shape(std::vector<Loop> loops);

/// Marks each loop as a hole iff it is nested inside an odd number of the
/// other loops. Used for formats that carry no explicit hole flags.
void classify_holes_by_nesting(std::vector<Loop>& loops);

/// Even-odd containment over all loops. Points within 1e-12·diag of an edge
/// count as inside.
bool point_in_shape(Point2 p, const ElementShape& shape);

/// Plain even-odd crossing test against a single loop (no boundary handling).
bool point_in_loop(Point2 p, std::span<const Point2> loop);

double loop_perimeter(std::span<const Point2> loop);

/// Throws ShapeInvalidError when any two non-adjacent edges of the shape
/// touch or cross.
void check_simple(const ElementShape& shape);

/// Ear-clipping triangulation with hole bridging. The triangles are CCW and
/// partition the interior.
std::vector<Triangle> triangulate(const ElementShape& shape);

} // namespace spheresample
