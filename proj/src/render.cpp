#include "spheresample/pipeline.hpp"

#include <algorithm>
#include <cstdio>
#include <string>

namespace spheresample {

namespace {

std::string num(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

} // namespace

std::string render_svg(const RunResult& result, const ElementShape& shape)
{
    double pad = 0.0;
    for (const Circle& c : result.samples.balls)
        pad = std::max(pad, c.radius);
    const double diag = shape.bbox.diagonal();
    pad = std::max(pad, 0.02 * diag);
    const double x0 = shape.bbox.min.x - pad;
    const double y0 = shape.bbox.min.y - pad;
    const double w = shape.bbox.width() + 2.0 * pad;
    const double h = shape.bbox.height() + 2.0 * pad;
    const double stroke = 0.004 * diag;
    const double dot = 0.01 * diag;

    std::string s;
    s += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" + num(x0) + " " + num(y0) + " " + num(w) + " " +
         num(h) + "\">\n";

    s += "  <path fill=\"#c8c8c8\" fill-rule=\"evenodd\" stroke=\"none\" d=\"";
    for (const Loop& loop : shape.loops) {
        for (std::size_t i = 0; i < loop.vertices.size(); ++i) {
            const Point2 p = loop.vertices[i];
            s += (i == 0 ? "M" : " L") + num(p.x) + "," + num(p.y);
        }
        s += " Z ";
    }
    s += "\"/>\n";

    s += "  <g stroke=\"#1f5fd6\" stroke-width=\"" + num(stroke) + "\">\n";
    for (const auto& [a, b] : result.graph.edges) {
        const Point2 p = result.samples.balls[a].center;
        const Point2 q = result.samples.balls[b].center;
        s += "    <line x1=\"" + num(p.x) + "\" y1=\"" + num(p.y) + "\" x2=\"" + num(q.x) + "\" y2=\"" + num(q.y) +
             "\"/>\n";
    }
    s += "  </g>\n";

    s += "  <g fill=\"none\" stroke=\"#f2c200\" stroke-width=\"" + num(stroke) + "\">\n";
    for (const Circle& c : result.samples.balls)
        s += "    <circle cx=\"" + num(c.center.x) + "\" cy=\"" + num(c.center.y) + "\" r=\"" + num(c.radius) + "\"/>\n";
    s += "  </g>\n";

    // Center dots are ellipses so <circle> elements map one-to-one to samples.
    s += "  <g fill=\"#000000\">\n";
    for (const Circle& c : result.samples.balls)
        s += "    <ellipse cx=\"" + num(c.center.x) + "\" cy=\"" + num(c.center.y) + "\" rx=\"" + num(dot) + "\" ry=\"" +
             num(dot) + "\"/>\n";
    s += "  </g>\n";
    s += "</svg>\n";
    return s;
}

} // namespace spheresample
