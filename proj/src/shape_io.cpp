#include "spheresample/shape_io.hpp"

#include "spheresample/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <string>

namespace spheresample {

ShapeFormat parse_shape_format(std::string_view name)
{
    if (name == "svg" || name == "svg-path" || name == "path")
        return ShapeFormat::svg_path;
    if (name == "json" || name == "polygon-json")
        return ShapeFormat::polygon_json;
    throw ConfigError("unknown shape format '" + std::string(name) + "' (expected svg or json)");
}

namespace {

// ---------------------------------------------------------------------------
// SVG path data

struct Segment {
    enum class Kind { line, quad, cubic } kind;
    Point2 c1, c2, end;
};

struct Subpath {
    Point2 start;
    std::vector<Segment> segments;
};

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f'; }

class PathDataParser {
public:
    PathDataParser(std::string_view data, std::size_t base) : s_(data), base_(base) {}

    void parse(std::vector<Subpath>& out)
    {
        char cmd = 0;
        Point2 current{};
        Point2 start{};
        bool open = false;

        for (;;) {
            skip_separators();
            if (pos_ >= s_.size())
                break;
            const char c = s_[pos_];
            if (std::isalpha(static_cast<unsigned char>(c))) {
                if (std::string_view("MmLlCcQqZz").find(c) == std::string_view::npos)
                    fail(std::string("unsupported path command '") + c + "'");
                if (cmd == 0 && c != 'M' && c != 'm')
                    fail("path data must begin with a moveto command");
                cmd = c;
                ++pos_;
                if (cmd == 'Z' || cmd == 'z') {
                    current = start;
                    open = false;
                    continue;
                }
            } else if (cmd == 0) {
                fail("path data must begin with a moveto command");
            } else if (cmd == 'Z' || cmd == 'z') {
                fail("unexpected number after closepath");
            }

            const bool rel = std::islower(static_cast<unsigned char>(cmd)) != 0;
            auto point = [&]() {
                Point2 p{number(), number()};
                return rel ? p + current : p;
            };

            switch (cmd) {
            case 'M':
            case 'm': {
                current = point();
                start = current;
                out.push_back({start, {}});
                open = true;
                // Further coordinate pairs are implicit linetos.
                cmd = rel ? 'l' : 'L';
                break;
            }
            case 'L':
            case 'l': {
                const Point2 p = point();
                begin_if_closed(out, open, start);
                out.back().segments.push_back({Segment::Kind::line, {}, {}, p});
                current = p;
                break;
            }
            case 'Q':
            case 'q': {
                const Point2 c1 = point();
                const Point2 p = point();
                begin_if_closed(out, open, start);
                out.back().segments.push_back({Segment::Kind::quad, c1, {}, p});
                current = p;
                break;
            }
            case 'C':
            case 'c': {
                const Point2 c1 = point();
                const Point2 c2 = point();
                const Point2 p = point();
                begin_if_closed(out, open, start);
                out.back().segments.push_back({Segment::Kind::cubic, c1, c2, p});
                current = p;
                break;
            }
            default:
                fail("unexpected path data");
            }
        }
    }

private:
    // A drawing command right after Z starts a new subpath at the old start.
    static void begin_if_closed(std::vector<Subpath>& out, bool& open, Point2 start)
    {
        if (!open) {
            out.push_back({start, {}});
            open = true;
        }
    }

    void skip_separators()
    {
        while (pos_ < s_.size() && (is_space(s_[pos_]) || s_[pos_] == ','))
            ++pos_;
    }

    double number()
    {
        skip_separators();
        const std::size_t begin = pos_;
        std::size_t i = pos_;
        if (i < s_.size() && (s_[i] == '+' || s_[i] == '-'))
            ++i;
        std::size_t digits = 0;
        while (i < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i]))) {
            ++i;
            ++digits;
        }
        if (i < s_.size() && s_[i] == '.') {
            ++i;
            while (i < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i]))) {
                ++i;
                ++digits;
            }
        }
        if (digits == 0)
            fail("expected a number");
        if (i < s_.size() && (s_[i] == 'e' || s_[i] == 'E')) {
            std::size_t j = i + 1;
            if (j < s_.size() && (s_[j] == '+' || s_[j] == '-'))
                ++j;
            if (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) {
                while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j])))
                    ++j;
                i = j;
            }
        }
        std::size_t first = begin;
        if (s_[first] == '+')
            ++first;
        double value = 0.0;
        const auto res = std::from_chars(s_.data() + first, s_.data() + i, value);
        if (res.ec != std::errc() || res.ptr != s_.data() + i || !std::isfinite(value))
            fail("invalid number");
        pos_ = i;
        return value;
    }

    [[noreturn]] void fail(const std::string& what) const { throw ParseError("svg path: " + what, base_ + pos_); }

    std::string_view s_;
    std::size_t base_;
    std::size_t pos_ = 0;
};

// ---------------------------------------------------------------------------
// Minimal SVG document scan: collects the d attributes of <path> elements and
// rejects anything that would change the outline (transforms, other shapes).

struct PathAttribute {
    std::string_view data;
    std::size_t offset;
};

class SvgScanner {
public:
    explicit SvgScanner(std::string_view doc) : s_(doc) {}

    std::vector<PathAttribute> scan()
    {
        std::vector<PathAttribute> paths;
        for (;;) {
            const std::size_t lt = s_.find('<', pos_);
            if (lt == std::string_view::npos)
                break;
            pos_ = lt;
            if (starts_with("<!--")) {
                skip_past("-->");
            } else if (starts_with("<?")) {
                skip_past("?>");
            } else if (starts_with("<!")) {
                skip_past(">");
            } else if (starts_with("</")) {
                skip_past(">");
            } else {
                element(paths);
            }
        }
        return paths;
    }

private:
    bool starts_with(std::string_view prefix) const { return s_.substr(pos_).starts_with(prefix); }

    void skip_past(std::string_view terminator)
    {
        const std::size_t end = s_.find(terminator, pos_);
        if (end == std::string_view::npos)
            fail("unterminated markup");
        pos_ = end + terminator.size();
    }

    void element(std::vector<PathAttribute>& paths)
    {
        const std::size_t tag_start = pos_;
        ++pos_;
        const std::size_t name_start = pos_;
        while (pos_ < s_.size() && !is_space(s_[pos_]) && s_[pos_] != '>' && s_[pos_] != '/')
            ++pos_;
        const std::string_view name = s_.substr(name_start, pos_ - name_start);
        if (name.empty())
            fail("empty element name", tag_start);

        const bool foreign = name.find(':') != std::string_view::npos;
        static constexpr std::string_view allowed[] = {"svg", "g", "path", "title", "desc", "metadata"};
        if (!foreign && std::find(std::begin(allowed), std::end(allowed), name) == std::end(allowed))
            fail("unsupported SVG element <" + std::string(name) + ">", tag_start);

        std::string_view d;
        std::size_t d_offset = 0;
        bool has_d = false;
        for (;;) {
            while (pos_ < s_.size() && is_space(s_[pos_]))
                ++pos_;
            if (pos_ >= s_.size())
                fail("unterminated tag", tag_start);
            if (s_[pos_] == '>') {
                ++pos_;
                break;
            }
            if (starts_with("/>")) {
                pos_ += 2;
                break;
            }
            const std::size_t attr_start = pos_;
            while (pos_ < s_.size() && s_[pos_] != '=' && !is_space(s_[pos_]) && s_[pos_] != '>')
                ++pos_;
            const std::string_view attr = s_.substr(attr_start, pos_ - attr_start);
            while (pos_ < s_.size() && is_space(s_[pos_]))
                ++pos_;
            if (pos_ >= s_.size() || s_[pos_] != '=')
                fail("expected '=' after attribute name");
            ++pos_;
            while (pos_ < s_.size() && is_space(s_[pos_]))
                ++pos_;
            if (pos_ >= s_.size() || (s_[pos_] != '"' && s_[pos_] != '\''))
                fail("expected quoted attribute value");
            const char quote = s_[pos_++];
            const std::size_t value_start = pos_;
            const std::size_t value_end = s_.find(quote, pos_);
            if (value_end == std::string_view::npos)
                fail("unterminated attribute value", value_start);
            const std::string_view value = s_.substr(value_start, value_end - value_start);
            pos_ = value_end + 1;

            if (foreign)
                continue;
            if (attr == "transform")
                fail("transform attributes are not supported", attr_start);
            if (name == "path" && attr == "d") {
                d = value;
                d_offset = value_start;
                has_d = true;
            }
            if (name == "path" && attr == "fill" && value == "none")
                fail("stroke-only paths (fill=\"none\") are not supported", attr_start);
        }
        if (name == "path") {
            if (!has_d)
                fail("<path> without a d attribute", tag_start);
            paths.push_back({d, d_offset});
        }
    }

    [[noreturn]] void fail(const std::string& what) const { fail(what, pos_); }
    [[noreturn]] void fail(const std::string& what, std::size_t at) const { throw ParseError("svg: " + what, at); }

    std::string_view s_;
    std::size_t pos_ = 0;
};

ElementShape shape_from_subpaths(const std::vector<Subpath>& subpaths, const ParseOptions& options)
{
    std::vector<Point2> controls;
    for (const Subpath& sp : subpaths) {
        controls.push_back(sp.start);
        for (const Segment& seg : sp.segments) {
            controls.push_back(seg.end);
            if (seg.kind != Segment::Kind::line)
                controls.push_back(seg.c1);
            if (seg.kind == Segment::Kind::cubic)
                controls.push_back(seg.c2);
        }
    }
    const double diag = bounding_box(controls).diagonal();
    if (!(diag > 0.0))
        throw ShapeInvalidError("svg: path has zero extent");
    const double tol = options.flatten_tolerance_frac * diag;

    std::vector<Loop> loops;
    for (const Subpath& sp : subpaths) {
        Loop loop;
        loop.vertices.push_back(sp.start);
        Point2 cur = sp.start;
        for (const Segment& seg : sp.segments) {
            if (seg.kind == Segment::Kind::line) {
                loop.vertices.push_back(seg.end);
            } else {
                const auto pts = seg.kind == Segment::Kind::cubic
                                     ? flatten_cubic_bezier(cur, seg.c1, seg.c2, seg.end, tol)
                                     : flatten_quadratic_bezier(cur, seg.c1, seg.end, tol);
                loop.vertices.insert(loop.vertices.end(), pts.begin() + 1, pts.end());
            }
            cur = seg.end;
        }
        auto& v = loop.vertices;
        v.erase(std::unique(v.begin(), v.end()), v.end());
        while (v.size() > 1 && v.front() == v.back())
            v.pop_back();
        // Bare movetos and single line segments enclose nothing.
        if (v.size() >= 3)
            loops.push_back(std::move(loop));
    }
    if (loops.empty())
        throw ShapeInvalidError("svg: path encloses no area");
    classify_holes_by_nesting(loops);
    return make_element_shape(std::move(loops));
}

ElementShape parse_svg(std::string_view doc, const ParseOptions& options)
{
    std::size_t first = 0;
    if (doc.starts_with("\xEF\xBB\xBF"))
        first = 3;
    while (first < doc.size() && is_space(doc[first]))
        ++first;

    std::vector<Subpath> subpaths;
    if (first < doc.size() && doc[first] == '<') {
        const auto paths = SvgScanner(doc).scan();
        if (paths.empty())
            throw ParseError("svg: document contains no <path> elements", ParseError::npos);
        for (const PathAttribute& p : paths)
            PathDataParser(p.data, p.offset).parse(subpaths);
    } else {
        PathDataParser(doc, 0).parse(subpaths);
    }
    return shape_from_subpaths(subpaths, options);
}

// ---------------------------------------------------------------------------
// polygon-json

ElementShape parse_polygon_json(std::string_view doc)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(doc.begin(), doc.end());
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("polygon-json: ") + e.what(), e.byte > 0 ? e.byte - 1 : 0);
    }

    auto bad = [](const std::string& where, const std::string& what) -> ParseError {
        return ParseError("polygon-json: " + where + ": " + what, ParseError::npos);
    };

    if (!j.is_object() || !j.contains("loops"))
        throw bad("$", "expected an object with a \"loops\" array");
    const auto& jloops = j.at("loops");
    if (!jloops.is_array())
        throw bad("$.loops", "expected an array");

    std::vector<Loop> loops;
    for (std::size_t l = 0; l < jloops.size(); ++l) {
        const std::string where = "$.loops[" + std::to_string(l) + "]";
        const auto& jl = jloops[l];
        if (!jl.is_object() || !jl.contains("points"))
            throw bad(where, "expected an object with a \"points\" array");
        Loop loop;
        if (jl.contains("hole")) {
            if (!jl.at("hole").is_boolean())
                throw bad(where + ".hole", "expected a boolean");
            loop.is_hole = jl.at("hole").get<bool>();
        }
        const auto& jp = jl.at("points");
        if (!jp.is_array())
            throw bad(where + ".points", "expected an array");
        for (std::size_t i = 0; i < jp.size(); ++i) {
            const auto& pt = jp[i];
            if (!pt.is_array() || pt.size() != 2 || !pt[0].is_number() || !pt[1].is_number())
                throw bad(where + ".points[" + std::to_string(i) + "]", "expected [x, y]");
            loop.vertices.push_back({pt[0].get<double>(), pt[1].get<double>()});
        }
        loops.push_back(std::move(loop));
    }
    return make_element_shape(std::move(loops));
}

double radical_inverse(std::uint64_t i, std::uint64_t base)
{
    const double inv = 1.0 / static_cast<double>(base);
    double f = inv;
    double r = 0.0;
    while (i > 0) {
        r += f * static_cast<double>(i % base);
        i /= base;
        f *= inv;
    }
    return r;
}

} // namespace

ElementShape parse_shape(std::string_view document, ShapeFormat format, const ParseOptions& options)
{
    if (!(options.flatten_tolerance_frac > 0.0))
        throw ConfigError("flatten tolerance must be positive");
    return format == ShapeFormat::svg_path ? parse_svg(document, options) : parse_polygon_json(document);
}

std::string serialize_polygon_json(const ElementShape& shape)
{
    nlohmann::ordered_json loops = nlohmann::ordered_json::array();
    for (const Loop& loop : shape.loops) {
        nlohmann::ordered_json pts = nlohmann::ordered_json::array();
        for (const Point2& p : loop.vertices)
            pts.push_back({p.x, p.y});
        loops.push_back({{"hole", loop.is_hole}, {"points", std::move(pts)}});
    }
    nlohmann::ordered_json doc;
    doc["loops"] = std::move(loops);
    return doc.dump();
}

std::vector<PointSample> sample_boundary(const ElementShape& shape, int count)
{
    if (count < 3)
        throw DomainError("sample_boundary: count must be at least 3");

    const std::size_t nloops = shape.loops.size();
    std::vector<double> perimeter(nloops);
    double total = 0.0;
    for (std::size_t l = 0; l < nloops; ++l) {
        perimeter[l] = loop_perimeter(shape.loops[l].vertices);
        total += perimeter[l];
    }

    // Largest-remainder apportionment.
    std::vector<int> per_loop(nloops);
    std::vector<std::pair<double, std::size_t>> remainders;
    int assigned = 0;
    for (std::size_t l = 0; l < nloops; ++l) {
        const double quota = count * perimeter[l] / total;
        per_loop[l] = static_cast<int>(std::floor(quota));
        assigned += per_loop[l];
        remainders.push_back({quota - per_loop[l], l});
    }
    std::stable_sort(remainders.begin(), remainders.end(),
                     [](const auto& a, const auto& b) { return a.first > b.first; });
    for (std::size_t k = 0; assigned < count; ++k, ++assigned)
        ++per_loop[remainders[k % nloops].second];

    std::vector<PointSample> out;
    out.reserve(static_cast<std::size_t>(count));
    for (std::size_t l = 0; l < nloops; ++l) {
        if (per_loop[l] == 0)
            continue;
        const auto& src = shape.loops[l].vertices;
        const std::size_t n = src.size();
        std::size_t first = 0;
        for (std::size_t i = 1; i < n; ++i) {
            if (yx_less(src[i], src[first]))
                first = i;
        }

        const double step = perimeter[l] / per_loop[l];
        std::size_t edge = 0;
        double edge_start = 0.0;
        for (int j = 0; j < per_loop[l]; ++j) {
            const double s = j * step;
            for (;;) {
                const Point2 a = src[(first + edge) % n];
                const Point2 b = src[(first + edge + 1) % n];
                const double len = distance(a, b);
                if (s <= edge_start + len || edge + 1 == n) {
                    const double t = len > 0.0 ? std::clamp((s - edge_start) / len, 0.0, 1.0) : 0.0;
                    out.push_back({a + (b - a) * t, SampleKind::boundary});
                    break;
                }
                edge_start += len;
                ++edge;
            }
        }
    }
    return out;
}

std::vector<PointSample> sample_interior(const ElementShape& shape, int count)
{
    if (count < 0)
        throw DomainError("sample_interior: count must be non-negative");
    constexpr std::uint64_t kMaxCandidates = 1'000'000;

    std::vector<PointSample> out;
    out.reserve(static_cast<std::size_t>(count));
    const BBox& box = shape.bbox;
    for (std::uint64_t i = 1; out.size() < static_cast<std::size_t>(count); ++i) {
        if (i > kMaxCandidates)
            throw GenerationError("sample_interior: only " + std::to_string(out.size()) + " of " +
                                  std::to_string(count) + " points found in " + std::to_string(kMaxCandidates) +
                                  " candidates");
        const Point2 p{box.min.x + radical_inverse(i, 2) * box.width(),
                       box.min.y + radical_inverse(i, 3) * box.height()};
        if (point_in_shape(p, shape))
            out.push_back({p, SampleKind::interior});
    }
    return out;
}

std::vector<Point2> positions(const std::vector<PointSample>& samples)
{
    std::vector<Point2> out;
    out.reserve(samples.size());
    for (const PointSample& s : samples)
        out.push_back(s.position);
    return out;
}

} // namespace spheresample
