#include "spheresample/errors.hpp"
#include "spheresample/medial.hpp"

#include "predicates.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <set>
#include <unordered_map>

namespace spheresample {

namespace {

using Index = std::uint32_t;

// Incremental Bowyer-Watson over exact predicates. The three super vertices
// are treated symbolically as points at infinity in fixed directions, so the
// finite triangles form the Delaunay triangulation of the input including
// every convex-hull edge. A point exactly on a circumcircle does not conflict
// with it; with exact predicates this still leaves a star-shaped cavity.
class BowyerWatson {
public:
    explicit BowyerWatson(std::span<const Point2> input) : pts_(input.begin(), input.end())
    {
        const BBox box = bounding_box(input);
        const double m = std::max({box.width(), box.height(), 1e-300});
        const Point2 c = box.center();
        super_ = static_cast<Index>(pts_.size());
        for (const Point2& u : kDirections)
            pts_.push_back(c + m * u);
        add(super_, super_ + 1, super_ + 2);
    }

    void insert(Index p)
    {
        const Point2 pt = pts_[p];
        if (!seen_.insert(key_of(pt)).second)
            return; // duplicate point

        const std::size_t seed = find_conflict(pt);
        std::vector<std::size_t> cavity{seed};
        std::vector<char> in_cavity(tris_.size(), 0);
        in_cavity[seed] = 1;
        for (std::size_t k = 0; k < cavity.size(); ++k) {
            const auto v = tris_[cavity[k]].v;
            for (int e = 0; e < 3; ++e) {
                const std::size_t nb = neighbor(v[(e + 1) % 3], v[e]);
                if (nb == npos || in_cavity[nb] || !conflicts(tris_[nb].v, pt))
                    continue;
                in_cavity[nb] = 1;
                cavity.push_back(nb);
            }
        }

        std::vector<std::pair<Index, Index>> boundary;
        for (std::size_t t : cavity) {
            const auto v = tris_[t].v;
            for (int e = 0; e < 3; ++e) {
                const std::size_t nb = neighbor(v[(e + 1) % 3], v[e]);
                if (nb == npos || !in_cavity[nb])
                    boundary.push_back({v[e], v[(e + 1) % 3]});
            }
        }
        for (std::size_t t : cavity)
            remove(t);
        for (const auto& [a, b] : boundary)
            add(a, b, p);
    }

    std::vector<std::array<Index, 3>> finite_triangles() const
    {
        std::vector<std::array<Index, 3>> out;
        for (const Tri& t : tris_) {
            if (t.alive && t.v[0] < super_ && t.v[1] < super_ && t.v[2] < super_)
                out.push_back(t.v);
        }
        return out;
    }

private:
    // Directions of the super vertices (counter-clockwise) and, for each pair,
    // the center of the circle through the origin and the two directions:
    // the limiting circumdisk of (a, S_i, S_j) is the half-plane
    // dot(p - a, center) > 0.
    static constexpr Point2 kDirections[3] = {{-20.0, -10.0}, {20.0, -10.0}, {0.0, 20.0}};
    static constexpr Point2 kPairNormal[3] = {{0.0, -1.0}, {7.0, 4.0}, {-7.0, 4.0}}; // (0,1), (1,2), (2,0)

    bool conflicts(const std::array<Index, 3>& w, Point2 d) const
    {
        const int supers = (w[0] >= super_) + (w[1] >= super_) + (w[2] >= super_);
        if (supers == 0)
            return exact::incircle_sign(pts_[w[0]], pts_[w[1]], pts_[w[2]], d) > 0;
        if (supers == 3)
            return true;
        if (supers == 1) {
            // Circle through a, b and a point at infinity: the open half-plane
            // left of ab plus the open segment ab (a chord).
            const int s = w[0] >= super_ ? 0 : (w[1] >= super_ ? 1 : 2);
            const Point2 a = pts_[w[(s + 1) % 3]];
            const Point2 b = pts_[w[(s + 2) % 3]];
            const int o = exact::orient_sign(a, b, d);
            if (o != 0)
                return o > 0;
            return a.x != b.x ? (std::min(a.x, b.x) < d.x && d.x < std::max(a.x, b.x))
                              : (std::min(a.y, b.y) < d.y && d.y < std::max(a.y, b.y));
        }
        const int f = w[0] < super_ ? 0 : (w[1] < super_ ? 1 : 2);
        const Index i = w[(f + 1) % 3] - super_;
        const Index j = w[(f + 2) % 3] - super_;
        const Index pair = (i + 1) % 3 == j ? i : j; // unordered pair -> 0, 1, 2
        const Point2 n = kPairNormal[pair];
        return exact::dot_sign(d, pts_[w[f]], n.x, n.y) > 0;
    }

    struct Tri {
        std::array<Index, 3> v;
        bool alive;
    };

    static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

    static std::uint64_t key(Index a, Index b) { return (static_cast<std::uint64_t>(a) << 32) | b; }

    static std::pair<std::uint64_t, std::uint64_t> key_of(Point2 p)
    {
        // +0.0 and -0.0 compare equal but differ bitwise.
        const double x = p.x == 0.0 ? 0.0 : p.x;
        const double y = p.y == 0.0 ? 0.0 : p.y;
        return {std::bit_cast<std::uint64_t>(x), std::bit_cast<std::uint64_t>(y)};
    }

    std::size_t neighbor(Index a, Index b) const
    {
        const auto it = owner_.find(key(a, b));
        return it == owner_.end() ? npos : it->second;
    }

    void add(Index a, Index b, Index c)
    {
        const std::size_t id = tris_.size();
        tris_.push_back({{a, b, c}, true});
        owner_[key(a, b)] = id;
        owner_[key(b, c)] = id;
        owner_[key(c, a)] = id;
    }

    void remove(std::size_t t)
    {
        Tri& tri = tris_[t];
        tri.alive = false;
        for (int e = 0; e < 3; ++e) {
            const auto it = owner_.find(key(tri.v[e], tri.v[(e + 1) % 3]));
            if (it != owner_.end() && it->second == t)
                owner_.erase(it);
        }
    }

    // Any conflicting triangle seeds the cavity (the conflict region is
    // connected). Recent triangles are tried first: consecutive inputs are
    // usually close together.
    std::size_t find_conflict(Point2 p) const
    {
        for (std::size_t t = tris_.size(); t-- > 0;) {
            if (tris_[t].alive && conflicts(tris_[t].v, p))
                return t;
        }
        throw DomainError("delaunay_triangulate: no triangle conflicts with an inserted point");
    }

    std::vector<Point2> pts_;
    std::vector<Tri> tris_;
    std::unordered_map<std::uint64_t, std::size_t> owner_;
    std::set<std::pair<std::uint64_t, std::uint64_t>> seen_;
    Index super_ = 0;
};

} // namespace

std::vector<std::array<std::uint32_t, 3>> delaunay_triangulate(std::span<const Point2> points)
{
    if (points.size() < 3)
        throw DomainError("delaunay_triangulate: need at least 3 points");
    std::size_t second = 1;
    while (second < points.size() && points[second] == points[0])
        ++second;
    bool collinear = true;
    for (std::size_t i = second + 1; i < points.size() && collinear; ++i)
        collinear = exact::orient_sign(points[0], points[second], points[i]) == 0;
    if (collinear)
        throw DegenerateShapeError("delaunay_triangulate: all points are collinear");

    BowyerWatson dt(points);
    for (std::uint32_t i = 0; i < points.size(); ++i)
        dt.insert(i);
    return dt.finite_triangles();
}

} // namespace spheresample
