#include "epg/geometry.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

namespace epg {

namespace {

int sign_of(coord_t v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

struct Dir {
    int dx = 0;
    int dy = 0;
    bool horizontal() const { return dy == 0; }
};

Dir step_dir(const GridPoint& a, const GridPoint& b) {
    if (a.x != b.x && a.y != b.y)
        throw BadPath("non-rectilinear step");
    return Dir{sign_of(b.x - a.x), sign_of(b.y - a.y)};
}

} // namespace

GridPath::GridPath(std::vector<GridPoint> canonical_corners)
    : corners_(std::move(canonical_corners)) {
    for (std::size_t i = 1; i < corners_.size(); ++i) {
        const auto& a = corners_[i - 1];
        const auto& b = corners_[i];
        if (a == b) throw BadPath("zero-length segment in canonical path");
        if (a.x != b.x && a.y != b.y) throw BadPath("non-rectilinear step");
        if (i >= 2) {
            Dir d1 = step_dir(corners_[i - 2], a);
            Dir d2 = step_dir(a, b);
            if (d1.horizontal() == d2.horizontal())
                throw BadPath("collinear consecutive segments in canonical path");
        }
    }
}

std::size_t GridPath::bends() const {
    return corners_.size() >= 2 ? corners_.size() - 2 : 0;
}

std::vector<Segment> GridPath::segments() const {
    std::vector<Segment> out;
    for (std::size_t i = 1; i < corners_.size(); ++i) {
        const auto& a = corners_[i - 1];
        const auto& b = corners_[i];
        Segment s;
        if (a.y == b.y) {
            s.orientation = Orientation::Horizontal;
            s.line = a.y;
            s.lo = std::min(a.x, b.x);
            s.hi = std::max(a.x, b.x);
        } else {
            s.orientation = Orientation::Vertical;
            s.line = a.x;
            s.lo = std::min(a.y, b.y);
            s.hi = std::max(a.y, b.y);
        }
        out.push_back(s);
    }
    return out;
}

GridPath GridPath::translated(coord_t dx, coord_t dy) const {
    std::vector<GridPoint> cs = corners_;
    for (auto& c : cs) {
        c.x += dx;
        c.y += dy;
    }
    GridPath p;
    p.corners_ = std::move(cs);
    return p;
}

GridPath GridPath::rotated90() const {
    std::vector<GridPoint> cs = corners_;
    for (auto& c : cs) c = GridPoint{-c.y, c.x};
    GridPath p;
    p.corners_ = std::move(cs);
    return p;
}

GridPath GridPath::rotated180() const {
    std::vector<GridPoint> cs = corners_;
    for (auto& c : cs) c = GridPoint{-c.x, -c.y};
    GridPath p;
    p.corners_ = std::move(cs);
    return p;
}

GridPath GridPath::reflected_x() const {
    std::vector<GridPoint> cs = corners_;
    for (auto& c : cs) c.x = -c.x;
    GridPath p;
    p.corners_ = std::move(cs);
    return p;
}

GridPath GridPath::reflected_y() const {
    std::vector<GridPoint> cs = corners_;
    for (auto& c : cs) c.y = -c.y;
    GridPath p;
    p.corners_ = std::move(cs);
    return p;
}

GridPath GridPath::transposed() const {
    std::vector<GridPoint> cs = corners_;
    for (auto& c : cs) std::swap(c.x, c.y);
    GridPath p;
    p.corners_ = std::move(cs);
    return p;
}

GridPath GridPath::reversed() const {
    std::vector<GridPoint> cs(corners_.rbegin(), corners_.rend());
    GridPath p;
    p.corners_ = std::move(cs);
    return p;
}

GridPath normalize_path(const std::vector<GridPoint>& corners) {
    if (corners.empty()) throw BadPath("empty path");
    std::vector<GridPoint> out;
    out.push_back(corners.front());
    for (std::size_t i = 1; i < corners.size(); ++i) {
        const GridPoint& next = corners[i];
        GridPoint& last = out.back();
        if (next == last) continue;
        Dir d = step_dir(last, next); // throws on diagonal steps
        if (out.size() >= 2) {
            Dir prev = step_dir(out[out.size() - 2], last);
            if (prev.horizontal() == d.horizontal()) {
                if (prev.dx != d.dx || prev.dy != d.dy)
                    throw BadPath("path reverses direction along a line");
                last = next; // merge collinear continuation
                continue;
            }
        }
        out.push_back(next);
    }
    if (out.size() >= 2 && out.front() == out.back() && out.size() == 2)
        out.pop_back();
    return GridPath(std::move(out));
}

std::size_t bends(const GridPath& p) { return p.bends(); }

bool edge_intersects(const GridPath& p, const GridPath& q) {
    auto sp = p.segments();
    auto sq = q.segments();
    for (const auto& a : sp)
        for (const auto& b : sq)
            if (a.shares_edge_with(b)) return true;
    return false;
}

std::size_t crossings(const GridPath& p, const GridPath& q) {
    auto sp = p.segments();
    auto sq = q.segments();
    std::set<GridPoint> pts;
    auto scan = [&pts](const std::vector<Segment>& hs, const std::vector<Segment>& vs) {
        for (const auto& h : hs) {
            if (h.orientation != Orientation::Horizontal) continue;
            for (const auto& v : vs) {
                if (v.orientation != Orientation::Vertical) continue;
                if (h.lo <= v.line && v.line <= h.hi && v.lo <= h.line && h.line <= v.hi)
                    pts.insert(GridPoint{v.line, h.line});
            }
        }
    };
    scan(sp, sq);
    scan(sq, sp);
    return pts.size();
}

GridPath connect_snake(const std::vector<Subsegment>& subs, SnakeSide side,
                       std::pair<coord_t, coord_t> lanes) {
    if (subs.empty()) throw BadPath("connect_snake needs at least one subsegment");
    const Orientation orient = subs.front().orientation;
    for (const auto& s : subs) {
        if (s.orientation != orient)
            throw BadPath("connect_snake: subsegments must be parallel");
        if (s.lo > std::min(lanes.first, lanes.second) ||
            s.hi < std::max(lanes.first, lanes.second))
            throw BadPath("connect_snake: subsegments not mutually visible on the lanes");
    }
    // Pick which lane the first connector runs on.
    coord_t near = lanes.first, far = lanes.second;
    const bool want_high_first =
        (side == SnakeSide::Above || side == SnakeSide::Right);
    if ((near > far) != want_high_first) std::swap(near, far);

    // Build for vertical subsegments (horizontal connectors); transpose
    // at the end when the input is horizontal.
    std::vector<GridPoint> pts;
    coord_t a = far, b = near;
    for (std::size_t i = 0; i < subs.size(); ++i) {
        coord_t col = subs[i].line;
        if (i == 0) pts.push_back(GridPoint{col, a});
        pts.push_back(GridPoint{col, b});
        if (i + 1 < subs.size()) pts.push_back(GridPoint{subs[i + 1].line, b});
        std::swap(a, b);
    }
    if (orient == Orientation::Horizontal)
        for (auto& p : pts) std::swap(p.x, p.y);
    return normalize_path(pts);
}

std::pair<GridPath, GridPath> make_pretzel(int j) {
    if (j < 1) throw BadPath("pretzel parameter must be >= 1");
    std::vector<GridPoint> cs;
    GridPoint at{0, 0};
    cs.push_back(at);
    for (int i = 1; i <= j; ++i) {
        coord_t hlen = 2 * j + 3 - 2 * i;
        coord_t vlen = 2 * i;
        at.x += (i % 2 == 1) ? hlen : -hlen; // right, left, right, ...
        cs.push_back(at);
        at.y += (i % 2 == 1) ? -vlen : vlen; // down, up, down, ...
        cs.push_back(at);
    }
    GridPath p1 = normalize_path(cs);
    GridPath p2 = p1.rotated180();
    GridPoint start = p2.corners().front();
    p2 = p2.translated(2 * j + 2 - start.x, -1 - start.y);
    return {p1, p2};
}

namespace {

// Turn signs at the interior corners: +1 left, -1 right.
std::vector<int> turns(const GridPath& p) {
    const auto& cs = p.corners();
    std::vector<int> out;
    for (std::size_t i = 1; i + 1 < cs.size(); ++i) {
        coord_t ax = cs[i].x - cs[i - 1].x, ay = cs[i].y - cs[i - 1].y;
        coord_t bx = cs[i + 1].x - cs[i].x, by = cs[i + 1].y - cs[i].y;
        coord_t cross = ax * by - ay * bx;
        out.push_back(cross > 0 ? 1 : -1);
    }
    return out;
}

} // namespace

bool is_staircase(const GridPath& p) {
    auto t = turns(p);
    for (std::size_t i = 1; i < t.size(); ++i)
        if (t[i] == t[i - 1]) return false;
    return true;
}

bool is_snake(const GridPath& p) {
    auto t = turns(p);
    if (t.size() % 2 != 0) return false;
    // Runs of equal turns must all have length exactly two, alternating.
    for (std::size_t i = 0; i < t.size(); i += 2) {
        if (t[i] != t[i + 1]) return false;
        if (i >= 2 && t[i] == t[i - 1]) return false;
    }
    return true;
}

PathKind path_kind(const GridPath& p) {
    if (p.bends() <= 1) return PathKind::Staircase;
    if (is_staircase(p)) return PathKind::Staircase;
    if (is_snake(p)) return PathKind::Snake;
    return PathKind::Other;
}

} // namespace epg
