#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace epg {

using coord_t = std::int64_t;

struct GridPoint {
    coord_t x = 0;
    coord_t y = 0;

    friend bool operator==(const GridPoint& a, const GridPoint& b) {
        return a.x == b.x && a.y == b.y;
    }
    friend bool operator!=(const GridPoint& a, const GridPoint& b) { return !(a == b); }
    friend bool operator<(const GridPoint& a, const GridPoint& b) {
        return a.x != b.x ? a.x < b.x : a.y < b.y;
    }
};

enum class Orientation { Horizontal, Vertical };

// Maximal straight piece of a path. `line` is the fixed coordinate
// (y for horizontal, x for vertical); [lo,hi] the extent along it.
struct Segment {
    Orientation orientation = Orientation::Horizontal;
    coord_t line = 0;
    coord_t lo = 0;
    coord_t hi = 0;

    coord_t length() const { return hi - lo; }
    bool contains_point(const GridPoint& p) const {
        if (orientation == Orientation::Horizontal)
            return p.y == line && lo <= p.x && p.x <= hi;
        return p.x == line && lo <= p.y && p.y <= hi;
    }
    // Shared extent of at least one grid-edge with a parallel segment.
    bool shares_edge_with(const Segment& o) const {
        if (orientation != o.orientation || line != o.line) return false;
        return std::max(lo, o.lo) < std::min(hi, o.hi);
    }
};

// Connected subset of one segment of the owner's path.
struct Subsegment {
    Orientation orientation = Orientation::Horizontal;
    coord_t line = 0;
    coord_t lo = 0;
    coord_t hi = 0;
    std::string owner;

    Segment as_segment() const { return Segment{orientation, line, lo, hi}; }
};

enum class PathKind { Staircase, Snake, Other };

struct BadPath : std::runtime_error {
    explicit BadPath(const std::string& what) : std::runtime_error(what) {}
};

// Axis-aligned lattice path stored as its corner sequence
// (start point, each bend, end point). Canonical form: consecutive
// segments alternate orientation, so bends() == corners.size()-2.
class GridPath {
public:
    GridPath() = default;
    explicit GridPath(std::vector<GridPoint> canonical_corners);

    const std::vector<GridPoint>& corners() const { return corners_; }
    std::size_t bends() const;
    std::vector<Segment> segments() const;
    bool empty() const { return corners_.empty(); }

    GridPath translated(coord_t dx, coord_t dy) const;
    GridPath rotated90() const;   // (x,y) -> (-y,x), counterclockwise
    GridPath rotated180() const;  // (x,y) -> (-x,-y)
    GridPath reflected_x() const; // (x,y) -> (-x,y)
    GridPath reflected_y() const; // (x,y) -> (x,-y)
    GridPath transposed() const;  // (x,y) -> (y,x)
    GridPath reversed() const;

    friend bool operator==(const GridPath& a, const GridPath& b) {
        return a.corners_ == b.corners_;
    }

private:
    std::vector<GridPoint> corners_;
};

// Merges collinear steps and drops zero-length ones. Throws BadPath on
// diagonal steps, reversals along a line, or an empty corner list.
GridPath normalize_path(const std::vector<GridPoint>& corners);

std::size_t bends(const GridPath& p);

// True iff the two paths share at least one unit grid-edge.
bool edge_intersects(const GridPath& p, const GridPath& q);

// Number of distinct grid-points where a horizontal portion of one path
// meets a vertical portion of the other (incidence at bends included).
// Overlaps of parallel portions are not crossings.
std::size_t crossings(const GridPath& p, const GridPath& q);

enum class SnakeSide { Above, Below, Left, Right };

// Snake with one segment inside each subsegment of `subs`, connectors on
// the two lanes. `lanes` are two transversal lines crossing every
// subsegment. The side picks which lane carries the first connector.
// Exactly 2|subs|-2 bends.
GridPath connect_snake(const std::vector<Subsegment>& subs, SnakeSide side,
                       std::pair<coord_t, coord_t> lanes);

// The extremal pair of (2j-1)-bend paths crossing j(j+1) times.
std::pair<GridPath, GridPath> make_pretzel(int j);

bool is_staircase(const GridPath& p);
bool is_snake(const GridPath& p);
PathKind path_kind(const GridPath& p);

} // namespace epg
