#include "epg/construct.hpp"

#include <algorithm>
#include <cassert>
#include <tuple>
#include <memory>

namespace epg {

namespace {

// ----------------------------------------------------------------------
// Global-cover staircases.
//
// Family i (1-based) owns a block of grid-lines, vertical for odd i and
// horizontal for even i; clique c of family i gets line
// c + (i-1) + sum of same-parity family sizes before i. Segment i of every
// path runs on its family-i clique line, so two paths share edges on
// segment i iff they are in the same clique there.
// ----------------------------------------------------------------------

std::vector<std::vector<std::set<Vertex>>> extend_families(const Graph& g,
                                                           const CliqueCover& cover) {
    auto families = cover.families;
    for (auto& fam : families) {
        std::set<Vertex> seen;
        for (const auto& cl : fam) seen.insert(cl.begin(), cl.end());
        for (const auto& v : g.vertices())
            if (!seen.count(v)) fam.push_back({v});
    }
    return families;
}

} // namespace

Representation construct_from_global_cover(const Graph& g, const CliqueCover& cover) {
    validate_cover(g, cover);
    Representation rep;
    if (g.vertex_count() == 0) return rep;

    auto families = extend_families(g, cover);
    if (families.empty()) { // edgeless graph: disjoint unit segments
        coord_t x = 0;
        for (const auto& v : g.vertices()) {
            rep.paths.emplace(v, normalize_path({{x, 0}, {x + 1, 0}}));
            x += 3;
        }
        return rep;
    }

    const std::size_t k = families.size();
    std::vector<std::map<Vertex, coord_t>> idx(k); // 1-based clique index per family
    std::vector<coord_t> fam_size(k);
    for (std::size_t i = 0; i < k; ++i) {
        coord_t c = 0;
        for (const auto& cl : families[i]) {
            ++c;
            for (const auto& v : cl) idx[i][v] = c;
        }
        fam_size[i] = c;
    }
    auto line_of = [&](std::size_t i, coord_t c) { // family i is 1-based
        coord_t off = static_cast<coord_t>(i) - 1;
        for (std::size_t j = i; j > 2; j -= 2) off += fam_size[j - 3];
        return c + off;
    };
    coord_t far = static_cast<coord_t>(k) + 1;
    for (coord_t s : fam_size) far += s;

    for (const auto& v : g.vertices()) {
        std::vector<coord_t> line(k + 1);
        for (std::size_t i = 1; i <= k; ++i) line[i] = line_of(i, idx[i - 1].at(v));
        std::vector<GridPoint> cs;
        cs.push_back(GridPoint{line[1], 0}); // segment 1 is vertical, raw start 0
        for (std::size_t i = 2; i <= k; ++i) {
            if (i % 2 == 0)
                cs.push_back(GridPoint{line[i - 1], line[i]});
            else
                cs.push_back(GridPoint{line[i], line[i - 1]});
        }
        if (k % 2 == 1)
            cs.push_back(GridPoint{line[k], far});
        else
            cs.push_back(GridPoint{far, line[k]});
        rep.paths.emplace(v, normalize_path(cs));
    }
    return rep;
}

Representation construct_from_local_cover(const Graph& g, const CliqueCover& cover) {
    validate_cover(g, cover);
    Representation rep;
    // Clique t gets the vertical lane x = 2t; vertex of rank r snakes over
    // its lanes between its private rows -r and r, so same-clique verticals
    // always overlap around row 0 and no two horizontals share a row.
    std::vector<std::set<Vertex>> cliques;
    for (const auto& fam : cover.families)
        for (const auto& cl : fam) cliques.push_back(cl);

    std::map<Vertex, std::vector<coord_t>> lanes_of;
    for (std::size_t t = 0; t < cliques.size(); ++t)
        for (const auto& v : cliques[t]) lanes_of[v].push_back(static_cast<coord_t>(2 * t));

    coord_t rank = 1;
    coord_t spare_x = 2 * static_cast<coord_t>(cliques.size()) + 2;
    for (const auto& v : g.vertices()) {
        ++rank;
        auto it = lanes_of.find(v);
        if (it == lanes_of.end()) { // vertex in no clique
            rep.paths.emplace(v, normalize_path({{spare_x, 0}, {spare_x, 1}}));
            spare_x += 2;
            continue;
        }
        std::vector<Subsegment> subs;
        for (coord_t x : it->second)
            subs.push_back(Subsegment{Orientation::Vertical, x, -rank, rank, v});
        rep.paths.emplace(v, connect_snake(subs, SnakeSide::Above, {-rank, rank}));
    }
    return rep;
}

// ----------------------------------------------------------------------
// Shared machinery for the insertion constructors: before every insertion
// all used grid-lines are re-spread so that adjacent used lines sit
// STRETCH apart on both axes (0 stays fixed). Fresh lines then come from
// fixed offsets inside a gap, and nothing allocated mid-insertion can
// collide with existing geometry.
// ----------------------------------------------------------------------

namespace {

constexpr coord_t STRETCH = 64;

struct Interval {
    coord_t line = 0;
    coord_t lo = 0;
    coord_t hi = 0;
};

class Workspace {
public:
    std::map<Vertex, std::vector<GridPoint>> paths;

    // Registered intervals are remapped together with the paths. Slots:
    // 0 = horizontal (line is y), 1 = vertical (line is x).
    Interval* track(int orient, Interval iv) {
        auto& store = store_[orient];
        store.push_back(std::make_unique<Interval>(iv));
        return store.back().get();
    }

    void stretch() {
        std::set<coord_t> xs = {0}, ys = {0};
        for (const auto& [v, cs] : paths)
            for (const auto& c : cs) {
                xs.insert(c.x);
                ys.insert(c.y);
            }
        for (const auto& iv : store_[0]) {
            ys.insert(iv->line);
            xs.insert(iv->lo);
            xs.insert(iv->hi);
        }
        for (const auto& iv : store_[1]) {
            xs.insert(iv->line);
            ys.insert(iv->lo);
            ys.insert(iv->hi);
        }
        auto build = [](const std::set<coord_t>& used) {
            std::map<coord_t, coord_t> m;
            coord_t rank0 = 0, r = 0;
            for (coord_t v : used) {
                if (v == 0) rank0 = r;
                ++r;
            }
            r = 0;
            for (coord_t v : used) m[v] = STRETCH * (r++ - rank0);
            return m;
        };
        std::map<coord_t, coord_t> mx = build(xs), my = build(ys);
        for (auto& [v, cs] : paths)
            for (auto& c : cs) c = GridPoint{mx.at(c.x), my.at(c.y)};
        for (auto& iv : store_[0]) {
            iv->line = my.at(iv->line);
            iv->lo = mx.at(iv->lo);
            iv->hi = mx.at(iv->hi);
        }
        for (auto& iv : store_[1]) {
            iv->line = mx.at(iv->line);
            iv->lo = my.at(iv->lo);
            iv->hi = my.at(iv->hi);
        }
        lo_x_ = mx.begin()->second;
        lo_y_ = my.begin()->second;
        hi_x_ = mx.rbegin()->second;
        hi_y_ = my.rbegin()->second;
        extreme_count_ = 0;
    }

    coord_t fresh_below_all_y() { return lo_y_ - STRETCH * (++extreme_count_); }
    coord_t fresh_above_all_y() { return hi_y_ + STRETCH * (++extreme_count_); }
    coord_t fresh_left_of_all_x() { return lo_x_ - STRETCH * (++extreme_count_); }
    coord_t fresh_right_of_all_x() { return hi_x_ + STRETCH * (++extreme_count_); }

    Representation finish(const std::set<Vertex>& keep) const {
        Representation rep;
        for (const auto& [v, cs] : paths)
            if (keep.count(v)) rep.paths.emplace(v, normalize_path(cs));
        return compress_coordinates(rep);
    }

private:
    std::vector<std::unique_ptr<Interval>> store_[2];
    coord_t lo_x_ = 0, lo_y_ = 0, hi_x_ = 0, hi_y_ = 0;
    int extreme_count_ = 0;
};

// ----------------------------------------------------------------------
// Degeneracy insertion. Every vertex keeps a horizontal arm (a hook
// target of unbounded capacity) and, when geometry allows, a vertical
// spine displaying it across row 0. A new path snakes through the spines
// of its back-neighbors, hooks into the arm of one of them, and with
// budget slack adds a tail that plants a fresh arm below everything.
// ----------------------------------------------------------------------

class DegeneracyBuilder {
public:
    DegeneracyBuilder(const Graph& g, const DegeneracyOrder& order) : g_(g), ord_(order) {}

    Representation run() {
        validate();
        if (ord_.d <= 1) return forest();
        std::set<Vertex> placed;
        for (const auto& v : ord_.order) {
            std::vector<Vertex> back;
            for (const auto& w : g_.neighbors(v))
                if (placed.count(w)) back.push_back(w);
            insert(v, back);
            placed.insert(v);
        }
        return ws_.finish(placed);
    }

private:
    const Graph& g_;
    const DegeneracyOrder& ord_;
    Workspace ws_;
    std::map<Vertex, Interval*> arm_;   // horizontal exclusive display
    std::map<Vertex, Interval*> spine_; // vertical exclusive display across row 0

    void validate() {
        std::set<Vertex> seen;
        for (const auto& v : ord_.order) {
            if (!g_.has_vertex(v)) throw InvalidOrder("unknown vertex in order: " + v);
            std::size_t back = 0;
            for (const auto& w : g_.neighbors(v))
                if (seen.count(w)) ++back;
            if (back > ord_.d)
                throw InvalidOrder("back-degree of " + v + " exceeds declared degeneracy");
            if (!seen.insert(v).second) throw InvalidOrder("duplicate vertex in order: " + v);
        }
        for (const auto& v : g_.vertices())
            if (!seen.count(v)) throw InvalidOrder("vertex missing from order: " + v);
    }

    // True when the horizontal run [x1,x2] on `row` shares no grid-edge
    // with any path outside `allowed`, nor with the partial path `self`.
    bool h_run_clear(coord_t row, coord_t x1, coord_t x2, const std::set<Vertex>& allowed,
                     const std::vector<GridPoint>& self) const {
        if (x2 < x1) std::swap(x1, x2);
        Segment cand{Orientation::Horizontal, row, x1, x2};
        for (const auto& [w, corners] : ws_.paths) {
            if (allowed.count(w)) continue;
            for (std::size_t i = 1; i < corners.size(); ++i) {
                const auto& a = corners[i - 1];
                const auto& b = corners[i];
                if (a.y != b.y) continue;
                Segment s{Orientation::Horizontal, a.y, std::min(a.x, b.x), std::max(a.x, b.x)};
                if (cand.shares_edge_with(s)) return false;
            }
        }
        for (std::size_t i = 1; i < self.size(); ++i) {
            const auto& a = self[i - 1];
            const auto& b = self[i];
            if (a.y != b.y) continue;
            Segment s{Orientation::Horizontal, a.y, std::min(a.x, b.x), std::max(a.x, b.x)};
            if (cand.shares_edge_with(s)) return false;
        }
        return true;
    }

    // Forests: each vertex owns one long exclusive arm; a child starts
    // inside the parent's arm and bends away into a fresh perpendicular
    // arm of its own. One bend per path.
    Representation forest() {
        struct Arm {
            Orientation o;
            coord_t line, lo, hi;
        };
        std::map<Vertex, Arm> arms;
        std::map<Vertex, std::vector<GridPoint>> paths;
        std::set<Vertex> placed;

        auto stretch_all = [&]() {
            std::set<coord_t> xs = {0}, ys = {0};
            for (const auto& [v, cs] : paths)
                for (const auto& c : cs) {
                    xs.insert(c.x);
                    ys.insert(c.y);
                }
            for (const auto& [v, a] : arms) {
                (a.o == Orientation::Horizontal ? ys : xs).insert(a.line);
                (a.o == Orientation::Horizontal ? xs : ys).insert(a.lo);
                (a.o == Orientation::Horizontal ? xs : ys).insert(a.hi);
            }
            auto build = [](const std::set<coord_t>& used) {
                std::map<coord_t, coord_t> m;
                coord_t r = 0;
                for (coord_t v : used) m[v] = STRETCH * r++;
                return m;
            };
            auto mx = build(xs), my = build(ys);
            for (auto& [v, cs] : paths)
                for (auto& c : cs) c = GridPoint{mx.at(c.x), my.at(c.y)};
            for (auto& [v, a] : arms) {
                if (a.o == Orientation::Horizontal) {
                    a.line = my.at(a.line);
                    a.lo = mx.at(a.lo);
                    a.hi = mx.at(a.hi);
                } else {
                    a.line = mx.at(a.line);
                    a.lo = my.at(a.lo);
                    a.hi = my.at(a.hi);
                }
            }
            return std::pair{mx.rbegin()->second + STRETCH, my.rbegin()->second + STRETCH};
        };

        for (const auto& v : ord_.order) {
            std::optional<Vertex> parent;
            for (const auto& w : g_.neighbors(v))
                if (placed.count(w)) parent = w;
            auto [far_x, far_y] = stretch_all();
            if (!parent) {
                paths[v] = {GridPoint{far_x, 0}, GridPoint{far_x, far_y}};
                arms[v] = Arm{Orientation::Vertical, far_x, 0, far_y};
            } else {
                Arm& pa = arms.at(*parent);
                coord_t m1 = pa.lo + STRETCH / 3;
                coord_t m2 = pa.lo + 2 * (STRETCH / 3);
                if (pa.o == Orientation::Vertical) {
                    paths[v] = {GridPoint{pa.line, m1}, GridPoint{pa.line, m2},
                                GridPoint{far_x, m2}};
                    arms[v] = Arm{Orientation::Horizontal, m2, pa.line, far_x};
                } else {
                    paths[v] = {GridPoint{m1, pa.line}, GridPoint{m2, pa.line},
                                GridPoint{m2, far_y}};
                    arms[v] = Arm{Orientation::Vertical, m2, pa.line, far_y};
                }
                pa.lo = m2; // live arm keeps the far part
            }
            placed.insert(v);
        }
        Representation rep;
        for (const auto& [v, cs] : paths) rep.paths.emplace(v, normalize_path(cs));
        return compress_coordinates(rep);
    }

    void insert(const Vertex& v, std::vector<Vertex> back) {
        // The default hook order almost always fits; when it does not,
        // roll the registries back and try other hook orders.
        ws_.stretch();
        struct Snapshot {
            std::map<Vertex, Interval*> arm, spine;
            std::map<Interval*, Interval> values;
        };
        Snapshot snap{arm_, spine_, {}};
        for (const auto& [w, iv] : arm_) snap.values[iv] = *iv;
        for (const auto& [w, iv] : spine_) snap.values[iv] = *iv;
        for (int attempt = 0;; ++attempt) {
            try {
                insert_once(v, back, attempt);
                return;
            } catch (const InvalidOrder&) {
                arm_ = snap.arm;
                spine_ = snap.spine;
                for (auto& [ptr, value] : snap.values) *ptr = value;
                ws_.paths.erase(v);
                if (attempt >= 7) throw;
            }
        }
    }

    void insert_once(const Vertex& v, std::vector<Vertex> back, int attempt) {
        const std::size_t budget = 2 * ord_.d - 1;
        std::sort(back.begin(), back.end());

        if (back.empty()) {
            coord_t x = ws_.fresh_right_of_all_x();
            coord_t top = ws_.fresh_above_all_y();
            coord_t row = ws_.fresh_below_all_y();
            ws_.paths[v] = {GridPoint{x - STRETCH / 2, row}, GridPoint{x, row},
                            GridPoint{x, top}};
            arm_[v] = ws_.track(0, Interval{row, x - STRETCH / 2, x});
            spine_[v] = ws_.track(1, Interval{x, row, top});
            return;
        }

        std::vector<Vertex> hooks, dips;
        for (const auto& w : back)
            (spine_.count(w) ? dips : hooks).push_back(w);
        if (hooks.empty()) {
            // hook the armed spined neighbor whose arm row is lowest
            auto best = dips.end();
            for (auto it = dips.begin(); it != dips.end(); ++it) {
                if (!arm_.count(*it)) continue;
                if (best == dips.end() || arm_.at(*it)->line < arm_.at(*best)->line)
                    best = it;
            }
            if (best != dips.end()) {
                hooks.push_back(*best);
                dips.erase(best);
            }
        }
        // Arms sorted by position chain cheaply; ties broken by row so the
        // first descent lands in a low arm when one is available.
        std::stable_sort(hooks.begin(), hooks.end(), [&](const Vertex& a, const Vertex& b) {
            const Interval* ia = arm_.at(a);
            const Interval* ib = arm_.at(b);
            return std::tie(ia->lo, ia->hi, ia->line) < std::tie(ib->lo, ib->hi, ib->line);
        });
        if (!hooks.empty() && (!dips.empty() || hooks.size() == 1)) {
            // a low first arm lets the descent display v across row 0
            auto low = std::min_element(hooks.begin(), hooks.end(),
                                        [&](const Vertex& a, const Vertex& b) {
                                            return arm_.at(a)->line < arm_.at(b)->line;
                                        });
            if (arm_.at(*low)->line < 0) std::iter_swap(hooks.begin(), low);
        }
        for (int t = 0; t < attempt; ++t)
            if (!std::next_permutation(hooks.begin(), hooks.end())) break;

        const std::size_t j = dips.size(), h = hooks.size();
        // Optimistic lower bound: every extra hook may cost as little as
        // two segments; the exact count is checked after construction.
        if (h >= 1 && (j > 0 ? 2 * j + 2 : 2) + 2 * (h - 1) - 1 > budget)
            throw InvalidOrder("insertion of " + v + " does not fit the bend budget");

        std::sort(dips.begin(), dips.end(), [&](const Vertex& a, const Vertex& b) {
            return spine_.at(a)->line < spine_.at(b)->line;
        });
        std::set<Vertex> allowed(back.begin(), back.end());

        const coord_t lane_hi = 3 * STRETCH / 4;
        const coord_t lane_lo = STRETCH / 2;
        const coord_t ext_row = STRETCH / 4;

        std::vector<GridPoint> cs;
        coord_t cur_x = 0;
        coord_t cur_y = ext_row;

        if (j > 0) {
            coord_t a = (j % 2 == 1) ? lane_hi : lane_lo;
            coord_t b = (a == lane_hi) ? lane_lo : lane_hi;
            for (std::size_t i = 0; i < j; ++i) {
                coord_t col = spine_.at(dips[i])->line;
                if (i == 0) cs.push_back(GridPoint{col, a});
                cs.push_back(GridPoint{col, b});
                if (i + 1 < j) cs.push_back(GridPoint{spine_.at(dips[i + 1])->line, b});
                std::swap(a, b);
                spine_.at(dips[i])->hi = lane_lo; // keep the part across row 0
            }
            cur_x = spine_.at(dips.back())->line;
            cs.push_back(GridPoint{cur_x, ext_row}); // extend the last dip down
            spine_.at(dips.back())->hi = ext_row;
        }

        std::optional<Interval> vm_spine;
        std::optional<Interval> bridge_arm;
        std::optional<Interval> chain_arm; // exclusive strip gained by a chained hook
        auto note_spine = [&](coord_t col, coord_t y1, coord_t y2) {
            if (!vm_spine && std::min(y1, y2) < 0 && std::max(y1, y2) > 0)
                vm_spine = Interval{col, std::min(y1, y2), std::max(y1, y2)};
        };
        auto note_strip = [&](coord_t row, coord_t x1, coord_t x2) {
            if (x2 < x1) std::swap(x1, x2);
            if (!chain_arm && x2 - x1 >= 1 && h_run_clear(row, x1, x2, {}, {}))
                chain_arm = Interval{row, x1, x2};
        };

        if (hooks.empty()) {
            // every back-neighbor armless: leave through the bottom of the
            // last dipped spine and plant a fresh arm below everything
            coord_t sigma = ws_.fresh_below_all_y();
            coord_t omega = ws_.fresh_right_of_all_x();
            cs.push_back(GridPoint{cur_x, sigma});
            cs.push_back(GridPoint{omega, sigma});
            spine_.erase(dips.back()); // its lower part is consumed
            arm_[v] = ws_.track(0, Interval{sigma, cur_x, omega});
            ws_.paths[v] = cs;
            if (normalize_path(cs).bends() > budget)
                throw InvalidOrder("degeneracy budget exceeded for " + v);
            return;
        }

        // Hook the arms one after another: paired far runs and direct runs
        // when the geometry checks out, the detour through fresh rows
        // otherwise.
        {
            Interval& arm0 = *arm_.at(hooks[0]);
            coord_t rho0 = arm0.lo + 2 * (STRETCH / 3);
            if (h >= 2) {
                // land inside the overlap with the next arm when there is
                // one, so the chained run stays within both displays
                Interval& arm1 = *arm_.at(hooks[1]);
                coord_t ov_hi = std::min(arm0.hi, arm1.hi);
                if (std::max(arm0.lo, arm1.lo) < ov_hi && arm0.line != arm1.line)
                    rho0 = ov_hi - STRETCH / 6;
            }
            if (j == 0 && arm0.line > 0) // free start: make the descent cross row 0
                cur_y = ws_.fresh_below_all_y();
            cs.push_back(GridPoint{rho0, cur_y}); // bridge (or path start, j == 0)
            if (j > 0)
                bridge_arm = Interval{cur_y, std::min(cur_x, rho0), std::max(cur_x, rho0)};
            cs.push_back(GridPoint{rho0, arm0.line});
            note_spine(rho0, arm0.line, cur_y);
        }
        std::size_t i = 0;   // hook being processed
        bool arrived = true; // tip sits at (tip_x, arm_i.line) with adjacency pending
        coord_t tip_x = arm_.at(hooks[0])->lo + 2 * (STRETCH / 3);
        while (i < h) {
            Interval& arm = *arm_.at(hooks[i]);
            if (arrived) {
                bool chained = false;
                if (i + 1 < h) {
                    Interval& arm2 = *arm_.at(hooks[i + 1]);
                    coord_t ov_lo = std::max(arm.lo, arm2.lo);
                    coord_t ov_hi = std::min(arm.hi, arm2.hi);
                    if (arm2.line != arm.line && ov_lo < ov_hi) {
                        // Both displays share an x-range: finish the first
                        // hook inside it and drop straight into the second.
                        // Consuming near the range's right end keeps the
                        // remaining overlap usable for later insertions.
                        coord_t xi = ov_hi - STRETCH / 3;
                        coord_t land = ov_hi - 2 * (STRETCH / 3);
                        if (xi != tip_x && ov_hi - ov_lo > 2 * (STRETCH / 3)) {
                            cs.push_back(GridPoint{xi, arm.line});
                            cs.push_back(GridPoint{xi, arm2.line});
                            cs.push_back(GridPoint{land, arm2.line});
                            note_spine(xi, arm.line, arm2.line);
                            arm.hi = std::min(tip_x, xi);  // keep the left remnant
                            arm2.hi = land;                // keep the left remnant
                            tip_x = land;
                            chained = true;
                        }
                    }
                    if (arm2.line == arm.line) {
                        // both arms on one row: a single run may cover both
                        if (arm2.lo > tip_x) {
                            coord_t land = arm2.lo + 2 * (STRETCH / 3);
                            if (h_run_clear(arm.line, tip_x, land, allowed, cs)) {
                                cs.push_back(GridPoint{land, arm.line});
                                arm.hi = std::min(arm.hi, tip_x);
                                arm2.lo = land;
                                tip_x = land;
                                chained = true;
                            }
                        } else if (arm2.hi < tip_x) {
                            coord_t land = arm2.lo + STRETCH / 3;
                            if (h_run_clear(arm.line, land, tip_x, allowed, cs)) {
                                cs.push_back(GridPoint{land, arm.line});
                                arm.lo = std::max(arm.lo, tip_x);
                                arm2.hi = land;
                                tip_x = land;
                                chained = true;
                            }
                        }
                    }
                    for (int side = 0; side < 2 && !chained && arm2.line != arm.line;
                         ++side) {
                        coord_t far = side == 0 ? ws_.fresh_right_of_all_x()
                                                : ws_.fresh_left_of_all_x();
                        coord_t land = side == 0 ? arm2.lo + 2 * (STRETCH / 3)
                                                 : arm2.lo + STRETCH / 3;
                        if (!h_run_clear(arm.line, tip_x, far, allowed, cs)) continue;
                        if (!h_run_clear(arm2.line, land, far, allowed, cs)) continue;
                        note_strip(arm.line, side == 0 ? arm.hi : far,
                                   side == 0 ? far : arm.lo);
                        cs.push_back(GridPoint{far, arm.line});
                        cs.push_back(GridPoint{far, arm2.line});
                        cs.push_back(GridPoint{land, arm2.line});
                        note_spine(far, arm.line, arm2.line);
                        if (side == 0) { // ran right: keep the arms' left parts
                            arm.hi = tip_x;
                            arm2.hi = land;
                        } else {
                            arm.lo = tip_x;
                            arm2.lo = land;
                        }
                        tip_x = land;
                        chained = true;
                    }
                }
                if (chained) {
                    i += 2;
                } else {
                    // plain finish: short run further into the arm
                    coord_t rho1 = arm.lo + STRETCH / 3;
                    cs.push_back(GridPoint{rho1, arm.line});
                    arm.lo = tip_x; // consumed [rho1, tip_x]; keep the right part
                    tip_x = rho1;
                    ++i;
                }
                arrived = false;
                continue;
            }
            // hooks before i are complete; reach arm i from (tip_x, current row)
            coord_t from_row = cs.back().y;
            coord_t land_r = arm.lo + 2 * (STRETCH / 3);
            coord_t land_l = arm.lo + STRETCH / 3;
            if (from_row == arm.line) { // same row: direct runs could reverse
                coord_t rho0 = arm.lo + 2 * (STRETCH / 3);
                coord_t mu = ws_.fresh_below_all_y();
                cs.push_back(GridPoint{tip_x, mu});
                cs.push_back(GridPoint{rho0, mu});
                cs.push_back(GridPoint{rho0, arm.line});
                note_spine(rho0, mu, arm.line);
                tip_x = rho0;
                arrived = true;
            } else if (arm.lo < tip_x && tip_x < arm.hi) {
                // the vertical drops straight into the arm's live part
                coord_t land = arm.lo + (tip_x - arm.lo) / 2;
                cs.push_back(GridPoint{tip_x, arm.line});
                cs.push_back(GridPoint{land, arm.line});
                note_spine(tip_x, from_row, arm.line);
                arm.hi = land;
                tip_x = land;
                ++i;
            } else if (tip_x > arm.hi && h_run_clear(arm.line, land_r, tip_x, allowed, cs)) {
                cs.push_back(GridPoint{tip_x, arm.line});
                cs.push_back(GridPoint{land_r, arm.line});
                note_spine(tip_x, from_row, arm.line);
                arm.hi = land_r;
                tip_x = land_r;
                ++i;
            } else if (tip_x < arm.lo && h_run_clear(arm.line, tip_x, land_l, allowed, cs)) {
                cs.push_back(GridPoint{tip_x, arm.line});
                cs.push_back(GridPoint{land_l, arm.line});
                note_spine(tip_x, from_row, arm.line);
                arm.lo = land_l;
                tip_x = land_l;
                ++i;
            } else { // detour through a fresh row below everything
                coord_t rho0 = arm.lo + 2 * (STRETCH / 3);
                coord_t mu = ws_.fresh_below_all_y();
                cs.push_back(GridPoint{tip_x, mu});
                cs.push_back(GridPoint{rho0, mu});
                cs.push_back(GridPoint{rho0, arm.line});
                note_spine(rho0, mu, arm.line);
                tip_x = rho0;
                arrived = true;
            }
        }
        const coord_t final_row = cs.back().y;

        std::size_t used_segments = normalize_path(cs).segments().size();
        if (used_segments + 2 - 1 <= budget) { // tail: fresh arm below everything
            coord_t sigma = ws_.fresh_below_all_y();
            coord_t omega = ws_.fresh_right_of_all_x();
            cs.push_back(GridPoint{tip_x, sigma});
            cs.push_back(GridPoint{omega, sigma});
            arm_[v] = ws_.track(0, Interval{sigma, tip_x, omega});
            note_spine(tip_x, sigma, final_row);
        } else if (chain_arm) {
            arm_[v] = ws_.track(0, *chain_arm);
        } else if (bridge_arm) {
            arm_[v] = ws_.track(0, *bridge_arm);
        }
        if (vm_spine) spine_[v] = ws_.track(1, *vm_spine);
        if (!arm_.count(v) && !vm_spine)
            throw InvalidOrder("insertion of " + v + " leaves it unreachable");

        ws_.paths[v] = cs;
        if (normalize_path(cs).bends() > budget)
            throw InvalidOrder("degeneracy budget exceeded for " + v);
    }
};

} // namespace

Representation construct_degeneracy(const Graph& g, const DegeneracyOrder& order) {
    return DegeneracyBuilder(g, order).run();
}

// ----------------------------------------------------------------------
// Treewidth insertion along a k-tree build sequence, following the
// invariant-A/B case analysis with a coordinate cross at the origin.
// Orientation "swapped" exchanges the roles of the two axes.
// ----------------------------------------------------------------------

namespace {

struct CliqueState {
    enum Kind { A, B } kind = A;
    bool swapped = false;
    Vertex w1, w2;           // A: possibly cross-undisplayed member; B: the pair
    Interval* edge_display = nullptr; // B only
};

class TreewidthBuilder {
public:
    TreewidthBuilder(const Graph& g, const BuildSequence& seq) : g_(g), seq_(seq) {}

    Representation run() {
        const std::size_t k = seq_.k;
        if (seq_.base.size() != k + 1) throw InvalidSequence("base must have k+1 vertices");
        place_base();
        std::set<Vertex> placed = seq_.base;
        for (const auto& [v, clique] : seq_.steps) {
            insert(v, clique, placed);
            placed.insert(v);
            if (k >= 3) assert_invariants(placed);
        }
        std::set<Vertex> keep;
        for (const auto& v : g_.vertices()) keep.insert(v);
        return ws_.finish(keep);
    }

    // The base is a clique of the k-tree, not of g: its members are placed
    // one by one with the ordinary insertion geometry, realizing exactly
    // the g-edges among them.
    void place_base() {
        CliqueState dummy;
        std::set<Vertex> placed;
        for (const auto& w : seq_.base) {
            if (placed.size() == seq_.k) { // last base vertex may snake fully
                CliqueState st;
                st.kind = CliqueState::A;
                st.swapped = false;
                st.w1 = *placed.begin();
                states_[placed] = st;
            }
            std::set<Vertex> N;
            for (const auto& u : g_.has_vertex(w) ? g_.neighbors(w) : std::set<Vertex>{})
                if (placed.count(u)) N.insert(u);
            insert_snake(w, placed, false, N, false, dummy);
            placed.insert(w);
        }
        for (const auto& u : seq_.base) {
            std::set<Vertex> W = seq_.base;
            W.erase(u);
            if (states_.count(W)) continue;
            CliqueState st;
            st.kind = CliqueState::A;
            st.swapped = false;
            st.w1 = *W.begin();
            states_[W] = st;
        }
    }

private:
    const Graph& g_;
    const BuildSequence& seq_;
    Workspace ws_;
    // displays crossing row 0 (vertical) and column 0 (horizontal); the
    // secondary slot holds the extra display of a four-segment extension
    std::map<Vertex, Interval*> vdisp_, hdisp_, vdisp2_, hdisp2_;
    std::map<std::set<Vertex>, CliqueState> states_;

    Interval* main_of(const Vertex& v, bool swapped) {
        auto& m = swapped ? hdisp_ : vdisp_;
        auto it = m.find(v);
        return it == m.end() ? nullptr : it->second;
    }
    Interval* main2_of(const Vertex& v, bool swapped) {
        auto& m = swapped ? hdisp2_ : vdisp2_;
        auto it = m.find(v);
        return it == m.end() ? nullptr : it->second;
    }
    Interval* cross_of(const Vertex& v, bool swapped) { return main_of(v, !swapped); }
    void set_main(const Vertex& v, bool swapped, Interval* iv) {
        (swapped ? hdisp_ : vdisp_)[v] = iv;
    }

    // In local coordinates `main` is the axis crossed by main displays
    // (y when not swapped). mk(cross_coord, main_coord).
    static GridPoint mk(bool swapped, coord_t cross, coord_t main) {
        return swapped ? GridPoint{main, cross} : GridPoint{cross, main};
    }

    void insert(const Vertex& v, const std::set<Vertex>& W, const std::set<Vertex>& placed) {
        auto stit = states_.find(W);
        if (stit == states_.end()) throw InvalidSequence("attachment clique is not tracked");
        CliqueState st = stit->second;

        std::set<Vertex> N;
        for (const auto& w : g_.neighbors(v))
            if (placed.count(w)) {
                if (!W.count(w))
                    throw InvalidSequence("neighbor " + w + " of " + v +
                                          " outside the attachment clique");
                N.insert(w);
            }

        if (st.kind == CliqueState::B && N.count(st.w1) && N.count(st.w2))
            insert_hook(v, W, st, N);
        else if (st.kind == CliqueState::B) {
            // Missing one of the pair: fall back to the A-style insertion in
            // the orientation where every neighbor is displayed.
            bool swapped = st.swapped;
            if (!N.count(st.w2)) {
                // all of W minus w2 are main-displayed; N avoids w2
            } else {
                swapped = !swapped; // N avoids w1; cross displays carry W minus w1
            }
            insert_snake(v, W, swapped, N, /*from_B=*/true, st);
        } else {
            insert_snake(v, W, st.swapped, N, /*from_B=*/false, st);
        }
    }

    // Invariant-A style insertion (also used for the B fallback cases).
    void insert_snake(const Vertex& v, const std::set<Vertex>& W, bool swapped,
                      const std::set<Vertex>& N, bool from_B, const CliqueState& st) {
        const std::size_t k = seq_.k;
        const std::size_t budget = std::max<std::size_t>(2 * k - 2, 1);
        ws_.stretch();

        std::vector<Vertex> S(N.begin(), N.end());
        for (const auto& w : S)
            if (!main_of(w, swapped))
                throw std::logic_error("neighbor " + w + " lacks the required display");
        std::sort(S.begin(), S.end(), [&](const Vertex& a, const Vertex& b) {
            return main_of(a, swapped)->line < main_of(b, swapped)->line;
        });

        std::vector<GridPoint> cs;
        if (S.size() == seq_.k) {
            // Full snake below the axis; the new clique states become B with
            // the dips as edge displays. Per member we may dip either its
            // primary or its secondary display; the chosen columns must
            // straddle the axis so one connector displays v across it.
            std::map<Vertex, Interval*> use;
            bool left = false, right = false;
            for (const auto& w : S) {
                Interval* d = main_of(w, swapped);
                use[w] = d;
                (d->line > 0 ? right : left) = true;
            }
            if (!left || !right)
                for (const auto& w : S) {
                    Interval* d2 = main2_of(w, swapped);
                    if (d2 && (d2->line > 0) != (use[w]->line > 0)) {
                        use[w] = d2;
                        break;
                    }
                }
            std::sort(S.begin(), S.end(), [&](const Vertex& a, const Vertex& b) {
                return use[a]->line < use[b]->line;
            });

            const coord_t lane_hi = -STRETCH / 4;
            const coord_t lane_lo = -STRETCH / 2;
            coord_t a = (S.size() % 2 == 1) ? lane_lo : lane_hi;
            coord_t b = (a == lane_lo) ? lane_hi : lane_lo;
            std::map<Vertex, Interval*> dip_of;
            std::optional<Interval> conn; // connector spanning column 0
            for (std::size_t i = 0; i < S.size(); ++i) {
                Interval* disp = use[S[i]];
                coord_t col = disp->line;
                if (i == 0) cs.push_back(mk(swapped, col, a));
                cs.push_back(mk(swapped, col, b));
                if (i + 1 < S.size()) {
                    coord_t next_col = use[S[i + 1]]->line;
                    cs.push_back(mk(swapped, next_col, b));
                    if (col < 0 && next_col > 0) conn = Interval{b, col, next_col};
                }
                std::swap(a, b);
                dip_of[S[i]] = ws_.track(swapped ? 0 : 1, Interval{col, lane_lo, lane_hi});
                disp->lo = lane_hi; // keep the part across the axis
            }
            if (!conn)
                throw std::logic_error("snake over " + v +
                                       " found no axis-straddling connector");
            set_main(v, !swapped, ws_.track(swapped ? 1 : 0, *conn));
            ws_.paths[v] = cs;
            if (normalize_path(cs).bends() > budget)
                throw std::logic_error("treewidth budget exceeded for " + v);

            for (const auto& u : W) {
                std::set<Vertex> W2 = W;
                W2.erase(u);
                W2.insert(v);
                CliqueState ns;
                ns.kind = CliqueState::B;
                ns.swapped = swapped;
                ns.w2 = v;
                if (st.kind == CliqueState::A && W2.count(st.w1) && st.w1 != v)
                    ns.w1 = st.w1;
                else
                    for (const auto& w : W2)
                        if (w != v) {
                            ns.w1 = w;
                            break;
                        }
                ns.edge_display = dip_of.at(ns.w1);
                states_[W2] = ns;
            }
            return;
        }

        // |S| <= k-1: snake above the axis plus an axis-crossing elbow.
        //
        // The elbow's vertical lands on the side opposite the last snake
        // column, so the snake direction is chosen to put v's display where
        // every successor clique keeps displays on both sides of the
        // origin; when no single side works, a four-segment extension
        // displays v on both.
        std::set<int> required; // sides v must cover: -1 left, +1 right
        bool need_double = false;
        if (W.size() == seq_.k) {
            for (const auto& u : W) {
                // side constraints only bind for successors that become
                // A-states; surviving B-states have no both-sides clause
                if (from_B && u != st.w1 && u != st.w2) continue;
                bool orient = swapped;
                if (from_B) orient = u == st.w1 ? !st.swapped : st.swapped;
                bool left = false, right = false;
                for (const auto& w : W) {
                    if (w == u) continue;
                    if (Interval* m = main_of(w, orient)) (m->line > 0 ? right : left) = true;
                    if (Interval* m = main2_of(w, orient)) (m->line > 0 ? right : left) = true;
                }
                if (left && right) continue;
                if (orient != swapped) {
                    // v's display there is the elbow row, always positive;
                    // the doubled extension adds one on the negative side
                    if (!left) need_double = true;
                } else {
                    if (!left) required.insert(-1);
                    if (!right) required.insert(1);
                }
            }
        }
        int forced = required.size() == 1 ? *required.begin() : 0;
        int want = forced;
        if (want == 0) { // keep the global stock of displays balanced
            int left = 0, right = 0;
            for (const auto& [w, iv] : swapped ? hdisp_ : vdisp_)
                (iv->line > 0 ? right : left)++;
            want = left <= right ? -1 : 1;
        }

        bool have_wanted_end = false;
        for (const auto& w : S) {
            coord_t col = main_of(w, swapped)->line;
            if (want < 0 ? col > 0 : col < 0) have_wanted_end = true;
        }
        need_double |= required.size() >= 2 || (forced != 0 && !S.empty() && !have_wanted_end);
        // The doubled extension is dropped when it cannot fit: a one-sided
        // successor clique is tolerated and only matters if it is later hit
        // by a full snake, which re-checks the straddle it needs.
        if (have_wanted_end) {
            // end the snake on a column opposite the wanted side
            std::sort(S.begin(), S.end(), [&](const Vertex& a, const Vertex& b) {
                coord_t ca = main_of(a, swapped)->line, cb = main_of(b, swapped)->line;
                return want < 0 ? ca < cb : ca > cb;
            });
        }

        const coord_t lane_hi = 3 * STRETCH / 4;
        const coord_t lane_lo = STRETCH / 2;
        const coord_t ext = STRETCH / 4;
        coord_t cur_cross;
        if (!S.empty()) {
            coord_t a = (S.size() % 2 == 1) ? lane_hi : lane_lo;
            coord_t b = (a == lane_hi) ? lane_lo : lane_hi;
            for (std::size_t i = 0; i < S.size(); ++i) {
                Interval* disp = main_of(S[i], swapped);
                coord_t col = disp->line;
                if (i == 0) cs.push_back(mk(swapped, col, a));
                cs.push_back(mk(swapped, col, b));
                if (i + 1 < S.size())
                    cs.push_back(mk(swapped, main_of(S[i + 1], swapped)->line, b));
                std::swap(a, b);
                disp->hi = lane_lo;
            }
            cur_cross = main_of(S.back(), swapped)->line;
            cs.push_back(mk(swapped, cur_cross, ext));
            main_of(S.back(), swapped)->hi = ext;
        } else {
            cur_cross = (want <= 0) ? STRETCH / 3 : -STRETCH / 3;
            cs.push_back(mk(swapped, cur_cross, ext));
        }

        coord_t xi = cur_cross > 0 ? -STRETCH / 3 : STRETCH / 3;
        coord_t rho = -STRETCH / 4;
        cs.push_back(mk(swapped, xi, ext)); // crosses column 0
        cs.push_back(mk(swapped, xi, rho)); // crosses row 0
        set_main(v, !swapped, ws_.track(swapped ? 1 : 0,
                                        Interval{ext, std::min(cur_cross, xi),
                                                 std::max(cur_cross, xi)}));
        set_main(v, swapped, ws_.track(swapped ? 0 : 1, Interval{xi, rho, ext}));

        const std::size_t doubled_bends = S.empty() ? 3 : 2 * S.size() + 2;
        (void)need_double;
        if (doubled_bends <= budget) {
            // Affordable for every |S| <= k-2; displays v on both sides and
            // plants a cross display on the other side of the main axis.
            coord_t xi2 = xi > 0 ? -STRETCH / 6 : STRETCH / 6;
            coord_t rho2 = STRETCH / 6;
            cs.push_back(mk(swapped, xi2, rho));  // crosses column 0 again
            cs.push_back(mk(swapped, xi2, rho2)); // crosses row 0 again
            (swapped ? hdisp2_ : vdisp2_)[v] =
                ws_.track(swapped ? 0 : 1, Interval{xi2, rho, rho2});
            (swapped ? vdisp2_ : hdisp2_)[v] =
                ws_.track(swapped ? 1 : 0,
                          Interval{rho, std::min(xi, xi2), std::max(xi, xi2)});
        }

        ws_.paths[v] = cs;
        if (normalize_path(cs).bends() > budget)
            throw std::logic_error("treewidth budget exceeded for " + v);

        for (const auto& u : W) {
            std::set<Vertex> W2 = W;
            W2.erase(u);
            W2.insert(v);
            CliqueState ns;
            if (from_B && W2.count(st.w1) && W2.count(st.w2)) {
                ns = st; // the edge display still serves this clique
            } else if (from_B && u == st.w2) {
                ns.kind = CliqueState::A;
                ns.swapped = st.swapped;
                ns.w1 = st.w1;
            } else if (from_B && u == st.w1) {
                ns.kind = CliqueState::A;
                ns.swapped = !st.swapped;
                ns.w1 = st.w2;
            } else {
                ns.kind = CliqueState::A;
                ns.swapped = swapped;
                ns.w1 = v; // all members of W2 except possibly old w1 are displayed
                if (st.kind == CliqueState::A && W2.count(st.w1) && st.swapped == swapped)
                    ns.w1 = st.w1;
            }
            states_[W2] = ns;
        }
    }

    // Invariant-B insertion when v is adjacent to both w1 and w2: snake
    // over the other neighbors, then three connecting segments into a short
    // piece of the stored edge display.
    void insert_hook(const Vertex& v, const std::set<Vertex>& W, const CliqueState& st,
                     const std::set<Vertex>& N) {
        const std::size_t k = seq_.k;
        const std::size_t budget = std::max<std::size_t>(2 * k - 2, 1);
        const bool swapped = st.swapped;
        ws_.stretch();

        std::vector<Vertex> S;
        for (const auto& w : N)
            if (w != st.w1 && w != st.w2) S.push_back(w);
        std::sort(S.begin(), S.end(), [&](const Vertex& a, const Vertex& b) {
            return main_of(a, swapped)->line < main_of(b, swapped)->line;
        });

        const coord_t lane_hi = 3 * STRETCH / 4;
        const coord_t lane_lo = STRETCH / 2;
        const coord_t ext = STRETCH / 4;
        Interval* Z = st.edge_display; // below the axis, on w1's display line

        // Ending the snake on the same side as Z lets the approach run
        // across the axis, planting a cross display below it.
        bool want_right = Z->line > 0;
        std::sort(S.begin(), S.end(), [&](const Vertex& a, const Vertex& b) {
            coord_t ca = main_of(a, swapped)->line, cb = main_of(b, swapped)->line;
            return want_right ? ca < cb : ca > cb;
        });

        std::vector<GridPoint> cs;
        coord_t cur_cross;
        if (!S.empty()) {
            coord_t a = (S.size() % 2 == 1) ? lane_hi : lane_lo;
            coord_t b = (a == lane_hi) ? lane_lo : lane_hi;
            for (std::size_t i = 0; i < S.size(); ++i) {
                Interval* disp = main_of(S[i], swapped);
                coord_t col = disp->line;
                if (i == 0) cs.push_back(mk(swapped, col, a));
                cs.push_back(mk(swapped, col, b));
                if (i + 1 < S.size())
                    cs.push_back(mk(swapped, main_of(S[i + 1], swapped)->line, b));
                std::swap(a, b);
                disp->hi = lane_lo;
            }
            cur_cross = main_of(S.back(), swapped)->line;
            cs.push_back(mk(swapped, cur_cross, ext));
            main_of(S.back(), swapped)->hi = ext;
        } else {
            cur_cross = want_right ? STRETCH / 3 : -STRETCH / 3;
            cs.push_back(mk(swapped, cur_cross, ext));
        }

        coord_t mid = Z->lo + 2 * (STRETCH / 3);
        coord_t low = Z->lo + STRETCH / 3;
        coord_t xi = cur_cross > 0 ? -STRETCH / 3 : STRETCH / 3; // crosses column 0

        cs.push_back(mk(swapped, xi, ext));      // horizontal across the axis
        cs.push_back(mk(swapped, xi, mid));      // vertical across row 0 into Z's band
        cs.push_back(mk(swapped, Z->line, mid)); // approach along a fresh band row
        cs.push_back(mk(swapped, Z->line, low)); // the short piece inside Z

        set_main(v, !swapped,
                 ws_.track(swapped ? 1 : 0,
                           Interval{ext, std::min(cur_cross, xi), std::max(cur_cross, xi)}));
        set_main(v, swapped, ws_.track(swapped ? 0 : 1, Interval{xi, mid, ext}));
        if ((xi > 0) != (Z->line > 0)) // approach crosses the axis at a low row
            (swapped ? vdisp2_ : hdisp2_)[v] =
                ws_.track(swapped ? 1 : 0,
                          Interval{mid, std::min(xi, Z->line), std::max(xi, Z->line)});
        Z->lo = mid; // keep the far part of the edge display

        ws_.paths[v] = cs;
        if (normalize_path(cs).bends() > budget)
            throw std::logic_error("treewidth budget exceeded for " + v);

        for (const auto& u : W) {
            std::set<Vertex> W2 = W;
            W2.erase(u);
            W2.insert(v);
            CliqueState ns;
            if (u == st.w2) {
                ns.kind = CliqueState::A;
                ns.swapped = swapped;
                ns.w1 = st.w1;
            } else if (u == st.w1) {
                ns.kind = CliqueState::A;
                ns.swapped = !swapped;
                ns.w1 = st.w2;
            } else {
                ns = st;
                ns.kind = CliqueState::B;
            }
            states_[W2] = ns;
        }
    }

    static bool crossing(const Interval* iv) { return iv && iv->lo < 0 && iv->hi > 0; }

    void assert_invariants(const std::set<Vertex>& placed) {
        for (const auto& [W, st] : states_) {
            bool all_placed = true;
            for (const auto& w : W)
                if (!placed.count(w)) all_placed = false;
            if (!all_placed) continue;
            for (const auto& w : W) {
                if (st.kind == CliqueState::B && w == st.w2) continue;
                if (!crossing(main_of(w, st.swapped)) && !crossing(main2_of(w, st.swapped)))
                    throw std::logic_error("invariant: member " + w +
                                           " lost its axis-crossing display");
            }
            for (const auto& w : W) {
                if (w == st.w1) continue;
                if (!crossing(cross_of(w, st.swapped)) &&
                    !crossing(main2_of(w, !st.swapped)))
                    throw std::logic_error("invariant: member " + w +
                                           " lost its cross display");
            }
            if (st.kind == CliqueState::B &&
                (!st.edge_display || st.edge_display->hi - st.edge_display->lo < 1))
                throw std::logic_error("invariant B: edge display exhausted");
        }
    }
};

} // namespace

Representation construct_treewidth(const Graph& g, const BuildSequence& seq) {
    if (seq.k < 1) throw InvalidSequence("width must be at least 1");
    if (seq.k <= 1) return construct_degeneracy(g, degeneracy_order(g));
    return TreewidthBuilder(g, seq).run();
}

IntervalRepresentation to_interval_representation(const Representation& rep) {
    // deterministic window per used grid-line: horizontal lines first
    std::map<std::pair<int, coord_t>, std::pair<coord_t, coord_t>> extent;
    for (const auto& [v, p] : rep.paths)
        for (const auto& s : p.segments()) {
            int o = s.orientation == Orientation::Horizontal ? 0 : 1;
            auto [it, fresh] = extent.try_emplace(std::pair{o, s.line}, std::pair{s.lo, s.hi});
            if (!fresh) {
                it->second.first = std::min(it->second.first, s.lo);
                it->second.second = std::max(it->second.second, s.hi);
            }
        }
    std::map<std::pair<int, coord_t>, coord_t> offset;
    coord_t at = 0;
    for (const auto& [key, ext] : extent) {
        offset[key] = at - ext.first;
        at += ext.second - ext.first + 2;
    }
    IntervalRepresentation ir;
    for (const auto& [v, p] : rep.paths) {
        auto& out = ir.intervals[v];
        for (const auto& s : p.segments()) {
            int o = s.orientation == Orientation::Horizontal ? 0 : 1;
            coord_t base = offset.at({o, s.line});
            out.emplace_back(base + s.lo, base + s.hi);
        }
        if (out.empty() && !p.corners().empty()) out.emplace_back(0, 0);
    }
    return ir;
}

Graph interval_overlap_graph(const IntervalRepresentation& ir) {
    Graph g;
    for (const auto& [v, iv] : ir.intervals) g.add_vertex(v);
    for (auto it = ir.intervals.begin(); it != ir.intervals.end(); ++it)
        for (auto jt = std::next(it); jt != ir.intervals.end(); ++jt) {
            bool hit = false;
            for (const auto& a : it->second) {
                for (const auto& b : jt->second)
                    if (std::max(a.first, b.first) < std::min(a.second, b.second)) {
                        hit = true;
                        break;
                    }
                if (hit) break;
            }
            if (hit) g.add_edge(it->first, jt->first);
        }
    return g;
}

} // namespace epg
