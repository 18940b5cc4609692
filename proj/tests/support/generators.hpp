/**
 * Hand-rolled generators for property tests: primitive triangulations of
 * dilated simplices, random edge flips, random signs and compactifications.
 */

#ifndef PATCHWORK_TEST_GENERATORS_HPP
#define PATCHWORK_TEST_GENERATORS_HPP

#include "patchwork/lattice.hpp"
#include "patchwork/real_phase.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <random>
#include <set>
#include <string>

namespace patchwork::testing {

using Rng = std::mt19937_64;
using lattice::Fan;
using lattice::IndexSet;
using lattice::Point;
using lattice::Triangulation;

/** Triangulation of dΔ2 by the lines x = c, y = c and x + y = c. */
inline Triangulation honeycomb(std::int64_t d)
{
    Triangulation t;
    std::map<Point, std::size_t> index;
    for (std::int64_t j = 0; j <= d; ++j) {
        for (std::int64_t i = 0; i + j <= d; ++i) {
            index[{i, j}] = t.points.size();
            t.points.push_back({i, j});
        }
    }
    auto tri = [&](Point a, Point b, Point c) {
        IndexSet s{index.at(a), index.at(b), index.at(c)};
        std::sort(s.begin(), s.end());
        t.simplices.push_back(s);
    };
    for (std::int64_t i = 0; i < d; ++i) {
        for (std::int64_t j = 0; i + j < d; ++j) {
            tri({i, j}, {i + 1, j}, {i, j + 1});
            if (i + j <= d - 2) {
                tri({i + 1, j}, {i, j + 1}, {i + 1, j + 1});
            }
        }
    }
    return t;
}

/** The unimodular simplex Δ_dim. */
inline Triangulation standard_simplex(std::size_t dim)
{
    Triangulation t;
    t.points.push_back(Point(dim, 0));
    for (std::size_t i = 0; i < dim; ++i) {
        Point p(dim, 0);
        p[i] = 1;
        t.points.push_back(p);
    }
    IndexSet all;
    for (std::size_t i = 0; i <= dim; ++i) {
        all.push_back(i);
    }
    t.simplices.push_back(all);
    return t;
}

/**
 * Triangulation of 2Δ3: four corner simplices and the central octahedron
 * split along one of its three diagonals.
 */
inline Triangulation double_simplex3(int diagonal)
{
    Triangulation t;
    std::map<Point, std::size_t> index;
    for (std::int64_t c = 0; c <= 2; ++c) {
        for (std::int64_t b = 0; b + c <= 2; ++b) {
            for (std::int64_t a = 0; a + b + c <= 2; ++a) {
                index[{a, b, c}] = t.points.size();
                t.points.push_back({a, b, c});
            }
        }
    }
    const std::vector<Point> v{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    auto add = [](const Point& a, const Point& b) { return Point{a[0] + b[0], a[1] + b[1], a[2] + b[2]}; };
    auto mid = [&](int i, int j) { return index.at(add(v[i], v[j])); };
    auto push = [&](IndexSet s) {
        std::sort(s.begin(), s.end());
        t.simplices.push_back(s);
    };
    for (int i = 0; i < 4; ++i) {
        IndexSet s{mid(i, i)};
        for (int j = 0; j < 4; ++j) {
            if (j != i) {
                s.push_back(mid(i, j));
            }
        }
        push(s);
    }
    // diagonal k joins mid(0, k) and the midpoint of the complementary pair
    const int k = 1 + diagonal % 3;
    std::vector<int> rest;
    for (int i = 1; i < 4; ++i) {
        if (i != k) {
            rest.push_back(i);
        }
    }
    const std::size_t a = mid(0, k);
    const std::size_t b = mid(rest[0], rest[1]);
    const std::vector<std::size_t> cycle{mid(0, rest[0]), mid(k, rest[0]), mid(k, rest[1]), mid(0, rest[1])};
    for (std::size_t i = 0; i < 4; ++i) {
        push({a, b, cycle[i], cycle[(i + 1) % 4]});
    }
    return t;
}

inline std::int64_t cross(const Point& o, const Point& a, const Point& b)
{
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

/**
 * Applies random flips to a plane triangulation. An interior edge is flipped
 * when its two triangles form a strictly convex quadrilateral; the new
 * triangles are then unimodular as well.
 */
inline Triangulation random_flips(Triangulation t, Rng& rng, std::size_t flips)
{
    for (std::size_t step = 0; step < flips; ++step) {
        std::map<IndexSet, std::vector<std::size_t>> edge_to_tri;
        for (std::size_t i = 0; i < t.simplices.size(); ++i) {
            const auto& s = t.simplices[i];
            for (std::size_t a = 0; a < 3; ++a) {
                for (std::size_t b = a + 1; b < 3; ++b) {
                    edge_to_tri[{s[a], s[b]}].push_back(i);
                }
            }
        }
        std::vector<std::pair<IndexSet, std::array<std::size_t, 4>>> flippable;
        for (const auto& [e, tris] : edge_to_tri) {
            if (tris.size() != 2) {
                continue;
            }
            auto apex = [&](std::size_t ti) {
                for (std::size_t v : t.simplices[ti]) {
                    if (v != e[0] && v != e[1]) {
                        return v;
                    }
                }
                return std::size_t{0};
            };
            const std::size_t c = apex(tris[0]);
            const std::size_t d = apex(tris[1]);
            const auto& P = t.points;
            const bool convex = cross(P[c], P[d], P[e[0]]) * cross(P[c], P[d], P[e[1]]) < 0 &&
                                cross(P[e[0]], P[e[1]], P[c]) * cross(P[e[0]], P[e[1]], P[d]) < 0;
            if (convex) {
                flippable.push_back({e, {tris[0], tris[1], c, d}});
            }
        }
        if (flippable.empty()) {
            break;
        }
        const auto& [e, data] = flippable[rng() % flippable.size()];
        IndexSet t1{e[0], data[2], data[3]};
        IndexSet t2{e[1], data[2], data[3]};
        std::sort(t1.begin(), t1.end());
        std::sort(t2.begin(), t2.end());
        t.simplices[data[0]] = t1;
        t.simplices[data[1]] = t2;
    }
    std::sort(t.simplices.begin(), t.simplices.end());
    return t;
}

inline real::SignDistribution random_signs(std::size_t count, Rng& rng)
{
    real::SignDistribution s;
    for (std::size_t i = 0; i < count; ++i) {
        s.push_back((rng() & 1U) ? 1 : -1);
    }
    return s;
}

/** Newton fan, torus fan, or the subfan generated by a random set of rays. */
inline Fan random_fan(const Triangulation& t, Rng& rng, std::string& kind)
{
    const auto full = lattice::dual_fan(lattice::Polytope::hull(t.points));
    const auto roll = rng() % 4;
    if (roll <= 1) {
        kind = "newton";
        return full;
    }
    if (roll == 2) {
        kind = "torus";
        return lattice::torus_fan(t.dim());
    }
    std::vector<std::vector<Point>> cones;
    for (const auto& r : full.rays) {
        if (rng() & 1U) {
            cones.push_back({r});
        }
    }
    kind = "partial";
    return lattice::subfan(full, cones);
}

struct Case
{
    std::string label;
    Triangulation triangulation;
    Fan fan;
    real::SignDistribution signs;
};

/** Random cases over dΔ2 (d ≤ 4, with flips) and dΔ3 (d ≤ 2). */
inline std::vector<Case> property_cases(Rng& rng, std::size_t count, bool compact_only = false)
{
    std::vector<Case> out;
    for (std::size_t i = 0; i < count; ++i) {
        Case c;
        const auto family = rng() % 6;
        if (family < 4) {
            const std::int64_t d = 1 + static_cast<std::int64_t>(rng() % 4);
            c.triangulation = random_flips(honeycomb(d), rng, rng() % 12);
            c.label = std::to_string(d) + "Δ2";
        } else if (family == 4) {
            c.triangulation = standard_simplex(3);
            c.label = "Δ3";
        } else {
            const int diag = static_cast<int>(rng() % 3);
            c.triangulation = double_simplex3(diag);
            c.label = "2Δ3/diag" + std::to_string(diag);
        }
        std::string kind = "newton";
        c.fan = compact_only ? lattice::dual_fan(lattice::Polytope::hull(c.triangulation.points))
                             : random_fan(c.triangulation, rng, kind);
        c.signs = random_signs(c.triangulation.points.size(), rng);
        std::string s;
        for (int v : c.signs) {
            s += v > 0 ? '+' : '-';
        }
        c.label += " " + kind + " " + s;
        out.push_back(std::move(c));
    }
    return out;
}

}   // namespace patchwork::testing

#endif
