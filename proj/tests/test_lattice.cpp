#include "catch_amalgamated.hpp"

#include "generators.hpp"

#include "patchwork/lattice.hpp"

using namespace patchwork::lattice;
using patchwork::testing::Rng;

namespace {

/** Cofactor expansion along the first row. */
Integer cofactor_det(const IntMatrix& m)
{
    const std::size_t n = m.size();
    if (n == 0) {
        return 1;
    }
    if (n == 1) {
        return m[0][0];
    }
    Integer total = 0;
    for (std::size_t c = 0; c < n; ++c) {
        IntMatrix minor;
        for (std::size_t r = 1; r < n; ++r) {
            IntVector row;
            for (std::size_t k = 0; k < n; ++k) {
                if (k != c) {
                    row.push_back(m[r][k]);
                }
            }
            minor.push_back(row);
        }
        const Integer term = m[0][c] * cofactor_det(minor);
        total += (c % 2 == 0) ? term : Integer(-term);
    }
    return total;
}

std::set<std::string> kinds(const std::vector<Violation>& v)
{
    std::set<std::string> out;
    for (const auto& x : v) {
        out.insert(x.kind);
    }
    return out;
}

Integer dot(const Point& a, const Point& b)
{
    Integer s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        s += Integer(a[i]) * b[i];
    }
    return s;
}

}   // namespace

TEST_CASE("determinant agrees with cofactor expansion")
{
    Rng rng(21);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 1 + rng() % 5;
        IntMatrix m(n, IntVector(n));
        for (auto& row : m) {
            for (auto& v : row) {
                v = static_cast<long long>(rng() % 21) - 10;
            }
        }
        CHECK(determinant(m) == cofactor_det(m));
    }
    CHECK(determinant({{Integer("1000000000000"), 1}, {1, Integer("1000000000000")}}) ==
          Integer("999999999999999999999999"));
}

TEST_CASE("normalized volumes")
{
    CHECK(normalized_volume({{0, 0}, {1, 0}, {0, 1}}) == 1);
    CHECK(normalized_volume({{0, 0}, {2, 0}, {0, 1}}) == 2);
    CHECK(normalized_volume({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}}) == 1);
    CHECK(normalized_volume({{0, 0}, {1, 1}, {2, 2}}) == 0);
    CHECK(Polytope::hull(patchwork::testing::honeycomb(3).points).normalized_volume() == 9);
    CHECK(Polytope::hull(patchwork::testing::double_simplex3(0).points).normalized_volume() == 8);
}

TEST_CASE("Hermite normal form generates the same lattice")
{
    Rng rng(22);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t m = 1 + rng() % 4;
        const std::size_t k = 1 + rng() % 4;
        IntMatrix rows(k, IntVector(m));
        for (auto& row : rows) {
            for (auto& v : row) {
                v = static_cast<long long>(rng() % 13) - 6;
            }
        }
        const auto h = hermite_normal_form(rows, m);
        CHECK(h.size() == rational_rank(rows));
        std::vector<Point> basis;
        for (const auto& r : h) {
            basis.push_back(demote(r));
        }
        std::size_t last_pivot = 0;
        for (std::size_t i = 0; i < h.size(); ++i) {
            std::size_t pivot = 0;
            while (h[i][pivot] == 0) {
                ++pivot;
            }
            CHECK(h[i][pivot] > 0);
            if (i > 0) {
                CHECK(pivot > last_pivot);
            }
            for (std::size_t j = 0; j < i; ++j) {
                CHECK(h[j][pivot] >= 0);
                CHECK(h[j][pivot] < h[i][pivot]);
            }
            last_pivot = pivot;
        }
        for (const auto& r : rows) {
            const auto c = coordinates_in_basis(basis, r);
            IntVector back(m, 0);
            for (std::size_t i = 0; i < basis.size(); ++i) {
                for (std::size_t j = 0; j < m; ++j) {
                    back[j] += c[i] * basis[i][j];
                }
            }
            CHECK(back == r);
        }
    }
}

TEST_CASE("integral annihilator is saturated")
{
    const auto a = integral_annihilator_basis({{2, 0}}, 2);
    REQUIRE(a.size() == 1);
    CHECK(a[0] == Point{0, 1});
    const auto b = integral_annihilator_basis({{1, 1, 1}}, 3);
    CHECK(b.size() == 2);
    CHECK_THROWS(coordinates_in_basis({{2, 0}}, IntVector{1, 0}));

    Rng rng(23);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t m = 2 + rng() % 3;
        std::vector<Point> dirs(1 + rng() % (m - 1), Point(m));
        for (auto& d : dirs) {
            for (auto& v : d) {
                v = static_cast<std::int64_t>(rng() % 7) - 3;
            }
        }
        const auto ann = integral_annihilator_basis(dirs, m);
        std::vector<IntVector> promoted;
        for (const auto& d : dirs) {
            promoted.push_back(promote(d));
        }
        CHECK(ann.size() == m - rational_rank(promoted));
        for (const auto& v : ann) {
            for (const auto& d : dirs) {
                CHECK(dot(v, d) == 0);
            }
        }
        // every small annihilating vector is an integral combination
        for (int probe = 0; probe < 40; ++probe) {
            Point v(m);
            for (auto& x : v) {
                x = static_cast<std::int64_t>(rng() % 5) - 2;
            }
            const bool annihilates = std::all_of(dirs.begin(), dirs.end(), [&](const Point& d) { return dot(v, d) == 0; });
            if (annihilates) {
                CHECK_NOTHROW(coordinates_in_basis(ann, promote(v)));
            }
        }
    }
}

TEST_CASE("hull of 2Δ2")
{
    const auto p = Polytope::hull(patchwork::testing::honeycomb(2).points);
    CHECK(p.dim() == 2);
    REQUIRE(p.facets().size() == 3);
    CHECK(p.facets()[0].normal == Point{-1, 0});
    CHECK(p.facets()[1].normal == Point{0, -1});
    CHECK(p.facets()[2].normal == Point{1, 1});
    CHECK(p.facets()[2].offset == 2);
    CHECK(p.faces().size() == 7);
    CHECK(p.faces().front().dim == 2);
    CHECK(p.facets()[0].points.size() == 3);
    const auto inner = Polytope::hull(patchwork::testing::honeycomb(3).points);
    std::size_t interior = 0;
    for (std::size_t i = 0; i < inner.points().size(); ++i) {
        interior += inner.on_boundary(i) ? 0 : 1;
    }
    CHECK(interior == 1);
    CHECK(p.carrier({0, 1}).dim == 1);
}

TEST_CASE("dual fans")
{
    const auto fan = dual_fan(Polytope::hull(patchwork::testing::honeycomb(1).points));
    CHECK(fan.rays.size() == 3);
    CHECK(fan.cones.size() == 7);
    CHECK(fan.contains({0, 2}));
    CHECK(torus_fan(2).cones.size() == 1);
    const auto sub = subfan(fan, {{{1, 1}}});
    CHECK(sub.cones.size() == 2);
    CHECK_THROWS_AS(subfan(fan, {{{1, 0}}}), GeometryError);

    const auto cube = dual_fan(Polytope::hull({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0},
                                               {0, 0, 1}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}}));
    CHECK(cube.rays.size() == 6);
    CHECK(cube.cones.size() == 27);
    CHECK_THROWS_AS(dual_fan(Polytope::hull({{0, 0, 0}, {2, 0, 0}, {0, 2, 0}, {2, 2, 0}, {1, 1, 1}})),
                    GeometryError);
    CHECK(is_unimodular({{1, 0}, {0, 1}}, 2));
    CHECK_FALSE(is_unimodular({{1, 0}, {1, 2}}, 2));
}

TEST_CASE("primitive triangulations pass validation")
{
    for (std::int64_t d = 1; d <= 5; ++d) {
        CHECK(validate_primitive(patchwork::testing::honeycomb(d)).empty());
    }
    for (int diag = 0; diag < 3; ++diag) {
        CHECK(validate_primitive(patchwork::testing::double_simplex3(diag)).empty());
    }
    Rng rng(24);
    for (int trial = 0; trial < 40; ++trial) {
        const auto t = patchwork::testing::random_flips(patchwork::testing::honeycomb(4), rng, 30);
        CHECK(validate_primitive(t).empty());
    }
}

TEST_CASE("validation reports each kind of defect")
{
    Triangulation fat{{{0, 0}, {2, 0}, {0, 1}}, {{0, 1, 2}}};
    const auto v = validate_primitive(fat);
    CHECK(kinds(v).count("volume") == 1);
    REQUIRE(!v.empty());
    CHECK(v.front().simplex == IndexSet{0, 1, 2});

    auto t = patchwork::testing::honeycomb(2);
    auto missing = t;
    missing.simplices.pop_back();
    CHECK(!validate_primitive(missing).empty());

    auto doubled = t;
    doubled.simplices.push_back(doubled.simplices.front());
    CHECK(!validate_primitive(doubled).empty());

    auto unused = t;
    unused.points.push_back({1, 1});
    CHECK(kinds(validate_primitive(unused)).count("unused-point") == 1);

    Triangulation flat{{{0, 0}, {1, 1}, {2, 2}}, {{0, 1, 2}}};
    CHECK(!validate_primitive(flat).empty());
}

TEST_CASE("induced triangulation and face coordinates")
{
    const auto t = patchwork::testing::honeycomb(2);
    const auto hull = Polytope::hull(t.points);
    const auto& bottom = hull.facets()[1].points;
    const auto induced = induced_triangulation(t, bottom);
    CHECK(induced.global_points == bottom);
    CHECK(induced.cells.size() == 2);
    CHECK(validate_primitive(induced.local).empty());
    const auto coords = affine_lattice_coordinates({{0, 0}, {1, 1}, {2, 2}});
    REQUIRE(coords.size() == 3);
    CHECK(coords[1].size() == 1);
    CHECK((coords[2][0] == 2 || coords[2][0] == -2));
    CHECK(format_point({1, -2}) == "(1,-2)");
    CHECK(format_index_set({0, 3}) == "{0,3}");
}
