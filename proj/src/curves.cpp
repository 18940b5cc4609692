#include "patchwork/curves.hpp"

#include "patchwork/parallel.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>

namespace patchwork::curves {

namespace {

using lattice::IndexSet;
using lattice::Point;

struct Vec2
{
    std::int64_t x = 0;
    std::int64_t y = 0;
};

Vec2 sub(const Point& a, const Point& b) { return {a[0] - b[0], a[1] - b[1]}; }
Vec2 perp(const Vec2& v) { return {-v.y, v.x}; }
std::int64_t det(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }
std::int64_t dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }
int sign(std::int64_t v) { return (v > 0) - (v < 0); }

void require_curve(const TropicalComplex& x)
{
    if (x.ambient_dim() != 2) {
        throw CurveError("curve operations need a plane curve (ambient dimension 2), got dimension " +
                         std::to_string(x.ambient_dim()));
    }
}

std::size_t edge_face(const TropicalComplex& x, std::size_t a, std::size_t b)
{
    IndexSet cell{std::min(a, b), std::max(a, b)};
    return x.index_of(tropical::FaceId{{}, cell});
}

/** Apexes of the two triangles on a bounded edge. */
std::pair<std::size_t, std::size_t> apexes(const TropicalComplex& x, const IndexSet& edge)
{
    std::vector<std::size_t> out;
    for (const auto& s : x.triangulation().simplices) {
        if (std::includes(s.begin(), s.end(), edge.begin(), edge.end())) {
            for (std::size_t v : s) {
                if (v != edge[0] && v != edge[1]) {
                    out.push_back(v);
                }
            }
        }
    }
    if (out.size() != 2) {
        throw CurveError("edge " + lattice::format_index_set(edge) + " is not an interior edge");
    }
    return {out[0], out[1]};
}

/**
 * Direction in which the curve edge dual to [from, apex] leaves the vertex
 * dual to the triangle [from, other, apex].
 */
Vec2 leaving_direction(const std::vector<Point>& pts, std::size_t from, std::size_t other, std::size_t apex)
{
    Vec2 d = perp(sub(pts[apex], pts[from]));
    if (dot(sub(pts[from], pts[other]), d) < 0) {
        d = {-d.x, -d.y};
    }
    return d;
}

struct EndpointData
{
    std::size_t edge_a = 0;   // continuation dual to [a, apex]
    std::size_t edge_b = 0;   // continuation dual to [b, apex]
    int side_a = 0;           // side of e on which each continuation leaves
    int side_b = 0;
};

EndpointData endpoint(const TropicalComplex& x, const IndexSet& e, std::size_t apex)
{
    const auto& pts = x.triangulation().points;
    const Vec2 u = perp(sub(pts[e[1]], pts[e[0]]));
    EndpointData d;
    d.edge_a = edge_face(x, e[0], apex);
    d.edge_b = edge_face(x, e[1], apex);
    d.side_a = sign(det(u, leaving_direction(pts, e[0], e[1], apex)));
    d.side_b = sign(det(u, leaving_direction(pts, e[1], e[0], apex)));
    return d;
}

std::vector<std::uint64_t> cycle_masks(const CycleBasis& basis, const std::vector<std::size_t>& edges)
{
    std::vector<std::uint64_t> masks;
    for (const auto& c : basis.cycles) {
        std::uint64_t m = 0;
        for (std::size_t e : c.edges) {
            const auto pos = std::lower_bound(edges.begin(), edges.end(), e) - edges.begin();
            m |= std::uint64_t{1} << pos;
        }
        masks.push_back(m);
    }
    return masks;
}

void require_bounded_subset(const TropicalComplex& x, const TwistSet& t)
{
    const auto edges = bounded_edges(x);
    for (std::size_t e : t) {
        if (!std::binary_search(edges.begin(), edges.end(), e)) {
            throw CurveError("twist " + (e < x.faces().size() ? x.face(e).id.str() : std::to_string(e)) +
                             " is not a bounded edge of the curve");
        }
    }
}

std::size_t overlap(const std::vector<std::size_t>& a, const TwistSet& t)
{
    std::size_t n = 0;
    for (std::size_t e : a) {
        if (std::binary_search(t.begin(), t.end(), e)) {
            ++n;
        }
    }
    return n;
}

}   // namespace

std::vector<std::size_t> bounded_edges(const TropicalComplex& x)
{
    require_curve(x);
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < x.faces().size(); ++i) {
        const auto& f = x.face(i);
        if (f.id.sedentarity.empty() && f.id.cell.size() == 2 && f.bounded) {
            out.push_back(i);
        }
    }
    return out;
}

CycleBasis cycle_basis(const TropicalComplex& x)
{
    require_curve(x);
    const auto& pts = x.triangulation().points;
    std::map<std::size_t, std::vector<std::size_t>> neighbours;
    for (std::size_t i = 0; i < x.faces().size(); ++i) {
        const auto& f = x.face(i);
        if (f.id.sedentarity.empty() && f.id.cell.size() == 2) {
            neighbours[f.id.cell[0]].push_back(f.id.cell[1]);
            neighbours[f.id.cell[1]].push_back(f.id.cell[0]);
        }
    }
    CycleBasis basis;
    for (std::size_t v = 0; v < pts.size(); ++v) {
        if (x.polytope().on_boundary(v)) {
            continue;
        }
        auto around = neighbours[v];
        std::sort(around.begin(), around.end(), [&](std::size_t a, std::size_t b) {
            const Vec2 da = sub(pts[a], pts[v]);
            const Vec2 db = sub(pts[b], pts[v]);
            const int ha = (da.y > 0 || (da.y == 0 && da.x > 0)) ? 0 : 1;
            const int hb = (db.y > 0 || (db.y == 0 && db.x > 0)) ? 0 : 1;
            if (ha != hb) {
                return ha < hb;
            }
            return det(da, db) > 0;
        });
        Cycle c;
        c.interior_point = v;
        for (std::size_t w : around) {
            c.edges.push_back(edge_face(x, v, w));
        }
        basis.cycles.push_back(std::move(c));
    }
    for (std::size_t i = 0; i < basis.cycles.size(); ++i) {
        for (std::size_t j = i + 1; j < basis.cycles.size(); ++j) {
            auto a = basis.cycles[i].edges;
            auto b = basis.cycles[j].edges;
            std::sort(a.begin(), a.end());
            std::sort(b.begin(), b.end());
            IndexSet common;
            std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
            if (common.size() > 1) {
                throw CurveError("two bounded regions share more than one edge");
            }
        }
    }
    return basis;
}

gf2::BitVector edge_direction_mod2(const TropicalComplex& x, std::size_t edge)
{
    const auto& cell = x.face(edge).id.cell;
    const auto& pts = x.triangulation().points;
    const Vec2 u = perp(sub(pts[cell[1]], pts[cell[0]]));
    gf2::BitVector v(2);
    v.set(0, (u.x & 1) != 0);
    v.set(1, (u.y & 1) != 0);
    return v;
}

TwistSet twists_from_phase(const TropicalComplex& x, const real::RealPhaseStructure& e)
{
    const auto edges = bounded_edges(x);
    TwistSet out;
    for (std::size_t idx : edges) {
        const auto& cell = x.face(idx).id.cell;
        const auto [c1, c2] = apexes(x, cell);
        const EndpointData ends[2] = {endpoint(x, cell, c1), endpoint(x, cell, c2)};
        std::optional<bool> twisted;
        for (const auto& eps : e.facets.at(idx).elements()) {
            int sides[2] = {0, 0};
            for (int k = 0; k < 2; ++k) {
                const bool in_a = e.facets.at(ends[k].edge_a).contains(eps);
                const bool in_b = e.facets.at(ends[k].edge_b).contains(eps);
                if (in_a == in_b) {
                    throw CurveError("phase does not select a unique continuation at an endpoint of " +
                                     x.face(idx).id.str());
                }
                sides[k] = in_a ? ends[k].side_a : ends[k].side_b;
            }
            const bool t = sides[0] * sides[1] < 0;
            if (twisted && *twisted != t) {
                throw CurveError("twist of " + x.face(idx).id.str() + " depends on the sign vector");
            }
            twisted = t;
        }
        if (twisted.value_or(false)) {
            out.push_back(idx);
        }
    }
    if (out != twists_by_endpoints(x, e)) {
        throw CurveError("determinant and endpoint twist formulations disagree");
    }
    return out;
}

TwistSet twists_by_endpoints(const TropicalComplex& x, const real::RealPhaseStructure& e)
{
    const auto edges = bounded_edges(x);
    TwistSet out;
    for (std::size_t idx : edges) {
        const auto& cell = x.face(idx).id.cell;
        const auto [c1, c2] = apexes(x, cell);
        std::vector<gf2::BitVector> meets[2];
        const std::size_t apex[2] = {c1, c2};
        for (int k = 0; k < 2; ++k) {
            const auto d = endpoint(x, cell, apex[k]);
            const std::size_t positive = d.side_a > 0 ? d.edge_a : d.edge_b;
            for (const auto& eps : e.facets.at(idx).elements()) {
                if (e.facets.at(positive).contains(eps)) {
                    meets[k].push_back(eps);
                }
            }
        }
        if (meets[0] != meets[1]) {
            out.push_back(idx);
        }
    }
    return out;
}

bool is_admissible(const TropicalComplex& x, const TwistSet& t)
{
    require_bounded_subset(x, t);
    for (const auto& c : cycle_basis(x).cycles) {
        gf2::BitVector sum(2);
        for (std::size_t e : c.edges) {
            if (std::binary_search(t.begin(), t.end(), e)) {
                sum ^= edge_direction_mod2(x, e);
            }
        }
        if (sum.any()) {
            return false;
        }
    }
    return true;
}

gf2::Matrix d1_matrix(const CycleBasis& basis, const TwistSet& t)
{
    const std::size_t g = basis.cycles.size();
    gf2::Matrix m(g, g);
    std::vector<std::vector<std::size_t>> sorted;
    for (const auto& c : basis.cycles) {
        auto edges = c.edges;
        std::sort(edges.begin(), edges.end());
        sorted.push_back(std::move(edges));
    }
    for (std::size_t i = 0; i < g; ++i) {
        m.set(i, i, overlap(sorted[i], t) % 2 == 1);
        for (std::size_t j = 0; j < g; ++j) {
            if (i == j) {
                continue;
            }
            IndexSet common;
            std::set_intersection(sorted[i].begin(), sorted[i].end(), sorted[j].begin(), sorted[j].end(),
                                  std::back_inserter(common));
            m.set(i, j, overlap(common, t) % 2 == 1);
        }
    }
    return m;
}

gf2::Matrix d1_matrix(const TropicalComplex& x, const TwistSet& t)
{
    if (!is_admissible(x, t)) {
        throw CurveError("twist set is not admissible");
    }
    return d1_matrix(cycle_basis(x), t);
}

std::size_t component_count(const TropicalComplex& x, const TwistSet& t)
{
    return gf2::kernel_basis(d1_matrix(x, t)).dim() + 1;
}

ExposedEdges exposed_edges(const TropicalComplex& x)
{
    ExposedEdges out;
    for (std::size_t idx : bounded_edges(x)) {
        const auto& cell = x.face(idx).id.cell;
        if (x.polytope().on_boundary(cell[0]) || x.polytope().on_boundary(cell[1])) {
            out.exposed.push_back(idx);
        } else {
            out.interior.push_back(idx);
        }
    }
    return out;
}

bool haas_predicate(const TropicalComplex& x, const TwistSet& t)
{
    if (!is_admissible(x, t)) {
        throw CurveError("twist set is not admissible");
    }
    const auto ex = exposed_edges(x);
    if (overlap(ex.interior, t) != 0) {
        return false;
    }
    for (const auto& c : cycle_basis(x).cycles) {
        if (overlap(c.edges, t) % 2 != 0) {
            return false;
        }
    }
    return true;
}

std::vector<EnumerationEntry> enumerate_admissible(const TropicalComplex& x, std::size_t cap)
{
    const auto edges = bounded_edges(x);
    if (edges.size() > cap || edges.size() >= 63) {
        throw CurveError("curve has " + std::to_string(edges.size()) + " bounded edges, above the cap of " +
                         std::to_string(cap));
    }
    const auto basis = cycle_basis(x);
    const auto masks = cycle_masks(basis, edges);
    const std::size_t g = masks.size();
    std::vector<unsigned> dir(edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const auto v = edge_direction_mod2(x, edges[i]);
        dir[i] = (v.test(0) ? 1U : 0U) | (v.test(1) ? 2U : 0U);
    }
    std::uint64_t interior = 0;
    for (std::size_t e : exposed_edges(x).interior) {
        interior |= std::uint64_t{1} << (std::lower_bound(edges.begin(), edges.end(), e) - edges.begin());
    }

    const std::uint64_t total = std::uint64_t{1} << edges.size();
    const std::uint64_t block = 4096;
    const std::size_t blocks = static_cast<std::size_t>((total + block - 1) / block);
    std::vector<std::vector<EnumerationEntry>> found(blocks);
    parallel_for(blocks, [&](std::size_t b) {
        const std::uint64_t end = std::min<std::uint64_t>(total, (b + 1) * block);
        for (std::uint64_t t = b * block; t < end; ++t) {
            bool admissible = true;
            for (auto cm : masks) {
                unsigned sum = 0;
                for (std::uint64_t bits = t & cm; bits != 0; bits &= bits - 1) {
                    sum ^= dir[static_cast<std::size_t>(std::countr_zero(bits))];
                }
                if (sum != 0) {
                    admissible = false;
                    break;
                }
            }
            if (!admissible) {
                continue;
            }
            gf2::Matrix m(g, g);
            bool even = true;
            for (std::size_t i = 0; i < g; ++i) {
                for (std::size_t j = 0; j < g; ++j) {
                    const std::uint64_t shared = i == j ? (t & masks[i]) : (t & masks[i] & masks[j]);
                    m.set(i, j, std::popcount(shared) % 2 == 1);
                }
                even = even && std::popcount(t & masks[i]) % 2 == 0;
            }
            EnumerationEntry entry;
            for (std::size_t i = 0; i < edges.size(); ++i) {
                if (t & (std::uint64_t{1} << i)) {
                    entry.twists.push_back(edges[i]);
                }
            }
            entry.components = g - gf2::rank(m) + 1;
            entry.haas = even && (t & interior) == 0;
            found[b].push_back(std::move(entry));
        }
    });
    std::vector<EnumerationEntry> out;
    for (auto& f : found) {
        for (auto& e : f) {
            out.push_back(std::move(e));
        }
    }
    return out;
}

std::optional<real::SignDistribution> realize_twists(const TropicalComplex& x, const TwistSet& t)
{
    require_bounded_subset(x, t);
    const auto edges = bounded_edges(x);
    const std::size_t npts = x.triangulation().points.size();
    auto twist_vector = [&](const real::SignDistribution& s) {
        const auto tw = twists_from_phase(x, real::phase_from_signs(x, s));
        gf2::BitVector v(edges.size());
        for (std::size_t e : tw) {
            v.set(static_cast<std::size_t>(std::lower_bound(edges.begin(), edges.end(), e) - edges.begin()));
        }
        return v;
    };
    real::SignDistribution base(npts, 1);
    const auto t0 = twist_vector(base);
    std::vector<gf2::BitVector> columns;
    for (std::size_t i = 1; i < npts; ++i) {
        auto s = base;
        s[i] = -1;
        columns.push_back(twist_vector(s) ^ t0);
    }
    gf2::BitVector target(edges.size());
    for (std::size_t e : t) {
        target.set(static_cast<std::size_t>(std::lower_bound(edges.begin(), edges.end(), e) - edges.begin()));
    }
    const auto sol = gf2::solve(gf2::Matrix::from_columns(edges.size(), columns), target ^ t0);
    if (!sol) {
        return std::nullopt;
    }
    auto signs = base;
    for (std::size_t i = 1; i < npts; ++i) {
        if (sol->test(i - 1)) {
            signs[i] = -1;
        }
    }
    TwistSet check = twists_from_phase(x, real::phase_from_signs(x, signs));
    TwistSet want = t;
    std::sort(want.begin(), want.end());
    if (check != want) {
        return std::nullopt;
    }
    return signs;
}

}   // namespace patchwork::curves
