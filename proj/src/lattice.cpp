#include "patchwork/lattice.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace patchwork::lattice {

namespace {

Integer floor_div(const Integer& a, const Integer& b)
{
    Integer q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) {
        --q;
    }
    return q;
}

Integer dot(const IntVector& a, const IntVector& b)
{
    Integer s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        s += a[i] * b[i];
    }
    return s;
}

IntVector difference(const Point& a, const Point& b)
{
    IntVector d(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        d[i] = Integer(a[i]) - Integer(b[i]);
    }
    return d;
}

bool is_zero(const IntVector& v)
{
    return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

/** Visit every k-subset of {0..n-1} in lexicographic order. */
template <typename Fn>
void for_each_subset(std::size_t n, std::size_t k, Fn&& fn)
{
    if (k > n) {
        return;
    }
    IndexSet idx(k);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    while (true) {
        fn(idx);
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) {
            --i;
        }
        if (i == 0) {
            return;
        }
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

std::size_t affine_rank(const std::vector<Point>& points, const IndexSet& subset)
{
    if (subset.size() <= 1) {
        return 0;
    }
    std::vector<IntVector> diffs;
    for (std::size_t i = 1; i < subset.size(); ++i) {
        diffs.push_back(difference(points[subset[i]], points[subset[0]]));
    }
    return rational_rank(diffs);
}

bool is_subset(const IndexSet& small, const IndexSet& big)
{
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

Integer gcd_of_maximal_minors(const std::vector<IntVector>& rows, std::size_t cols)
{
    const std::size_t k = rows.size();
    Integer g = 0;
    for_each_subset(cols, k, [&](const IndexSet& c) {
        IntMatrix minor(k, IntVector(k));
        for (std::size_t i = 0; i < k; ++i) {
            for (std::size_t j = 0; j < k; ++j) {
                minor[i][j] = rows[i][c[j]];
            }
        }
        g = boost::multiprecision::gcd(g, abs(determinant(minor)));
    });
    return g;
}

}   // namespace

IntVector promote(const Point& p)
{
    return IntVector(p.begin(), p.end());
}

Point demote(const IntVector& v)
{
    Point p(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] > std::numeric_limits<std::int64_t>::max() ||
            v[i] < std::numeric_limits<std::int64_t>::min()) {
            throw GeometryError("lattice coordinate exceeds 64-bit range");
        }
        p[i] = static_cast<std::int64_t>(v[i]);
    }
    return p;
}

Integer determinant(IntMatrix m)
{
    // Bareiss fraction-free elimination.
    const std::size_t n = m.size();
    if (n == 0) {
        return 1;
    }
    Integer sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k] == 0) {
                ++swap_row;
            }
            if (swap_row == n) {
                return 0;
            }
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

Integer normalized_volume(const std::vector<Point>& simplex)
{
    if (simplex.empty()) {
        throw GeometryError("normalized_volume: empty point list");
    }
    const std::size_t d = simplex.front().size();
    if (simplex.size() != d + 1) {
        throw GeometryError("normalized_volume: expected " + std::to_string(d + 1) +
                            " points in dimension " + std::to_string(d) + ", got " +
                            std::to_string(simplex.size()));
    }
    IntMatrix m;
    for (std::size_t i = 1; i < simplex.size(); ++i) {
        if (simplex[i].size() != d) {
            throw GeometryError("normalized_volume: inconsistent point dimensions");
        }
        m.push_back(difference(simplex[i], simplex[0]));
    }
    return abs(determinant(std::move(m)));
}

std::size_t rational_rank(const std::vector<IntVector>& vectors)
{
    std::vector<IntVector> rows;
    for (const auto& v : vectors) {
        if (!is_zero(v)) {
            rows.push_back(v);
        }
    }
    if (rows.empty()) {
        return 0;
    }
    const std::size_t cols = rows.front().size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t pivot = r;
        while (pivot < rows.size() && rows[pivot][c] == 0) {
            ++pivot;
        }
        if (pivot == rows.size()) {
            continue;
        }
        std::swap(rows[r], rows[pivot]);
        for (std::size_t i = r + 1; i < rows.size(); ++i) {
            if (rows[i][c] == 0) {
                continue;
            }
            const Integer a = rows[r][c];
            const Integer b = rows[i][c];
            Integer g = 0;
            for (std::size_t j = 0; j < cols; ++j) {
                rows[i][j] = rows[i][j] * a - rows[r][j] * b;
                g = boost::multiprecision::gcd(g, abs(rows[i][j]));
            }
            if (g > 1) {
                for (auto& x : rows[i]) {
                    x /= g;
                }
            }
        }
        ++r;
    }
    return r;
}

IntMatrix hermite_normal_form(const IntMatrix& input, std::size_t ambient)
{
    IntMatrix rows;
    for (const auto& row : input) {
        if (row.size() != ambient) {
            throw GeometryError("hermite_normal_form: row length mismatch");
        }
        if (!is_zero(row)) {
            rows.push_back(row);
        }
    }
    std::size_t r = 0;
    for (std::size_t c = 0; c < ambient && r < rows.size(); ++c) {
        while (true) {
            std::size_t best = rows.size();
            for (std::size_t i = r; i < rows.size(); ++i) {
                if (rows[i][c] != 0 && (best == rows.size() || abs(rows[i][c]) < abs(rows[best][c]))) {
                    best = i;
                }
            }
            if (best == rows.size()) {
                break;
            }
            std::swap(rows[r], rows[best]);
            bool done = true;
            for (std::size_t i = r + 1; i < rows.size(); ++i) {
                if (rows[i][c] == 0) {
                    continue;
                }
                const Integer q = floor_div(rows[i][c], rows[r][c]);
                for (std::size_t j = c; j < ambient; ++j) {
                    rows[i][j] -= q * rows[r][j];
                }
                if (rows[i][c] != 0) {
                    done = false;
                }
            }
            if (done) {
                break;
            }
        }
        if (r >= rows.size() || rows[r][c] == 0) {
            continue;
        }
        if (rows[r][c] < 0) {
            for (auto& x : rows[r]) {
                x = -x;
            }
        }
        for (std::size_t i = 0; i < r; ++i) {
            const Integer q = floor_div(rows[i][c], rows[r][c]);
            if (q != 0) {
                for (std::size_t j = c; j < ambient; ++j) {
                    rows[i][j] -= q * rows[r][j];
                }
            }
        }
        ++r;
    }
    rows.resize(r);
    return rows;
}

std::vector<Point> integral_annihilator_basis(const std::vector<Point>& directions, std::size_t m)
{
    const std::size_t s = directions.size();
    for (const auto& d : directions) {
        if (d.size() != m) {
            throw GeometryError("integral_annihilator_basis: direction has wrong length");
        }
    }
    // Row operations on [A^T | I] are unimodular column operations on A.
    IntMatrix augmented(m, IntVector(s + m, 0));
    for (std::size_t j = 0; j < m; ++j) {
        for (std::size_t i = 0; i < s; ++i) {
            augmented[j][i] = directions[i][j];
        }
        augmented[j][s + j] = 1;
    }
    const IntMatrix reduced = hermite_normal_form(augmented, s + m);
    IntMatrix kernel;
    for (const auto& row : reduced) {
        const bool head_zero = std::all_of(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(s),
                                           [](const Integer& x) { return x == 0; });
        if (head_zero) {
            kernel.emplace_back(row.begin() + static_cast<std::ptrdiff_t>(s), row.end());
        }
    }
    std::vector<Point> out;
    for (const auto& row : hermite_normal_form(kernel, m)) {
        out.push_back(demote(row));
    }
    return out;
}

IntVector coordinates_in_basis(const std::vector<Point>& hnf_basis, const IntVector& v)
{
    IntVector rest = v;
    IntVector coeffs(hnf_basis.size(), 0);
    for (std::size_t i = 0; i < hnf_basis.size(); ++i) {
        const auto& row = hnf_basis[i];
        std::size_t pivot = 0;
        while (pivot < row.size() && row[pivot] == 0) {
            ++pivot;
        }
        if (pivot == row.size()) {
            throw GeometryError("coordinates_in_basis: zero basis row");
        }
        if (rest[pivot] % row[pivot] != 0) {
            throw GeometryError("coordinates_in_basis: vector not in lattice");
        }
        coeffs[i] = rest[pivot] / row[pivot];
        for (std::size_t j = 0; j < row.size(); ++j) {
            rest[j] -= coeffs[i] * row[j];
        }
    }
    if (!is_zero(rest)) {
        throw GeometryError("coordinates_in_basis: vector not in lattice");
    }
    return coeffs;
}

std::vector<Point> affine_lattice_coordinates(const std::vector<Point>& points)
{
    if (points.empty()) {
        return {};
    }
    const std::size_t d = points.front().size();
    std::vector<Point> diffs;
    for (const auto& p : points) {
        diffs.push_back(demote(difference(p, points.front())));
    }
    const auto normals = integral_annihilator_basis(diffs, d);
    const auto basis = integral_annihilator_basis(normals, d);
    std::vector<Point> out;
    for (const auto& diff : diffs) {
        out.push_back(demote(coordinates_in_basis(basis, promote(diff))));
    }
    return out;
}

Polytope Polytope::hull(const std::vector<Point>& points)
{
    if (points.empty()) {
        throw GeometryError("hull: no points");
    }
    Polytope p;
    p.dim_ = points.front().size();
    p.points_ = points;
    for (const auto& pt : points) {
        if (pt.size() != p.dim_) {
            throw GeometryError("hull: inconsistent point dimensions");
        }
    }
    IndexSet all(points.size());
    std::iota(all.begin(), all.end(), std::size_t{0});
    if (p.dim_ == 0 || affine_rank(points, all) != p.dim_) {
        throw GeometryError("hull: point configuration is not full-dimensional");
    }

    std::map<Point, Facet> by_normal;
    for_each_subset(points.size(), p.dim_, [&](const IndexSet& subset) {
        if (affine_rank(points, subset) + 1 != p.dim_) {
            return;
        }
        std::vector<Point> diffs;
        for (std::size_t i = 1; i < subset.size(); ++i) {
            diffs.push_back(demote(difference(points[subset[i]], points[subset[0]])));
        }
        const auto ann = integral_annihilator_basis(diffs, p.dim_);
        if (ann.size() != 1) {
            return;
        }
        IntVector normal = promote(ann.front());
        Integer offset = dot(normal, promote(points[subset[0]]));
        bool below = true;
        bool above = true;
        for (const auto& q : points) {
            const Integer v = dot(normal, promote(q));
            below = below && v <= offset;
            above = above && v >= offset;
        }
        if (!below && !above) {
            return;
        }
        if (!below) {
            for (auto& x : normal) {
                x = -x;
            }
            offset = -offset;
        }
        Facet f;
        f.normal = demote(normal);
        f.offset = static_cast<std::int64_t>(offset);
        for (std::size_t i = 0; i < points.size(); ++i) {
            if (dot(normal, promote(points[i])) == offset) {
                f.points.push_back(i);
            }
        }
        by_normal.emplace(f.normal, std::move(f));
    });
    for (auto& [normal, facet] : by_normal) {
        p.facets_.push_back(std::move(facet));
    }

    std::set<IndexSet> face_sets;
    std::vector<IndexSet> frontier;
    for (const auto& f : p.facets_) {
        if (face_sets.insert(f.points).second) {
            frontier.push_back(f.points);
        }
    }
    while (!frontier.empty()) {
        std::vector<IndexSet> next;
        for (const auto& a : frontier) {
            for (const auto& f : p.facets_) {
                IndexSet meet;
                std::set_intersection(a.begin(), a.end(), f.points.begin(), f.points.end(),
                                      std::back_inserter(meet));
                if (!meet.empty() && face_sets.insert(meet).second) {
                    next.push_back(meet);
                }
            }
        }
        frontier = std::move(next);
    }
    face_sets.erase(all);

    auto make_face = [&](const IndexSet& pts) {
        PolytopeFace face;
        face.points = pts;
        face.dim = affine_rank(points, pts);
        for (std::size_t i = 0; i < p.facets_.size(); ++i) {
            if (is_subset(pts, p.facets_[i].points)) {
                face.facets.push_back(i);
            }
        }
        return face;
    };
    p.faces_.push_back(make_face(all));
    for (const auto& pts : face_sets) {
        p.faces_.push_back(make_face(pts));
    }
    return p;
}

const PolytopeFace* Polytope::face_with_facets(const IndexSet& facets) const
{
    for (const auto& f : faces_) {
        if (f.facets == facets) {
            return &f;
        }
    }
    return nullptr;
}

const PolytopeFace& Polytope::carrier(const IndexSet& pts) const
{
    const PolytopeFace* best = &faces_.front();
    for (const auto& f : faces_) {
        if (is_subset(pts, f.points) && f.points.size() < best->points.size()) {
            best = &f;
        }
    }
    return *best;
}

bool Polytope::on_boundary(std::size_t point) const
{
    return std::any_of(facets_.begin(), facets_.end(), [point](const Facet& f) {
        return std::binary_search(f.points.begin(), f.points.end(), point);
    });
}

namespace {

Integer hull_volume(const std::vector<Point>& points)
{
    const std::size_t d = points.front().size();
    if (d == 1) {
        std::int64_t lo = points.front()[0];
        std::int64_t hi = lo;
        for (const auto& p : points) {
            lo = std::min(lo, p[0]);
            hi = std::max(hi, p[0]);
        }
        return Integer(hi) - Integer(lo);
    }
    // Pyramid decomposition from an apex: height times facet volume.
    const Polytope poly = Polytope::hull(points);
    const IntVector apex = promote(points.front());
    Integer total = 0;
    for (const auto& f : poly.facets()) {
        const Integer height = Integer(f.offset) - dot(promote(f.normal), apex);
        if (height == 0) {
            continue;
        }
        std::vector<Point> on_facet;
        for (std::size_t i : f.points) {
            on_facet.push_back(points[i]);
        }
        total += height * hull_volume(affine_lattice_coordinates(on_facet));
    }
    return total;
}

}   // namespace

Integer Polytope::normalized_volume() const
{
    return hull_volume(points_);
}

bool Fan::contains(const IndexSet& cone) const
{
    return std::find(cones.begin(), cones.end(), cone) != cones.end();
}

bool is_unimodular(const std::vector<Point>& rays, std::size_t dim)
{
    if (rays.empty()) {
        return true;
    }
    if (rays.size() > dim) {
        return false;
    }
    std::vector<IntVector> rows;
    for (const auto& r : rays) {
        rows.push_back(promote(r));
    }
    return gcd_of_maximal_minors(rows, dim) == 1;
}

namespace {

void sort_cones(std::vector<IndexSet>& cones)
{
    std::sort(cones.begin(), cones.end(), [](const IndexSet& a, const IndexSet& b) {
        if (a.size() != b.size()) {
            return a.size() < b.size();
        }
        return a < b;
    });
    cones.erase(std::unique(cones.begin(), cones.end()), cones.end());
}

}   // namespace

Fan dual_fan(const Polytope& polytope)
{
    Fan fan;
    fan.dim = polytope.dim();
    for (const auto& f : polytope.facets()) {
        fan.rays.push_back(f.normal);
    }
    for (const auto& face : polytope.faces()) {
        if (face.facets.size() + face.dim != polytope.dim()) {
            throw GeometryError("dual_fan: polytope is not simple at face " +
                                format_index_set(face.points));
        }
        std::vector<Point> rays;
        for (std::size_t i : face.facets) {
            rays.push_back(fan.rays[i]);
        }
        if (!is_unimodular(rays, fan.dim)) {
            throw GeometryError("dual_fan: cone " + format_index_set(face.facets) +
                                " is not unimodular");
        }
        fan.cones.push_back(face.facets);
    }
    sort_cones(fan.cones);
    return fan;
}

Fan torus_fan(std::size_t dim)
{
    Fan fan;
    fan.dim = dim;
    fan.cones.push_back({});
    return fan;
}

Fan subfan(const Fan& full, const std::vector<std::vector<Point>>& generating_cones)
{
    Fan fan;
    fan.dim = full.dim;
    fan.rays = full.rays;
    fan.cones.push_back({});
    for (const auto& cone_rays : generating_cones) {
        IndexSet cone;
        for (const auto& r : cone_rays) {
            const auto it = std::find(full.rays.begin(), full.rays.end(), r);
            if (it == full.rays.end()) {
                throw GeometryError("subfan: " + format_point(r) + " is not a ray of the dual fan");
            }
            cone.push_back(static_cast<std::size_t>(it - full.rays.begin()));
        }
        std::sort(cone.begin(), cone.end());
        cone.erase(std::unique(cone.begin(), cone.end()), cone.end());
        if (!full.contains(cone)) {
            throw GeometryError("subfan: " + format_index_set(cone) + " is not a cone of the dual fan");
        }
        const std::size_t k = cone.size();
        for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
            IndexSet face;
            for (std::size_t i = 0; i < k; ++i) {
                if (mask & (std::size_t{1} << i)) {
                    face.push_back(cone[i]);
                }
            }
            fan.cones.push_back(face);
        }
    }
    sort_cones(fan.cones);
    return fan;
}

std::vector<Violation> validate_primitive(const Triangulation& t)
{
    std::vector<Violation> out;
    const std::size_t d = t.dim();
    if (t.points.empty()) {
        out.push_back({"empty", {}, "no points"});
        return out;
    }
    for (std::size_t i = 0; i < t.points.size(); ++i) {
        if (t.points[i].size() != d) {
            out.push_back({"dimension", {i}, "point " + std::to_string(i) + " has wrong dimension"});
            return out;
        }
    }
    {
        std::set<Point> seen;
        for (std::size_t i = 0; i < t.points.size(); ++i) {
            if (!seen.insert(t.points[i]).second) {
                out.push_back({"duplicate-point", {i}, "point " + format_point(t.points[i]) +
                                                            " is listed twice"});
            }
        }
    }

    std::vector<bool> used(t.points.size(), false);
    Integer total = 0;
    std::vector<bool> usable(t.simplices.size(), false);
    for (std::size_t s = 0; s < t.simplices.size(); ++s) {
        IndexSet simplex = t.simplices[s];
        std::sort(simplex.begin(), simplex.end());
        const bool distinct = std::adjacent_find(simplex.begin(), simplex.end()) == simplex.end();
        const bool in_range = std::all_of(simplex.begin(), simplex.end(),
                                          [&](std::size_t i) { return i < t.points.size(); });
        if (simplex.size() != d + 1 || !distinct || !in_range) {
            out.push_back({"shape", simplex,
                           "simplex " + format_index_set(simplex) + " must have " +
                               std::to_string(d + 1) + " distinct valid vertices"});
            continue;
        }
        std::vector<Point> verts;
        for (std::size_t i : simplex) {
            verts.push_back(t.points[i]);
            used[i] = true;
        }
        const Integer vol = normalized_volume(verts);
        total += vol;
        if (vol != 1) {
            out.push_back({"volume", simplex,
                           "simplex " + format_index_set(simplex) + " has normalized volume " +
                               vol.str()});
        }
        usable[s] = vol != 0;
    }
    for (std::size_t i = 0; i < t.points.size(); ++i) {
        if (!used[i]) {
            out.push_back({"unused-point", {i}, "point " + format_point(t.points[i]) +
                                                    " is not a vertex of any simplex"});
        }
    }

    Polytope hull;
    try {
        hull = Polytope::hull(t.points);
    } catch (const GeometryError& e) {
        out.push_back({"degenerate", {}, e.what()});
        return out;
    }

    std::map<IndexSet, std::vector<std::size_t>> ridges;   // ridge -> opposite vertices
    for (std::size_t s = 0; s < t.simplices.size(); ++s) {
        if (!usable[s]) {
            continue;
        }
        IndexSet simplex = t.simplices[s];
        std::sort(simplex.begin(), simplex.end());
        for (std::size_t skip = 0; skip < simplex.size(); ++skip) {
            IndexSet ridge;
            for (std::size_t j = 0; j < simplex.size(); ++j) {
                if (j != skip) {
                    ridge.push_back(simplex[j]);
                }
            }
            ridges[ridge].push_back(simplex[skip]);
        }
    }
    for (const auto& [ridge, opposite] : ridges) {
        if (opposite.size() > 2) {
            out.push_back({"overlap", ridge,
                           "ridge " + format_index_set(ridge) + " lies in " +
                               std::to_string(opposite.size()) + " simplices"});
            continue;
        }
        if (opposite.size() == 1) {
            const bool on_hull = std::any_of(hull.facets().begin(), hull.facets().end(),
                                             [&](const Facet& f) { return is_subset(ridge, f.points); });
            if (!on_hull) {
                out.push_back({"gap", ridge,
                               "interior ridge " + format_index_set(ridge) +
                                   " bounds only one simplex"});
            }
            continue;
        }
        std::vector<Point> diffs;
        for (std::size_t i = 1; i < ridge.size(); ++i) {
            diffs.push_back(demote(difference(t.points[ridge[i]], t.points[ridge[0]])));
        }
        const auto normal = integral_annihilator_basis(diffs, d);
        const IntVector n = promote(normal.front());
        const Integer a = dot(n, difference(t.points[opposite[0]], t.points[ridge[0]]));
        const Integer b = dot(n, difference(t.points[opposite[1]], t.points[ridge[0]]));
        if (a * b >= 0) {
            out.push_back({"overlap", ridge,
                           "simplices on ridge " + format_index_set(ridge) + " lie on the same side"});
        }
    }
    const Integer expected = hull.normalized_volume();
    if (total != expected) {
        out.push_back({"coverage", {},
                       "simplex volumes sum to " + total.str() + " but the hull has volume " +
                           expected.str()});
    }
    return out;
}

InducedTriangulation induced_triangulation(const Triangulation& t, const IndexSet& face_points)
{
    const Polytope hull = Polytope::hull(t.points);
    IndexSet pts = face_points;
    std::sort(pts.begin(), pts.end());
    const bool is_face = std::any_of(hull.faces().begin(), hull.faces().end(),
                                     [&](const PolytopeFace& f) { return f.points == pts; });
    if (!is_face) {
        throw GeometryError("induced_triangulation: " + format_index_set(pts) + " is not a face");
    }
    const std::size_t k = affine_rank(t.points, pts);
    InducedTriangulation out;
    out.global_points = pts;
    std::set<IndexSet> cells;
    for (const auto& s : t.simplices) {
        IndexSet sorted = s;
        std::sort(sorted.begin(), sorted.end());
        IndexSet meet;
        std::set_intersection(sorted.begin(), sorted.end(), pts.begin(), pts.end(),
                              std::back_inserter(meet));
        if (meet.size() == k + 1) {
            cells.insert(meet);
        }
    }
    out.cells.assign(cells.begin(), cells.end());
    std::vector<Point> face_pts;
    for (std::size_t i : pts) {
        face_pts.push_back(t.points[i]);
    }
    out.local.points = affine_lattice_coordinates(face_pts);
    for (const auto& cell : out.cells) {
        IndexSet local;
        for (std::size_t g : cell) {
            local.push_back(static_cast<std::size_t>(
                std::lower_bound(pts.begin(), pts.end(), g) - pts.begin()));
        }
        out.local.simplices.push_back(local);
    }
    return out;
}

std::string format_point(const Point& p)
{
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < p.size(); ++i) {
        os << (i ? "," : "") << p[i];
    }
    os << ')';
    return os.str();
}

std::string format_index_set(const IndexSet& s)
{
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < s.size(); ++i) {
        os << (i ? "," : "") << s[i];
    }
    os << '}';
    return os.str();
}

}   // namespace patchwork::lattice
