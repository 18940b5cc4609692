#include "patchwork/tropical_complex.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>

namespace patchwork::tropical {

namespace {

IndexSet parse_braced(const std::string& text, std::size_t& pos, const std::string& prefix)
{
    if (text.compare(pos, prefix.size(), prefix) != 0) {
        throw ComplexError("malformed face id '" + text + "': expected '" + prefix + "'");
    }
    pos += prefix.size();
    if (pos >= text.size() || text[pos] != '{') {
        throw ComplexError("malformed face id '" + text + "': expected '{'");
    }
    ++pos;
    IndexSet out;
    std::string number;
    while (pos < text.size() && text[pos] != '}') {
        const char ch = text[pos++];
        if (ch == ',') {
            if (number.empty()) {
                throw ComplexError("malformed face id '" + text + "': empty entry");
            }
            out.push_back(std::stoul(number));
            number.clear();
        } else if (ch >= '0' && ch <= '9') {
            number += ch;
        } else if (ch != ' ') {
            throw ComplexError("malformed face id '" + text + "': unexpected character");
        }
    }
    if (pos >= text.size()) {
        throw ComplexError("malformed face id '" + text + "': missing '}'");
    }
    ++pos;
    if (!number.empty()) {
        out.push_back(std::stoul(number));
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool is_subset(const IndexSet& small, const IndexSet& big)
{
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

std::vector<Point> rays_of(const lattice::Fan& fan, const IndexSet& cone)
{
    std::vector<Point> rays;
    for (std::size_t i : cone) {
        rays.push_back(fan.rays.at(i));
    }
    return rays;
}

}   // namespace

std::string FaceId::str() const
{
    return "sed" + lattice::format_index_set(sedentarity) + "/cell" + lattice::format_index_set(cell);
}

FaceId FaceId::parse(const std::string& text)
{
    FaceId id;
    std::size_t pos = 0;
    id.sedentarity = parse_braced(text, pos, "sed");
    if (pos >= text.size() || text[pos] != '/') {
        throw ComplexError("malformed face id '" + text + "': expected '/'");
    }
    ++pos;
    id.cell = parse_braced(text, pos, "cell");
    if (pos != text.size()) {
        throw ComplexError("malformed face id '" + text + "': trailing characters");
    }
    return id;
}

std::strong_ordering operator<=>(const FaceId& a, const FaceId& b)
{
    if (auto c = a.sedentarity.size() <=> b.sedentarity.size(); c != 0) {
        return c;
    }
    if (auto c = a.sedentarity <=> b.sedentarity; c != 0) {
        return c;
    }
    return a.cell <=> b.cell;
}

TropicalComplex TropicalComplex::build(const lattice::Triangulation& t, const lattice::Fan& fan)
{
    const auto violations = lattice::validate_primitive(t);
    if (!violations.empty()) {
        std::ostringstream os;
        os << "triangulation is not primitive:";
        for (const auto& v : violations) {
            os << "\n  [" << v.kind << "] " << v.message;
        }
        throw ComplexError(os.str());
    }

    TropicalComplex x;
    x.ambient_ = t.dim();
    x.triangulation_ = t;
    for (auto& s : x.triangulation_.simplices) {
        std::sort(s.begin(), s.end());
    }
    x.polytope_ = lattice::Polytope::hull(t.points);
    const auto& poly = x.polytope_;

    std::vector<Point> normals;
    for (const auto& f : poly.facets()) {
        normals.push_back(f.normal);
    }
    if (!fan.rays.empty() && fan.rays != normals) {
        throw ComplexError("fan rays do not match the facet normals of the polytope");
    }
    x.fan_ = fan;
    x.fan_.dim = x.ambient_;
    x.fan_.rays = normals;
    for (const auto& cone : fan.cones) {
        const auto* face = poly.face_with_facets(cone);
        if (face == nullptr || face->dim + cone.size() != x.ambient_) {
            throw ComplexError("cone " + lattice::format_index_set(cone) +
                               " is not a cone of the dual fan");
        }
        if (!lattice::is_unimodular(rays_of(x.fan_, cone), x.ambient_)) {
            throw ComplexError("cone " + lattice::format_index_set(cone) + " is not unimodular");
        }
        for (std::size_t drop = 0; drop < cone.size(); ++drop) {
            IndexSet sub = cone;
            sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(drop));
            if (!fan.contains(sub)) {
                throw ComplexError("fan is not closed under faces at " +
                                   lattice::format_index_set(cone));
            }
        }
    }
    if (!fan.contains({})) {
        throw ComplexError("fan must contain the zero cone");
    }
    x.compact_ = std::all_of(poly.faces().begin(), poly.faces().end(),
                             [&](const lattice::PolytopeFace& f) { return fan.contains(f.facets); });

    std::set<IndexSet> cells;
    for (const auto& s : x.triangulation_.simplices) {
        const std::size_t k = s.size();
        for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
            if (std::popcount(mask) < 2) {
                continue;
            }
            IndexSet c;
            for (std::size_t i = 0; i < k; ++i) {
                if (mask & (std::size_t{1} << i)) {
                    c.push_back(s[i]);
                }
            }
            cells.insert(c);
        }
    }

    std::vector<IndexSet> cones = fan.cones;
    std::sort(cones.begin(), cones.end(), [](const IndexSet& a, const IndexSet& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    std::map<IndexSet, std::size_t> stratum_index;
    for (const auto& cone : cones) {
        Stratum s;
        s.cone = cone;
        s.ambient_dim = x.ambient_ - cone.size();
        s.lattice_basis = x.stratum_basis(cone);
        s.polytope_face = poly.face_with_facets(cone)->points;
        stratum_index[cone] = x.strata_.size();
        x.strata_.push_back(std::move(s));
    }

    std::vector<FaceId> ids;
    for (const auto& s : x.strata_) {
        for (const auto& c : cells) {
            if (is_subset(c, s.polytope_face)) {
                ids.push_back(FaceId{s.cone, c});
            }
        }
    }
    std::sort(ids.begin(), ids.end());
    for (std::size_t i = 0; i < ids.size(); ++i) {
        x.index_[ids[i]] = i;
    }

    for (const auto& id : ids) {
        Face f;
        f.id = id;
        f.stratum = stratum_index.at(id.sedentarity);
        Stratum& s = x.strata_[f.stratum];
        f.ambient_dim = s.ambient_dim;
        f.dim = s.ambient_dim - (id.cell.size() - 1);
        f.bounded = poly.carrier(id.cell).points == s.polytope_face;

        std::vector<Point> coeffs;
        for (std::size_t i = 1; i < id.cell.size(); ++i) {
            Point d(x.ambient_);
            for (std::size_t j = 0; j < x.ambient_; ++j) {
                d[j] = t.points[id.cell[i]][j] - t.points[id.cell[0]][j];
            }
            coeffs.push_back(lattice::demote(lattice::coordinates_in_basis(s.lattice_basis,
                                                                           lattice::promote(d))));
        }
        std::vector<gf2::BitVector> gens;
        for (const auto& v : lattice::integral_annihilator_basis(coeffs, s.ambient_dim)) {
            gf2::BitVector b(s.ambient_dim);
            for (std::size_t j = 0; j < v.size(); ++j) {
                b.set(j, (v[j] & 1) != 0);
            }
            gens.push_back(b);
        }
        f.tangent = gf2::Subspace::span(s.ambient_dim, gens);
        if (f.tangent.dim() != f.dim) {
            throw ComplexError("tangent space of " + id.str() + " drops rank modulo 2");
        }
        if (!id.sedentarity.empty()) {
            f.parent = x.index_.at(FaceId{{}, id.cell});
        }
        s.faces.push_back(x.index_.at(id));
        x.faces_.push_back(std::move(f));
    }

    for (std::size_t i = 0; i < x.faces_.size(); ++i) {
        Face& f = x.faces_[i];
        const IndexSet& c = f.id.cell;
        if (c.size() >= 3) {
            for (std::size_t drop = 0; drop < c.size(); ++drop) {
                IndexSet sub = c;
                sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(drop));
                const std::size_t g = x.index_.at(FaceId{f.id.sedentarity, sub});
                x.faces_[g].boundary.push_back(i);
            }
        }
        for (const auto& s : x.strata_) {
            if (s.cone.size() == f.id.sedentarity.size() + 1 && is_subset(f.id.sedentarity, s.cone) &&
                is_subset(c, s.polytope_face)) {
                f.boundary.push_back(x.index_.at(FaceId{s.cone, c}));
            }
        }
        for (std::size_t a = 0; a < c.size(); ++a) {
            for (std::size_t b = a + 1; b < c.size(); ++b) {
                f.facets.push_back(x.index_.at(FaceId{f.id.sedentarity, {c[a], c[b]}}));
            }
        }
        std::sort(f.facets.begin(), f.facets.end());
    }
    for (std::size_t i = 0; i < x.faces_.size(); ++i) {
        auto& b = x.faces_[i].boundary;
        std::sort(b.begin(), b.end());
        for (std::size_t j : b) {
            x.faces_[j].coboundary.push_back(i);
        }
    }
    return x;
}

std::size_t TropicalComplex::index_of(const FaceId& id) const
{
    const auto it = index_.find(id);
    if (it == index_.end()) {
        throw ComplexError("unknown face " + id.str());
    }
    return it->second;
}

std::optional<std::size_t> TropicalComplex::find(const FaceId& id) const
{
    const auto it = index_.find(id);
    if (it == index_.end()) {
        return std::nullopt;
    }
    return it->second;
}

std::vector<std::size_t> TropicalComplex::faces_of_dim(std::size_t dim) const
{
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < faces_.size(); ++i) {
        if (faces_[i].dim == dim) {
            out.push_back(i);
        }
    }
    return out;
}

const Stratum& TropicalComplex::stratum(const IndexSet& cone) const
{
    for (const auto& s : strata_) {
        if (s.cone == cone) {
            return s;
        }
    }
    throw ComplexError("cone " + lattice::format_index_set(cone) + " is not in the fan");
}

std::vector<Point> TropicalComplex::stratum_basis(const IndexSet& cone) const
{
    for (const auto& s : strata_) {
        if (s.cone == cone) {
            return s.lattice_basis;
        }
    }
    return lattice::integral_annihilator_basis(rays_of(fan_, cone), ambient_);
}

lattice::IntVector TropicalComplex::stratum_direction(const IndexSet& cone, const Point& direction) const
{
    return lattice::coordinates_in_basis(stratum_basis(cone), lattice::promote(direction));
}

lattice::IntMatrix TropicalComplex::projection_integer(const IndexSet& rho, const IndexSet& eta) const
{
    if (!is_subset(rho, eta)) {
        throw ComplexError("projection: " + lattice::format_index_set(rho) + " is not a face of " +
                           lattice::format_index_set(eta));
    }
    const auto from = stratum_basis(rho);
    const auto to = stratum_basis(eta);
    lattice::IntMatrix p;
    for (const auto& b : to) {
        p.push_back(lattice::coordinates_in_basis(from, lattice::promote(b)));
    }
    return p;
}

gf2::Matrix TropicalComplex::projection_matrix(const IndexSet& rho, const IndexSet& eta) const
{
    const auto p = projection_integer(rho, eta);
    const std::size_t cols = ambient_ - rho.size();
    gf2::Matrix m(p.size(), cols);
    for (std::size_t i = 0; i < p.size(); ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            m.set(i, j, (p[i][j] & 1) != 0);
        }
    }
    return m;
}

std::vector<long long> expected_multitangent_dims(std::size_t n, std::size_t k, std::size_t s)
{
    if (k + s > n + 1) {
        throw ComplexError("expected_multitangent_dims: face dimension too large");
    }
    auto multiply = [](const std::vector<long long>& a, const std::vector<long long>& b) {
        std::vector<long long> out(a.size() + b.size() - 1, 0);
        for (std::size_t i = 0; i < a.size(); ++i) {
            for (std::size_t j = 0; j < b.size(); ++j) {
                out[i + j] += a[i] * b[j];
            }
        }
        return out;
    };
    auto power = [&](const std::vector<long long>& base, std::size_t e) {
        std::vector<long long> out{1};
        for (std::size_t i = 0; i < e; ++i) {
            out = multiply(out, base);
        }
        return out;
    };
    const std::size_t a = n - k + 1 - s;
    std::vector<long long> bracket = power({1, -1}, a);
    std::vector<long long> mono(a + 1, 0);
    mono[a] = (a % 2 == 0) ? 1 : -1;
    for (std::size_t i = 0; i < mono.size(); ++i) {
        bracket[i] -= mono[i];
    }
    std::vector<long long> poly = multiply(power({1, -1}, k), bracket);
    std::vector<long long> dims(n + 1, 0);
    for (std::size_t p = 0; p < poly.size() && p <= n; ++p) {
        dims[p] = (p % 2 == 0) ? poly[p] : -poly[p];
    }
    for (std::size_t p = n + 1; p < poly.size(); ++p) {
        if (poly[p] != 0) {
            throw ComplexError("expected_multitangent_dims: polynomial degree exceeds n");
        }
    }
    return dims;
}

}   // namespace patchwork::tropical
