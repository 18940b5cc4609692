#include "patchwork/real_phase.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace patchwork::real {

namespace {

gf2::BitVector edge_direction_mod2(const TropicalComplex& x, const tropical::IndexSet& cell)
{
    const auto& pts = x.triangulation().points;
    gf2::BitVector w(x.ambient_dim());
    for (std::size_t j = 0; j < x.ambient_dim(); ++j) {
        w.set(j, ((pts[cell[1]][j] - pts[cell[0]][j]) & 1) != 0);
    }
    return w;
}

bool is_facet(const tropical::Face& f) { return f.id.cell.size() == 2; }

}   // namespace

std::vector<gf2::BitVector> AffineSignSpace::elements() const
{
    std::vector<gf2::BitVector> out;
    const std::size_t d = direction.dim();
    for (std::size_t mask = 0; mask < (std::size_t{1} << d); ++mask) {
        gf2::BitVector v = base;
        for (std::size_t i = 0; i < d; ++i) {
            if (mask & (std::size_t{1} << i)) {
                v ^= direction.basis()[i];
            }
        }
        out.push_back(v);
    }
    std::sort(out.begin(), out.end());
    return out;
}

AffineSignSpace AffineSignSpace::image(const gf2::Matrix& m) const
{
    return AffineSignSpace{m.apply(base), gf2::image(m, direction)};
}

std::size_t sign_index(const gf2::BitVector& eps)
{
    std::size_t idx = 0;
    for (std::size_t i = 0; i < eps.size(); ++i) {
        idx = (idx << 1) | (eps.test(i) ? 1U : 0U);
    }
    return idx;
}

gf2::BitVector sign_from_index(std::size_t index, std::size_t m)
{
    gf2::BitVector v(m);
    for (std::size_t i = 0; i < m; ++i) {
        v.set(i, ((index >> (m - 1 - i)) & 1U) != 0);
    }
    return v;
}

RealPhaseStructure phase_from_signs(const TropicalComplex& x, const SignDistribution& signs)
{
    if (signs.size() != x.triangulation().points.size()) {
        throw PhaseError("sign distribution has " + std::to_string(signs.size()) + " entries for " +
                         std::to_string(x.triangulation().points.size()) + " points");
    }
    for (int s : signs) {
        if (s != 1 && s != -1) {
            throw PhaseError("signs must be +1 or -1");
        }
    }
    RealPhaseStructure e;
    for (std::size_t i = 0; i < x.faces().size(); ++i) {
        const auto& f = x.face(i);
        if (!f.id.sedentarity.empty() || !is_facet(f)) {
            continue;
        }
        const gf2::BitVector w = edge_direction_mod2(x, f.id.cell);
        const bool c = signs[f.id.cell[0]] == signs[f.id.cell[1]];
        gf2::BitVector base(x.ambient_dim());
        if (c) {
            base.set(w.find_first());
        }
        e.facets.emplace(i, AffineSignSpace{base, f.tangent});
    }
    return e;
}

SignDistribution signs_from_phase(const TropicalComplex& x, const RealPhaseStructure& e)
{
    const std::size_t npts = x.triangulation().points.size();
    std::vector<std::vector<std::pair<std::size_t, bool>>> adjacency(npts);
    for (const auto& [idx, space] : e.facets) {
        const auto& f = x.face(idx);
        if (!(space.direction == f.tangent)) {
            throw PhaseError("sign space of " + f.id.str() + " is not parallel to its tangent space");
        }
        const gf2::BitVector w = edge_direction_mod2(x, f.id.cell);
        const bool same = space.base.dot(w);
        adjacency[f.id.cell[0]].emplace_back(f.id.cell[1], same);
        adjacency[f.id.cell[1]].emplace_back(f.id.cell[0], same);
    }
    SignDistribution signs(npts, 0);
    std::deque<std::size_t> queue;
    signs[0] = 1;
    queue.push_back(0);
    while (!queue.empty()) {
        const std::size_t u = queue.front();
        queue.pop_front();
        for (const auto& [v, same] : adjacency[u]) {
            const int want = same ? signs[u] : -signs[u];
            if (signs[v] == 0) {
                signs[v] = want;
                queue.push_back(v);
            } else if (signs[v] != want) {
                throw PhaseError("sign propagation is inconsistent at point " + std::to_string(v));
            }
        }
    }
    if (std::find(signs.begin(), signs.end(), 0) != signs.end()) {
        throw PhaseError("triangulation edge graph is not connected");
    }
    return signs;
}

RealPhaseStructure phase_from_bases(const TropicalComplex& x,
                                    const std::map<std::size_t, gf2::BitVector>& bases)
{
    RealPhaseStructure e;
    for (std::size_t i = 0; i < x.faces().size(); ++i) {
        const auto& f = x.face(i);
        if (!f.id.sedentarity.empty() || !is_facet(f)) {
            continue;
        }
        const auto it = bases.find(i);
        if (it == bases.end()) {
            throw PhaseError("no sign vector given for facet " + f.id.str());
        }
        if (it->second.size() != x.ambient_dim()) {
            throw PhaseError("sign vector for " + f.id.str() + " has wrong length");
        }
        e.facets.emplace(i, AffineSignSpace{it->second, f.tangent});
    }
    for (const auto& [i, base] : bases) {
        const auto& f = x.face(i);
        if (!f.id.sedentarity.empty() || !is_facet(f)) {
            throw PhaseError(f.id.str() + " is not a facet of sedentarity zero");
        }
    }
    return e;
}

std::vector<PhaseViolation> validate_phase(const TropicalComplex& x, const RealPhaseStructure& e)
{
    std::vector<PhaseViolation> out;
    for (std::size_t i = 0; i < x.faces().size(); ++i) {
        const auto& f = x.face(i);
        if (!f.id.sedentarity.empty() || !is_facet(f)) {
            continue;
        }
        const auto it = e.facets.find(i);
        if (it == e.facets.end()) {
            out.push_back({f.id, std::nullopt, "facet has no sign space"});
        } else if (!(it->second.direction == f.tangent)) {
            out.push_back({f.id, std::nullopt, "sign space is not parallel to the tangent space"});
        }
    }
    if (!out.empty()) {
        return out;
    }
    for (std::size_t i = 0; i < x.faces().size(); ++i) {
        const auto& f = x.face(i);
        if (!f.id.sedentarity.empty() || f.dim + 1 != x.n()) {
            continue;
        }
        std::map<gf2::BitVector, std::size_t> count;
        for (std::size_t s : f.facets) {
            for (const auto& eps : e.facets.at(s).elements()) {
                ++count[eps];
            }
        }
        for (const auto& [eps, c] : count) {
            if (c != 2) {
                out.push_back({f.id, eps,
                               "sign vector " + eps.to_string() + " lies in " + std::to_string(c) +
                                   " of the adjacent sign spaces"});
            }
        }
    }
    return out;
}

ExtendedPhase extend_phase(const TropicalComplex& x, const RealPhaseStructure& e)
{
    ExtendedPhase ext;
    const std::size_t nf = x.faces().size();
    ext.facet_spaces.resize(nf);
    ext.sign_sets.resize(nf);
    for (std::size_t i = 0; i < nf; ++i) {
        const auto& f = x.face(i);
        if (!is_facet(f)) {
            continue;
        }
        if (f.id.sedentarity.empty()) {
            ext.facet_spaces[i] = e.facets.at(i);
        } else {
            const auto& parent = e.facets.at(*f.parent);
            AffineSignSpace projected = parent.image(x.projection_matrix({}, f.id.sedentarity));
            if (!(projected.direction == f.tangent)) {
                throw PhaseError("projected sign space of " + f.id.str() +
                                 " is not parallel to its tangent space");
            }
            ext.facet_spaces[i] = std::move(projected);
        }
    }
    for (std::size_t i = 0; i < nf; ++i) {
        std::set<gf2::BitVector> all;
        for (std::size_t s : x.face(i).facets) {
            for (auto& eps : ext.facet_spaces[s]->elements()) {
                all.insert(std::move(eps));
            }
        }
        ext.sign_sets[i].assign(all.begin(), all.end());
    }
    return ext;
}

std::vector<gf2::BitVector> extended_sign_set(const TropicalComplex& x, const RealPhaseStructure& e,
                                              std::size_t face)
{
    return extend_phase(x, e).sign_sets.at(face);
}

gf2::Subspace sign_space(const TropicalComplex& x, const ExtendedPhase& ext, std::size_t face)
{
    const std::size_t m = x.face(face).ambient_dim;
    const std::size_t amb = std::size_t{1} << m;
    std::vector<gf2::BitVector> gens;
    for (const auto& eps : ext.sign_sets.at(face)) {
        gens.push_back(gf2::BitVector::unit(amb, sign_index(eps)));
    }
    return gf2::Subspace::span(amb, gens);
}

gf2::Matrix sign_map(const TropicalComplex& x, std::size_t sigma, std::size_t tau)
{
    const auto& s = x.face(sigma);
    const auto& t = x.face(tau);
    if (!std::binary_search(s.boundary.begin(), s.boundary.end(), tau)) {
        throw PhaseError("sign_map: " + t.id.str() + " is not in the boundary of " + s.id.str());
    }
    const std::size_t from = std::size_t{1} << s.ambient_dim;
    const std::size_t to = std::size_t{1} << t.ambient_dim;
    if (s.id.sedentarity == t.id.sedentarity) {
        return gf2::Matrix::identity(from);
    }
    const gf2::Matrix pi = x.projection_matrix(s.id.sedentarity, t.id.sedentarity);
    gf2::Matrix m(to, from);
    for (std::size_t c = 0; c < from; ++c) {
        m.set(sign_index(pi.apply(sign_from_index(c, s.ambient_dim))), c);
    }
    return m;
}

cosheaf::CosheafAssignment sign_cosheaf(const TropicalComplex& x, const ExtendedPhase& ext)
{
    cosheaf::CosheafAssignment g;
    for (std::size_t i = 0; i < x.faces().size(); ++i) {
        g.spaces.push_back(sign_space(x, ext, i));
    }
    for (std::size_t i = 0; i < x.faces().size(); ++i) {
        for (std::size_t j : x.face(i).boundary) {
            g.maps.emplace(std::make_pair(i, j), sign_map(x, i, j));
        }
    }
    return g;
}

namespace {

void require_valid(const TropicalComplex& x, const RealPhaseStructure& e)
{
    const auto violations = validate_phase(x, e);
    if (!violations.empty()) {
        throw PhaseError("invalid real phase structure at " + violations.front().face.str() + ": " +
                         violations.front().message);
    }
}

}   // namespace

cosheaf::BettiTable real_betti(const TropicalComplex& x, const RealPhaseStructure& e,
                               cosheaf::Flavor flavor)
{
    require_valid(x, e);
    const auto ext = extend_phase(x, e);
    return cosheaf::homology_dims(cosheaf::assemble_complex(x, sign_cosheaf(x, ext), flavor));
}

std::vector<DimensionAuditEntry> dimension_audit(const TropicalComplex& x, const RealPhaseStructure& e)
{
    require_valid(x, e);
    const auto ext = extend_phase(x, e);
    std::vector<DimensionAuditEntry> out;
    for (std::size_t i = 0; i < x.faces().size(); ++i) {
        const auto& f = x.face(i);
        DimensionAuditEntry entry;
        entry.face = f.id;
        entry.sign_dim = ext.sign_sets[i].size();
        entry.expected = (std::size_t{1} << f.ambient_dim) - (std::size_t{1} << f.dim);
        for (std::size_t p = 0; p <= x.n(); ++p) {
            entry.multitangent_sum += cosheaf::multitangent_space(x, i, p).dim();
        }
        entry.ok = entry.sign_dim == entry.expected && entry.multitangent_sum == entry.sign_dim;
        out.push_back(std::move(entry));
    }
    return out;
}

}   // namespace patchwork::real
