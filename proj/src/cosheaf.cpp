#include "patchwork/cosheaf.hpp"

#include <algorithm>

namespace patchwork::cosheaf {

namespace {

bool det_mod2(const std::vector<gf2::BitVector>& rows, const lattice::IndexSet& cols)
{
    std::vector<gf2::BitVector> minor;
    for (const auto& r : rows) {
        gf2::BitVector v(cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j) {
            v.set(j, r.test(cols[j]));
        }
        minor.push_back(v);
    }
    return gf2::Subspace::span(cols.size(), minor).dim() == cols.size();
}

std::size_t binomial(std::size_t n, std::size_t k)
{
    if (k > n) {
        return 0;
    }
    std::size_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
    }
    return r;
}

}   // namespace

const gf2::Matrix& CosheafAssignment::map(std::size_t sigma, std::size_t tau) const
{
    const auto it = maps.find({sigma, tau});
    if (it == maps.end()) {
        throw CosheafError("no cosheaf map for pair (" + std::to_string(sigma) + ", " +
                           std::to_string(tau) + ")");
    }
    return it->second;
}

long long BettiTable::euler() const
{
    long long s = 0;
    for (std::size_t q = 0; q < dims.size(); ++q) {
        s += (q % 2 == 0 ? 1 : -1) * static_cast<long long>(dims[q]);
    }
    return s;
}

std::size_t BettiTable::total() const
{
    std::size_t s = 0;
    for (auto d : dims) {
        s += d;
    }
    return s;
}

std::vector<lattice::IndexSet> wedge_index(std::size_t m, std::size_t p)
{
    std::vector<lattice::IndexSet> out;
    if (p > m) {
        return out;
    }
    lattice::IndexSet idx(p);
    for (std::size_t i = 0; i < p; ++i) {
        idx[i] = i;
    }
    while (true) {
        out.push_back(idx);
        std::size_t i = p;
        while (i > 0 && idx[i - 1] == m - p + i - 1) {
            --i;
        }
        if (i == 0) {
            return out;
        }
        ++idx[i - 1];
        for (std::size_t j = i; j < p; ++j) {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

gf2::BitVector wedge(const std::vector<gf2::BitVector>& vectors, std::size_t m)
{
    const auto index = wedge_index(m, vectors.size());
    gf2::BitVector out(index.size());
    for (std::size_t i = 0; i < index.size(); ++i) {
        out.set(i, det_mod2(vectors, index[i]));
    }
    return out;
}

gf2::Matrix compound_matrix(const gf2::Matrix& m, std::size_t p)
{
    const auto rows = wedge_index(m.rows(), p);
    const auto cols = wedge_index(m.cols(), p);
    gf2::Matrix out(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        std::vector<gf2::BitVector> sub;
        for (std::size_t r : rows[i]) {
            sub.push_back(m.row(r));
        }
        for (std::size_t j = 0; j < cols.size(); ++j) {
            out.set(i, j, det_mod2(sub, cols[j]));
        }
    }
    return out;
}

gf2::Subspace multitangent_space(const TropicalComplex& x, std::size_t face, std::size_t p)
{
    if (p > x.n()) {
        throw CosheafError("multitangent_space: p out of range");
    }
    const auto& f = x.face(face);
    const std::size_t m = f.ambient_dim;
    const std::size_t amb = binomial(m, p);
    if (p == 0) {
        return gf2::Subspace::full(1);
    }
    std::vector<gf2::BitVector> gens;
    for (std::size_t s : f.facets) {
        const auto& basis = x.face(s).tangent.basis();
        for (const auto& subset : wedge_index(basis.size(), p)) {
            std::vector<gf2::BitVector> vs;
            for (std::size_t i : subset) {
                vs.push_back(basis[i]);
            }
            gens.push_back(wedge(vs, m));
        }
    }
    return gf2::Subspace::span(amb, gens);
}

gf2::Matrix multitangent_map(const TropicalComplex& x, std::size_t sigma, std::size_t tau, std::size_t p)
{
    const auto& s = x.face(sigma);
    const auto& t = x.face(tau);
    if (!std::binary_search(s.boundary.begin(), s.boundary.end(), tau)) {
        throw CosheafError("multitangent_map: " + t.id.str() + " is not in the boundary of " +
                           s.id.str());
    }
    if (s.id.sedentarity == t.id.sedentarity) {
        return gf2::Matrix::identity(binomial(s.ambient_dim, p));
    }
    return compound_matrix(x.projection_matrix(s.id.sedentarity, t.id.sedentarity), p);
}

CosheafAssignment multitangent_cosheaf(const TropicalComplex& x, std::size_t p)
{
    CosheafAssignment g;
    for (std::size_t i = 0; i < x.faces().size(); ++i) {
        g.spaces.push_back(multitangent_space(x, i, p));
    }
    for (std::size_t i = 0; i < x.faces().size(); ++i) {
        for (std::size_t j : x.face(i).boundary) {
            g.maps.emplace(std::make_pair(i, j), multitangent_map(x, i, j, p));
        }
    }
    return g;
}

void check_flavor(const TropicalComplex& x, Flavor flavor)
{
    if (flavor == Flavor::ordinary && !x.compact()) {
        throw CosheafError("ordinary homology requested on a non-compact complex; "
                           "use Borel-Moore homology");
    }
}

ChainComplex assemble_complex(const TropicalComplex& x, const CosheafAssignment& g, Flavor flavor)
{
    check_flavor(x, flavor);
    const std::size_t top = x.n();
    ChainComplex c;
    c.dims.assign(top + 1, 0);
    c.faces.resize(top + 1);
    c.offsets.resize(top + 1);
    for (std::size_t i = 0; i < x.faces().size(); ++i) {
        const std::size_t q = x.face(i).dim;
        c.faces[q].push_back(i);
        c.offsets[q].push_back(c.dims[q]);
        c.dims[q] += g.spaces[i].dim();
    }
    c.boundary.resize(top + 1);
    c.boundary[0] = gf2::Matrix(0, c.dims[0]);
    for (std::size_t q = 1; q <= top; ++q) {
        gf2::Matrix d(c.dims[q - 1], c.dims[q]);
        for (std::size_t a = 0; a < c.faces[q].size(); ++a) {
            const std::size_t sigma = c.faces[q][a];
            const auto& basis = g.spaces[sigma].basis();
            for (std::size_t tau : x.face(sigma).boundary) {
                const auto pos = std::find(c.faces[q - 1].begin(), c.faces[q - 1].end(), tau) -
                                 c.faces[q - 1].begin();
                const std::size_t row_offset = c.offsets[q - 1][static_cast<std::size_t>(pos)];
                const gf2::Matrix& m = g.map(sigma, tau);
                for (std::size_t k = 0; k < basis.size(); ++k) {
                    const auto coords = g.spaces[tau].coordinates(m.apply(basis[k]));
                    if (!coords) {
                        throw CosheafError("cosheaf map " + x.face(sigma).id.str() + " -> " +
                                           x.face(tau).id.str() + " leaves the target space");
                    }
                    for (std::size_t r = coords->find_first(); r != gf2::BitVector::npos;
                         r = coords->find_next(r)) {
                        d.row(row_offset + r).flip(c.offsets[q][a] + k);
                    }
                }
            }
        }
        c.boundary[q] = std::move(d);
    }
    for (std::size_t q = 2; q <= top; ++q) {
        if (!(c.boundary[q - 1] * c.boundary[q]).is_zero()) {
            throw CosheafError("boundary squares to a non-zero map in degree " + std::to_string(q));
        }
    }
    return c;
}

std::vector<gf2::Subspace> subcosheaf_chains(const ChainComplex& c, const CosheafAssignment& g,
                                             const std::vector<gf2::Subspace>& sub)
{
    std::vector<gf2::Subspace> out;
    for (std::size_t q = 0; q < c.dims.size(); ++q) {
        std::vector<gf2::BitVector> gens;
        for (std::size_t a = 0; a < c.faces[q].size(); ++a) {
            const std::size_t f = c.faces[q][a];
            for (const auto& v : sub[f].basis()) {
                const auto coords = g.spaces[f].coordinates(v);
                if (!coords) {
                    throw CosheafError("sub-cosheaf is not contained in the ambient cosheaf");
                }
                gf2::BitVector chain(c.dims[q]);
                for (std::size_t r = coords->find_first(); r != gf2::BitVector::npos;
                     r = coords->find_next(r)) {
                    chain.set(c.offsets[q][a] + r);
                }
                gens.push_back(chain);
            }
        }
        out.push_back(gf2::Subspace::span(c.dims[q], gens));
    }
    return out;
}

BettiTable homology_dims(const ChainComplex& c)
{
    BettiTable t;
    const std::size_t top = c.dims.size();
    std::vector<std::size_t> ranks(top + 1, 0);
    for (std::size_t q = 1; q < top; ++q) {
        ranks[q] = gf2::rank(c.boundary[q]);
    }
    for (std::size_t q = 0; q < top; ++q) {
        t.dims.push_back(c.dims[q] - ranks[q] - ranks[q + 1]);
    }
    return t;
}

long long euler_char(const ChainComplex& c)
{
    long long s = 0;
    for (std::size_t q = 0; q < c.dims.size(); ++q) {
        s += (q % 2 == 0 ? 1 : -1) * static_cast<long long>(c.dims[q]);
    }
    return s;
}

std::vector<std::vector<std::size_t>> tropical_homology(const TropicalComplex& x, Flavor flavor)
{
    const std::size_t n = x.n();
    std::vector<std::vector<std::size_t>> table(n + 1, std::vector<std::size_t>(n + 1, 0));
    for (std::size_t p = 0; p <= n; ++p) {
        const auto h = homology_dims(assemble_complex(x, multitangent_cosheaf(x, p), flavor));
        for (std::size_t q = 0; q <= n; ++q) {
            table[q][p] = h.dims[q];
        }
    }
    return table;
}

long long chi_y_at_minus_one(const TropicalComplex& x, Flavor flavor)
{
    long long s = 0;
    for (std::size_t p = 0; p <= x.n(); ++p) {
        s += euler_char(assemble_complex(x, multitangent_cosheaf(x, p), flavor));
    }
    return s;
}

std::vector<std::string> verify_cosheaf(const TropicalComplex& x, const CosheafAssignment& g)
{
    std::vector<std::string> failures;
    for (std::size_t s = 0; s < x.faces().size(); ++s) {
        for (std::size_t t : x.face(s).boundary) {
            const auto& m = g.map(s, t);
            for (const auto& v : g.spaces[s].basis()) {
                if (!g.spaces[t].contains(m.apply(v))) {
                    failures.push_back("map " + x.face(s).id.str() + " -> " + x.face(t).id.str() +
                                       " leaves the target space");
                    break;
                }
            }
        }
        // Two-step paths s -> t -> r grouped by endpoint must agree on G(s).
        std::map<std::size_t, gf2::Matrix> composite;
        for (std::size_t t : x.face(s).boundary) {
            for (std::size_t r : x.face(t).boundary) {
                gf2::Matrix path = g.map(t, r) * g.map(s, t);
                auto [it, inserted] = composite.emplace(r, path);
                if (inserted) {
                    continue;
                }
                for (const auto& v : g.spaces[s].basis()) {
                    if (!(it->second.apply(v) == path.apply(v))) {
                        failures.push_back("composition " + x.face(s).id.str() + " -> " +
                                           x.face(r).id.str() + " depends on the path");
                        break;
                    }
                }
            }
        }
    }
    return failures;
}

EulerPolyCheck euler_poly_face(const TropicalComplex& x, std::size_t face)
{
    const auto& f = x.face(face);
    EulerPolyCheck out;
    out.expected = tropical::expected_multitangent_dims(x.n(), f.dim, f.id.sedentarity.size());
    for (std::size_t p = 0; p <= x.n(); ++p) {
        out.actual.push_back(static_cast<long long>(multitangent_space(x, face, p).dim()));
    }
    out.ok = out.actual == out.expected;
    return out;
}

bool vanishing_pattern_holds(const std::vector<std::vector<std::size_t>>& table, std::size_t n)
{
    for (std::size_t q = 0; q < table.size(); ++q) {
        for (std::size_t p = 0; p < table[q].size(); ++p) {
            if (p + q != n && p != q && table[q][p] != 0) {
                return false;
            }
        }
    }
    return true;
}

}   // namespace patchwork::cosheaf
