#include "patchwork/filtration.hpp"

#include "patchwork/parallel.hpp"

#include <algorithm>
#include <bit>
#include <map>

namespace patchwork::filtration {

namespace {

gf2::BitVector monomial(const gf2::BitVector& anchor, const std::vector<gf2::BitVector>& directions,
                        std::size_t subset)
{
    const std::size_t m = anchor.size();
    gf2::BitVector out(std::size_t{1} << m);
    // Sum over T ⊆ S of w_{anchor + Σ_T v}.
    for (std::size_t t = subset;; t = (t - 1) & subset) {
        gf2::BitVector eps = anchor;
        for (std::size_t i = 0; i < directions.size(); ++i) {
            if (t & (std::size_t{1} << i)) {
                eps ^= directions[i];
            }
        }
        out.flip(real::sign_index(eps));
        if (t == 0) {
            break;
        }
    }
    return out;
}

const real::AffineSignSpace& facet_space(const ExtendedPhase& ext, std::size_t facet)
{
    const auto& s = ext.facet_spaces.at(facet);
    if (!s) {
        throw FiltrationError("face " + std::to_string(facet) + " is not a facet");
    }
    return *s;
}

std::size_t clamp_level(int p, std::size_t n)
{
    if (p <= 0) {
        return 0;
    }
    return std::min<std::size_t>(static_cast<std::size_t>(p), n + 1);
}

long long alternating(const Table& t)
{
    long long s = 0;
    for (std::size_t q = 0; q < t.size(); ++q) {
        for (auto d : t[q]) {
            s += (q % 2 == 0 ? 1 : -1) * static_cast<long long>(d);
        }
    }
    return s;
}

}   // namespace

gf2::Subspace monomial_span(const gf2::BitVector& anchor, const std::vector<gf2::BitVector>& directions,
                            std::size_t p)
{
    const std::size_t d = directions.size();
    std::vector<gf2::BitVector> gens;
    for (std::size_t s = 0; s < (std::size_t{1} << d); ++s) {
        if (static_cast<std::size_t>(std::popcount(s)) >= p) {
            gens.push_back(monomial(anchor, directions, s));
        }
    }
    return gf2::Subspace::span(std::size_t{1} << anchor.size(), gens);
}

gf2::Subspace kp_facet_space(const TropicalComplex& x, const ExtendedPhase& ext, std::size_t facet, int p)
{
    (void)x;
    const auto& e = facet_space(ext, facet);
    return monomial_span(e.canonical_base(), e.direction.basis(),
                         p <= 0 ? 0 : static_cast<std::size_t>(p));
}

gf2::Subspace kp_space(const TropicalComplex& x, const ExtendedPhase& ext, std::size_t face, int p)
{
    const auto& f = x.face(face);
    gf2::Subspace total(std::size_t{1} << f.ambient_dim);
    for (std::size_t s : f.facets) {
        total = gf2::subspace_sum(total, kp_facet_space(x, ext, s, p));
    }
    return total;
}

gf2::Matrix bv_map(const TropicalComplex& x, const ExtendedPhase& ext, std::size_t face, std::size_t p)
{
    const auto& f = x.face(face);
    const std::size_t m = f.ambient_dim;
    const std::size_t amb = std::size_t{1} << m;
    const std::size_t wdim = cosheaf::wedge_index(m, p).size();
    std::vector<gf2::BitVector> gens;
    for (std::size_t s : f.facets) {
        const auto& e = facet_space(ext, s);
        const auto anchor = e.canonical_base();
        const auto& dirs = e.direction.basis();
        for (std::size_t subset = 0; subset < (std::size_t{1} << dirs.size()); ++subset) {
            const auto size = static_cast<std::size_t>(std::popcount(subset));
            if (size < p) {
                continue;
            }
            gf2::BitVector h(wdim);
            if (size == p) {
                std::vector<gf2::BitVector> vs;
                for (std::size_t i = 0; i < dirs.size(); ++i) {
                    if (subset & (std::size_t{1} << i)) {
                        vs.push_back(dirs[i]);
                    }
                }
                h = cosheaf::wedge(vs, m);
            }
            gens.push_back(monomial(anchor, dirs, subset).concat(h));
        }
    }
    const auto joint = gf2::Subspace::span(amb + wdim, gens);
    gf2::Matrix out(wdim, amb);
    for (std::size_t i = 0; i < joint.dim(); ++i) {
        const std::size_t pivot = joint.pivots()[i];
        if (pivot >= amb) {
            throw FiltrationError("Viro map bv_" + std::to_string(p) + " is not well defined on " +
                                  f.id.str());
        }
        const auto h = joint.basis()[i].slice(amb, amb + wdim);
        for (std::size_t r = h.find_first(); r != gf2::BitVector::npos; r = h.find_next(r)) {
            out.set(r, pivot);
        }
    }
    return out;
}

CheckReport verify_exact_commutative(const TropicalComplex& x, const ExtendedPhase& ext)
{
    CheckReport report;
    const std::size_t n = x.n();
    const std::size_t nf = x.faces().size();
    std::vector<std::vector<gf2::Subspace>> k(nf);
    std::vector<std::vector<std::optional<gf2::Matrix>>> bv(nf);
    std::vector<std::vector<std::string>> errors(nf);
    parallel_for(nf, [&](std::size_t f) {
        for (std::size_t p = 0; p <= n + 1; ++p) {
            k[f].push_back(kp_space(x, ext, f, static_cast<int>(p)));
        }
        for (std::size_t p = 0; p <= n; ++p) {
            try {
                bv[f].push_back(bv_map(x, ext, f, p));
            } catch (const FiltrationError& e) {
                bv[f].push_back(std::nullopt);
                errors[f].push_back(e.what());
            }
        }
    });
    for (std::size_t f = 0; f < nf; ++f) {
        for (const auto& e : errors[f]) {
            report.failures.push_back(e);
        }
    }
    for (std::size_t f = 0; f < nf; ++f) {
        const auto& face = x.face(f);
        for (std::size_t p = 0; p <= n; ++p) {
            ++report.checks;
            const std::string where = face.id.str() + " p=" + std::to_string(p);
            if (!k[f][p].contains(k[f][p + 1])) {
                report.failures.push_back("K_{p+1} not contained in K_p at " + where);
            }
            if (!bv[f][p]) {
                continue;
            }
            const auto& b = *bv[f][p];
            const auto fp = cosheaf::multitangent_space(x, f, p);
            const auto img = gf2::image(b, k[f][p]);
            if (!(img == fp)) {
                report.failures.push_back("image of bv is not F_p at " + where);
            }
            if (!(gf2::image(b, k[f][p + 1]).dim() == 0) ||
                k[f][p].dim() - img.dim() != k[f][p + 1].dim()) {
                report.failures.push_back("kernel of bv is not K_{p+1} at " + where);
            }
            for (std::size_t t : face.boundary) {
                ++report.checks;
                const std::string pair = face.id.str() + " -> " + x.face(t).id.str() +
                                         " p=" + std::to_string(p);
                const auto sm = real::sign_map(x, f, t);
                const auto fm = cosheaf::multitangent_map(x, f, t, p);
                for (const auto& v : k[f][p].basis()) {
                    const auto moved = sm.apply(v);
                    if (!k[t][p].contains(moved)) {
                        report.failures.push_back("sign map does not preserve K_p on " + pair);
                        break;
                    }
                    if (bv[t][p] && !(bv[t][p]->apply(moved) == fm.apply(b.apply(v)))) {
                        report.failures.push_back("bv does not commute with the cosheaf maps on " + pair);
                        break;
                    }
                }
            }
        }
    }
    return report;
}

const gf2::Subspace& FilteredChainComplex::level(int p, std::size_t q) const
{
    return levels[clamp_level(p, n)][q];
}

FilteredChainComplex filtered_complex(const TropicalComplex& x, const ExtendedPhase& ext, Flavor flavor)
{
    FilteredChainComplex fc;
    fc.n = x.n();
    const auto g = real::sign_cosheaf(x, ext);
    fc.complex = cosheaf::assemble_complex(x, g, flavor);
    std::vector<gf2::Subspace> full;
    for (auto d : fc.complex.dims) {
        full.push_back(gf2::Subspace::full(d));
    }
    fc.levels.push_back(std::move(full));
    fc.levels.resize(fc.n + 2);
    parallel_for(fc.n + 1, [&](std::size_t i) {
        const int p = static_cast<int>(i) + 1;
        std::vector<gf2::Subspace> sub;
        for (std::size_t f = 0; f < x.faces().size(); ++f) {
            sub.push_back(kp_space(x, ext, f, p));
        }
        fc.levels[i + 1] = cosheaf::subcosheaf_chains(fc.complex, g, sub);
    });
    return fc;
}

std::vector<std::string> check_filtration(const FilteredChainComplex& fc)
{
    std::vector<std::string> out;
    const auto& c = fc.complex;
    for (std::size_t p = 0; p < fc.levels.size(); ++p) {
        for (std::size_t q = 0; q < c.dims.size(); ++q) {
            if (p + 1 < fc.levels.size() && !fc.levels[p][q].contains(fc.levels[p + 1][q])) {
                out.push_back("C_" + std::to_string(q) + "(K_" + std::to_string(p + 1) +
                              ") is not contained in C_" + std::to_string(q) + "(K_" +
                              std::to_string(p) + ")");
            }
            if (q >= 1 && !fc.levels[p][q - 1].contains(gf2::image(c.boundary[q], fc.levels[p][q]))) {
                out.push_back("boundary does not preserve C(K_" + std::to_string(p) + ") in degree " +
                              std::to_string(q));
            }
        }
    }
    return out;
}

std::vector<std::size_t> relative_homology(const FilteredChainComplex& fc, int p)
{
    const auto& c = fc.complex;
    const std::size_t top = c.dims.size();
    std::vector<std::size_t> quotient(top);
    std::vector<std::size_t> ranks(top + 1, 0);
    for (std::size_t q = 0; q < top; ++q) {
        quotient[q] = gf2::quotient_dim(fc.level(p, q), fc.level(p + 1, q));
        if (q >= 1) {
            const auto& lower = fc.level(p + 1, q - 1);
            ranks[q] = gf2::subspace_sum(gf2::image(c.boundary[q], fc.level(p, q)), lower).dim() -
                       lower.dim();
        }
    }
    std::vector<std::size_t> out(top);
    for (std::size_t q = 0; q < top; ++q) {
        out[q] = quotient[q] - ranks[q] - ranks[q + 1];
    }
    return out;
}

SpectralReport spectral_sequence(const FilteredChainComplex& fc)
{
    const std::size_t n = fc.n;
    const auto& c = fc.complex;
    const int lo = -static_cast<int>(n) - 2;
    const int hi = static_cast<int>(n) + 1;
    const std::size_t width = static_cast<std::size_t>(hi - lo + 1);
    const std::size_t pages = n + 1;

    // Z^r_{q,p} = F_p C_q ∩ ∂^{-1}(F_{p+r} C_{q-1}) for r = 0..n+1.
    std::vector<gf2::Subspace> z((pages + 1) * (n + 1) * width);
    auto z_slot = [&](std::size_t r, std::size_t q, int p) {
        p = std::clamp(p, lo, hi);
        return (r * (n + 1) + q) * width + static_cast<std::size_t>(p - lo);
    };
    parallel_for(z.size(), [&](std::size_t i) {
        const std::size_t r = i / ((n + 1) * width);
        const std::size_t q = (i / width) % (n + 1);
        const int p = static_cast<int>(i % width) + lo;
        const auto& fp = fc.level(p, q);
        if (q == 0) {
            z[i] = fp;
        } else {
            z[i] = gf2::subspace_intersection(
                fp, gf2::preimage_subspace(c.boundary[q], fc.level(p + static_cast<int>(r), q - 1)));
        }
    });
    auto zr = [&](std::size_t r, std::size_t q, int p) -> const gf2::Subspace& { return z[z_slot(r, q, p)]; };
    auto br = [&](std::size_t r, std::size_t q, int p) {
        gf2::Subspace b = zr(r - 1, q, p + 1);
        if (q < n) {
            b = gf2::subspace_sum(b, gf2::image(c.boundary[q + 1],
                                                zr(r - 1, q + 1, p - static_cast<int>(r) + 1)));
        }
        return b;
    };

    SpectralReport report;
    report.n = n;
    report.real_betti = cosheaf::homology_dims(c).dims;
    for (std::size_t r = 1; r <= pages; ++r) {
        Table page(n + 1, std::vector<std::size_t>(n + 1, 0));
        std::vector<std::size_t> ranks((n + 1) * (n + 1), 0);
        parallel_for((n + 1) * (n + 1), [&](std::size_t i) {
            const std::size_t q = i / (n + 1);
            const std::size_t p = i % (n + 1);
            const int pi = static_cast<int>(p);
            page[q][p] = gf2::quotient_dim(zr(r, q, pi), br(r, q, pi));
            if (q >= 1 && p + r <= n) {
                const auto target = br(r, q - 1, pi + static_cast<int>(r));
                const auto moved = gf2::image(c.boundary[q], zr(r, q, pi));
                ranks[i] = gf2::subspace_sum(moved, target).dim() - target.dim();
            }
        });
        std::vector<Differential> diffs;
        for (std::size_t q = 0; q <= n; ++q) {
            for (std::size_t p = 0; p <= n; ++p) {
                if (ranks[q * (n + 1) + p] != 0) {
                    diffs.push_back({r, q, p, ranks[q * (n + 1) + p]});
                }
            }
        }
        if (!report.pages.empty()) {
            const auto& prev = report.pages.back();
            const auto& prev_diffs = report.differentials.back();
            for (std::size_t q = 0; q <= n; ++q) {
                for (std::size_t p = 0; p <= n; ++p) {
                    std::size_t expect = prev[q][p];
                    for (const auto& d : prev_diffs) {
                        const bool out = d.q == q && d.p == p;
                        const bool in = d.q == q + 1 && d.p + d.r == p;
                        if (out || in) {
                            expect -= d.rank;
                        }
                    }
                    if (expect != page[q][p]) {
                        throw FiltrationError("spectral sequence page " + std::to_string(r) +
                                              " disagrees with the ranks of the previous differentials");
                    }
                }
            }
        }
        report.page_euler.push_back(alternating(page));
        report.pages.push_back(std::move(page));
        report.differentials.push_back(std::move(diffs));
    }
    report.e_infinity = report.pages.back();
    report.degeneration_page = 1;
    for (std::size_t r = 1; r <= report.differentials.size(); ++r) {
        if (!report.differentials[r - 1].empty()) {
            report.degeneration_page = r + 1;
        }
    }
    return report;
}

bool maximality(const TropicalComplex& x, const SpectralReport& report)
{
    if (!x.compact()) {
        throw FiltrationError("maximality is only defined for compact complexes");
    }
    return std::all_of(report.differentials.begin(), report.differentials.end(),
                       [](const std::vector<Differential>& d) { return d.empty(); });
}

Shape classify_differential(std::size_t n, const Differential& d)
{
    const long long nn = static_cast<long long>(n);
    const long long q = static_cast<long long>(d.q);
    const long long p = static_cast<long long>(d.p);
    const long long r = static_cast<long long>(d.r);
    if (r == 1 && p + q == nn) {
        return Shape::antidiagonal_first;
    }
    if (p + r == q - 1 && r == 2 * (q - 1) - nn + 1) {
        return Shape::into_diagonal;
    }
    if (p == q && r == nn - 2 * q + 1) {
        return Shape::out_of_diagonal;
    }
    return Shape::other;
}

std::string shape_name(Shape s)
{
    switch (s) {
        case Shape::antidiagonal_first: return "first-page antidiagonal";
        case Shape::into_diagonal: return "into diagonal";
        case Shape::out_of_diagonal: return "out of diagonal";
        case Shape::other: return "other";
    }
    return "other";
}

SharpnessReport sharpness_report(const TropicalComplex& x, const SpectralReport& report)
{
    SharpnessReport out;
    const std::size_t n = x.n();
    const Table& e1 = report.pages.front();
    out.hypotheses_verified = cosheaf::vanishing_pattern_holds(e1, n);
    for (std::size_t q = 0; q <= n; ++q) {
        RowSharpness row;
        row.q = q;
        row.betti = report.real_betti[q];
        for (auto d : e1[q]) {
            row.bound += d;
        }
        row.attained = row.betti == row.bound;
        for (const auto& page : report.differentials) {
            for (const auto& d : page) {
                if (d.q == q || d.q == q + 1) {
                    row.touching.push_back(d);
                }
            }
        }
        out.rows.push_back(std::move(row));
    }
    for (const auto& page : report.differentials) {
        for (const auto& d : page) {
            if (classify_differential(n, d) == Shape::other) {
                out.unexpected.push_back(d);
            }
        }
    }
    return out;
}

EulerReport euler_invariance(const TropicalComplex& x, const SpectralReport& report, Flavor flavor)
{
    EulerReport out;
    out.page_euler = report.page_euler;
    for (std::size_t q = 0; q < report.real_betti.size(); ++q) {
        out.real_euler += (q % 2 == 0 ? 1 : -1) * static_cast<long long>(report.real_betti[q]);
    }
    out.chi_y = cosheaf::chi_y_at_minus_one(x, flavor);
    out.ok = std::all_of(out.page_euler.begin(), out.page_euler.end(),
                         [&](long long v) { return v == out.real_euler; }) &&
             out.real_euler == out.chi_y;
    return out;
}

}   // namespace patchwork::filtration
