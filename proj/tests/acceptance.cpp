/**
 * Acceptance runner: checks the six acceptance criteria on the bundled
 * instances and the randomized property corpus, printing one PASS/FAIL line
 * per criterion. Exits non-zero if any criterion fails.
 */

#include "generators.hpp"
#include "oracles.hpp"
#include "properties.hpp"

#include "patchwork/curves.hpp"
#include "patchwork/filtration.hpp"
#include "patchwork/instance.hpp"
#include "patchwork/parallel.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

using namespace patchwork;

namespace {

struct Outcome
{
    std::vector<std::string> failures;
    std::string detail;

    void expect(bool ok, const std::string& what)
    {
        if (!ok) {
            failures.push_back(what);
        }
    }
};

instance::Loaded load(const std::string& name)
{
    return instance::load(instance::parse_instance(std::string(INSTANCES_DIR) + "/" + name));
}

std::size_t face(const tropical::TropicalComplex& x, const std::string& id)
{
    return x.index_of(tropical::FaceId::parse(id));
}

gf2::BitVector bits(std::initializer_list<int> b)
{
    return gf2::BitVector::from_bits(std::vector<int>(b));
}

std::string join(const std::vector<std::size_t>& v)
{
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) {
        os << (i ? "," : "") << v[i];
    }
    os << ')';
    return os.str();
}

Outcome criterion_line()
{
    Outcome o;
    const auto l = load("line.json");
    const auto& x = l.complex;
    o.expect(l.phase && real::validate_phase(x, *l.phase).empty(), "phase of line.json is not valid");

    const std::set<std::set<gf2::BitVector>> want{{bits({0, 0}), bits({1, 0})},
                                                  {bits({0, 0}), bits({0, 1})},
                                                  {bits({0, 1}), bits({1, 0})}};
    std::set<std::set<gf2::BitVector>> got;
    for (const auto& [idx, space] : l.phase->facets) {
        const auto el = space.elements();
        got.insert(std::set<gf2::BitVector>(el.begin(), el.end()));
    }
    o.expect(got == want && l.phase->facets.size() == 3, "edge sign sets differ from the expected three pairs");

    const auto betti = real::real_betti(x, *l.phase, cosheaf::Flavor::ordinary).dims;
    o.expect(betti == std::vector<std::size_t>{1, 1}, "real Betti numbers " + join(betti) + ", expected (1,1)");
    o.detail = "betti " + join(betti);
    return o;
}

Outcome criterion_plane()
{
    Outcome o;
    const auto l = load("plane.json");
    const auto& x = l.complex;
    const auto& phase = *l.phase;

    const std::map<std::string, gf2::BitVector> example{
        {"sed{}/cell{0,3}", bits({0, 0, 0})},   // σ12
        {"sed{}/cell{0,2}", bits({0, 0, 0})},   // σ13
        {"sed{}/cell{0,1}", bits({0, 0, 0})},   // σ23
        {"sed{}/cell{2,3}", bits({0, 0, 1})},   // σ01
        {"sed{}/cell{1,3}", bits({1, 0, 0})},   // σ02
        {"sed{}/cell{1,2}", bits({0, 1, 0})},   // σ03
    };
    std::map<std::size_t, gf2::BitVector> bases;
    for (const auto& [id, b] : example) {
        bases.emplace(face(x, id), b);
    }
    o.expect(real::phase_from_bases(x, bases) == phase, "signs do not give the example phase");

    const auto ext = real::extend_phase(x, phase);
    const std::size_t sigma12 = face(x, "sed{}/cell{0,3}");
    const std::size_t tau1 = face(x, "sed{}/cell{0,2,3}");
    const std::vector<std::size_t> dims{real::sign_space(x, ext, sigma12).dim(),
                                        real::sign_space(x, ext, tau1).dim(),
                                        filtration::kp_space(x, ext, sigma12, 1).dim(),
                                        filtration::kp_space(x, ext, sigma12, 2).dim(),
                                        filtration::kp_space(x, ext, tau1, 1).dim(),
                                        filtration::kp_space(x, ext, tau1, 2).dim()};
    o.expect(dims == std::vector<std::size_t>{4, 6, 3, 1, 5, 2},
             "face dimensions " + join(dims) + ", expected (4,6,3,1,5,2)");

    const auto betti = real::real_betti(x, phase, cosheaf::Flavor::ordinary).dims;
    o.expect(betti == std::vector<std::size_t>{1, 1, 1}, "real Betti numbers " + join(betti));

    const auto trop = cosheaf::tropical_homology(x, cosheaf::Flavor::ordinary);
    for (std::size_t q = 0; q <= 2; ++q) {
        for (std::size_t p = 0; p <= 2; ++p) {
            o.expect(trop[q][p] == (p == q ? 1U : 0U),
                     "dim H_" + std::to_string(q) + "(X;F_" + std::to_string(p) + ") = " + std::to_string(trop[q][p]));
        }
    }

    const auto fc = filtration::filtered_complex(x, ext, cosheaf::Flavor::ordinary);
    const auto report = filtration::spectral_sequence(fc);
    o.expect(report.degeneration_page == 1, "degenerates at page " + std::to_string(report.degeneration_page));
    o.expect(filtration::maximality(x, report), "not maximal");
    const auto euler = filtration::euler_invariance(x, report, cosheaf::Flavor::ordinary);
    o.expect(euler.ok && euler.real_euler == 1 && euler.chi_y == 1,
             "Euler invariance " + std::to_string(euler.real_euler) + " vs " + std::to_string(euler.chi_y));
    o.detail = "S_E/K dims " + join(dims) + ", betti " + join(betti) + ", chi " + std::to_string(euler.chi_y);
    return o;
}

Outcome criterion_concurrent()
{
    Outcome o;
    const std::vector<std::vector<int>> t1{{0, 1, 1}, {1, 0, 1}, {1, 1, 0}};
    const std::vector<std::vector<int>> t2{{1, 1, 1}, {1, 1, 1}, {1, 1, 1}};
    const std::vector<std::tuple<std::string, std::vector<std::vector<int>>, std::size_t>> cases{
        {"concurrent-T1.json", t1, 2}, {"concurrent-T2.json", t2, 3}};
    std::vector<std::size_t> counts;
    for (const auto& [file, matrix, comps] : cases) {
        const auto l = load(file);
        const auto& x = l.complex;
        const auto& t = *l.twists;
        o.expect(curves::cycle_basis(x).cycles.size() == 3, file + ": genus is not 3");
        o.expect(curves::is_admissible(x, t), file + ": twist set is not admissible");
        o.expect(curves::d1_matrix(x, t).to_nested() == matrix, file + ": d1 matrix differs");
        const std::size_t c = curves::component_count(x, t);
        counts.push_back(c);
        o.expect(c == comps, file + ": " + std::to_string(c) + " components");
        const bool haas = curves::haas_predicate(x, t);
        o.expect(!haas, file + ": Haas predicate holds");

        o.expect(curves::twists_from_phase(x, *l.phase) == t, file + ": phase does not realize the twists");
        const auto ext = real::extend_phase(x, *l.phase);
        const auto report =
            filtration::spectral_sequence(filtration::filtered_complex(x, ext, cosheaf::Flavor::ordinary));
        o.expect(filtration::maximality(x, report) == haas, file + ": spectral maximality disagrees with Haas");
        o.expect(report.real_betti.at(0) == c, file + ": real b0 differs from the component count");
    }
    o.detail = "components " + join(counts);
    return o;
}

Outcome criterion_cubic()
{
    Outcome o;
    const auto l = load("cubic.json");
    const auto& x = l.complex;
    const auto basis = curves::cycle_basis(x);
    o.expect(basis.cycles.size() == 1, "cubic genus is not 1");
    const auto gamma = basis.cycles.front().edges;
    const auto entries = curves::enumerate_admissible(x);
    std::size_t realized = 0;
    for (const auto& e : entries) {
        std::size_t on = 0;
        for (std::size_t edge : e.twists) {
            on += std::count(gamma.begin(), gamma.end(), edge);
        }
        const std::size_t expected = on % 2 == 0 ? 2 : 1;
        o.expect(e.components == expected, "component count " + std::to_string(e.components) + " for |T∩γ| = " +
                                               std::to_string(on));
        o.expect(e.haas == (e.components == 2), "Haas predicate disagrees with b0 = g + 1");
        if (const auto signs = curves::realize_twists(x, e.twists)) {
            ++realized;
            const auto phase = real::phase_from_signs(x, *signs);
            const auto ext = real::extend_phase(x, phase);
            const auto report =
                filtration::spectral_sequence(filtration::filtered_complex(x, ext, cosheaf::Flavor::ordinary));
            o.expect(filtration::maximality(x, report) == e.haas, "Haas predicate disagrees with spectral maximality");
        }
    }
    o.expect(!entries.empty(), "no admissible twist sets");
    o.detail = std::to_string(entries.size()) + " admissible sets, " + std::to_string(realized) +
               " realized by signs and checked spectrally";
    return o;
}

Outcome criterion_properties()
{
    Outcome o;
    testing::Rng rng(20261016);
    const auto cases = testing::property_cases(rng, 80);
    std::vector<std::vector<std::string>> results(cases.size());
    parallel_for(cases.size(), [&](std::size_t i) { results[i] = testing::check_filtration_properties(cases[i]); });
    for (const auto& r : results) {
        for (const auto& f : r) {
            o.failures.push_back(f);
        }
    }
    testing::Rng mono(7);
    for (const auto& f : testing::check_monomial_oracle(mono, 300)) {
        o.failures.push_back(f);
    }
    o.detail = std::to_string(cases.size()) + " random complexes, 300 monomial trials";
    return o;
}

Outcome criterion_oracles()
{
    Outcome o;
    std::vector<std::pair<std::string, instance::Loaded>> curves_with_phase;
    for (const auto& name : {"line.json", "cubic.json", "concurrent-T1.json", "concurrent-T2.json"}) {
        curves_with_phase.emplace_back(name, load(name));
    }
    testing::Rng rng(4242);
    std::vector<testing::Case> random;
    while (random.size() < 40) {
        auto c = testing::property_cases(rng, 1, true).front();
        if (c.triangulation.dim() == 2) {
            random.push_back(std::move(c));
        }
    }
    std::size_t checked = 0;
    auto check = [&](const std::string& label, const tropical::TropicalComplex& x, const real::RealPhaseStructure& e,
                     const real::SignDistribution& signs) {
        curves::TwistSet t;
        try {
            t = curves::twists_from_phase(x, e);
        } catch (const std::exception& ex) {
            o.failures.push_back(label + ": " + ex.what());
            return;
        }
        std::vector<lattice::IndexSet> cells;
        for (std::size_t f : t) {
            cells.push_back(x.face(f).id.cell);
        }
        o.expect(cells == testing::sign_formula_twists(x.triangulation(), signs),
                 label + ": twists differ from the sign-formula oracle");
        const auto b0 = real::real_betti(x, e, cosheaf::Flavor::ordinary).dims.at(0);
        o.expect(curves::component_count(x, t) == b0, label + ": component count differs from real b0");
        ++checked;
    };
    for (const auto& [name, l] : curves_with_phase) {
        check(name, l.complex, *l.phase, *l.instance.signs);
    }
    for (const auto& c : random) {
        const auto x = tropical::TropicalComplex::build(c.triangulation, c.fan);
        check(c.label, x, real::phase_from_signs(x, c.signs), c.signs);
    }
    o.detail = std::to_string(checked) + " curves with phases";
    return o;
}

}   // namespace

int main()
{
    struct Criterion
    {
        int id;
        std::string name;
        double limit_seconds;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria{
        {1, "line instance", 1.0, criterion_line},
        {2, "plane instance", 5.0, criterion_plane},
        {3, "concurrent curve", 5.0, criterion_concurrent},
        {4, "cubic enumeration", 30.0, criterion_cubic},
        {5, "property suite", 300.0, criterion_properties},
        {6, "oracle equivalence", 60.0, criterion_oracles},
    };
    bool all = true;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.failures.push_back(std::string("exception: ") + e.what());
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (seconds > c.limit_seconds) {
            o.failures.push_back("took " + std::to_string(seconds) + " s, limit " + std::to_string(c.limit_seconds) +
                                 " s");
        }
        const bool pass = o.failures.empty();
        all = all && pass;
        std::ostringstream time;
        time.precision(3);
        time << std::fixed << seconds;
        std::cout << "criterion " << c.id << " (" << c.name << "): " << (pass ? "PASS" : "FAIL") << " [" << time.str()
                  << " s] " << o.detail << '\n';
        for (std::size_t i = 0; i < o.failures.size() && i < 20; ++i) {
            std::cout << "    " << o.failures[i] << '\n';
        }
        if (o.failures.size() > 20) {
            std::cout << "    ... " << o.failures.size() - 20 << " more\n";
        }
    }
    return all ? 0 : 1;
}
