#include "patchwork/report.hpp"

#include "patchwork/cosheaf.hpp"
#include "patchwork/curves.hpp"
#include "patchwork/filtration.hpp"

#include <algorithm>
#include <sstream>

namespace patchwork::report {

namespace {

using nlohmann::json;
using tropical::TropicalComplex;

json ids(const TropicalComplex& x, const std::vector<std::size_t>& faces)
{
    json out = json::array();
    for (std::size_t f : faces) {
        out.push_back(x.face(f).id.str());
    }
    return out;
}

json matrix_json(const gf2::Matrix& m)
{
    json out = json::array();
    for (const auto& row : m.to_nested()) {
        json r = json::array();
        for (int v : row) {
            r.push_back(v);
        }
        out.push_back(std::move(r));
    }
    return out;
}

json differential_json(std::size_t n, const filtration::Differential& d)
{
    return json{{"r", d.r},
                {"q", d.q},
                {"p", d.p},
                {"rank", d.rank},
                {"shape", filtration::shape_name(filtration::classify_differential(n, d))}};
}

json sign_json(const gf2::BitVector& v)
{
    json out = json::array();
    for (std::size_t i = 0; i < v.size(); ++i) {
        out.push_back(v.test(i) ? 1 : 0);
    }
    return out;
}

cosheaf::Flavor flavor_for(const TropicalComplex& x, const Options& o)
{
    return (o.borel_moore || !x.compact()) ? cosheaf::Flavor::borel_moore : cosheaf::Flavor::ordinary;
}

std::string flavor_name(cosheaf::Flavor f)
{
    return f == cosheaf::Flavor::borel_moore ? "borel-moore" : "ordinary";
}

const real::RealPhaseStructure& need_phase(const instance::Loaded& l)
{
    if (!l.phase) {
        throw instance::InstanceError("this command needs signs or a phase in the instance");
    }
    return *l.phase;
}

void need_compact(const TropicalComplex& x, const std::string& what)
{
    if (!x.compact()) {
        throw instance::InstanceError(what + " needs a compact complex (compactification \"newton\")");
    }
}

struct SpectralData
{
    filtration::SpectralReport report;
    real::ExtendedPhase ext;
    filtration::FilteredChainComplex fc;
};

SpectralData spectral_data(const instance::Loaded& l, cosheaf::Flavor flavor)
{
    auto ext = real::extend_phase(l.complex, need_phase(l));
    auto fc = filtration::filtered_complex(l.complex, ext, flavor);
    auto report = filtration::spectral_sequence(fc);
    return {std::move(report), std::move(ext), std::move(fc)};
}

json run_validate(const instance::Loaded& l)
{
    const auto& x = l.complex;
    json faces_by_dim = json::array();
    for (std::size_t k = 0; k <= x.n(); ++k) {
        faces_by_dim.push_back(x.faces_of_dim(k).size());
    }
    json result{{"ambient_dim", x.ambient_dim()},
                {"points", x.triangulation().points.size()},
                {"simplices", x.triangulation().simplices.size()},
                {"compact", x.compact()},
                {"strata", x.strata().size()},
                {"faces_by_dim", faces_by_dim},
                {"phase", l.phase ? "valid" : "none"}};
    if (l.phase) {
        json signs = json::array();
        for (int s : real::signs_from_phase(x, *l.phase)) {
            signs.push_back(s > 0 ? "+" : "-");
        }
        result["signs"] = signs;
    }
    if (l.twists) {
        result["twists"] = ids(x, *l.twists);
    }
    return result;
}

json run_emit_ids(const instance::Loaded& l)
{
    const auto& x = l.complex;
    json faces = json::array();
    for (const auto& f : x.faces()) {
        faces.push_back(json{{"id", f.id.str()}, {"dim", f.dim}, {"bounded", f.bounded}});
    }
    json result{{"faces", faces}};
    if (l.phase) {
        const auto ext = real::extend_phase(x, *l.phase);
        json sets = json::object();
        for (std::size_t i = 0; i < x.faces().size(); ++i) {
            json s = json::array();
            for (const auto& eps : ext.sign_sets[i]) {
                s.push_back(sign_json(eps));
            }
            sets[x.face(i).id.str()] = s;
        }
        result["sign_sets"] = sets;
    }
    return result;
}

json run_trop_homology(const instance::Loaded& l, cosheaf::Flavor flavor)
{
    const auto& x = l.complex;
    const auto table = cosheaf::tropical_homology(x, flavor);
    json result{{"flavor", flavor_name(flavor)},
                {"table", table},
                {"chi_y", cosheaf::chi_y_at_minus_one(x, flavor)}};
    if (x.compact()) {
        result["vanishing_pattern"] = cosheaf::vanishing_pattern_holds(table, x.n());
    }
    return result;
}

json run_real_betti(const instance::Loaded& l, cosheaf::Flavor flavor)
{
    const auto betti = real::real_betti(l.complex, need_phase(l), flavor);
    return json{{"flavor", flavor_name(flavor)}, {"betti", betti.dims}, {"total", betti.total()}};
}

json run_spectral(const instance::Loaded& l, cosheaf::Flavor flavor, const Options& o)
{
    const auto& x = l.complex;
    const auto data = spectral_data(l, flavor);
    const auto& rep = data.report;
    const std::size_t last = std::min(rep.pages.size(), o.max_page.value_or(rep.pages.size()));
    json pages = json::array();
    json diffs = json::array();
    for (std::size_t r = 1; r <= last; ++r) {
        pages.push_back(json{{"r", r}, {"table", rep.pages[r - 1]}});
        for (const auto& d : rep.differentials[r - 1]) {
            diffs.push_back(differential_json(x.n(), d));
        }
    }
    json result{{"flavor", flavor_name(flavor)},
                {"pages", pages},
                {"differentials", diffs},
                {"e_infinity", rep.e_infinity},
                {"betti", rep.real_betti},
                {"degeneration_page", rep.degeneration_page},
                {"page_euler", rep.page_euler}};
    if (x.compact()) {
        result["maximal"] = filtration::maximality(x, rep);
    }
    return result;
}

json run_maximal(const instance::Loaded& l)
{
    const auto& x = l.complex;
    need_compact(x, "maximal");
    const auto data = spectral_data(l, cosheaf::Flavor::ordinary);
    std::size_t bound = 0;
    for (const auto& row : data.report.pages.front()) {
        for (auto v : row) {
            bound += v;
        }
    }
    std::size_t total = 0;
    for (auto b : data.report.real_betti) {
        total += b;
    }
    return json{{"maximal", filtration::maximality(x, data.report)},
                {"betti", data.report.real_betti},
                {"betti_total", total},
                {"hodge_total", bound},
                {"degeneration_page", data.report.degeneration_page}};
}

json run_audit(const instance::Loaded& l, cosheaf::Flavor flavor, bool& failed)
{
    const auto& x = l.complex;
    const auto& phase = need_phase(l);
    json result;

    json dim_failures = json::array();
    const auto entries = real::dimension_audit(x, phase);
    for (const auto& e : entries) {
        if (!e.ok) {
            dim_failures.push_back(json{{"face", e.face.str()},
                                        {"sign_dim", e.sign_dim},
                                        {"expected", e.expected},
                                        {"multitangent_sum", e.multitangent_sum}});
        }
    }
    result["dimension_audit"] = json{{"faces", entries.size()}, {"failures", dim_failures}};

    const auto data = spectral_data(l, flavor);
    const auto exact = filtration::verify_exact_commutative(x, data.ext);
    result["exact_commutative"] = json{{"checks", exact.checks}, {"failures", exact.failures}};

    const auto filtration_failures = filtration::check_filtration(data.fc);
    result["filtration"] = json{{"failures", filtration_failures}};

    const auto sign_failures = cosheaf::verify_cosheaf(x, real::sign_cosheaf(x, data.ext));
    result["sign_cosheaf"] = json{{"failures", sign_failures}};

    const auto euler = filtration::euler_invariance(x, data.report, flavor);
    result["euler"] = json{{"page_euler", euler.page_euler},
                           {"real_euler", euler.real_euler},
                           {"chi_y", euler.chi_y},
                           {"ok", euler.ok}};

    bool sharp_ok = true;
    if (x.compact()) {
        const auto sharp = filtration::sharpness_report(x, data.report);
        json rows = json::array();
        for (const auto& r : sharp.rows) {
            json touching = json::array();
            for (const auto& d : r.touching) {
                touching.push_back(differential_json(x.n(), d));
            }
            rows.push_back(json{{"q", r.q},
                                {"betti", r.betti},
                                {"bound", r.bound},
                                {"attained", r.attained},
                                {"touching", touching}});
        }
        json unexpected = json::array();
        for (const auto& d : sharp.unexpected) {
            unexpected.push_back(differential_json(x.n(), d));
        }
        result["sharpness"] = json{{"hypotheses_verified", sharp.hypotheses_verified},
                                   {"rows", rows},
                                   {"unexpected", unexpected}};
        sharp_ok = !sharp.hypotheses_verified || sharp.unexpected.empty();
    }

    failed = !dim_failures.empty() || !exact.ok() || !filtration_failures.empty() || !sign_failures.empty() ||
             !euler.ok || !sharp_ok;
    result["passed"] = !failed;
    return result;
}

/** Twists of the phase when there is one; listed twists that disagree with it mark the run as failed. */
curves::TwistSet twist_set(const instance::Loaded& l, json& result, bool& failed)
{
    const auto& x = l.complex;
    if (l.phase) {
        auto from_phase = curves::twists_from_phase(x, *l.phase);
        if (l.twists) {
            const bool match = *l.twists == from_phase;
            result["listed_twists_match_phase"] = match;
            failed = failed || !match;
        }
        return from_phase;
    }
    if (l.twists) {
        return *l.twists;
    }
    throw instance::InstanceError("this command needs twists, signs or a phase in the instance");
}

json run_curve(const instance::Loaded& l, const std::string& sub, const Options& o, bool& failed)
{
    const auto& x = l.complex;
    if (x.ambient_dim() != 2) {
        throw instance::InstanceError("curve commands need a plane curve instance (ambient_dim 2)");
    }
    if (sub == "twists") {
        const auto t = curves::twists_from_phase(x, need_phase(l));
        return json{{"twists", ids(x, t)}, {"admissible", curves::is_admissible(x, t)}};
    }
    if (sub == "admissible") {
        json result = json::object();
        const auto t = twist_set(l, result, failed);
        result["twists"] = ids(x, t);
        result["admissible"] = curves::is_admissible(x, t);
        return result;
    }
    if (sub == "components") {
        json result = json::object();
        const auto t = twist_set(l, result, failed);
        result["twists"] = ids(x, t);
        result["genus"] = curves::cycle_basis(x).cycles.size();
        result["d1"] = matrix_json(curves::d1_matrix(x, t));
        result["components"] = curves::component_count(x, t);
        if (l.phase) {
            const auto b0 = real::real_betti(x, *l.phase, flavor_for(x, o)).dims.at(0);
            result["real_b0"] = b0;
            result["agrees"] = b0 == result["components"].get<std::size_t>();
            failed = failed || !result["agrees"].get<bool>();
        }
        return result;
    }
    if (sub == "haas") {
        json result = json::object();
        const auto t = twist_set(l, result, failed);
        const auto ex = curves::exposed_edges(x);
        result["twists"] = ids(x, t);
        result["haas"] = curves::haas_predicate(x, t);
        result["exposed"] = ids(x, ex.exposed);
        result["interior"] = ids(x, ex.interior);
        if (l.phase && x.compact()) {
            const auto data = spectral_data(l, cosheaf::Flavor::ordinary);
            result["maximal"] = filtration::maximality(x, data.report);
            result["agrees"] = result["maximal"] == result["haas"];
            failed = failed || !result["agrees"].get<bool>();
        }
        return result;
    }
    if (sub == "enumerate") {
        const auto entries = curves::enumerate_admissible(x, o.cap);
        const std::size_t g = curves::cycle_basis(x).cycles.size();
        json list = json::array();
        std::size_t maximal = 0;
        std::size_t haas = 0;
        for (const auto& e : entries) {
            maximal += e.components == g + 1 ? 1 : 0;
            haas += e.haas ? 1 : 0;
            list.push_back(json{{"twists", ids(x, e.twists)}, {"components", e.components}, {"haas", e.haas}});
        }
        failed = failed || maximal != haas;
        return json{{"bounded_edges", curves::bounded_edges(x).size()},
                    {"genus", g},
                    {"admissible", entries.size()},
                    {"maximal", maximal},
                    {"haas", haas},
                    {"entries", list}};
    }
    throw instance::InstanceError("unknown curve subcommand \"" + sub + "\"");
}

json envelope(const std::string& command, const std::string& source, const std::string& digest)
{
    return json{{"schema", schema_version},
                {"command", command},
                {"instance", json{{"source", source}, {"digest", digest}}},
                {"result", nullptr},
                {"warnings", json::array()},
                {"errors", json::array()}};
}

std::string scalar_text(const json& v) { return v.dump(); }

bool is_grid(const json& v)
{
    if (!v.is_array() || v.empty()) {
        return false;
    }
    const std::size_t width = v.front().is_array() ? v.front().size() : 0;
    if (width == 0) {
        return false;
    }
    return std::all_of(v.begin(), v.end(), [&](const json& row) {
        return row.is_array() && row.size() == width &&
               std::all_of(row.begin(), row.end(), [](const json& c) { return c.is_number_integer(); });
    });
}

std::string escape_token(const std::string& key)
{
    std::string out;
    for (char c : key) {
        if (c == '~') {
            out += "~0";
        } else if (c == '/') {
            out += "~1";
        } else {
            out += c;
        }
    }
    return out;
}

void render(const json& v, const std::string& path, std::ostringstream& os)
{
    if (is_grid(v)) {
        os << path << " :=\n";
        const bool pq = path.ends_with("/table") || path.ends_with("/e_infinity");
        os << (pq ? "  q\\p" : "  i\\j");
        for (std::size_t p = 0; p < v.front().size(); ++p) {
            os << ' ' << p;
        }
        os << '\n';
        for (std::size_t q = 0; q < v.size(); ++q) {
            os << "  " << q;
            for (const auto& c : v[q]) {
                os << ' ' << c.dump();
            }
            os << '\n';
        }
        return;
    }
    if (v.is_object() && !v.empty()) {
        for (const auto& [key, child] : v.items()) {
            render(child, path + "/" + escape_token(key), os);
        }
        return;
    }
    if (v.is_array() && !v.empty()) {
        for (std::size_t i = 0; i < v.size(); ++i) {
            render(v[i], path + "/" + std::to_string(i), os);
        }
        return;
    }
    os << path << " = " << scalar_text(v) << '\n';
}

}   // namespace

const std::vector<std::string>& commands()
{
    static const std::vector<std::string> list{"validate", "emit-ids", "trop-homology", "real-betti",
                                               "spectral", "maximal",  "audit",         "curve"};
    return list;
}

const std::vector<std::string>& curve_subcommands()
{
    static const std::vector<std::string> list{"twists", "admissible", "components", "haas", "enumerate"};
    return list;
}

Report error_report(const std::string& command, const std::string& source, const std::string& message,
                    const std::vector<std::string>& diagnostics)
{
    Report r;
    r.body = envelope(command, source, "");
    r.body["errors"].push_back(json{{"message", message}, {"diagnostics", diagnostics}});
    r.status = Status::error;
    return r;
}

Report run(const std::string& command, const std::string& subcommand, const instance::Instance& inst,
           const Options& options)
{
    const std::string echo = subcommand.empty() ? command : command + " " + subcommand;
    Report r;
    r.body = envelope(echo, inst.source, inst.digest);
    if (!options.assume_regular) {
        r.body["warnings"].push_back("regularity of the triangulation is assumed, not checked");
    }
    try {
        const auto loaded = instance::load(inst);
        const auto& x = loaded.complex;
        const auto flavor = flavor_for(x, options);
        if (options.borel_moore && x.compact()) {
            r.body["warnings"].push_back("Borel-Moore and ordinary homology coincide on a compact complex");
        }
        bool failed = false;
        json result;
        if (command == "validate") {
            result = run_validate(loaded);
        } else if (command == "emit-ids") {
            result = run_emit_ids(loaded);
        } else if (command == "trop-homology") {
            result = run_trop_homology(loaded, flavor);
        } else if (command == "real-betti") {
            result = run_real_betti(loaded, flavor);
        } else if (command == "spectral") {
            result = run_spectral(loaded, flavor, options);
        } else if (command == "maximal") {
            result = run_maximal(loaded);
        } else if (command == "audit") {
            result = run_audit(loaded, flavor, failed);
        } else if (command == "curve") {
            result = run_curve(loaded, subcommand, options, failed);
        } else {
            throw instance::InstanceError("unknown command \"" + command + "\"");
        }
        r.body["result"] = std::move(result);
        r.status = failed ? Status::audit_failure : Status::ok;
    } catch (const instance::InstanceError& e) {
        r.body["errors"].push_back(json{{"message", e.what()}, {"diagnostics", e.diagnostics()}});
        r.status = Status::error;
    } catch (const std::exception& e) {
        r.body["errors"].push_back(json{{"message", e.what()}, {"diagnostics", json::array()}});
        r.status = Status::error;
    }
    return r;
}

std::string render_json(const json& body) { return body.dump(2) + "\n"; }

std::string render_table(const json& body)
{
    std::ostringstream os;
    render(body, "", os);
    return os.str();
}

json parse_table(const std::string& text)
{
    json out = json::object();
    std::istringstream in(text);
    std::string line;
    std::string grid_path;
    json grid;
    auto flush = [&]() {
        if (!grid_path.empty()) {
            out[json::json_pointer(grid_path)] = grid;
            grid_path.clear();
        }
    };
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        if (line.rfind("  ", 0) == 0) {
            if (grid_path.empty()) {
                throw std::runtime_error("table row outside a grid: " + line);
            }
            std::istringstream row(line);
            std::string label;
            row >> label;
            if (label.find('\\') != std::string::npos) {
                continue;
            }
            json cells = json::array();
            long long v = 0;
            while (row >> v) {
                cells.push_back(v);
            }
            grid.push_back(std::move(cells));
            continue;
        }
        flush();
        const auto grid_mark = line.rfind(" :=");
        if (grid_mark != std::string::npos && grid_mark + 3 == line.size()) {
            grid_path = line.substr(0, grid_mark);
            grid = json::array();
            continue;
        }
        const auto eq = line.find(" = ");
        if (eq == std::string::npos) {
            throw std::runtime_error("unreadable table line: " + line);
        }
        const std::string path = line.substr(0, eq);
        const json value = json::parse(line.substr(eq + 3));
        if (path.empty()) {
            out = value;
        } else {
            out[json::json_pointer(path)] = value;
        }
    }
    flush();
    return out;
}

}   // namespace patchwork::report
