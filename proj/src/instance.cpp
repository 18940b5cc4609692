#include "patchwork/instance.hpp"

#include <json.hpp>
#include <openssl/evp.h>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace patchwork::instance {

namespace {

using nlohmann::json;

std::int64_t as_int(const json& j, const std::string& where)
{
    if (!j.is_number_integer()) {
        throw InstanceError(where + ": expected an integer");
    }
    return j.get<std::int64_t>();
}

lattice::Point as_point(const json& j, std::size_t dim, const std::string& where)
{
    if (!j.is_array() || j.size() != dim) {
        throw InstanceError(where + ": expected " + std::to_string(dim) + " integer coordinates");
    }
    lattice::Point p;
    for (std::size_t i = 0; i < dim; ++i) {
        p.push_back(as_int(j[i], where));
    }
    return p;
}

tropical::FaceId as_face_id(const std::string& text, const std::string& where)
{
    try {
        return tropical::FaceId::parse(text);
    } catch (const std::exception& e) {
        throw InstanceError(where + ": " + e.what());
    }
}

lattice::Fan choose_fan(const Instance& inst, const lattice::Polytope& hull)
{
    if (inst.compactification == "torus") {
        return lattice::torus_fan(inst.ambient_dim);
    }
    const lattice::Fan full = lattice::dual_fan(hull);
    if (inst.compactification == "newton") {
        return full;
    }
    return lattice::subfan(full, inst.cones);
}

}   // namespace

std::string sha256_hex(const std::string& data)
{
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int length = 0;
    if (EVP_Digest(data.data(), data.size(), digest, &length, EVP_sha256(), nullptr) != 1) {
        throw std::runtime_error("SHA-256 computation failed");
    }
    std::ostringstream os;
    for (unsigned int i = 0; i < length; ++i) {
        os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
    }
    return os.str();
}

Instance parse_instance_text(const std::string& text, const std::string& source)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InstanceError("malformed JSON in " + source + ": " + e.what());
    }
    if (!j.is_object()) {
        throw InstanceError(source + ": top level must be an object");
    }
    for (const auto& key : {"ambient_dim", "points", "triangulation"}) {
        if (!j.contains(key)) {
            throw InstanceError(source + ": missing key \"" + key + "\"");
        }
    }
    static const std::vector<std::string> known{"ambient_dim", "points",   "triangulation", "signs",
                                                "phase",       "compactification", "twists", "name",
                                                "description"};
    for (const auto& [key, value] : j.items()) {
        if (std::find(known.begin(), known.end(), key) == known.end()) {
            throw InstanceError(source + ": unknown key \"" + key + "\"");
        }
    }

    Instance inst;
    inst.source = source;
    inst.digest = sha256_hex(text);
    const std::int64_t dim = as_int(j["ambient_dim"], "ambient_dim");
    if (dim < 1) {
        throw InstanceError("ambient_dim must be positive");
    }
    inst.ambient_dim = static_cast<std::size_t>(dim);

    const json& pts = j["points"];
    if (!pts.is_array() || pts.empty()) {
        throw InstanceError("points: expected a non-empty list");
    }
    for (std::size_t i = 0; i < pts.size(); ++i) {
        inst.triangulation.points.push_back(as_point(pts[i], inst.ambient_dim, "points[" + std::to_string(i) + "]"));
    }
    const std::size_t npts = pts.size();

    const json& tri = j["triangulation"];
    if (!tri.is_array() || tri.empty()) {
        throw InstanceError("triangulation: expected a non-empty list of simplices");
    }
    for (std::size_t i = 0; i < tri.size(); ++i) {
        const std::string where = "triangulation[" + std::to_string(i) + "]";
        if (!tri[i].is_array() || tri[i].size() != inst.ambient_dim + 1) {
            throw InstanceError(where + ": a simplex needs " + std::to_string(inst.ambient_dim + 1) + " indices");
        }
        lattice::IndexSet s;
        for (const auto& v : tri[i]) {
            const std::int64_t idx = as_int(v, where);
            if (idx < 0 || static_cast<std::size_t>(idx) >= npts) {
                throw InstanceError(where + ": point index " + std::to_string(idx) + " out of range");
            }
            s.push_back(static_cast<std::size_t>(idx));
        }
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end()) {
            throw InstanceError(where + ": repeated point index");
        }
        inst.triangulation.simplices.push_back(std::move(s));
    }

    if (j.contains("compactification")) {
        const json& c = j["compactification"];
        if (c.is_string()) {
            const auto name = c.get<std::string>();
            if (name != "newton" && name != "torus") {
                throw InstanceError("compactification: expected \"newton\", \"torus\" or a list of cones");
            }
            inst.compactification = name;
        } else if (c.is_array()) {
            inst.compactification = "cones";
            for (std::size_t i = 0; i < c.size(); ++i) {
                const std::string where = "compactification[" + std::to_string(i) + "]";
                if (!c[i].is_array()) {
                    throw InstanceError(where + ": a cone is a list of ray vectors");
                }
                std::vector<lattice::Point> cone;
                for (const auto& r : c[i]) {
                    cone.push_back(as_point(r, inst.ambient_dim, where));
                }
                inst.cones.push_back(std::move(cone));
            }
        } else {
            throw InstanceError("compactification: expected a string or a list of cones");
        }
    }

    if (j.contains("signs")) {
        const json& s = j["signs"];
        if (!s.is_array() || s.size() != npts) {
            throw InstanceError("signs: expected one sign per point (" + std::to_string(npts) + ")");
        }
        real::SignDistribution signs;
        for (std::size_t i = 0; i < npts; ++i) {
            if (s[i] == "+") {
                signs.push_back(1);
            } else if (s[i] == "-") {
                signs.push_back(-1);
            } else {
                throw InstanceError("signs[" + std::to_string(i) + "]: expected \"+\" or \"-\"");
            }
        }
        inst.signs = std::move(signs);
    }

    if (j.contains("phase")) {
        const json& p = j["phase"];
        if (!p.is_object()) {
            throw InstanceError("phase: expected an object from facet ids to sign vectors");
        }
        std::map<tropical::FaceId, gf2::BitVector> bases;
        for (const auto& [key, value] : p.items()) {
            const std::string where = "phase[\"" + key + "\"]";
            if (!value.is_array()) {
                throw InstanceError(where + ": expected a list of bits");
            }
            std::vector<int> bits;
            for (const auto& b : value) {
                const std::int64_t v = as_int(b, where);
                if (v != 0 && v != 1) {
                    throw InstanceError(where + ": bits must be 0 or 1");
                }
                bits.push_back(static_cast<int>(v));
            }
            gf2::BitVector vec(bits.size());
            for (std::size_t i = 0; i < bits.size(); ++i) {
                vec.set(i, bits[i] == 1);
            }
            bases.emplace(as_face_id(key, where), std::move(vec));
        }
        inst.phase = std::move(bases);
    }

    if (j.contains("twists")) {
        const json& t = j["twists"];
        if (!t.is_array()) {
            throw InstanceError("twists: expected a list of edge ids");
        }
        std::vector<tropical::FaceId> ids;
        for (std::size_t i = 0; i < t.size(); ++i) {
            const std::string where = "twists[" + std::to_string(i) + "]";
            if (!t[i].is_string()) {
                throw InstanceError(where + ": expected an edge id string");
            }
            ids.push_back(as_face_id(t[i].get<std::string>(), where));
        }
        inst.twists = std::move(ids);
    }
    return inst;
}

Instance parse_instance(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InstanceError("cannot read " + path);
    }
    std::ostringstream os;
    os << in.rdbuf();
    return parse_instance_text(os.str(), path);
}

Loaded load(const Instance& inst)
{
    const auto violations = lattice::validate_primitive(inst.triangulation);
    if (!violations.empty()) {
        std::vector<std::string> diag;
        for (const auto& v : violations) {
            diag.push_back("[" + v.kind + "] " + v.message);
        }
        throw InstanceError("triangulation is not primitive", diag);
    }

    lattice::Fan fan;
    try {
        fan = choose_fan(inst, lattice::Polytope::hull(inst.triangulation.points));
    } catch (const lattice::GeometryError& e) {
        throw InstanceError(std::string("compactification: ") + e.what());
    }
    Loaded out{inst, tropical::TropicalComplex::build(inst.triangulation, fan), std::nullopt, std::nullopt};
    const auto& x = out.complex;

    std::optional<real::RealPhaseStructure> explicit_phase;
    if (inst.phase) {
        std::map<std::size_t, gf2::BitVector> bases;
        for (const auto& [id, base] : *inst.phase) {
            const auto idx = x.find(id);
            if (!idx) {
                throw InstanceError("phase: " + id.str() + " is not a face of the complex");
            }
            bases.emplace(*idx, base);
        }
        try {
            explicit_phase = real::phase_from_bases(x, bases);
        } catch (const real::PhaseError& e) {
            throw InstanceError(std::string("phase: ") + e.what());
        }
    }

    if (inst.signs) {
        out.phase = real::phase_from_signs(x, *inst.signs);
        if (explicit_phase) {
            std::vector<std::string> diag;
            for (const auto& [idx, space] : out.phase->facets) {
                if (!(explicit_phase->facets.at(idx) == space)) {
                    diag.push_back(x.face(idx).id.str() + ": signs give " + space.canonical_base().to_string() +
                                   ", phase gives " + explicit_phase->facets.at(idx).canonical_base().to_string());
                }
            }
            if (!diag.empty()) {
                throw InstanceError("signs and explicit phase disagree", diag);
            }
        }
    } else if (explicit_phase) {
        out.phase = std::move(explicit_phase);
    }

    if (out.phase) {
        const auto pv = real::validate_phase(x, *out.phase);
        if (!pv.empty()) {
            std::vector<std::string> diag;
            for (const auto& v : pv) {
                diag.push_back(v.face.str() + ": " + v.message);
            }
            throw InstanceError("invalid real phase structure", diag);
        }
    }

    if (inst.twists) {
        curves::TwistSet t;
        for (const auto& id : *inst.twists) {
            const auto idx = x.find(id);
            if (!idx) {
                throw InstanceError("twists: " + id.str() + " is not a face of the complex");
            }
            t.push_back(*idx);
        }
        std::sort(t.begin(), t.end());
        t.erase(std::unique(t.begin(), t.end()), t.end());
        out.twists = std::move(t);
    }
    return out;
}

}   // namespace patchwork::instance
