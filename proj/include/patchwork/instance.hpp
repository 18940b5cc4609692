/**
 * Problem instances: JSON ingestion, structural validation and construction
 * of the tropical complex and real phase described by an instance file.
 *
 * Instance keys:
 *   ambient_dim       integer
 *   points            list of integer vectors
 *   triangulation     list of point index lists
 *   signs             optional list of "+" / "-" aligned with points
 *   phase             optional object facet-id -> list of 0/1 bits
 *   compactification  "newton" (default), "torus" or a list of cones,
 *                     each cone a list of ray vectors
 *   twists            optional list of edge ids
 */

#ifndef PATCHWORK_INSTANCE_HPP
#define PATCHWORK_INSTANCE_HPP

#include "patchwork/curves.hpp"
#include "patchwork/real_phase.hpp"
#include "patchwork/tropical_complex.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace patchwork::instance {

class InstanceError : public std::runtime_error
{
    public:
        InstanceError(const std::string& what, std::vector<std::string> diagnostics = {})
            : std::runtime_error(what), diagnostics_(std::move(diagnostics))
        {
        }

        const std::vector<std::string>& diagnostics() const { return diagnostics_; }

    private:
        std::vector<std::string> diagnostics_;
};

struct Instance
{
    std::string source;                          // file path or label
    std::string digest;                          // SHA-256 of the raw text, hex
    std::size_t ambient_dim = 0;
    lattice::Triangulation triangulation;
    std::string compactification = "newton";     // "newton", "torus" or "cones"
    std::vector<std::vector<lattice::Point>> cones;
    std::optional<real::SignDistribution> signs;
    std::optional<std::map<tropical::FaceId, gf2::BitVector>> phase;
    std::optional<std::vector<tropical::FaceId>> twists;
};

/** Instance with its complex and phase built and validated. */
struct Loaded
{
    Instance instance;
    tropical::TropicalComplex complex;
    std::optional<real::RealPhaseStructure> phase;
    std::optional<curves::TwistSet> twists;
};

std::string sha256_hex(const std::string& data);

Instance parse_instance_text(const std::string& text, const std::string& source = "<memory>");
Instance parse_instance(const std::string& path);

/**
 * Builds the complex, checks primitivity and the phase. When both signs and
 * an explicit phase are present the signs win and any disagreement is an error.
 */
Loaded load(const Instance& inst);

}   // namespace patchwork::instance

#endif
