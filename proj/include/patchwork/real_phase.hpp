/**
 * Real phase structures, their Viro sign-distribution encoding and the sign
 * cosheaf S_E.
 *
 * Sign vectors of a stratum with m coordinates index the 2^m coordinates of
 * the sign cosheaf ambient space in lexicographic order: the vector
 * (e_0, ..., e_{m-1}) sits at position sum e_i 2^(m-1-i).
 */

#ifndef PATCHWORK_REAL_PHASE_HPP
#define PATCHWORK_REAL_PHASE_HPP

#include "patchwork/cosheaf.hpp"
#include "patchwork/gf2.hpp"
#include "patchwork/tropical_complex.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace patchwork::real {

using tropical::FaceId;
using tropical::TropicalComplex;

class PhaseError : public std::runtime_error
{
    public:
        using std::runtime_error::runtime_error;
};

/** +1 or -1 per triangulation point. */
using SignDistribution = std::vector<int>;

struct AffineSignSpace
{
    gf2::BitVector base;
    gf2::Subspace direction;

    std::size_t ambient_dim() const { return direction.ambient_dim(); }
    bool contains(const gf2::BitVector& v) const { return direction.contains(v ^ base); }
    /** Canonical representative of the base modulo the direction. */
    gf2::BitVector canonical_base() const { return direction.reduce(base); }
    /** All elements, sorted lexicographically. */
    std::vector<gf2::BitVector> elements() const;
    AffineSignSpace image(const gf2::Matrix& m) const;

    friend bool operator==(const AffineSignSpace& a, const AffineSignSpace& b)
    {
        return a.direction == b.direction && a.canonical_base() == b.canonical_base();
    }
};

/** Affine sign space for every sedentarity-zero facet, keyed by face index. */
struct RealPhaseStructure
{
    std::map<std::size_t, AffineSignSpace> facets;

    friend bool operator==(const RealPhaseStructure&, const RealPhaseStructure&) = default;
};

struct PhaseViolation
{
    FaceId face;
    std::optional<gf2::BitVector> sign;
    std::string message;
};

std::size_t sign_index(const gf2::BitVector& eps);
gf2::BitVector sign_from_index(std::size_t index, std::size_t m);

RealPhaseStructure phase_from_signs(const TropicalComplex& x, const SignDistribution& signs);

/** Signs determined up to a global flip; the first point gets +1. Throws on inconsistency. */
SignDistribution signs_from_phase(const TropicalComplex& x, const RealPhaseStructure& e);

/** Builds a phase from per-facet base vectors, with directions taken from F_1. */
RealPhaseStructure phase_from_bases(const TropicalComplex& x,
                                    const std::map<std::size_t, gf2::BitVector>& bases);

std::vector<PhaseViolation> validate_phase(const TropicalComplex& x, const RealPhaseStructure& e);

/** Phase data extended to every face of the complex. */
struct ExtendedPhase
{
    std::vector<std::optional<AffineSignSpace>> facet_spaces;   // set on facets of every stratum
    std::vector<std::vector<gf2::BitVector>> sign_sets;         // sorted, per face
};

ExtendedPhase extend_phase(const TropicalComplex& x, const RealPhaseStructure& e);

std::vector<gf2::BitVector> extended_sign_set(const TropicalComplex& x, const RealPhaseStructure& e,
                                              std::size_t face);

gf2::Subspace sign_space(const TropicalComplex& x, const ExtendedPhase& ext, std::size_t face);
gf2::Matrix sign_map(const TropicalComplex& x, std::size_t sigma, std::size_t tau);
cosheaf::CosheafAssignment sign_cosheaf(const TropicalComplex& x, const ExtendedPhase& ext);

/** Homology of C(X; S_E). Throws on an invalid phase. */
cosheaf::BettiTable real_betti(const TropicalComplex& x, const RealPhaseStructure& e,
                               cosheaf::Flavor flavor);

struct DimensionAuditEntry
{
    FaceId face;
    std::size_t sign_dim = 0;
    std::size_t expected = 0;
    std::size_t multitangent_sum = 0;
    bool ok = false;
};

std::vector<DimensionAuditEntry> dimension_audit(const TropicalComplex& x, const RealPhaseStructure& e);

}   // namespace patchwork::real

#endif
