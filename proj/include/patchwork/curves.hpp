/**
 * Plane tropical curves: cycles of bounded regions, twisted edges, the
 * pairing matrix of the first differential, component counts and the
 * exposed-edge maximality criterion.
 *
 * Edges are identified by their face index in the tropical complex; twist
 * sets are sorted lists of bounded sedentarity-zero edges.
 */

#ifndef PATCHWORK_CURVES_HPP
#define PATCHWORK_CURVES_HPP

#include "patchwork/gf2.hpp"
#include "patchwork/real_phase.hpp"
#include "patchwork/tropical_complex.hpp"

#include <optional>
#include <vector>

namespace patchwork::curves {

using tropical::TropicalComplex;

class CurveError : public std::runtime_error
{
    public:
        using std::runtime_error::runtime_error;
};

using TwistSet = std::vector<std::size_t>;

struct Cycle
{
    std::size_t interior_point = 0;
    std::vector<std::size_t> edges;      // in counter-clockwise order around the region
};

struct CycleBasis
{
    std::vector<Cycle> cycles;
};

/** Bounded sedentarity-zero edges, by face index. */
std::vector<std::size_t> bounded_edges(const TropicalComplex& x);

CycleBasis cycle_basis(const TropicalComplex& x);

/** Primitive direction of a curve edge reduced mod 2. */
gf2::BitVector edge_direction_mod2(const TropicalComplex& x, std::size_t edge);

/**
 * Twisted edges from the continuation directions selected by the phase at
 * both endpoints. Throws if the answer depends on the chosen sign vector or
 * disagrees with twists_by_endpoints.
 */
TwistSet twists_from_phase(const TropicalComplex& x, const real::RealPhaseStructure& e);

/**
 * Twisted edges from the endpoint formulation: with the continuation edges
 * on one fixed side of e at both endpoints, e is twisted iff those edges
 * meet the sign space of e in different sign vectors.
 */
TwistSet twists_by_endpoints(const TropicalComplex& x, const real::RealPhaseStructure& e);

bool is_admissible(const TropicalComplex& x, const TwistSet& t);

gf2::Matrix d1_matrix(const CycleBasis& basis, const TwistSet& t);
gf2::Matrix d1_matrix(const TropicalComplex& x, const TwistSet& t);

std::size_t component_count(const TropicalComplex& x, const TwistSet& t);

struct ExposedEdges
{
    std::vector<std::size_t> exposed;
    std::vector<std::size_t> interior;   // complement within the bounded edges
};

ExposedEdges exposed_edges(const TropicalComplex& x);

bool haas_predicate(const TropicalComplex& x, const TwistSet& t);

struct EnumerationEntry
{
    TwistSet twists;
    std::size_t components = 0;
    bool haas = false;
};

/** Every admissible subset of bounded edges, in increasing bitmask order. */
std::vector<EnumerationEntry> enumerate_admissible(const TropicalComplex& x, std::size_t cap = 20);

/** A sign distribution whose phase has exactly the given twists, if one exists. */
std::optional<real::SignDistribution> realize_twists(const TropicalComplex& x, const TwistSet& t);

}   // namespace patchwork::curves

#endif
