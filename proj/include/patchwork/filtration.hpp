/**
 * Augmentation filtration K_p of the sign cosheaf, the Viro maps
 * bv_p : K_p -> F_p, the filtered chain complex and its spectral sequence.
 *
 * The spectral sequence uses the homological convention
 * d_r : E^r_{q,p} -> E^r_{q-1,p+r}; tables are indexed [q][p].
 */

#ifndef PATCHWORK_FILTRATION_HPP
#define PATCHWORK_FILTRATION_HPP

#include "patchwork/cosheaf.hpp"
#include "patchwork/real_phase.hpp"

#include <optional>
#include <string>
#include <vector>

namespace patchwork::filtration {

using cosheaf::Flavor;
using real::ExtendedPhase;
using tropical::TropicalComplex;

class FiltrationError : public std::runtime_error
{
    public:
        using std::runtime_error::runtime_error;
};

using Table = std::vector<std::vector<std::size_t>>;

/**
 * Span of the monomials w_theta * prod_{i in S} (w_0 + w_{v_i}) with |S| >= p,
 * expanded in the w-basis, for an affine sign space with anchor theta and
 * direction basis v_1..v_d.
 */
gf2::Subspace monomial_span(const gf2::BitVector& anchor, const std::vector<gf2::BitVector>& directions,
                            std::size_t p);

/** K_p of a facet (of any sedentarity), using the canonical anchor and echelon direction basis. */
gf2::Subspace kp_facet_space(const TropicalComplex& x, const ExtendedPhase& ext, std::size_t facet, int p);

/** K_p of any face: sum of K_p over the adjacent facets of the same stratum. */
gf2::Subspace kp_space(const TropicalComplex& x, const ExtendedPhase& ext, std::size_t face, int p);

/**
 * Matrix of bv_p on the ambient sign space of the face, valid on K_p(face).
 * Throws if the generator rule is inconsistent on K_p.
 */
gf2::Matrix bv_map(const TropicalComplex& x, const ExtendedPhase& ext, std::size_t face, std::size_t p);

struct CheckReport
{
    std::size_t checks = 0;
    std::vector<std::string> failures;

    bool ok() const { return failures.empty(); }
};

/** Exactness of 0 -> K_{p+1} -> K_p -> F_p -> 0 per face and commutativity with the cosheaf maps. */
CheckReport verify_exact_commutative(const TropicalComplex& x, const ExtendedPhase& ext);

struct FilteredChainComplex
{
    std::size_t n = 0;
    cosheaf::ChainComplex complex;                      // C(X; S_E)
    std::vector<std::vector<gf2::Subspace>> levels;     // levels[p][q] = C_q(K_p), p = 0..n+1

    /** F_p C_q with F_p = C for p <= 0 and 0 for p > n. */
    const gf2::Subspace& level(int p, std::size_t q) const;
};

FilteredChainComplex filtered_complex(const TropicalComplex& x, const ExtendedPhase& ext, Flavor flavor);

/** Failures of the subcomplex property ∂ C_q(K_p) ⊆ C_{q-1}(K_p) and of nesting. */
std::vector<std::string> check_filtration(const FilteredChainComplex& fc);

/** dim H_q(K_p, K_{p+1}) for q = 0..n. */
std::vector<std::size_t> relative_homology(const FilteredChainComplex& fc, int p);

struct Differential
{
    std::size_t r = 0;
    std::size_t q = 0;      // source E^r_{q,p}
    std::size_t p = 0;
    std::size_t rank = 0;   // target E^r_{q-1,p+r}
};

struct SpectralReport
{
    std::size_t n = 0;
    std::vector<Table> pages;                        // pages[r-1] = E^r, r = 1..n+1
    std::vector<std::vector<Differential>> differentials;   // per page, non-zero only
    Table e_infinity;
    std::vector<std::size_t> real_betti;             // dim H_q(X; S_E)
    std::size_t degeneration_page = 1;               // first r with E^r = E^infinity
    std::vector<long long> page_euler;               // χ(E^r) per page
};

SpectralReport spectral_sequence(const FilteredChainComplex& fc);

/** Differentials are zero on every page. Requires a compact complex. */
bool maximality(const TropicalComplex& x, const SpectralReport& report);

enum class Shape { antidiagonal_first, into_diagonal, out_of_diagonal, other };
Shape classify_differential(std::size_t n, const Differential& d);
std::string shape_name(Shape s);

struct RowSharpness
{
    std::size_t q = 0;
    std::size_t betti = 0;
    std::size_t bound = 0;     // Σ_p dim H_q(X; F_p)
    bool attained = false;
    std::vector<Differential> touching;   // non-zero differentials with source or target in row q
};

struct SharpnessReport
{
    bool hypotheses_verified = false;     // vanishing pattern of the F_p homology holds
    std::vector<RowSharpness> rows;
    std::vector<Differential> unexpected; // non-zero differentials outside the allowed shapes
};

SharpnessReport sharpness_report(const TropicalComplex& x, const SpectralReport& report);

struct EulerReport
{
    std::vector<long long> page_euler;
    long long real_euler = 0;
    long long chi_y = 0;
    bool ok = false;
};

EulerReport euler_invariance(const TropicalComplex& x, const SpectralReport& report, Flavor flavor);

}   // namespace patchwork::filtration

#endif
