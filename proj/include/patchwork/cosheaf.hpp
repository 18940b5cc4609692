/**
 * Cellular cosheaves over GF(2) on a tropical complex, their chain
 * complexes and homology. The multi-tangent cosheaves F_p are provided as
 * the built-in instance.
 */

#ifndef PATCHWORK_COSHEAF_HPP
#define PATCHWORK_COSHEAF_HPP

#include "patchwork/gf2.hpp"
#include "patchwork/tropical_complex.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace patchwork::cosheaf {

using tropical::TropicalComplex;

enum class Flavor { ordinary, borel_moore };

class CosheafError : public std::runtime_error
{
    public:
        using std::runtime_error::runtime_error;
};

/** Per-face subspaces of face-dependent ambient spaces and maps for boundary pairs. */
struct CosheafAssignment
{
    std::vector<gf2::Subspace> spaces;
    /** (sigma, tau) with tau in the boundary of sigma -> ambient(tau) x ambient(sigma) matrix. */
    std::map<std::pair<std::size_t, std::size_t>, gf2::Matrix> maps;

    const gf2::Matrix& map(std::size_t sigma, std::size_t tau) const;
};

/**
 * Chains in the coordinates given by the echelon bases of the face spaces,
 * ordered by face index and then by basis position.
 */
struct ChainComplex
{
    std::vector<std::size_t> dims;                      // q = 0..top
    std::vector<gf2::Matrix> boundary;                  // boundary[q] : C_q -> C_{q-1}
    std::vector<std::vector<std::size_t>> faces;        // faces contributing to C_q
    std::vector<std::vector<std::size_t>> offsets;      // block offset of each face in C_q

    std::size_t top() const { return dims.empty() ? 0 : dims.size() - 1; }
};

struct BettiTable
{
    std::vector<std::size_t> dims;

    long long euler() const;
    std::size_t total() const;
    friend bool operator==(const BettiTable&, const BettiTable&) = default;
};

/** Lexicographically ordered p-subsets of {0..m-1}. */
std::vector<lattice::IndexSet> wedge_index(std::size_t m, std::size_t p);

/** Coordinates of v_1 ∧ ... ∧ v_p in Λ^p Z_2^m. */
gf2::BitVector wedge(const std::vector<gf2::BitVector>& vectors, std::size_t m);

/** p-th compound of a matrix over GF(2). */
gf2::Matrix compound_matrix(const gf2::Matrix& m, std::size_t p);

gf2::Subspace multitangent_space(const TropicalComplex& x, std::size_t face, std::size_t p);
gf2::Matrix multitangent_map(const TropicalComplex& x, std::size_t sigma, std::size_t tau, std::size_t p);
CosheafAssignment multitangent_cosheaf(const TropicalComplex& x, std::size_t p);

/** Throws if ordinary homology is requested on a non-compact complex. */
void check_flavor(const TropicalComplex& x, Flavor flavor);

/** Assembles the chain complex; verifies that maps land in the face spaces and that ∂² = 0. */
ChainComplex assemble_complex(const TropicalComplex& x, const CosheafAssignment& g, Flavor flavor);

/** Chains of a sub-cosheaf, as a subspace of each C_q of the ambient cosheaf's complex. */
std::vector<gf2::Subspace> subcosheaf_chains(const ChainComplex& c, const CosheafAssignment& g,
                                             const std::vector<gf2::Subspace>& sub);

BettiTable homology_dims(const ChainComplex& c);
long long euler_char(const ChainComplex& c);

/** Table of dim H_q(X; F_p), indexed [q][p]. */
std::vector<std::vector<std::size_t>> tropical_homology(const TropicalComplex& x, Flavor flavor);

/** Σ_p χ(C(X; F_p)). */
long long chi_y_at_minus_one(const TropicalComplex& x, Flavor flavor);

/** Failures of the composition law or of maps leaving the face spaces. */
std::vector<std::string> verify_cosheaf(const TropicalComplex& x, const CosheafAssignment& g);

struct EulerPolyCheck
{
    std::vector<long long> actual;
    std::vector<long long> expected;
    bool ok = false;
};

EulerPolyCheck euler_poly_face(const TropicalComplex& x, std::size_t face);

/** True iff dim H_q(X; F_p) = 0 whenever p + q != n and p != q. */
bool vanishing_pattern_holds(const std::vector<std::vector<std::size_t>>& table, std::size_t n);

}   // namespace patchwork::cosheaf

#endif
