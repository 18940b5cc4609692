/**
 * Face poset of a (partially) compactified non-singular tropical hypersurface.
 *
 * A face lives in the stratum of a fan cone (its sedentarity) and is dual to
 * a cell of the triangulation induced on the polytope face dual to that cone.
 * Each stratum carries lattice coordinates given by a Hermite basis of the
 * annihilator of the cone's rays; projections between strata are expressed
 * in these coordinates.
 */

#ifndef PATCHWORK_TROPICAL_COMPLEX_HPP
#define PATCHWORK_TROPICAL_COMPLEX_HPP

#include "patchwork/gf2.hpp"
#include "patchwork/lattice.hpp"

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace patchwork::tropical {

using lattice::IndexSet;
using lattice::Point;

struct FaceId
{
    IndexSet sedentarity;
    IndexSet cell;

    std::string str() const;
    static FaceId parse(const std::string& text);

    friend bool operator==(const FaceId&, const FaceId&) = default;
    friend std::strong_ordering operator<=>(const FaceId& a, const FaceId& b);
};

struct Face
{
    FaceId id;
    std::size_t dim = 0;
    std::size_t ambient_dim = 0;
    bool bounded = false;
    std::size_t stratum = 0;
    gf2::Subspace tangent;                  // F_1 of the face, in stratum coordinates
    std::vector<std::size_t> boundary;      // faces of dimension dim - 1 in the closure
    std::vector<std::size_t> coboundary;
    std::vector<std::size_t> facets;        // same-stratum facets containing the face
    std::optional<std::size_t> parent;
};

struct Stratum
{
    IndexSet cone;
    std::size_t ambient_dim = 0;
    std::vector<Point> lattice_basis;       // basis of the annihilator of the cone's rays
    IndexSet polytope_face;                 // points of the dual polytope face
    std::vector<std::size_t> faces;
};

class ComplexError : public std::runtime_error
{
    public:
        using std::runtime_error::runtime_error;
};

class TropicalComplex
{
    public:
        /**
         * Builds the complex. The triangulation must be primitive and the fan
         * must be a subfan of the dual fan of its hull.
         */
        static TropicalComplex build(const lattice::Triangulation& t, const lattice::Fan& fan);

        /** Dimension of the hypersurface. */
        std::size_t n() const { return ambient_ - 1; }
        std::size_t ambient_dim() const { return ambient_; }
        bool compact() const { return compact_; }

        const lattice::Triangulation& triangulation() const { return triangulation_; }
        const lattice::Polytope& polytope() const { return polytope_; }
        const lattice::Fan& fan() const { return fan_; }

        const std::vector<Face>& faces() const { return faces_; }
        const Face& face(std::size_t i) const { return faces_.at(i); }
        const Face& face(const FaceId& id) const { return faces_.at(index_of(id)); }
        std::size_t index_of(const FaceId& id) const;
        std::optional<std::size_t> find(const FaceId& id) const;
        std::vector<std::size_t> faces_of_dim(std::size_t dim) const;

        const std::vector<Stratum>& strata() const { return strata_; }
        const Stratum& stratum(const IndexSet& cone) const;
        const Stratum& stratum_of(std::size_t face) const { return strata_[faces_[face].stratum]; }

        /** Coefficients of a lattice direction of the polytope face of `cone` in stratum coordinates. */
        lattice::IntVector stratum_direction(const IndexSet& cone, const Point& direction) const;

        /** Integer matrix of the projection between stratum lattices, rows indexed by eta's basis. */
        lattice::IntMatrix projection_integer(const IndexSet& rho, const IndexSet& eta) const;
        gf2::Matrix projection_matrix(const IndexSet& rho, const IndexSet& eta) const;

        /** F_1 of the face as a subspace of Z_2^m in stratum coordinates. */
        gf2::Subspace f1_basis(const FaceId& id) const { return face(id).tangent; }

    private:
        std::vector<Point> stratum_basis(const IndexSet& cone) const;

        std::size_t ambient_ = 0;
        bool compact_ = false;
        lattice::Triangulation triangulation_;
        lattice::Polytope polytope_;
        lattice::Fan fan_;
        std::vector<Face> faces_;
        std::map<FaceId, std::size_t> index_;
        std::vector<Stratum> strata_;
};

/**
 * Dimensions of F_0..F_n predicted for a face of dimension k with
 * sedentarity of size s on an n-dimensional hypersurface.
 */
std::vector<long long> expected_multitangent_dims(std::size_t n, std::size_t k, std::size_t s);

}   // namespace patchwork::tropical

#endif
