/**
 * Lattice polytopes, primitive triangulations and dual fans.
 *
 * All determinant and kernel computations use arbitrary-precision integers.
 * Lattice points are stored as 64-bit coordinates; intermediate values are
 * promoted and results are range-checked on the way back.
 */

#ifndef PATCHWORK_LATTICE_HPP
#define PATCHWORK_LATTICE_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace patchwork::lattice {

using Integer = boost::multiprecision::cpp_int;
using Point = std::vector<std::int64_t>;
using IndexSet = std::vector<std::size_t>;
using IntVector = std::vector<Integer>;
using IntMatrix = std::vector<IntVector>;

class GeometryError : public std::runtime_error
{
    public:
        using std::runtime_error::runtime_error;
};

IntVector promote(const Point& p);
Point demote(const IntVector& v);

Integer determinant(IntMatrix m);

/** |det(v1 - v0, ..., vD - v0)| for D + 1 points in Z^D. */
Integer normalized_volume(const std::vector<Point>& simplex);

/** Rank of a set of integer vectors over the rationals. */
std::size_t rational_rank(const std::vector<IntVector>& vectors);

/** Row Hermite normal form of the lattice spanned by the rows (zero rows dropped). */
IntMatrix hermite_normal_form(const IntMatrix& rows, std::size_t ambient);

/**
 * Canonical Z-basis (Hermite normal form rows) of the saturated lattice
 * {v in Z^m : <v, d> = 0 for every d}.
 */
std::vector<Point> integral_annihilator_basis(const std::vector<Point>& directions, std::size_t m);

/**
 * Integer coefficients of v in a Hermite-form row basis, or throws if v is
 * not in the lattice spanned by the basis.
 */
IntVector coordinates_in_basis(const std::vector<Point>& hnf_basis, const IntVector& v);

struct Facet
{
    Point normal;             // primitive outer normal
    std::int64_t offset = 0;  // <normal, x> <= offset on the polytope
    IndexSet points;          // indices of input points on the facet
};

struct PolytopeFace
{
    IndexSet points;          // input points lying on the face
    IndexSet facets;          // facets containing the face
    std::size_t dim = 0;
};

/** Convex hull of a full-dimensional point configuration. */
class Polytope
{
    public:
        static Polytope hull(const std::vector<Point>& points);

        std::size_t dim() const { return dim_; }
        const std::vector<Point>& points() const { return points_; }
        const std::vector<Facet>& facets() const { return facets_; }
        /** Every non-empty face, the polytope itself first, then by point set. */
        const std::vector<PolytopeFace>& faces() const { return faces_; }

        /** Face of the polytope whose containing-facet set is exactly `facets`, or nullptr. */
        const PolytopeFace* face_with_facets(const IndexSet& facets) const;
        /** Smallest face containing the given points. */
        const PolytopeFace& carrier(const IndexSet& points) const;
        bool on_boundary(std::size_t point) const;

        Integer normalized_volume() const;

    private:
        std::size_t dim_ = 0;
        std::vector<Point> points_;
        std::vector<Facet> facets_;
        std::vector<PolytopeFace> faces_;
};

/** Simplicial fan: rays plus cones as sorted ray index sets, closed under subsets. */
struct Fan
{
    std::size_t dim = 0;
    std::vector<Point> rays;
    std::vector<IndexSet> cones;

    bool contains(const IndexSet& cone) const;
    bool is_complete_for(const Fan& full) const { return cones.size() == full.cones.size(); }
};

/**
 * Normal fan of a simple polytope. Rays are the primitive outer facet
 * normals in lexicographic order; the cone of a face is the set of facets
 * containing it. Every cone is checked to be unimodular.
 */
Fan dual_fan(const Polytope& polytope);

/** The fan with only the zero cone. */
Fan torus_fan(std::size_t dim);

/**
 * Subfan of `full` generated by the listed cones (each given by its ray
 * vectors), closed under taking faces.
 */
Fan subfan(const Fan& full, const std::vector<std::vector<Point>>& generating_cones);

bool is_unimodular(const std::vector<Point>& rays, std::size_t dim);

struct Triangulation
{
    std::vector<Point> points;
    std::vector<IndexSet> simplices;

    std::size_t dim() const { return points.empty() ? 0 : points.front().size(); }
};

struct Violation
{
    std::string kind;
    IndexSet simplex;
    std::string message;
};

/**
 * Checks that the simplices form a unimodular triangulation of the convex
 * hull of the points. An empty result means the triangulation is primitive.
 */
std::vector<Violation> validate_primitive(const Triangulation& t);

struct InducedTriangulation
{
    IndexSet global_points;          // input indices of the face's points, sorted
    Triangulation local;             // points in the face's own lattice coordinates
    std::vector<IndexSet> cells;     // maximal cells, global indices
};

/** Restriction of a triangulation to a face of its hull, given by the face's point set. */
InducedTriangulation induced_triangulation(const Triangulation& t, const IndexSet& face_points);

/** Affine lattice coordinates of points spanning a k-dimensional face, relative to the first. */
std::vector<Point> affine_lattice_coordinates(const std::vector<Point>& points);

std::string format_point(const Point& p);
std::string format_index_set(const IndexSet& s);

}   // namespace patchwork::lattice

#endif
