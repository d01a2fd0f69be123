// group_action.hpp - group actions on the complex, the invariant-simplex
// engine, and the fixed-point-set complex with its big projection
#ifndef KAKIMIZU_GROUP_ACTION_HPP
#define KAKIMIZU_GROUP_ACTION_HPP

#include "kakimizu/dismantle.hpp"
#include "kakimizu/projection.hpp"

namespace kakimizu {

// A finite group given by generating vertex permutations. Invariance and
// equivariance of any object under the generators extend to the whole group,
// so no element enumeration is ever needed.
struct GroupAction {
    std::vector<std::vector<int>> generators;
};

// Verifies that every generator is an automorphism of the complex, commutes
// with the projection map, and preserves the base order. Generators of wrong
// length throw input_error; everything else is reported, not thrown.
CheckReport check_action(const ProjectionStructure& ps, const GroupAction& a);

// Closure of {v} under the generators, sorted.
VertexSet orbit(const GroupAction& a, int v);

// s is mapped onto itself setwise by every generator.
bool is_invariant(const GroupAction& a, const VertexSet& s);

// Closure of seed under (x, rho) -> pi_x(rho) over all pairs inside the set.
VertexSet convex_hull(const ProjectionStructure& ps, const VertexSet& seed);

// For every ordered pair sigma != rho in Y there must be a witness pi in Y
// whose closed neighborhood within Y contains that of pi_sigma(rho) and whose
// distance to sigma inside Y equals the ambient distance from pi_sigma(rho)
// to sigma. Convex sets pass with pi = pi_sigma(rho). Disconnected Y throws
// input_error.
CheckReport is_semi_convex(const ProjectionStructure& ps, const VertexSet& Y);

// All v in Y whose closed neighborhood within Y is strictly contained in that
// of some other member of Y.
VertexSet strongly_dominated(const FlagComplex& c, const VertexSet& Y);

// l(Y): the longest directed order chain among vertices of Y at induced
// distance diam(Y) from a base in Y, maximized over bases. 0 when the
// diameter is 0. A cycle in the restricted order throws structural_error.
int layer_chain_stat(const ProjectionStructure& ps, const VertexSet& Y);

// One shrink iteration of the invariant-simplex engine, recorded for audit.
struct FixpointStep {
    VertexSet before;
    VertexSet removed;
    int diam_before = 0;
    int chain_before = 0;
    int diam_after = 0;
    int chain_after = 0;
};

struct FixpointResult {
    VertexSet clique;              // final G-invariant simplex
    VertexSet hull;                // convex hull of the seed orbit
    int orbit_diameter = 0;        // ambient diameter of the seed orbit
    int hull_diameter = 0;         // equals orbit_diameter on conforming instances
    std::vector<FixpointStep> trace;
};

// The fixed-simplex engine: hull the seed orbit, then repeatedly drop all
// strongly dominated vertices while the diameter is at least 2. Each
// iteration asserts the survivor set is nonempty, invariant, semi-convex,
// and strictly smaller in (diameter, l) lexicographic order; any failure
// throws structural_error naming the assertion. Requires a passing action
// and a convex-closed ambient instance.
FixpointResult find_invariant_simplex(const ProjectionStructure& ps, const GroupAction& a,
                                      int seed);

// The complex of minimal invariant simplices: vertices are the vertex-orbits
// that span cliques, ordered by smallest ambient member; edges join orbits
// whose union spans a clique.
struct FixComplex {
    FlagComplex complex;
    std::vector<VertexSet> orbits;  // orbit of fix vertex i, sorted
};

FixComplex fix_complex(const FlagComplex& c, const GroupAction& a);

// Pi_Sigma(Delta): with sigma the smallest vertex of Sigma and delta the
// order-minimum of Delta below sigma, the orbit of pi_sigma(delta). Verifies
// that the result spans a clique, that its union with Delta spans a clique,
// and that delta precedes every member; failure throws structural_error.
VertexSet big_project(const ProjectionStructure& ps, const GroupAction& a,
                      const VertexSet& Sigma, const VertexSet& Delta);

// For every sigma in Sigma, the distance sum to Pi_Sigma(Delta) must be
// strictly below the distance sum to Delta, and both sums must not depend on
// the choice of sigma.
CheckReport verify_distance_sum_decrease(const ProjectionStructure& ps, const GroupAction& a,
                                         const VertexSet& Sigma, const VertexSet& Delta);

// Dismantling order of the fix complex: fix vertices sorted by the position
// of their smallest member in linear_extension(ps, sigma); the witness of
// each non-final vertex is Pi_Sigma of it. Sigma provably sorts last; the
// certificate is verified before return.
DismantlingOrder fix_dismantle(const ProjectionStructure& ps, const GroupAction& a,
                               const VertexSet& Sigma);

}  // namespace kakimizu

#endif
