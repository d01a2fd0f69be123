// dismantle.hpp - dismantling orders, the projection-driven ordering, a greedy
// cop-win recognizer as independent oracle, and certificate verification
#ifndef KAKIMIZU_DISMANTLE_HPP
#define KAKIMIZU_DISMANTLE_HPP

#include <optional>

#include "kakimizu/projection.hpp"

namespace kakimizu {

// Certificate of dismantlability: order[i] is eliminated at step i, its
// witness order[witness[i]] survives it. witness has one entry per non-final
// position; witness[i] > i always.
struct DismantlingOrder {
    std::vector<int> order;
    std::vector<int> witness;  // positions into order, size order.size()-1
};

// Lowest-id vertex v in live whose closed neighborhood within live is
// contained in that of another live vertex w, lowest such w; none when no
// vertex is dominated.
std::optional<std::pair<int, int>> dominated_vertex(const FlagComplex& c,
                                                    const VertexSet& live);

// Repeated elimination of dominated vertices; succeeds iff one vertex remains.
// The returned certificate is re-verified before return.
std::optional<DismantlingOrder> greedy_dismantle(const FlagComplex& c);

// Order = linear_extension(ps, sigma); the witness of each vertex is its
// projection toward sigma. The certificate is verified before return; a
// violation means a non-conforming instance (structural_error).
DismantlingOrder projection_dismantle(const ProjectionStructure& ps, int sigma);

// Checks Definition conditions at every position: the witness is a later
// adjacent vertex, adjacent-or-equal to every later neighbor of the
// eliminated vertex. Malformed order or witness throws input_error.
CheckReport verify_dismantling(const FlagComplex& c, const DismantlingOrder& d);

// Closure of seed under rho -> pi_sigma(rho); finite because the projection
// strictly drops the distance to sigma. Requires sigma in seed.
VertexSet sigma_convex_hull(const ProjectionStructure& ps, const VertexSet& seed,
                            int sigma);

}  // namespace kakimizu

#endif
