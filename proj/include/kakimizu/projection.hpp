// projection.hpp - complex + projection + base order, with exhaustive checkers
#ifndef KAKIMIZU_PROJECTION_HPP
#define KAKIMIZU_PROJECTION_HPP

#include <unordered_map>

#include "kakimizu/core.hpp"
#include "kakimizu/cover_model.hpp"

namespace kakimizu {

enum class Backing { model, table };

// A flag complex together with the projection map (base, vertex) -> vertex and
// the base order on adjacent pairs. Model-backed structures compute the order
// from height functions; table-backed ones carry explicit entries so
// adversarial instances can be expressed. Nothing here is assumed conforming;
// the checkers below decide that.
struct ProjectionStructure {
    FlagComplex complex;
    Backing backing = Backing::model;
    HeightFamily fam;                             // model backing only
    std::vector<std::vector<int>> proj_tab;       // [sigma][rho], -1 on the diagonal
    std::unordered_map<uint64_t, char> ord_tab;   // table backing only

    int n() const { return complex.vertex_count; }
    int project_vertex(int sigma, int rho) const { return proj_tab[sigma][rho]; }
    // u <_sigma v; requires u, v adjacent
    bool less(int sigma, int u, int v) const;
};

uint64_t ord_key(int n, int sigma, int u, int v);

// Requires a convex-closed family (every pairwise projection a member).
ProjectionStructure from_family(const HeightFamily& fam);

ProjectionStructure from_table(FlagComplex c, std::vector<std::vector<int>> proj,
                               std::unordered_map<uint64_t, char> ord);

// d(rho, pi_sigma(rho)) <= 1 and d(sigma, pi_sigma(rho)) = d(sigma, rho) - 1.
CheckReport verify_projection_decrement(const ProjectionStructure& ps, int jobs = 1);

// order_comparability: each adjacent pair related in exactly one direction.
// order_acyclicity: the order digraph has no directed cycle, for every base.
// order_distance_rule: on an edge, the vertex farther from the base precedes.
std::vector<CheckReport> verify_order_axioms(const ProjectionStructure& ps, int jobs = 1);

// Topological sort of the base order, ties broken by ascending id, sigma last.
// Throws structural_error on a cycle, input_error when disconnected.
std::vector<int> linear_extension(const ProjectionStructure& ps, int sigma);

// domination_same_layer: rho <=_sigma rho' on an edge forces
//   rho' <=_sigma pi_sigma(rho), in particular equal or adjacent.
// domination_monotonicity: pi_sigma is monotone along <=_sigma edges.
// domination_same_projection: an order chain inside a sphere around sigma with
//   equal first and last projection is a clique with all projections equal.
std::vector<CheckReport> verify_domination(const ProjectionStructure& ps, int jobs = 1);

struct ChainRow {
    int sigma = 0;
    int radius = 0;
    long long longest = 0;             // vertices in the longest order chain
    unsigned long long bound = 0;      // (L+1)^radius, saturated
};

struct ChainStats {
    std::vector<ChainRow> rows;  // sigma ascending, radius ascending
    int clique_bound_L = 0;      // max clique size minus one
    bool pass = true;
    double max_ratio = 0.0;      // max longest/bound over rows
};

// Longest directed chain per base and sphere radius. Refuses to run on a
// cyclic order (structural_error).
ChainStats chain_length_stats(const ProjectionStructure& ps,
                              long long clique_cap = kDefaultCliqueCap);

// d(sigma', pi_sigma(rho)) <= max(d(sigma', rho), d(sigma', sigma)) for all triples.
CheckReport verify_ball_retention(const ProjectionStructure& ps, int jobs = 1);

// For edges (sigma, sigma') and (rho, rho') with rho' <_sigma' rho and
// rho <_sigma rho', sigma' != rho':
//   (i)  rho <=_sigma pi_sigma'(rho')
//   (ii) d(sigma, pi_sigma'(rho')) <= d(sigma, rho') when sigma != rho'.
CheckReport verify_change_of_basis(const ProjectionStructure& ps, int jobs = 1);

// chain_length_stats folded into a report; a cyclic order fails instead of
// throwing so batch runs always produce a full report list.
CheckReport chain_bound_report(const ProjectionStructure& ps,
                               long long clique_cap = kDefaultCliqueCap);

// The base order restricted to a clique is total; returns the clique sorted
// ascending in <_sigma. Throws structural_error when the restriction is not a
// total order.
std::vector<int> sort_clique_by_order(const ProjectionStructure& ps, int sigma,
                                      const VertexSet& clique);

// All ten checks (decrement, three order axioms, three domination checks,
// ball retention, change of basis, chain bound), sorted by name.
std::vector<CheckReport> run_all_checks(const ProjectionStructure& ps, int jobs = 1,
                                        long long clique_cap = kDefaultCliqueCap);

}  // namespace kakimizu

#endif
