// cover_model.hpp - exact height-function model of the infinite cyclic cover
//
// A vertex is an integer function on a finite column set, normalized so its
// minimum value is 0; translation by the deck transformation adds a constant,
// so the normal form identifies the isotopy class. Distance, projection and
// the base-point order are computed from overlaps of shifted copies.
#ifndef KAKIMIZU_COVER_MODEL_HPP
#define KAKIMIZU_COVER_MODEL_HPP

#include <random>

#include "kakimizu/core.hpp"

namespace kakimizu {

using HeightFunction = std::vector<int>;  // one value per column, min value 0

struct DistanceCertificate {
    int r = 0;      // max over columns of g - f
    int m_low = 0;  // min over columns of g - f
    int d = 0;      // r - m_low
};

// Finite family of distinct normalized height functions plus its derived
// graph, edge iff distance 1. Members sorted lexicographically; vertex ids
// index into members.
struct HeightFamily {
    int columns = 0;
    std::vector<HeightFunction> members;
    FlagComplex graph;

    int index_of(const HeightFunction& f) const;  // -1 when absent
};

HeightFunction normalize(HeightFunction f);

DistanceCertificate kakimizu_distance(const HeightFunction& f, const HeightFunction& g);

// Projection of g toward base f: shift g so min(g-f)=0 (then r = d) and take
// P(c) = min(g(c), f(c)+r-1), renormalized. Drops distance to f by one while
// staying adjacent to g. Requires f != g as vertices.
HeightFunction project(const HeightFunction& f, const HeightFunction& g);

// The base-point order on an adjacent pair (g, g2): shift g by the unique t
// with g2-1 <= g+t <= g2 pointwise; g precedes g2 below base f iff
// max((g+t)-f) = max(g2-f). Exactly one direction holds per pair.
bool order_less(const HeightFunction& f, const HeightFunction& g, const HeightFunction& g2);

// Sorts, deduplicates, validates normalization, builds the derived graph.
HeightFamily make_family(int columns, std::vector<HeightFunction> members);

bool is_convex_closed(const HeightFamily& fam);

// Smallest superset closed under rho -> project(sigma, rho).
HeightFamily close_sigma_convex(const HeightFamily& fam, const HeightFunction& sigma);

// Smallest superset closed under project for every ordered pair. Heights are
// bounded during closure by initial max height + initial diameter + 1;
// exceeding the bound throws model_violation.
HeightFamily close_convex(const HeightFamily& fam);

// Reproducible random convex-closed family; identical seeds give identical
// families on every platform. Retries with fresh draws when the closure
// exceeds size_cap, then throws input_error.
HeightFamily generate_random(int m, int count, int h_max, uint64_t seed,
                             int size_cap = kDefaultVertexCap);

// All column permutations mapping the member set onto itself, sorted, identity
// first. Throws input_error when the column count exceeds m_cap.
std::vector<std::vector<int>> column_symmetries(const HeightFamily& fam, int m_cap = 8);

// result[perm[i]] = f[i]
HeightFunction permute_columns(const HeightFunction& f, const std::vector<int>& perm);
HeightFamily permute_family(const HeightFamily& fam, const std::vector<int>& perm);

// The vertex permutation a column symmetry induces on fam.members.
std::vector<int> induced_vertex_permutation(const HeightFamily& fam,
                                            const std::vector<int>& perm);

// mt19937_64 with plain modulo reduction; std distributions are not pinned
// across implementations, the raw stream is.
struct SeededRng {
    std::mt19937_64 gen;
    explicit SeededRng(uint64_t seed) : gen(seed) {}
    int below(int k) { return (int)(gen() % (uint64_t)k); }  // k >= 1
};

}  // namespace kakimizu

#endif
