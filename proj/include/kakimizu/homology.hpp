// homology.hpp - integer simplicial homology of flag complexes via Smith
// normal form; the independent contractibility oracle
#ifndef KAKIMIZU_HOMOLOGY_HPP
#define KAKIMIZU_HOMOLOGY_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include "kakimizu/core.hpp"

namespace kakimizu {

using BigInt = boost::multiprecision::cpp_int;

// Dense row-major integer matrix. Desk-scale complexes keep these small;
// arbitrary precision removes overflow from the trust base.
struct IntegerMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<BigInt> entries;  // rows * cols, row major

    IntegerMatrix() = default;
    IntegerMatrix(int r, int c) : rows(r), cols(c), entries((size_t)r * c) {}
    BigInt& at(int r, int c) { return entries[(size_t)r * cols + c]; }
    const BigInt& at(int r, int c) const { return entries[(size_t)r * cols + c]; }
};

// Boundary operators of the flag complex, reduced: index 0 holds the
// augmentation (1 x n_0 row of ones), index k >= 1 holds del_k mapping
// k-simplices to (k-1)-simplices with alternating signs. One extra operator
// past max_dim is included so homology at max_dim is computable; the
// composition of consecutive operators is verified to vanish.
std::vector<IntegerMatrix> boundary_matrices(const FlagComplex& c, int max_dim,
                                             long long cap = kDefaultCliqueCap);

struct SnfResult {
    std::vector<BigInt> divisors;  // d_1 | d_2 | ... | d_rank, all positive
    int rank = 0;
};

// Elementary row/column reduction with smallest-pivot selection.
SnfResult smith_normal_form(IntegerMatrix m);

struct HomologyProfile {
    std::vector<long long> betti;           // reduced, dimensions 0..max_dim
    std::vector<std::vector<BigInt>> torsion;  // divisors > 1 per dimension

    bool trivial() const;
};

// Reduced integral homology up to max_dim; max_dim < 0 means the top
// dimension of the complex (largest clique size minus one).
HomologyProfile reduced_homology(const FlagComplex& c, int max_dim = -1,
                                 long long cap = kDefaultCliqueCap);

// True iff every reduced group up to the top dimension vanishes.
bool is_homology_point(const FlagComplex& c, long long cap = kDefaultCliqueCap);

}  // namespace kakimizu

#endif
