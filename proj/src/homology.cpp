#include "kakimizu/homology.hpp"

#include <algorithm>
#include <map>

namespace kakimizu {

namespace {

bool is_zero(const IntegerMatrix& m) {
    for (const auto& e : m.entries)
        if (e != 0) return false;
    return true;
}

IntegerMatrix multiply(const IntegerMatrix& a, const IntegerMatrix& b) {
    IntegerMatrix r(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int k = 0; k < a.cols; ++k) {
            const BigInt& aik = a.at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < b.cols; ++j) r.at(i, j) += aik * b.at(k, j);
        }
    return r;
}

}  // namespace

std::vector<IntegerMatrix> boundary_matrices(const FlagComplex& c, int max_dim,
                                             long long cap) {
    if (c.vertex_count == 0) throw input_error("empty complex has no chain complex");
    if (max_dim < 0) throw input_error("max_dim must be nonnegative");
    auto cliques = enumerate_cliques(c, max_dim + 1, cap);
    // simplices[k] lists k-simplices in lexicographic order
    std::vector<std::vector<VertexSet>> simplices(max_dim + 2);
    std::vector<std::map<VertexSet, int>> index(max_dim + 2);
    for (auto& q : cliques) {
        int k = (int)q.size() - 1;
        index[k].emplace(q, (int)simplices[k].size());
        simplices[k].push_back(std::move(q));
    }
    std::vector<IntegerMatrix> out;
    IntegerMatrix aug(1, (int)simplices[0].size());
    for (int j = 0; j < aug.cols; ++j) aug.at(0, j) = 1;
    out.push_back(std::move(aug));
    for (int k = 1; k <= max_dim + 1; ++k) {
        IntegerMatrix del((int)simplices[k - 1].size(), (int)simplices[k].size());
        for (int j = 0; j < del.cols; ++j) {
            const VertexSet& s = simplices[k][j];
            int sign = 1;
            for (int drop = 0; drop <= k; ++drop) {
                VertexSet face;
                face.reserve(k);
                for (int t = 0; t <= k; ++t)
                    if (t != drop) face.push_back(s[t]);
                del.at(index[k - 1].at(face), j) = sign;
                sign = -sign;
            }
        }
        out.push_back(std::move(del));
    }
    for (size_t k = 0; k + 1 < out.size(); ++k)
        if (!is_zero(multiply(out[k], out[k + 1])))
            throw structural_error("boundary composition is nonzero at dimension " +
                                   std::to_string(k + 1));
    return out;
}

SnfResult smith_normal_form(IntegerMatrix m) {
    SnfResult res;
    int t = 0;
    while (t < m.rows && t < m.cols) {
        // smallest nonzero entry of the trailing block becomes the pivot
        int pr = -1, pc = -1;
        BigInt best = 0;
        for (int i = t; i < m.rows; ++i)
            for (int j = t; j < m.cols; ++j) {
                if (m.at(i, j) == 0) continue;
                BigInt a = abs(m.at(i, j));
                if (pr < 0 || a < best) {
                    best = a;
                    pr = i;
                    pc = j;
                }
            }
        if (pr < 0) break;
        for (int j = 0; j < m.cols; ++j) std::swap(m.at(t, j), m.at(pr, j));
        for (int i = 0; i < m.rows; ++i) std::swap(m.at(i, t), m.at(i, pc));
        bool clean = true;
        for (int i = t + 1; i < m.rows; ++i) {
            BigInt q = m.at(i, t) / m.at(t, t);
            if (q != 0)
                for (int j = t; j < m.cols; ++j) m.at(i, j) -= q * m.at(t, j);
            if (m.at(i, t) != 0) clean = false;
        }
        for (int j = t + 1; j < m.cols; ++j) {
            BigInt q = m.at(t, j) / m.at(t, t);
            if (q != 0)
                for (int i = t; i < m.rows; ++i) m.at(i, j) -= q * m.at(i, t);
            if (m.at(t, j) != 0) clean = false;
        }
        if (!clean) continue;  // a smaller remainder surfaced, re-pivot
        // pivot must divide the rest of the block; fold a bad row in and redo
        bool divides = true;
        for (int i = t + 1; i < m.rows && divides; ++i)
            for (int j = t + 1; j < m.cols && divides; ++j)
                if (m.at(i, j) % m.at(t, t) != 0) {
                    for (int jj = t; jj < m.cols; ++jj) m.at(t, jj) += m.at(i, jj);
                    divides = false;
                }
        if (!divides) continue;
        if (m.at(t, t) < 0)
            for (int j = t; j < m.cols; ++j) m.at(t, j) = -m.at(t, j);
        ++t;
    }
    res.rank = t;
    for (int i = 0; i < t; ++i) res.divisors.push_back(m.at(i, i));
    return res;
}

bool HomologyProfile::trivial() const {
    for (long long b : betti)
        if (b != 0) return false;
    for (const auto& tor : torsion)
        if (!tor.empty()) return false;
    return true;
}

HomologyProfile reduced_homology(const FlagComplex& c, int max_dim, long long cap) {
    if (c.vertex_count == 0) throw input_error("empty complex has no homology profile");
    if (max_dim < 0) max_dim = max_clique_size(c, cap) - 1;
    auto del = boundary_matrices(c, max_dim, cap);
    HomologyProfile prof;
    prof.betti.resize(max_dim + 1);
    prof.torsion.resize(max_dim + 1);
    std::vector<SnfResult> snf(del.size());
    for (size_t k = 0; k < del.size(); ++k) snf[k] = smith_normal_form(del[k]);
    for (int k = 0; k <= max_dim; ++k) {
        long long nk = del[k].cols;
        prof.betti[k] = nk - snf[k].rank - snf[k + 1].rank;
        for (const auto& dv : snf[k + 1].divisors)
            if (dv > 1) prof.torsion[k].push_back(dv);
    }
    return prof;
}

bool is_homology_point(const FlagComplex& c, long long cap) {
    return reduced_homology(c, -1, cap).trivial();
}

}  // namespace kakimizu
