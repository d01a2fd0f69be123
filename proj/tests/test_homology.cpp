#include <doctest.h>

#include <algorithm>
#include <kakimizu/cover_model.hpp>
#include <kakimizu/homology.hpp>
#include <map>

using namespace kakimizu;

namespace {

FlagComplex cycle(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
    return build_graph(n, e);
}

FlagComplex complete(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.push_back({i, j});
    return build_graph(n, e);
}

IntegerMatrix from_ints(int rows, int cols, std::vector<long long> vals) {
    IntegerMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.at(i, j) = vals[(size_t)i * cols + j];
    return m;
}

BigInt minor_det(const IntegerMatrix& m, const std::vector<int>& rows,
                 const std::vector<int>& cols) {
    int k = (int)rows.size();
    if (k == 1) return m.at(rows[0], cols[0]);
    BigInt acc = 0;
    int sign = 1;
    std::vector<int> sub(rows.begin() + 1, rows.end());
    for (int drop = 0; drop < k; ++drop) {
        std::vector<int> cs;
        for (int t = 0; t < k; ++t)
            if (t != drop) cs.push_back(cols[t]);
        acc += sign * m.at(rows[0], cols[drop]) * minor_det(m, sub, cs);
        sign = -sign;
    }
    return acc;
}

void combos(int n, int k, int start, std::vector<int>& cur,
            const std::function<void(const std::vector<int>&)>& fn) {
    if ((int)cur.size() == k) {
        fn(cur);
        return;
    }
    for (int i = start; i <= n - (k - (int)cur.size()); ++i) {
        cur.push_back(i);
        combos(n, k, i + 1, cur, fn);
        cur.pop_back();
    }
}

// determinant-divisor form of the invariant factors: d_k is the gcd of all
// k by k minors, the k-th divisor is d_k / d_{k-1}
SnfResult snf_by_minors(const IntegerMatrix& m) {
    SnfResult res;
    BigInt prev = 1;
    int kmax = std::min(m.rows, m.cols);
    for (int k = 1; k <= kmax; ++k) {
        BigInt g = 0;
        std::vector<int> rc, cc;
        combos(m.rows, k, 0, rc, [&](const std::vector<int>& rows) {
            std::vector<int> cur;
            combos(m.cols, k, 0, cur, [&](const std::vector<int>& cols) {
                g = gcd(g, minor_det(m, rows, cols));
            });
        });
        if (g == 0) break;
        if (g < 0) g = -g;
        res.divisors.push_back(g / prev);
        prev = g;
        res.rank = k;
    }
    return res;
}

}  // namespace

TEST_SUITE("homology") {

TEST_CASE("boundary matrices of an edge") {
    auto dels = boundary_matrices(complete(2), 0);
    REQUIRE(dels.size() == 2);
    CHECK(dels[0].rows == 1);
    CHECK(dels[0].cols == 2);
    CHECK(dels[0].at(0, 0) == 1);
    CHECK(dels[0].at(0, 1) == 1);
    CHECK(dels[1].rows == 2);
    CHECK(dels[1].cols == 1);
    CHECK(dels[1].at(0, 0) == -1);
    CHECK(dels[1].at(1, 0) == 1);

    CHECK_THROWS_AS(boundary_matrices(build_graph(0, {}), 0), input_error);
    CHECK_THROWS_AS(boundary_matrices(complete(2), -1), input_error);
}

TEST_CASE("boundary composition vanishes on a filled triangle") {
    auto dels = boundary_matrices(complete(3), 2);
    REQUIRE(dels.size() == 4);
    CHECK(dels[2].rows == 3);  // edges
    CHECK(dels[2].cols == 1);  // one triangle
    CHECK(dels[3].cols == 0);
    // del_1 . del_2 = 0 columnwise
    for (int i = 0; i < 3; ++i) {
        BigInt acc = 0;
        for (int k = 0; k < 3; ++k) acc += dels[1].at(i, k) * dels[2].at(k, 0);
        CHECK(acc == 0);
    }
}

TEST_CASE("smith_normal_form frozen examples") {
    auto d23 = smith_normal_form(from_ints(2, 2, {2, 0, 0, 3}));
    CHECK(d23.rank == 2);
    REQUIRE(d23.divisors.size() == 2);
    CHECK(d23.divisors[0] == 1);
    CHECK(d23.divisors[1] == 6);

    auto even = smith_normal_form(from_ints(2, 2, {2, 4, 6, 8}));
    CHECK(even.rank == 2);
    CHECK(even.divisors[0] == 2);
    CHECK(even.divisors[1] == 4);

    auto zero = smith_normal_form(IntegerMatrix(3, 2));
    CHECK(zero.rank == 0);
    CHECK(zero.divisors.empty());

    auto id = smith_normal_form(from_ints(3, 3, {1, 0, 0, 0, 1, 0, 0, 0, 1}));
    CHECK(id.rank == 3);
    CHECK(id.divisors == std::vector<BigInt>{1, 1, 1});

    auto empty = smith_normal_form(IntegerMatrix(0, 5));
    CHECK(empty.rank == 0);
}

TEST_CASE("smith_normal_form agrees with the determinant-divisor oracle") {
    SeededRng rng(2026);
    for (int trial = 0; trial < 12; ++trial) {
        int rows = 2 + rng.below(2), cols = 2 + rng.below(3);
        IntegerMatrix m(rows, cols);
        for (auto& e : m.entries) e = rng.below(9) - 4;
        auto fast = smith_normal_form(m);
        auto slow = snf_by_minors(m);
        CHECK(fast.rank == slow.rank);
        CHECK(fast.divisors == slow.divisors);
    }
}

TEST_CASE("smith_normal_form is invariant under unimodular moves") {
    auto base = from_ints(3, 3, {2, 4, 4, -6, 6, 12, 10, 4, 16});
    auto want = smith_normal_form(base);
    SeededRng rng(7);
    IntegerMatrix m = base;
    for (int step = 0; step < 40; ++step) {
        int a = rng.below(3), b = rng.below(3), c = rng.below(5) - 2;
        if (a == b) continue;
        if (rng.below(2) == 0)
            for (int j = 0; j < 3; ++j) m.at(a, j) += c * m.at(b, j);
        else
            for (int i = 0; i < 3; ++i) m.at(i, a) += c * m.at(i, b);
    }
    auto got = smith_normal_form(m);
    CHECK(got.rank == want.rank);
    CHECK(got.divisors == want.divisors);
}

TEST_CASE("cycles have one loop, filled shapes have none") {
    auto c4 = reduced_homology(cycle(4));
    REQUIRE(c4.betti.size() == 2);
    CHECK(c4.betti[0] == 0);
    CHECK(c4.betti[1] == 1);
    CHECK(c4.torsion[0].empty());
    CHECK(c4.torsion[1].empty());
    CHECK_FALSE(c4.trivial());
    CHECK_FALSE(is_homology_point(cycle(4)));

    auto c5 = reduced_homology(cycle(5));
    CHECK(c5.betti[0] == 0);
    CHECK(c5.betti[1] == 1);

    auto k3 = reduced_homology(complete(3));
    CHECK(k3.trivial());
    CHECK(is_homology_point(complete(3)));
    CHECK(is_homology_point(complete(5)));
    CHECK(is_homology_point(build_graph(1, {})));

    auto p3 = build_graph(3, {{0, 1}, {1, 2}});
    CHECK(is_homology_point(p3));

    auto two_points = reduced_homology(build_graph(2, {}));
    CHECK(two_points.betti[0] == 1);
    CHECK_FALSE(is_homology_point(build_graph(2, {})));

    CHECK_THROWS_AS(reduced_homology(build_graph(0, {})), input_error);
}

TEST_CASE("max_dim truncates the profile") {
    auto prof = reduced_homology(complete(4), 1);
    REQUIRE(prof.betti.size() == 2);
    CHECK(prof.betti[0] == 0);
    CHECK(prof.betti[1] == 0);
}

TEST_CASE("projective plane: torsion through the barycentric subdivision") {
    // minimal 6-vertex triangulation, each edge in exactly two triangles
    std::vector<VertexSet> tris{{0, 1, 5}, {1, 2, 5}, {2, 3, 5}, {3, 4, 5}, {0, 4, 5},
                                {0, 1, 3}, {1, 2, 4}, {0, 2, 3}, {1, 3, 4}, {0, 2, 4}};
    std::map<VertexSet, int> id;
    std::vector<VertexSet> simplices;
    auto intern = [&](const VertexSet& s) {
        auto [it, fresh] = id.emplace(s, (int)simplices.size());
        if (fresh) simplices.push_back(s);
        return it->second;
    };
    for (int v = 0; v < 6; ++v) intern({v});
    std::map<VertexSet, int> edge_count;
    for (const auto& t : tris) {
        intern(t);
        for (int drop = 0; drop < 3; ++drop) {
            VertexSet e;
            for (int i = 0; i < 3; ++i)
                if (i != drop) e.push_back(t[i]);
            std::sort(e.begin(), e.end());
            intern(e);
            edge_count[e] += 1;
        }
    }
    REQUIRE(edge_count.size() == 15);
    for (const auto& [e, cnt] : edge_count) CHECK(cnt == 2);
    REQUIRE(simplices.size() == 31);

    // order complex of the face poset: a flag complex homeomorphic to the surface
    std::vector<std::pair<int, int>> edges;
    for (size_t a = 0; a < simplices.size(); ++a)
        for (size_t b = a + 1; b < simplices.size(); ++b) {
            const auto &sa = simplices[a], &sb = simplices[b];
            const auto &small = sa.size() < sb.size() ? sa : sb;
            const auto &big = sa.size() < sb.size() ? sb : sa;
            if (small.size() == big.size()) continue;
            if (std::includes(big.begin(), big.end(), small.begin(), small.end()))
                edges.push_back({(int)a, (int)b});
        }
    auto barycentric = build_graph((int)simplices.size(), edges);
    CHECK(max_clique_size(barycentric) == 3);

    auto prof = reduced_homology(barycentric);
    REQUIRE(prof.betti.size() == 3);
    CHECK(prof.betti[0] == 0);
    CHECK(prof.betti[1] == 0);
    CHECK(prof.betti[2] == 0);
    CHECK(prof.torsion[0].empty());
    REQUIRE(prof.torsion[1].size() == 1);
    CHECK(prof.torsion[1][0] == 2);
    CHECK(prof.torsion[2].empty());
    CHECK_FALSE(prof.trivial());
    CHECK_FALSE(is_homology_point(barycentric));
}

TEST_CASE("closed families are homology points") {
    for (uint64_t seed : {41u, 42u, 43u}) {
        auto fam = generate_random(3, 5, 3, seed);
        CHECK(is_homology_point(fam.graph));
    }
}

}  // TEST_SUITE
