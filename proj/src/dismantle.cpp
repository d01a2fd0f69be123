#include "kakimizu/dismantle.hpp"

#include <algorithm>

namespace kakimizu {

std::optional<std::pair<int, int>> dominated_vertex(const FlagComplex& c,
                                                    const VertexSet& live) {
    if (live.empty()) throw input_error("live set is empty");
    int words = c.words();
    std::vector<uint64_t> live_bits(words, 0);
    for (int v : live) {
        if (v < 0 || v >= c.vertex_count) throw input_error("live vertex out of range");
        live_bits[v / 64] |= uint64_t(1) << (v % 64);
    }
    auto closed_in_live = [&](int v) {
        std::vector<uint64_t> b(words);
        for (int i = 0; i < words; ++i) b[i] = c.adj_bits[v][i] & live_bits[i];
        b[v / 64] |= uint64_t(1) << (v % 64);
        return b;
    };
    for (int v : live) {
        auto nv = closed_in_live(v);
        for (int w : live) {
            if (w == v) continue;
            auto nw = closed_in_live(w);
            bool contained = true;
            for (int i = 0; i < words && contained; ++i) contained = (nv[i] & ~nw[i]) == 0;
            if (contained) return std::make_pair(v, w);
        }
    }
    return std::nullopt;
}

std::optional<DismantlingOrder> greedy_dismantle(const FlagComplex& c) {
    if (c.vertex_count == 0) throw input_error("empty complex");
    VertexSet live(c.vertex_count);
    for (int v = 0; v < c.vertex_count; ++v) live[v] = v;
    DismantlingOrder d;
    std::vector<int> witness_vertex;
    while (live.size() > 1) {
        auto dom = dominated_vertex(c, live);
        if (!dom) return std::nullopt;
        d.order.push_back(dom->first);
        witness_vertex.push_back(dom->second);
        live.erase(std::find(live.begin(), live.end(), dom->first));
    }
    d.order.push_back(live[0]);
    std::vector<int> pos(c.vertex_count);
    for (int i = 0; i < c.vertex_count; ++i) pos[d.order[i]] = i;
    for (int w : witness_vertex) d.witness.push_back(pos[w]);
    auto rep = verify_dismantling(c, d);
    if (!rep.pass)
        throw structural_error("greedy certificate failed verification: " + rep.line());
    return d;
}

DismantlingOrder projection_dismantle(const ProjectionStructure& ps, int sigma) {
    DismantlingOrder d;
    d.order = linear_extension(ps, sigma);
    int n = ps.n();
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[d.order[i]] = i;
    for (int i = 0; i + 1 < n; ++i) {
        int p = ps.project_vertex(sigma, d.order[i]);
        if (p < 0 || p >= n)
            throw structural_error("projection image outside the vertex set");
        d.witness.push_back(pos[p]);
    }
    auto rep = verify_dismantling(ps.complex, d);
    if (!rep.pass)
        throw structural_error("projection order is not a dismantling: " + rep.line());
    return d;
}

CheckReport verify_dismantling(const FlagComplex& c, const DismantlingOrder& d) {
    int n = c.vertex_count;
    if ((int)d.order.size() != n) throw input_error("order length differs from vertex count");
    std::vector<char> seen(n, 0);
    for (int v : d.order) {
        if (v < 0 || v >= n || seen[v]) throw input_error("order is not a permutation");
        seen[v] = 1;
    }
    if (n > 0 && (int)d.witness.size() != n - 1)
        throw input_error("witness map needs one entry per non-final vertex");
    for (int i = 0; i + 1 < n; ++i)
        if (d.witness[i] <= i || d.witness[i] >= n)
            throw input_error("witness position must point past its vertex");
    CheckReport rep;
    rep.name = "dismantling";
    rep.cases = n > 0 ? n - 1 : 0;
    for (int i = 0; i + 1 < n; ++i) {
        int xi = d.order[i], xj = d.order[d.witness[i]];
        if (!c.adjacent(xi, xj)) {
            rep.pass = false;
            rep.witness = {xi, xj};
            rep.detail = "witness not adjacent to its vertex";
            return rep;
        }
        for (int k = i + 1; k < n; ++k) {
            int xk = d.order[k];
            if (!c.adjacent(xi, xk)) continue;
            if (xk != xj && !c.adjacent(xj, xk)) {
                rep.pass = false;
                rep.witness = {xi, xj, xk};
                rep.detail = "later neighbor escapes the witness";
                return rep;
            }
        }
    }
    return rep;
}

VertexSet sigma_convex_hull(const ProjectionStructure& ps, const VertexSet& seed,
                            int sigma) {
    if (std::find(seed.begin(), seed.end(), sigma) == seed.end())
        throw input_error("hull seed must contain its base");
    int n = ps.n();
    std::vector<char> in(n, 0);
    std::vector<int> stack;
    for (int v : seed) {
        if (v < 0 || v >= n) throw input_error("seed vertex out of range");
        if (!in[v]) {
            in[v] = 1;
            stack.push_back(v);
        }
    }
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        if (v == sigma) continue;
        int p = ps.project_vertex(sigma, v);
        if (!in[p]) {
            in[p] = 1;
            stack.push_back(p);
        }
    }
    VertexSet out;
    for (int v = 0; v < n; ++v)
        if (in[v]) out.push_back(v);
    return out;
}

}  // namespace kakimizu
