#include "kakimizu/core.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <thread>

namespace kakimizu {

std::string CheckReport::line() const {
    std::string s = pass ? "PASS " : "FAIL ";
    s += name;
    if (!pass) {
        for (int w : witness) s += " " + std::to_string(w);
    }
    return s;
}

FlagComplex build_graph(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0) throw input_error("vertex count must be nonnegative");
    FlagComplex c;
    c.vertex_count = n;
    c.adj.assign(n, std::vector<char>(n, 0));
    c.adj_bits.assign(n, std::vector<uint64_t>(c.words(), 0));
    std::set<std::pair<int, int>> seen;
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw input_error("edge endpoint out of range: (" + std::to_string(u) + "," +
                              std::to_string(v) + ")");
        if (u == v) throw input_error("self-loop at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
        if (!seen.insert({u, v}).second)
            throw input_error("duplicate edge (" + std::to_string(u) + "," +
                              std::to_string(v) + ")");
        c.adj[u][v] = c.adj[v][u] = 1;
        c.adj_bits[u][v / 64] |= uint64_t(1) << (v % 64);
        c.adj_bits[v][u / 64] |= uint64_t(1) << (u % 64);
    }
    c.edges.assign(seen.begin(), seen.end());
    return c;
}

std::vector<int> bfs_distances(const FlagComplex& c, int source) {
    if (source < 0 || source >= c.vertex_count) throw input_error("invalid vertex id");
    std::vector<int> d(c.vertex_count, kInfDist);
    d[source] = 0;
    std::deque<int> q{source};
    while (!q.empty()) {
        int u = q.front();
        q.pop_front();
        for (int v = 0; v < c.vertex_count; ++v)
            if (c.adj[u][v] && d[v] == kInfDist) {
                d[v] = d[u] + 1;
                q.push_back(v);
            }
    }
    return d;
}

int distance(const FlagComplex& c, int u, int v) {
    if (u < 0 || u >= c.vertex_count || v < 0 || v >= c.vertex_count)
        throw input_error("invalid vertex id");
    if (u == v) return 0;
    return bfs_distances(c, u)[v];
}

int diameter(const FlagComplex& c) {
    if (c.vertex_count == 0) throw input_error("diameter of empty complex");
    int best = 0;
    for (int s = 0; s < c.vertex_count; ++s) {
        auto d = bfs_distances(c, s);
        for (int v = 0; v < c.vertex_count; ++v) {
            if (d[v] == kInfDist) return kInfDist;
            best = std::max(best, d[v]);
        }
    }
    return best;
}

bool is_connected(const FlagComplex& c) {
    if (c.vertex_count == 0) return true;
    auto d = bfs_distances(c, 0);
    return std::none_of(d.begin(), d.end(), [](int x) { return x == kInfDist; });
}

VertexSet closed_neighborhood(const FlagComplex& c, int v, const VertexSet& restrict_to) {
    if (v < 0 || v >= c.vertex_count) throw input_error("invalid vertex id");
    VertexSet out;
    for (int u : restrict_to) {
        if (u < 0 || u >= c.vertex_count) throw input_error("restrict set id out of range");
        if (u == v || c.adj[v][u]) out.push_back(u);
    }
    return out;
}

namespace {

void extend_cliques(const FlagComplex& c, VertexSet& cur, int max_size, long long cap,
                    std::vector<VertexSet>& out) {
    if ((long long)out.size() > cap) throw input_error("clique cap exceeded");
    if (!cur.empty()) out.push_back(cur);
    if ((int)cur.size() == max_size) return;
    int start = cur.empty() ? 0 : cur.back() + 1;
    for (int v = start; v < c.vertex_count; ++v) {
        bool ok = true;
        for (int u : cur)
            if (!c.adj[u][v]) {
                ok = false;
                break;
            }
        if (ok) {
            cur.push_back(v);
            extend_cliques(c, cur, max_size, cap, out);
            cur.pop_back();
        }
    }
}

}  // namespace

std::vector<VertexSet> enumerate_cliques(const FlagComplex& c, int max_dim, long long cap) {
    if (max_dim < 0) throw input_error("max_dim must be nonnegative");
    std::vector<VertexSet> out;
    VertexSet cur;
    // ascending-id extension emits the list in lexicographic order directly
    extend_cliques(c, cur, max_dim + 1, cap, out);
    if ((long long)out.size() > cap) throw input_error("clique cap exceeded");
    return out;
}

namespace {

void max_clique_rec(const FlagComplex& c, VertexSet& cur, const VertexSet& cand,
                    long long& nodes, long long cap, int& best) {
    if (++nodes > cap) throw input_error("clique cap exceeded");
    best = std::max(best, (int)cur.size());
    if ((int)(cur.size() + cand.size()) <= best) return;
    for (size_t i = 0; i < cand.size(); ++i) {
        if ((int)(cur.size() + cand.size() - i) <= best) return;
        int v = cand[i];
        VertexSet next;
        for (size_t j = i + 1; j < cand.size(); ++j)
            if (c.adj[v][cand[j]]) next.push_back(cand[j]);
        cur.push_back(v);
        max_clique_rec(c, cur, next, nodes, cap, best);
        cur.pop_back();
    }
}

}  // namespace

int max_clique_size(const FlagComplex& c, long long cap) {
    if (c.vertex_count == 0) return 0;
    VertexSet all(c.vertex_count);
    for (int v = 0; v < c.vertex_count; ++v) all[v] = v;
    VertexSet cur;
    int best = 0;
    long long nodes = 0;
    max_clique_rec(c, cur, all, nodes, cap, best);
    return best;
}

InducedResult induced(const FlagComplex& c, const VertexSet& s) {
    if (s.empty()) throw input_error("induced subcomplex of empty vertex set");
    std::vector<int> pos(c.vertex_count, -1);
    for (size_t i = 0; i < s.size(); ++i) {
        int v = s[i];
        if (v < 0 || v >= c.vertex_count) throw input_error("induced set id out of range");
        if (i > 0 && s[i - 1] >= v) throw input_error("induced set must be strictly increasing");
        pos[v] = (int)i;
    }
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : c.edges)
        if (pos[u] >= 0 && pos[v] >= 0) edges.push_back({pos[u], pos[v]});
    InducedResult r;
    r.complex = build_graph((int)s.size(), edges);
    r.remap = s;
    return r;
}

void parallel_for(int jobs, int n, const std::function<void(int)>& fn) {
    if (n <= 0) return;
    if (jobs <= 1 || n == 1) {
        for (int i = 0; i < n; ++i) fn(i);
        return;
    }
    int workers = std::min(jobs, n);
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (int w = 0; w < workers; ++w) {
        threads.emplace_back([&, w] {
            int lo = (int)((long long)n * w / workers);
            int hi = (int)((long long)n * (w + 1) / workers);
            for (int i = lo; i < hi; ++i) fn(i);
        });
    }
    for (auto& t : threads) t.join();
}

}  // namespace kakimizu
