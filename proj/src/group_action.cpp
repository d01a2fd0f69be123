#include "kakimizu/group_action.hpp"

#include <algorithm>
#include <queue>

namespace kakimizu {

namespace {

void validate_generators(const GroupAction& a, int n) {
    for (const auto& g : a.generators)
        if ((int)g.size() != n)
            throw input_error("generator length differs from vertex count");
}

bool is_permutation(const std::vector<int>& g) {
    std::vector<char> hit(g.size(), 0);
    for (int v : g) {
        if (v < 0 || v >= (int)g.size() || hit[v]) return false;
        hit[v] = 1;
    }
    return true;
}

// Distances inside the subcomplex induced on Y, plus the id remaps.
struct InducedMetric {
    InducedResult ind;
    std::vector<int> to_local;               // ambient -> local, -1 outside
    std::vector<std::vector<int>> dist;      // local all-pairs

    InducedMetric(const FlagComplex& c, const VertexSet& Y) : ind(induced(c, Y)) {
        to_local.assign(c.vertex_count, -1);
        for (int i = 0; i < (int)Y.size(); ++i) to_local[Y[i]] = i;
        dist.resize(Y.size());
        for (int i = 0; i < (int)Y.size(); ++i) dist[i] = bfs_distances(ind.complex, i);
    }

    int diam() const {
        int d = 0;
        for (const auto& row : dist)
            for (int x : row) d = std::max(d, x);
        return d;
    }
};

}  // namespace

CheckReport check_action(const ProjectionStructure& ps, const GroupAction& a) {
    int n = ps.n();
    validate_generators(a, n);
    CheckReport rep;
    rep.name = "action";
    long long pair_count = (long long)n * (n - 1);
    long long edge_dirs = 2LL * (long long)ps.complex.edges.size();
    rep.cases = (long long)a.generators.size() *
                (pair_count / 2 + pair_count + (long long)n * edge_dirs);
    for (int gi = 0; gi < (int)a.generators.size(); ++gi) {
        const auto& g = a.generators[gi];
        if (!is_permutation(g)) {
            rep.pass = false;
            rep.witness = {gi};
            rep.detail = "generator is not a permutation";
            return rep;
        }
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (ps.complex.adjacent(u, v) != ps.complex.adjacent(g[u], g[v])) {
                    rep.pass = false;
                    rep.witness = {gi, u, v};
                    rep.detail = "generator is not an automorphism";
                    return rep;
                }
        for (int s = 0; s < n; ++s)
            for (int r = 0; r < n; ++r) {
                if (r == s) continue;
                if (g[ps.project_vertex(s, r)] != ps.project_vertex(g[s], g[r])) {
                    rep.pass = false;
                    rep.witness = {gi, s, r};
                    rep.detail = "generator does not commute with the projection";
                    return rep;
                }
            }
        for (int s = 0; s < n; ++s)
            for (auto [u, v] : ps.complex.edges)
                for (int dir = 0; dir < 2; ++dir) {
                    int x = dir ? v : u, y = dir ? u : v;
                    if (ps.less(s, x, y) != ps.less(g[s], g[x], g[y])) {
                        rep.pass = false;
                        rep.witness = {gi, s, x, y};
                        rep.detail = "generator does not preserve the order";
                        return rep;
                    }
                }
    }
    return rep;
}

VertexSet orbit(const GroupAction& a, int v) {
    for (const auto& g : a.generators)
        if (v < 0 || v >= (int)g.size()) throw input_error("orbit seed out of range");
    if (v < 0) throw input_error("orbit seed out of range");
    std::vector<int> stack{v};
    VertexSet out{v};
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (const auto& g : a.generators) {
            int y = g[x];
            if (!std::count(out.begin(), out.end(), y)) {
                out.push_back(y);
                stack.push_back(y);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool is_invariant(const GroupAction& a, const VertexSet& s) {
    for (const auto& g : a.generators)
        for (int v : s) {
            if (v < 0 || v >= (int)g.size()) throw input_error("set vertex out of range");
            if (!std::binary_search(s.begin(), s.end(), g[v])) return false;
        }
    return true;
}

VertexSet convex_hull(const ProjectionStructure& ps, const VertexSet& seed) {
    int n = ps.n();
    std::vector<char> in(n, 0);
    VertexSet work;
    for (int v : seed) {
        if (v < 0 || v >= n) throw input_error("hull seed vertex out of range");
        if (!in[v]) {
            in[v] = 1;
            work.push_back(v);
        }
    }
    if (work.empty()) throw input_error("hull seed is empty");
    for (size_t head = 0; head < work.size(); ++head) {
        // pair the newest member against everything present, both roles
        int v = work[head];
        for (size_t other = 0; other < work.size(); ++other) {
            int u = work[other];
            if (u == v) continue;
            for (int p : {ps.project_vertex(u, v), ps.project_vertex(v, u)}) {
                if (!in[p]) {
                    in[p] = 1;
                    work.push_back(p);
                }
            }
        }
    }
    std::sort(work.begin(), work.end());
    return work;
}

CheckReport is_semi_convex(const ProjectionStructure& ps, const VertexSet& Y) {
    CheckReport rep;
    rep.name = "semi_convex";
    int k = (int)Y.size();
    rep.cases = (long long)k * (k - 1);
    if (k == 0) throw input_error("empty subcomplex");
    InducedMetric met(ps.complex, Y);
    if (k > 1 && met.diam() >= kInfDist) throw input_error("subcomplex is disconnected");
    int n = ps.n();
    int words = ps.complex.words();
    std::vector<char> in_y(n, 0);
    for (int v : Y) in_y[v] = 1;
    std::vector<uint64_t> y_bits(words, 0);
    for (int v : Y) y_bits[v / 64] |= uint64_t(1) << (v % 64);
    // closed neighborhoods within Y for every ambient vertex
    std::vector<std::vector<uint64_t>> ny(n);
    for (int v = 0; v < n; ++v) {
        ny[v].resize(words);
        for (int i = 0; i < words; ++i) ny[v][i] = ps.complex.adj_bits[v][i] & y_bits[i];
        if (in_y[v]) ny[v][v / 64] |= uint64_t(1) << (v % 64);
    }
    std::vector<std::vector<int>> amb_dist(n);
    for (int v : Y) amb_dist[v] = bfs_distances(ps.complex, v);
    for (int si = 0; si < k; ++si)
        for (int ri = 0; ri < k; ++ri) {
            if (si == ri) continue;
            int sigma = Y[si], rho = Y[ri];
            int p = ps.project_vertex(sigma, rho);
            int want = amb_dist[sigma][p];
            bool found = false;
            for (int pi = 0; pi < k && !found; ++pi) {
                if (met.dist[pi][si] != want) continue;
                bool contained = true;
                for (int i = 0; i < words && contained; ++i)
                    contained = (ny[p][i] & ~ny[Y[pi]][i]) == 0;
                found = contained;
            }
            if (!found) {
                rep.pass = false;
                rep.witness = {sigma, rho};
                rep.detail = "no witness dominates the projection at the right distance";
                return rep;
            }
        }
    return rep;
}

VertexSet strongly_dominated(const FlagComplex& c, const VertexSet& Y) {
    int words = c.words();
    std::vector<uint64_t> y_bits(words, 0);
    for (int v : Y) {
        if (v < 0 || v >= c.vertex_count) throw input_error("subcomplex vertex out of range");
        y_bits[v / 64] |= uint64_t(1) << (v % 64);
    }
    auto closed = [&](int v) {
        std::vector<uint64_t> b(words);
        for (int i = 0; i < words; ++i) b[i] = c.adj_bits[v][i] & y_bits[i];
        b[v / 64] |= uint64_t(1) << (v % 64);
        return b;
    };
    std::vector<std::vector<uint64_t>> nb;
    nb.reserve(Y.size());
    for (int v : Y) nb.push_back(closed(v));
    VertexSet out;
    for (size_t i = 0; i < Y.size(); ++i) {
        for (size_t j = 0; j < Y.size(); ++j) {
            if (i == j) continue;
            bool sub = true, strict = false;
            for (int w = 0; w < words; ++w) {
                if (nb[i][w] & ~nb[j][w]) {
                    sub = false;
                    break;
                }
                if (nb[j][w] & ~nb[i][w]) strict = true;
            }
            if (sub && strict) {
                out.push_back(Y[i]);
                break;
            }
        }
    }
    return out;
}

int layer_chain_stat(const ProjectionStructure& ps, const VertexSet& Y) {
    if (Y.empty()) throw input_error("empty subcomplex");
    InducedMetric met(ps.complex, Y);
    int d = met.diam();
    if (d == 0) return 0;
    if (d >= kInfDist) throw input_error("subcomplex is disconnected");
    int best = 0;
    int k = (int)Y.size();
    for (int si = 0; si < k; ++si) {
        std::vector<int> sphere;
        for (int ri = 0; ri < k; ++ri)
            if (met.dist[si][ri] == d) sphere.push_back(ri);
        int m = (int)sphere.size();
        if (m == 0) continue;
        std::vector<std::vector<int>> out(m);
        std::vector<int> indeg(m, 0);
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j) {
                int u = Y[sphere[i]], v = Y[sphere[j]];
                if (!ps.complex.adjacent(u, v)) continue;
                if (ps.less(Y[si], u, v)) {
                    out[i].push_back(j);
                    ++indeg[j];
                }
                if (ps.less(Y[si], v, u)) {
                    out[j].push_back(i);
                    ++indeg[i];
                }
            }
        std::queue<int> q;
        for (int i = 0; i < m; ++i)
            if (indeg[i] == 0) q.push(i);
        std::vector<int> lp(m, 1), topo;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            topo.push_back(u);
            for (int v : out[u])
                if (--indeg[v] == 0) q.push(v);
        }
        if ((int)topo.size() != m)
            throw structural_error("order cycle in the diameter sphere of base " +
                                   std::to_string(Y[si]));
        for (int u : topo)
            for (int v : out[u]) lp[v] = std::max(lp[v], lp[u] + 1);
        for (int x : lp) best = std::max(best, x);
    }
    return best;
}

namespace {

int set_diameter(const FlagComplex& c, const VertexSet& s) {
    int d = 0;
    for (int v : s) {
        auto row = bfs_distances(c, v);
        for (int u : s) d = std::max(d, row[u]);
    }
    return d;
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

}  // namespace

FixpointResult find_invariant_simplex(const ProjectionStructure& ps, const GroupAction& a,
                                      int seed) {
    if (seed < 0 || seed >= ps.n()) throw input_error("seed vertex out of range");
    auto action_rep = check_action(ps, a);
    if (!action_rep.pass)
        throw structural_error("action rejected before the fixed-point run: " +
                               action_rep.line());
    FixpointResult res;
    VertexSet X = orbit(a, seed);
    res.orbit_diameter = set_diameter(ps.complex, X);
    res.hull = convex_hull(ps, X);
    res.hull_diameter = set_diameter(ps.complex, res.hull);
    if (res.hull_diameter != res.orbit_diameter)
        throw structural_error("convex hull changed the diameter: " +
                               std::to_string(res.orbit_diameter) + " -> " +
                               std::to_string(res.hull_diameter));
    if (!is_invariant(a, res.hull))
        throw structural_error("convex hull of an orbit is not invariant");
    VertexSet Y = res.hull;
    size_t iter_cap = Y.size() + 1;
    while (true) {
        InducedMetric met(ps.complex, Y);
        int diam = met.diam();
        if (diam >= kInfDist) throw structural_error("working subcomplex is disconnected");
        if (diam < 2) break;
        if (res.trace.size() >= iter_cap)
            throw structural_error("fixed-point loop exceeded its iteration cap");
        FixpointStep step;
        step.before = Y;
        step.diam_before = diam;
        step.chain_before = layer_chain_stat(ps, Y);
        step.removed = strongly_dominated(ps.complex, Y);
        VertexSet W = set_difference(Y, step.removed);
        if (W.empty()) throw structural_error("every vertex was strongly dominated");
        if (!is_invariant(a, W))
            throw structural_error("survivor set is not invariant");
        auto semi = is_semi_convex(ps, W);
        if (!semi.pass)
            throw structural_error("survivor set is not semi-convex: " + semi.line());
        step.diam_after = InducedMetric(ps.complex, W).diam();
        step.chain_after = layer_chain_stat(ps, W);
        bool decreased = step.diam_after < diam ||
                         (step.diam_after == diam && step.chain_after < step.chain_before);
        if (step.diam_after > diam || !decreased)
            throw structural_error("iteration failed to decrease (diameter, chain) at size " +
                                   std::to_string(Y.size()));
        res.trace.push_back(step);
        Y = std::move(W);
    }
    if (!is_invariant(a, Y)) throw structural_error("final simplex is not invariant");
    for (size_t i = 0; i < Y.size(); ++i)
        for (size_t j = i + 1; j < Y.size(); ++j)
            if (!ps.complex.adjacent(Y[i], Y[j]))
                throw structural_error("final subcomplex is not a clique");
    res.clique = Y;
    return res;
}

FixComplex fix_complex(const FlagComplex& c, const GroupAction& a) {
    validate_generators(a, c.vertex_count);
    for (const auto& g : a.generators)
        if (!is_permutation(g)) throw input_error("generator is not a permutation");
    FixComplex fc;
    std::vector<char> seen(c.vertex_count, 0);
    for (int v = 0; v < c.vertex_count; ++v) {
        if (seen[v]) continue;
        VertexSet orb = orbit(a, v);
        for (int x : orb) seen[x] = 1;
        bool clique = true;
        for (size_t i = 0; i < orb.size() && clique; ++i)
            for (size_t j = i + 1; j < orb.size() && clique; ++j)
                clique = c.adjacent(orb[i], orb[j]);
        if (clique) fc.orbits.push_back(std::move(orb));
    }
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < (int)fc.orbits.size(); ++i)
        for (int j = i + 1; j < (int)fc.orbits.size(); ++j) {
            bool joined = true;
            for (int u : fc.orbits[i]) {
                for (int v : fc.orbits[j])
                    if (!c.adjacent(u, v)) {
                        joined = false;
                        break;
                    }
                if (!joined) break;
            }
            if (joined) edges.push_back({i, j});
        }
    fc.complex = build_graph((int)fc.orbits.size(), edges);
    return fc;
}

namespace {

void require_fix_vertex(const ProjectionStructure& ps, const GroupAction& a,
                        const VertexSet& s, const char* role) {
    if (s.empty()) throw input_error(std::string(role) + " is empty");
    if (orbit(a, s[0]) != s)
        throw input_error(std::string(role) + " is not a vertex orbit");
    for (size_t i = 0; i < s.size(); ++i)
        for (size_t j = i + 1; j < s.size(); ++j)
            if (!ps.complex.adjacent(s[i], s[j]))
                throw input_error(std::string(role) + " does not span a clique");
}

}  // namespace

VertexSet big_project(const ProjectionStructure& ps, const GroupAction& a,
                      const VertexSet& Sigma, const VertexSet& Delta) {
    require_fix_vertex(ps, a, Sigma, "Sigma");
    require_fix_vertex(ps, a, Delta, "Delta");
    if (Sigma == Delta) throw input_error("big projection needs distinct fix vertices");
    int sigma = Sigma[0];
    int delta = sort_clique_by_order(ps, sigma, Delta).front();
    VertexSet out = orbit(a, ps.project_vertex(sigma, delta));
    for (size_t i = 0; i < out.size(); ++i)
        for (size_t j = i + 1; j < out.size(); ++j)
            if (!ps.complex.adjacent(out[i], out[j]))
                throw structural_error("projected orbit does not span a clique");
    for (int u : out)
        for (int v : Delta)
            if (u != v && !ps.complex.adjacent(u, v))
                throw structural_error("projected orbit does not extend Delta to a clique");
    for (int p : out)
        if (p != delta && (!ps.complex.adjacent(delta, p) || !ps.less(sigma, delta, p)))
            throw structural_error("order minimum does not precede the projected orbit");
    return out;
}

CheckReport verify_distance_sum_decrease(const ProjectionStructure& ps, const GroupAction& a,
                                         const VertexSet& Sigma, const VertexSet& Delta) {
    VertexSet proj = big_project(ps, a, Sigma, Delta);
    CheckReport rep;
    rep.name = "distance_sum_decrease";
    rep.cases = (long long)Sigma.size();
    long long first_proj = -1, first_delta = -1;
    for (int sigma : Sigma) {
        auto row = bfs_distances(ps.complex, sigma);
        long long sum_proj = 0, sum_delta = 0;
        for (int p : proj) sum_proj += row[p];
        for (int dv : Delta) sum_delta += row[dv];
        if (first_proj < 0) {
            first_proj = sum_proj;
            first_delta = sum_delta;
        }
        if (sum_proj >= sum_delta) {
            rep.pass = false;
            rep.witness = {sigma};
            rep.detail = "distance sum " + std::to_string(sum_proj) +
                         " did not drop below " + std::to_string(sum_delta);
            return rep;
        }
        if (sum_proj != first_proj || sum_delta != first_delta) {
            rep.pass = false;
            rep.witness = {sigma};
            rep.detail = "distance sums depend on the choice of base vertex";
            return rep;
        }
    }
    return rep;
}

DismantlingOrder fix_dismantle(const ProjectionStructure& ps, const GroupAction& a,
                               const VertexSet& Sigma) {
    FixComplex fc = fix_complex(ps.complex, a);
    int sid = -1;
    for (int i = 0; i < (int)fc.orbits.size(); ++i)
        if (fc.orbits[i] == Sigma) sid = i;
    if (sid < 0) throw input_error("Sigma is not a fix vertex");
    int nf = (int)fc.orbits.size();
    DismantlingOrder d;
    if (nf == 1) {
        d.order = {0};
        return d;
    }
    auto ext = linear_extension(ps, Sigma[0]);
    std::vector<int> pos(ps.n());
    for (int i = 0; i < ps.n(); ++i) pos[ext[i]] = i;
    std::vector<int> key(nf);
    for (int i = 0; i < nf; ++i) {
        int k = kInfDist;
        for (int v : fc.orbits[i]) k = std::min(k, pos[v]);
        key[i] = k;
    }
    d.order.resize(nf);
    for (int i = 0; i < nf; ++i) d.order[i] = i;
    std::sort(d.order.begin(), d.order.end(),
              [&](int x, int y) { return key[x] < key[y]; });
    if (d.order.back() != sid)
        throw structural_error("base orbit is not largest in the fix order");
    std::vector<int> fix_pos(nf);
    for (int i = 0; i < nf; ++i) fix_pos[d.order[i]] = i;
    for (int i = 0; i + 1 < nf; ++i) {
        VertexSet proj = big_project(ps, a, Sigma, fc.orbits[d.order[i]]);
        int pid = -1;
        for (int j = 0; j < nf; ++j)
            if (fc.orbits[j] == proj) pid = j;
        if (pid < 0)
            throw structural_error("big projection left the fix complex");
        if (fix_pos[pid] <= i)
            throw structural_error("big projection did not move up the fix order");
        d.witness.push_back(fix_pos[pid]);
    }
    auto rep = verify_dismantling(fc.complex, d);
    if (!rep.pass)
        throw structural_error("fix order is not a dismantling: " + rep.line());
    return d;
}

}  // namespace kakimizu
