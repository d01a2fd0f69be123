#include "kakimizu/projection.hpp"

#include <algorithm>
#include <optional>
#include <queue>

namespace kakimizu {

uint64_t ord_key(int n, int sigma, int u, int v) {
    return ((uint64_t)sigma * n + u) * n + v;
}

bool ProjectionStructure::less(int sigma, int u, int v) const {
    if (backing == Backing::model)
        return order_less(fam.members[sigma], fam.members[u], fam.members[v]);
    auto it = ord_tab.find(ord_key(n(), sigma, u, v));
    if (it == ord_tab.end())
        throw structural_error("missing ord entry (" + std::to_string(sigma) + "," +
                               std::to_string(u) + "," + std::to_string(v) + ")");
    return it->second != 0;
}

ProjectionStructure from_family(const HeightFamily& fam) {
    if (fam.members.empty()) throw input_error("family needs at least one member");
    if (!is_convex_closed(fam))
        throw model_violation(
            "family is not convex-closed; close it first (hull subcommand)");
    ProjectionStructure ps;
    ps.backing = Backing::model;
    ps.fam = fam;
    ps.complex = fam.graph;
    int n = ps.n();
    ps.proj_tab.assign(n, std::vector<int>(n, -1));
    for (int s = 0; s < n; ++s)
        for (int r = 0; r < n; ++r)
            if (s != r)
                ps.proj_tab[s][r] = fam.index_of(project(fam.members[s], fam.members[r]));
    return ps;
}

ProjectionStructure from_table(FlagComplex c, std::vector<std::vector<int>> proj,
                               std::unordered_map<uint64_t, char> ord) {
    int n = c.vertex_count;
    if ((int)proj.size() != n) throw input_error("proj table has wrong row count");
    for (int s = 0; s < n; ++s) {
        if ((int)proj[s].size() != n) throw input_error("proj table has wrong column count");
        for (int r = 0; r < n; ++r) {
            if (s == r) continue;
            if (proj[s][r] < 0 || proj[s][r] >= n)
                throw input_error("missing or out-of-range proj entry (" +
                                  std::to_string(s) + "," + std::to_string(r) + ")");
        }
    }
    for (int s = 0; s < n; ++s)
        for (auto [u, v] : c.edges) {
            if (!ord.count(ord_key(n, s, u, v)) || !ord.count(ord_key(n, s, v, u)))
                throw input_error("missing ord entry for base " + std::to_string(s) +
                                  " edge (" + std::to_string(u) + "," + std::to_string(v) +
                                  ")");
        }
    ProjectionStructure ps;
    ps.backing = Backing::table;
    ps.complex = std::move(c);
    ps.proj_tab = std::move(proj);
    ps.ord_tab = std::move(ord);
    return ps;
}

namespace {

struct Violation {
    std::vector<int> witness;
    std::string detail;
};

// Precomputed scan context shared by the checkers.
struct Ctx {
    const ProjectionStructure& ps;
    int n;
    std::vector<std::pair<int, int>> dir_pairs;  // both directions of every edge
    std::vector<std::vector<int>> dist;          // all-pairs path distances
    std::vector<std::vector<char>> ord;          // [sigma][directed pair index]

    explicit Ctx(const ProjectionStructure& s, int jobs) : ps(s), n(s.n()) {
        dir_pairs.reserve(2 * s.complex.edges.size());
        for (auto [u, v] : s.complex.edges) {
            dir_pairs.push_back({u, v});
            dir_pairs.push_back({v, u});
        }
        dist.assign(n, {});
        parallel_for(jobs, n, [&](int v) { dist[v] = bfs_distances(s.complex, v); });
        ord.assign(n, std::vector<char>(dir_pairs.size(), 0));
        parallel_for(jobs, n, [&](int sigma) {
            for (size_t e = 0; e < dir_pairs.size(); ++e)
                ord[sigma][e] = ps.less(sigma, dir_pairs[e].first, dir_pairs[e].second);
        });
    }
};

CheckReport merge_per_base(const std::string& name, long long cases,
                           const std::vector<std::optional<Violation>>& per) {
    CheckReport rep;
    rep.name = name;
    rep.cases = cases;
    for (const auto& v : per)
        if (v) {
            rep.pass = false;
            rep.witness = v->witness;
            rep.detail = v->detail;
            break;
        }
    return rep;
}

// Directed order digraph below one base: out[u] lists v with u <_sigma v.
std::vector<std::vector<int>> order_digraph(const Ctx& ctx, int sigma) {
    std::vector<std::vector<int>> out(ctx.n);
    for (size_t e = 0; e < ctx.dir_pairs.size(); ++e)
        if (ctx.ord[sigma][e]) out[ctx.dir_pairs[e].first].push_back(ctx.dir_pairs[e].second);
    return out;
}

// Smallest-id-first topological order; empty optional when a cycle exists.
std::optional<std::vector<int>> topo_sort(const std::vector<std::vector<int>>& out,
                                          const std::vector<int>& verts) {
    std::vector<int> indeg(out.size(), 0);
    for (int u : verts)
        for (int v : out[u]) ++indeg[v];
    std::priority_queue<int, std::vector<int>, std::greater<int>> q;
    for (int u : verts)
        if (indeg[u] == 0) q.push(u);
    std::vector<int> order;
    while (!q.empty()) {
        int u = q.top();
        q.pop();
        order.push_back(u);
        for (int v : out[u])
            if (--indeg[v] == 0) q.push(v);
    }
    if (order.size() != verts.size()) return std::nullopt;
    return order;
}

// A directed cycle in the subgraph induced on verts; empty when acyclic.
std::vector<int> find_cycle(const std::vector<std::vector<int>>& out,
                            const std::vector<int>& verts) {
    std::vector<char> in_set(out.size(), 0), color(out.size(), 0);
    for (int v : verts) in_set[v] = 1;
    std::vector<int> stack, cycle;
    std::function<bool(int)> dfs = [&](int u) {
        color[u] = 1;
        stack.push_back(u);
        for (int v : out[u]) {
            if (!in_set[v]) continue;
            if (color[v] == 1) {
                auto it = std::find(stack.begin(), stack.end(), v);
                cycle.assign(it, stack.end());
                return true;
            }
            if (color[v] == 0 && dfs(v)) return true;
        }
        stack.pop_back();
        color[u] = 2;
        return false;
    };
    for (int v : verts)
        if (color[v] == 0 && dfs(v)) break;
    if (cycle.empty()) return cycle;
    // rotate so the smallest vertex leads; keeps the witness deterministic
    auto mn = std::min_element(cycle.begin(), cycle.end());
    std::rotate(cycle.begin(), mn, cycle.end());
    return cycle;
}

}  // namespace

CheckReport verify_projection_decrement(const ProjectionStructure& ps, int jobs) {
    int n = ps.n();
    std::vector<std::vector<int>> dist(n);
    parallel_for(jobs, n, [&](int v) { dist[v] = bfs_distances(ps.complex, v); });
    std::vector<std::optional<Violation>> per(n);
    parallel_for(jobs, n, [&](int s) {
        for (int r = 0; r < n && !per[s]; ++r) {
            if (r == s) continue;
            int p = ps.project_vertex(s, r);
            if (p < 0 || p >= n) {
                per[s] = Violation{{s, r}, "projection outside the vertex set"};
            } else if (dist[r][p] > 1) {
                per[s] = Violation{{s, r}, "projection not adjacent-or-equal to its argument"};
            } else if (dist[s][p] != dist[s][r] - 1) {
                per[s] = Violation{{s, r}, "projection does not decrement distance to the base"};
            }
        }
    });
    return merge_per_base("projection_decrement", (long long)n * (n - 1), per);
}

std::vector<CheckReport> verify_order_axioms(const ProjectionStructure& ps, int jobs) {
    Ctx ctx(ps, jobs);
    int n = ctx.n;
    size_t m = ctx.dir_pairs.size();

    std::vector<std::optional<Violation>> comp(n);
    parallel_for(jobs, n, [&](int s) {
        for (size_t e = 0; e < m && !comp[s]; e += 2) {
            auto [u, v] = ctx.dir_pairs[e];
            if (ctx.ord[s][e] == ctx.ord[s][e + 1])
                comp[s] = Violation{{s, u, v},
                                    ctx.ord[s][e] ? "related in both directions"
                                                  : "related in neither direction"};
        }
    });

    std::vector<std::optional<Violation>> acyc(n);
    std::vector<int> all(n);
    for (int v = 0; v < n; ++v) all[v] = v;
    parallel_for(jobs, n, [&](int s) {
        auto out = order_digraph(ctx, s);
        if (!topo_sort(out, all)) {
            auto cyc = find_cycle(out, all);
            std::vector<int> w{s};
            w.insert(w.end(), cyc.begin(), cyc.end());
            acyc[s] = Violation{w, "directed order cycle"};
        }
    });

    std::vector<std::optional<Violation>> drule(n);
    parallel_for(jobs, n, [&](int s) {
        for (size_t e = 0; e < m && !drule[s]; ++e) {
            auto [u, v] = ctx.dir_pairs[e];
            if (ctx.dist[s][u] > ctx.dist[s][v] && !ctx.ord[s][e])
                drule[s] = Violation{{s, u, v}, "farther vertex does not precede"};
        }
    });

    long long edge_cases = (long long)n * (long long)(m / 2);
    return {merge_per_base("order_comparability", edge_cases, comp),
            merge_per_base("order_acyclicity", edge_cases, acyc),
            merge_per_base("order_distance_rule", 2 * edge_cases, drule)};
}

std::vector<int> linear_extension(const ProjectionStructure& ps, int sigma) {
    int n = ps.n();
    if (sigma < 0 || sigma >= n) throw input_error("invalid base vertex");
    if (!is_connected(ps.complex))
        throw input_error("linear extension requires a connected instance");
    std::vector<std::vector<int>> out(n);
    std::vector<int> indeg(n, 0);
    for (auto [u, v] : ps.complex.edges) {
        if (ps.less(sigma, u, v)) {
            out[u].push_back(v);
            ++indeg[v];
        }
        if (ps.less(sigma, v, u)) {
            out[v].push_back(u);
            ++indeg[u];
        }
    }
    std::priority_queue<int, std::vector<int>, std::greater<int>> q;
    for (int v = 0; v < n; ++v)
        if (indeg[v] == 0 && v != sigma) q.push(v);
    std::vector<int> order;
    std::vector<char> done(n, 0);
    while (!q.empty()) {
        int u = q.top();
        q.pop();
        order.push_back(u);
        done[u] = 1;
        for (int v : out[u])
            if (--indeg[v] == 0 && v != sigma) q.push(v);
    }
    if ((int)order.size() == n - 1) {
        order.push_back(sigma);
        return order;
    }
    std::vector<int> leftover;
    for (int v = 0; v < n; ++v)
        if (!done[v] && v != sigma) leftover.push_back(v);
    auto cyc = find_cycle(out, leftover);
    std::string msg;
    if (!cyc.empty()) {
        msg = "order cycle at base " + std::to_string(sigma) + ":";
        for (int v : cyc) msg += " " + std::to_string(v);
    } else {
        msg = "base " + std::to_string(sigma) + " is not maximal; vertex " +
              std::to_string(leftover.front()) + " waits on it";
    }
    throw structural_error(msg);
}

namespace {

// Longest-chain DP and same-projection scan share the sphere DAG layout.
struct SphereDag {
    std::vector<int> verts;               // sorted ascending
    std::vector<int> local;               // global -> local index, -1 outside
    std::vector<std::vector<int>> out;    // local successor lists
    std::vector<int> topo;                // local indices
    bool acyclic = true;
};

SphereDag sphere_dag(const Ctx& ctx, int sigma, int radius) {
    SphereDag dag;
    for (int v = 0; v < ctx.n; ++v)
        if (ctx.dist[sigma][v] == radius) dag.verts.push_back(v);
    dag.local.assign(ctx.n, -1);
    for (size_t i = 0; i < dag.verts.size(); ++i) dag.local[dag.verts[i]] = (int)i;
    int k = (int)dag.verts.size();
    dag.out.assign(k, {});
    std::vector<int> indeg(k, 0);
    for (int i = 0; i < k; ++i) {
        int u = dag.verts[i];
        for (int j = i + 1; j < k; ++j) {
            int v = dag.verts[j];
            if (!ctx.ps.complex.adjacent(u, v)) continue;
            if (ctx.ps.less(sigma, u, v)) {
                dag.out[i].push_back(j);
                ++indeg[j];
            }
            if (ctx.ps.less(sigma, v, u)) {
                dag.out[j].push_back(i);
                ++indeg[i];
            }
        }
    }
    std::priority_queue<int, std::vector<int>, std::greater<int>> q;
    for (int i = 0; i < k; ++i)
        if (indeg[i] == 0) q.push(i);
    while (!q.empty()) {
        int u = q.top();
        q.pop();
        dag.topo.push_back(u);
        for (int v : dag.out[u])
            if (--indeg[v] == 0) q.push(v);
    }
    dag.acyclic = ((int)dag.topo.size() == k);
    return dag;
}

using Bits = std::vector<uint64_t>;

inline void set_bit(Bits& b, int i) { b[i / 64] |= uint64_t(1) << (i % 64); }
inline bool get_bit(const Bits& b, int i) { return (b[i / 64] >> (i % 64)) & 1; }
inline void or_into(Bits& a, const Bits& b) {
    for (size_t i = 0; i < a.size(); ++i) a[i] |= b[i];
}
inline bool intersects(const Bits& a, const Bits& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] & b[i]) return true;
    return false;
}
inline int first_common(const Bits& a, const Bits& b) {
    for (size_t i = 0; i < a.size(); ++i) {
        uint64_t w = a[i] & b[i];
        if (w) return (int)(i * 64 + __builtin_ctzll(w));
    }
    return -1;
}

// Violations of the same-projection property below one base, found through
// reachability rather than chain enumeration:
//  type A: a chain a -> w -> b with proj(a) = proj(b) != proj(w);
//  type B: a chain a -> w1 -> w2 -> b with proj(a) = proj(b) and w1, w2
//          not adjacent. (a = w1 and b = w2 are allowed.)
std::optional<Violation> same_projection_base(const Ctx& ctx, int sigma, long long& cases) {
    int maxd = 0;
    for (int v = 0; v < ctx.n; ++v)
        if (ctx.dist[sigma][v] < kInfDist) maxd = std::max(maxd, ctx.dist[sigma][v]);
    for (int radius = 1; radius <= maxd; ++radius) {
        auto dag = sphere_dag(ctx, sigma, radius);
        int k = (int)dag.verts.size();
        if (k == 0) continue;
        cases += (long long)k * k;
        if (!dag.acyclic)
            return Violation{{sigma}, "order cycle inside the sphere of radius " +
                                          std::to_string(radius)};
        int kw = (k + 63) / 64, nw = (ctx.n + 63) / 64;
        // strict ancestor/descendant sets, local; projection images, global ids
        std::vector<Bits> anc(k, Bits(kw, 0)), desc(k, Bits(kw, 0));
        std::vector<Bits> ancp(k, Bits(nw, 0)), descp(k, Bits(nw, 0));
        auto proj_of = [&](int local) { return ctx.ps.project_vertex(sigma, dag.verts[local]); };
        for (int idx = 0; idx < k; ++idx) {
            int u = dag.topo[idx];
            for (int v : dag.out[u]) {
                or_into(anc[v], anc[u]);
                set_bit(anc[v], u);
                or_into(ancp[v], ancp[u]);
                set_bit(ancp[v], proj_of(u));
            }
        }
        for (int idx = k - 1; idx >= 0; --idx) {
            int u = dag.topo[idx];
            for (int v : dag.out[u]) {
                or_into(desc[u], desc[v]);
                set_bit(desc[u], v);
                or_into(descp[u], descp[v]);
                set_bit(descp[u], proj_of(v));
            }
        }
        auto locate = [&](const Bits& set, int proj) {
            for (int i = 0; i < k; ++i)
                if (get_bit(set, i) && proj_of(i) == proj) return dag.verts[i];
            return -1;
        };
        for (int w = 0; w < k; ++w) {
            // a projection shared by a strict ancestor and a strict descendant
            // must be the vertex's own
            Bits both = ancp[w];
            for (int i = 0; i < nw; ++i) both[i] &= descp[w][i];
            int pw = proj_of(w);
            both[pw / 64] &= ~(uint64_t(1) << (pw % 64));
            int p = -1;
            for (int i = 0; i < nw; ++i)
                if (both[i]) {
                    p = (int)(i * 64 + __builtin_ctzll(both[i]));
                    break;
                }
            if (p >= 0) {
                int a = locate(anc[w], p);
                int b = locate(desc[w], p);
                return Violation{{sigma, a, dag.verts[w], b},
                                 "chain endpoints project to " + std::to_string(p) +
                                     " but an inner vertex projects to " +
                                     std::to_string(pw)};
            }
        }
        for (int w1 = 0; w1 < k; ++w1) {
            Bits up = ancp[w1];
            set_bit(up, proj_of(w1));
            for (int w2 = 0; w2 < k; ++w2) {
                if (!get_bit(desc[w1], w2)) continue;
                if (ctx.ps.complex.adjacent(dag.verts[w1], dag.verts[w2])) continue;
                Bits down = descp[w2];
                set_bit(down, proj_of(w2));
                int p = first_common(up, down);
                if (p >= 0)
                    return Violation{{sigma, dag.verts[w1], dag.verts[w2]},
                                     "chain with endpoint projection " + std::to_string(p) +
                                         " passes through a non-adjacent pair"};
            }
        }
    }
    return std::nullopt;
}

}  // namespace

std::vector<CheckReport> verify_domination(const ProjectionStructure& ps, int jobs) {
    Ctx ctx(ps, jobs);
    int n = ctx.n;
    size_t m = ctx.dir_pairs.size();

    std::vector<std::optional<Violation>> layer(n);
    parallel_for(jobs, n, [&](int s) {
        for (size_t e = 0; e < m && !layer[s]; ++e) {
            auto [r, rp] = ctx.dir_pairs[e];
            if (r == s || !ctx.ord[s][e]) continue;
            int p = ps.project_vertex(s, r);
            if (rp == p) continue;
            if (!ps.complex.adjacent(p, rp) || !ps.less(s, rp, p))
                layer[s] = Violation{{s, r, rp}, "successor not below the projection"};
        }
    });

    std::vector<std::optional<Violation>> mono(n);
    parallel_for(jobs, n, [&](int s) {
        for (size_t e = 0; e < m && !mono[s]; ++e) {
            auto [r, rp] = ctx.dir_pairs[e];
            if (r == s || rp == s || !ctx.ord[s][e]) continue;
            int p1 = ps.project_vertex(s, r), p2 = ps.project_vertex(s, rp);
            if (p1 == p2) continue;
            if (!ps.complex.adjacent(p1, p2) || !ps.less(s, p1, p2))
                mono[s] = Violation{{s, r, rp}, "projections not ordered along the edge"};
        }
    });

    std::vector<std::optional<Violation>> samep(n);
    std::vector<long long> samep_cases(n, 0);
    parallel_for(jobs, n, [&](int s) { samep[s] = same_projection_base(ctx, s, samep_cases[s]); });

    long long dir_cases = (long long)n * (long long)m;
    long long sp_cases = 0;
    for (long long c : samep_cases) sp_cases += c;
    return {merge_per_base("domination_same_layer", dir_cases, layer),
            merge_per_base("domination_monotonicity", dir_cases, mono),
            merge_per_base("domination_same_projection", sp_cases, samep)};
}

namespace {

unsigned long long pow_saturated(unsigned long long base, int exp) {
    const unsigned long long cap = (unsigned long long)1 << 62;
    unsigned long long r = 1;
    for (int i = 0; i < exp; ++i) {
        if (r > cap / std::max<unsigned long long>(base, 1)) return cap;
        r *= base;
    }
    return r;
}

}  // namespace

ChainStats chain_length_stats(const ProjectionStructure& ps, long long clique_cap) {
    Ctx ctx(ps, 1);
    ChainStats stats;
    stats.clique_bound_L = max_clique_size(ps.complex, clique_cap) - 1;
    for (int s = 0; s < ctx.n; ++s) {
        int maxd = 0;
        for (int v = 0; v < ctx.n; ++v)
            if (ctx.dist[s][v] < kInfDist) maxd = std::max(maxd, ctx.dist[s][v]);
        for (int radius = 1; radius <= maxd; ++radius) {
            auto dag = sphere_dag(ctx, s, radius);
            if (dag.verts.empty()) continue;
            if (!dag.acyclic)
                throw structural_error("chain stats require an acyclic order (base " +
                                       std::to_string(s) + ")");
            std::vector<long long> lp(dag.verts.size(), 1);
            long long longest = 0;
            for (int u : dag.topo) {
                for (int v : dag.out[u]) lp[v] = std::max(lp[v], lp[u] + 1);
            }
            for (long long x : lp) longest = std::max(longest, x);
            ChainRow row;
            row.sigma = s;
            row.radius = radius;
            row.longest = longest;
            row.bound = pow_saturated((unsigned long long)stats.clique_bound_L + 1, radius);
            stats.rows.push_back(row);
            if ((unsigned long long)longest > row.bound) stats.pass = false;
            stats.max_ratio =
                std::max(stats.max_ratio, (double)longest / (double)row.bound);
        }
    }
    return stats;
}

CheckReport verify_ball_retention(const ProjectionStructure& ps, int jobs) {
    int n = ps.n();
    std::vector<std::vector<int>> dist(n);
    parallel_for(jobs, n, [&](int v) { dist[v] = bfs_distances(ps.complex, v); });
    std::vector<std::optional<Violation>> per(n);
    parallel_for(jobs, n, [&](int s) {
        for (int r = 0; r < n && !per[s]; ++r) {
            if (r == s) continue;
            int p = ps.project_vertex(s, r);
            const auto& dp = dist[p];
            const auto& dr = dist[r];
            const auto& ds = dist[s];
            for (int sp = 0; sp < n; ++sp) {
                int ball = std::max(dr[sp], ds[sp]);
                if (dp[sp] > ball) {
                    per[s] = Violation{{s, r, sp}, "projection left the ball of radius " +
                                                       std::to_string(ball)};
                    break;
                }
            }
        }
    });
    return merge_per_base("ball_retention", (long long)n * (n - 1) * n, per);
}

CheckReport verify_change_of_basis(const ProjectionStructure& ps, int jobs) {
    Ctx ctx(ps, jobs);
    size_t m = ctx.dir_pairs.size();
    std::vector<std::optional<Violation>> per(m);
    parallel_for(jobs, (int)m, [&](int se) {
        auto [s, sp] = ctx.dir_pairs[se];
        for (size_t re = 0; re < m && !per[se]; ++re) {
            auto [r, rp] = ctx.dir_pairs[re];
            if (sp == rp) continue;
            if (!ctx.ord[s][re]) continue;  // need r <_s rp
            // need rp <_sp r, the same undirected edge read backwards
            if (!ctx.ord[sp][re ^ 1]) continue;
            int p = ps.project_vertex(sp, rp);
            if (p != r && (!ps.complex.adjacent(p, r) || !ps.less(s, r, p))) {
                per[se] = Violation{{s, sp, r, rp}, "vertex not below the foreign projection"};
                break;
            }
            if (s != rp && ctx.dist[s][p] > ctx.dist[s][rp]) {
                per[se] = Violation{{s, sp, r, rp}, "foreign projection increased the distance"};
                break;
            }
        }
    });
    CheckReport rep = merge_per_base("change_of_basis", (long long)m * m, per);
    return rep;
}

std::vector<int> sort_clique_by_order(const ProjectionStructure& ps, int sigma,
                                      const VertexSet& clique) {
    int k = (int)clique.size();
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (!ps.complex.adjacent(clique[i], clique[j]))
                throw input_error("vertex set is not a clique");
    // an acyclic tournament sorts by losses: the minimum beats everyone
    std::vector<int> wins(k, 0);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (i != j && ps.less(sigma, clique[i], clique[j])) ++wins[i];
    std::vector<int> order(k);
    std::vector<char> taken(k, 0);
    for (int rank = 0; rank < k; ++rank) {
        int want = k - 1 - rank, found = -1;
        for (int i = 0; i < k; ++i)
            if (!taken[i] && wins[i] == want) {
                found = i;
                break;
            }
        if (found < 0)
            throw structural_error("order restricted to a clique is not total (base " +
                                   std::to_string(sigma) + ")");
        taken[found] = 1;
        order[rank] = clique[found];
    }
    return order;
}

CheckReport chain_bound_report(const ProjectionStructure& ps, long long clique_cap) {
    CheckReport rep;
    rep.name = "chain_bound";
    ChainStats stats;
    try {
        stats = chain_length_stats(ps, clique_cap);
    } catch (const structural_error& e) {
        rep.pass = false;
        rep.detail = e.what();
        return rep;
    }
    rep.cases = (long long)stats.rows.size();
    rep.pass = stats.pass;
    if (!stats.pass) {
        for (const auto& row : stats.rows)
            if ((unsigned long long)row.longest > row.bound) {
                rep.witness = {row.sigma, row.radius};
                rep.detail = "chain of " + std::to_string(row.longest) +
                             " vertices exceeds (L+1)^n = " + std::to_string(row.bound);
                break;
            }
    }
    return rep;
}

std::vector<CheckReport> run_all_checks(const ProjectionStructure& ps, int jobs,
                                        long long clique_cap) {
    std::vector<CheckReport> out;
    out.push_back(verify_projection_decrement(ps, jobs));
    for (auto& r : verify_order_axioms(ps, jobs)) out.push_back(std::move(r));
    for (auto& r : verify_domination(ps, jobs)) out.push_back(std::move(r));
    out.push_back(verify_ball_retention(ps, jobs));
    out.push_back(verify_change_of_basis(ps, jobs));
    out.push_back(chain_bound_report(ps, clique_cap));
    std::sort(out.begin(), out.end(),
              [](const CheckReport& a, const CheckReport& b) { return a.name < b.name; });
    return out;
}

}  // namespace kakimizu
