#include "kakimizu/cover_model.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace kakimizu {

namespace {

void check_columns(const HeightFunction& f, const HeightFunction& g) {
    if (f.size() != g.size()) throw input_error("column count mismatch");
    if (f.empty()) throw input_error("height function needs at least one column");
}

}  // namespace

HeightFunction normalize(HeightFunction f) {
    if (f.empty()) throw input_error("height function needs at least one column");
    int m = *std::min_element(f.begin(), f.end());
    for (int& x : f) x -= m;
    return f;
}

DistanceCertificate kakimizu_distance(const HeightFunction& f, const HeightFunction& g) {
    check_columns(f, g);
    DistanceCertificate cert;
    cert.r = g[0] - f[0];
    cert.m_low = cert.r;
    for (size_t i = 1; i < f.size(); ++i) {
        int diff = g[i] - f[i];
        cert.r = std::max(cert.r, diff);
        cert.m_low = std::min(cert.m_low, diff);
    }
    cert.d = cert.r - cert.m_low;
    return cert;
}

HeightFunction project(const HeightFunction& f, const HeightFunction& g) {
    check_columns(f, g);
    auto cert = kakimizu_distance(f, g);
    if (cert.d == 0) throw input_error("project requires distinct vertices");
    int t = -cert.m_low;  // shift g so min(g - f) = 0, making r = d
    HeightFunction p(f.size());
    for (size_t i = 0; i < f.size(); ++i) p[i] = std::min(g[i] + t, f[i] + cert.d - 1);
    return normalize(std::move(p));
}

bool order_less(const HeightFunction& f, const HeightFunction& g, const HeightFunction& g2) {
    check_columns(f, g);
    check_columns(f, g2);
    auto cert = kakimizu_distance(g, g2);
    if (cert.d == 0) throw input_error("order_less requires distinct vertices");
    if (cert.d != 1) throw input_error("order_less requires an adjacent pair");
    int t = cert.m_low;  // unique shift with g2-1 <= g+t <= g2 pointwise
    int lhs = g[0] + t - f[0], rhs = g2[0] - f[0];
    for (size_t i = 1; i < f.size(); ++i) {
        lhs = std::max(lhs, g[i] + t - f[i]);
        rhs = std::max(rhs, g2[i] - f[i]);
    }
    return lhs == rhs;
}

int HeightFamily::index_of(const HeightFunction& f) const {
    auto it = std::lower_bound(members.begin(), members.end(), f);
    if (it == members.end() || *it != f) return -1;
    return (int)(it - members.begin());
}

HeightFamily make_family(int columns, std::vector<HeightFunction> members) {
    if (columns < 1) throw input_error("family needs at least one column");
    if (members.empty()) throw input_error("family needs at least one member");
    for (const auto& f : members) {
        if ((int)f.size() != columns) throw input_error("member has wrong column count");
        if (*std::min_element(f.begin(), f.end()) != 0)
            throw input_error("member not normalized: subtract its minimum value");
    }
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    HeightFamily fam;
    fam.columns = columns;
    fam.members = std::move(members);
    int n = (int)fam.members.size();
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (kakimizu_distance(fam.members[i], fam.members[j]).d == 1)
                edges.push_back({i, j});
    fam.graph = build_graph(n, edges);
    return fam;
}

bool is_convex_closed(const HeightFamily& fam) {
    for (const auto& f : fam.members)
        for (const auto& g : fam.members)
            if (f != g && fam.index_of(project(f, g)) < 0) return false;
    return true;
}

namespace {

int family_max_height(const std::set<HeightFunction>& members) {
    int h = 0;
    for (const auto& f : members) h = std::max(h, *std::max_element(f.begin(), f.end()));
    return h;
}

int family_spread_diameter(const std::set<HeightFunction>& members) {
    int d = 0;
    for (const auto& f : members)
        for (const auto& g : members) d = std::max(d, kakimizu_distance(f, g).d);
    return d;
}

// Closure under the given projection steps, heights capped at
// initial max height + initial diameter + 1.
std::set<HeightFunction> close_under(
    std::set<HeightFunction> members,
    const std::function<void(const std::set<HeightFunction>&, std::vector<HeightFunction>&)>&
        step) {
    int cap = family_max_height(members) + family_spread_diameter(members) + 1;
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<HeightFunction> fresh;
        step(members, fresh);
        for (auto& p : fresh) {
            if (*std::max_element(p.begin(), p.end()) > cap)
                throw model_violation("closure left the height bound " + std::to_string(cap));
            if (members.insert(std::move(p)).second) changed = true;
        }
    }
    return members;
}

}  // namespace

HeightFamily close_sigma_convex(const HeightFamily& fam, const HeightFunction& sigma) {
    if (fam.index_of(sigma) < 0) throw input_error("sigma must belong to the family");
    std::set<HeightFunction> members(fam.members.begin(), fam.members.end());
    members = close_under(std::move(members),
                          [&sigma](const std::set<HeightFunction>& cur,
                                   std::vector<HeightFunction>& fresh) {
                              for (const auto& g : cur)
                                  if (g != sigma) fresh.push_back(project(sigma, g));
                          });
    return make_family(fam.columns, {members.begin(), members.end()});
}

HeightFamily close_convex(const HeightFamily& fam) {
    if (fam.members.empty()) throw input_error("family needs at least one member");
    std::set<HeightFunction> members(fam.members.begin(), fam.members.end());
    members = close_under(std::move(members),
                          [](const std::set<HeightFunction>& cur,
                             std::vector<HeightFunction>& fresh) {
                              for (const auto& f : cur)
                                  for (const auto& g : cur)
                                      if (f != g) fresh.push_back(project(f, g));
                          });
    return make_family(fam.columns, {members.begin(), members.end()});
}

HeightFamily generate_random(int m, int count, int h_max, uint64_t seed, int size_cap) {
    if (m < 1 || count < 1 || h_max < 1) throw input_error("generator parameters must be >= 1");
    SeededRng rng(seed);
    const int retries = 16;
    for (int attempt = 0; attempt < retries; ++attempt) {
        std::set<HeightFunction> draws;
        for (int tries = 0; (int)draws.size() < count && tries < count * 20; ++tries) {
            HeightFunction f(m);
            for (int i = 0; i < m; ++i) f[i] = rng.below(h_max + 1);
            draws.insert(normalize(std::move(f)));
        }
        HeightFamily fam = make_family(m, {draws.begin(), draws.end()});
        fam = close_convex(fam);
        if ((int)fam.members.size() <= size_cap) return fam;
    }
    throw input_error("generator exceeded the size cap " + std::to_string(size_cap) +
                      " on every retry");
}

HeightFunction permute_columns(const HeightFunction& f, const std::vector<int>& perm) {
    if (perm.size() != f.size()) throw input_error("permutation length mismatch");
    HeightFunction out(f.size());
    for (size_t i = 0; i < f.size(); ++i) out[perm[i]] = f[i];
    return out;
}

HeightFamily permute_family(const HeightFamily& fam, const std::vector<int>& perm) {
    std::vector<HeightFunction> members;
    members.reserve(fam.members.size());
    for (const auto& f : fam.members) members.push_back(permute_columns(f, perm));
    return make_family(fam.columns, std::move(members));
}

std::vector<std::vector<int>> column_symmetries(const HeightFamily& fam, int m_cap) {
    if (fam.columns > m_cap)
        throw input_error("column symmetry search capped at " + std::to_string(m_cap) +
                          " columns");
    std::vector<int> perm(fam.columns);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<int>> out;
    do {
        bool ok = true;
        for (const auto& f : fam.members)
            if (fam.index_of(permute_columns(f, perm)) < 0) {
                ok = false;
                break;
            }
        if (ok) out.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

std::vector<int> induced_vertex_permutation(const HeightFamily& fam,
                                            const std::vector<int>& perm) {
    std::vector<int> out(fam.members.size());
    for (size_t i = 0; i < fam.members.size(); ++i) {
        int j = fam.index_of(permute_columns(fam.members[i], perm));
        if (j < 0) throw input_error("permutation is not a symmetry of the family");
        out[i] = j;
    }
    return out;
}

}  // namespace kakimizu
