// core.hpp - finite simple graphs viewed as flag complexes, path metric, cliques
#ifndef KAKIMIZU_CORE_HPP
#define KAKIMIZU_CORE_HPP

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace kakimizu {

// Malformed caller input: bad ids, bad file contents, violated preconditions.
struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A conforming-instance assumption failed at runtime (order cycle, failed
// certificate, non-equivariant action). Signals a bad instance, not bad input syntax.
struct structural_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The height model left its guaranteed bounds during a closure.
struct model_violation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Sorted list of vertex ids, strictly increasing.
using VertexSet = std::vector<int>;

// Finite distance values fit well below this; safe to add 1 without overflow.
inline constexpr int kInfDist = 1 << 29;

inline constexpr long long kDefaultCliqueCap = 1000000;
inline constexpr int kDefaultVertexCap = 400;

// Finite simple graph; its cliques are the simplices of the flag complex.
struct FlagComplex {
    int vertex_count = 0;
    std::vector<std::pair<int, int>> edges;       // i<j, sorted lexicographically
    std::vector<std::vector<char>> adj;           // symmetric matrix, no loops
    std::vector<std::vector<uint64_t>> adj_bits;  // row v = open neighborhood of v

    bool adjacent(int u, int v) const { return adj[u][v] != 0; }
    int words() const { return (vertex_count + 63) / 64; }
};

// Result of a single exhaustive check. A failing report carries the first
// violation found in canonical scan order as its witness.
struct CheckReport {
    std::string name;
    bool pass = true;
    std::vector<int> witness;  // vertex ids, empty when passing
    std::string detail;
    long long cases = 0;       // size of the quantifier domain scanned

    std::string line() const;  // "PASS <name>" or "FAIL <name> <w0> <w1> ..."
};

FlagComplex build_graph(int n, const std::vector<std::pair<int, int>>& edges);

// BFS path length; kInfDist when u, v lie in different components.
int distance(const FlagComplex& c, int u, int v);
std::vector<int> bfs_distances(const FlagComplex& c, int source);

// Max pairwise distance; kInfDist when disconnected; 0 for a single vertex.
int diameter(const FlagComplex& c);

bool is_connected(const FlagComplex& c);

// ({v} union neighbors(v)) intersected with restrict.
VertexSet closed_neighborhood(const FlagComplex& c, int v, const VertexSet& restrict_to);

// All cliques of size <= max_dim+1 including singletons, each sorted, the list
// in lexicographic order. Throws input_error beyond cap.
std::vector<VertexSet> enumerate_cliques(const FlagComplex& c, int max_dim,
                                         long long cap = kDefaultCliqueCap);

// Size of a maximum clique; cap bounds the number of search nodes.
int max_clique_size(const FlagComplex& c, long long cap = kDefaultCliqueCap);

struct InducedResult {
    FlagComplex complex;
    std::vector<int> remap;  // remap[new id] = old id
};
InducedResult induced(const FlagComplex& c, const VertexSet& s);

// Runs fn(i) for i in [0, n). jobs <= 1 is a plain loop; otherwise contiguous
// chunks run on separate threads. fn must be safe to call concurrently and
// callers merge per-index results in index order, so output is identical for
// every jobs value.
void parallel_for(int jobs, int n, const std::function<void(int)>& fn);

}  // namespace kakimizu

#endif
