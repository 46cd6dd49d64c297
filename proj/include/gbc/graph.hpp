#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gbc/errors.hpp"

namespace gbc {

// Finite simplicial graph: vertices are dense indices 0..n-1, edges are
// unordered loop-free pairs. Named vertex labels exist only in the CLI's
// file format, never here.
class SimplicialGraph {
public:
    SimplicialGraph() = default;
    explicit SimplicialGraph(int n);
    SimplicialGraph(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    bool has_edge(int u, int v) const;
    void add_edge(int u, int v);

    // Sorted list of (u, v) with u < v.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    // Position of (u,v) in the sorted edge list, -1 if absent.
    int edge_index(int u, int v) const;

    std::vector<int> neighbors(int v) const;

    bool operator==(const SimplicialGraph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

    static SimplicialGraph complete(int n);
    static SimplicialGraph path(int n);
    static SimplicialGraph cycle(int n);

private:
    void check_vertex(int v) const;

    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;  // sorted, u < v
    std::vector<bool> adj_;                   // n*n matrix
};

// Vertex map between graphs sending edges to edges (endpoints distinct).
struct GraphMap {
    SimplicialGraph source;
    SimplicialGraph target;
    std::vector<int> image;  // one target vertex per source vertex

    // Edge preservation with distinct endpoints.
    bool valid_homomorphism() const;
    bool injective() const;
    // Injective and preserves both edges and non-edges.
    bool valid_induced_embedding() const;
};

struct JoinDecomposition {
    std::vector<std::vector<int>> factors;  // sorted vertex index subsets
    bool nontrivial() const { return factors.size() > 1; }
};

struct SearchLimits {
    int homomorphism_bound = 12;  // max source vertices for map searches
    int hamiltonian_bound = 10;   // max vertices for exhaustive cycle scan
};

SimplicialGraph complement(const SimplicialGraph& g);

// Component ids (0-based, in order of first vertex) for each vertex.
std::vector<int> connected_components(const SimplicialGraph& g);

// Factors are the connected components of the complement; a singleton
// list means g is not a nontrivial join.
JoinDecomposition join_decompose(const SimplicialGraph& g);

// Rebuild a graph from join factors: factor-internal edges from g, all
// cross-factor pairs added.
SimplicialGraph join(const SimplicialGraph& a, const SimplicialGraph& b);

SimplicialGraph induced_subgraph(const SimplicialGraph& g,
                                 const std::vector<int>& vertices);

// Exhaustive backtracking in ascending vertex order; deterministic.
std::optional<GraphMap> find_graph_homomorphism(const SimplicialGraph& src,
                                                const SimplicialGraph& dst,
                                                const SearchLimits& limits = {});

std::optional<GraphMap> find_induced_embedding(const SimplicialGraph& sub,
                                               const SimplicialGraph& host,
                                               const SearchLimits& limits = {});

// Cycle through every vertex exactly once, consecutive and wrap-around
// pairs all edges. Needs n >= 3; smaller graphs have no cycle.
std::optional<std::vector<int>> hamiltonian_cycle(const SimplicialGraph& g,
                                                  const SearchLimits& limits = {});

bool graphs_isomorphic(const SimplicialGraph& a, const SimplicialGraph& b,
                       const SearchLimits& limits = {});

// Line-oriented text format: first line n, then `u v` per edge, `#` comments.
SimplicialGraph parse_graph(const std::string& text);
std::string format_graph(const SimplicialGraph& g);

}  // namespace gbc
