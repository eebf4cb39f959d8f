#pragma once

#include <string>
#include <utility>
#include <vector>

namespace dyckpaint {

// Small undirected labeled graph; symmetric, irreflexive adjacency.
class SimpleGraph {
public:
    SimpleGraph() = default;
    explicit SimpleGraph(int n);

    static SimpleGraph complete(int n);
    static SimpleGraph edgeless(int n);
    static SimpleGraph path(int n);
    static SimpleGraph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return n_; }
    int edge_count() const;
    bool adjacent(int u, int v) const;
    void add_edge(int u, int v);
    int degree(int v) const;
    std::vector<int> neighbors(int v) const;
    bool is_independent(const std::vector<int>& vs) const;
    bool is_complete() const;
    std::vector<std::pair<int, int>> edges() const;

    // Subgraph induced by `keep` (ascending ids); vertex i of the result is
    // keep[i].
    SimpleGraph induced(const std::vector<int>& keep) const;

    bool operator==(const SimpleGraph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

private:
    void check_vertex(int v) const;
    int n_ = 0;
    std::vector<char> adj_; // n*n row-major

    friend SimpleGraph join(const SimpleGraph&, const SimpleGraph&);
    friend SimpleGraph disjoint_union(const SimpleGraph&, const SimpleGraph&);
};

// G + H plus all edges between them. Vertices of G keep their ids; H's are
// shifted by |V(G)|.
SimpleGraph join(const SimpleGraph& g, const SimpleGraph& h);

SimpleGraph disjoint_union(const SimpleGraph& g, const SimpleGraph& h);

enum class GraphKind { Complete, Edgeless, Path, Explicit };

GraphKind graph_kind_from_string(const std::string& s);
std::string to_string(GraphKind k);

// Factory used by the instance files: `edges` is consulted only for
// Explicit graphs.
SimpleGraph build_graph(GraphKind kind, int n,
                        const std::vector<std::pair<int, int>>& edges = {});

} // namespace dyckpaint
