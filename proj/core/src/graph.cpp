#include "dyckpaint/graph.hpp"

#include <stdexcept>

namespace dyckpaint {

SimpleGraph::SimpleGraph(int n) : n_(n) {
    if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
    adj_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
}

void SimpleGraph::check_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("vertex id out of range");
}

SimpleGraph SimpleGraph::complete(int n) {
    SimpleGraph g(n);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    }
    return g;
}

SimpleGraph SimpleGraph::edgeless(int n) { return SimpleGraph(n); }

SimpleGraph SimpleGraph::path(int n) {
    SimpleGraph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

SimpleGraph SimpleGraph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    SimpleGraph g(n);
    for (auto [u, v] : edges) {
        if (u == v) throw std::invalid_argument("self-loops are not allowed");
        g.add_edge(u, v);
    }
    return g;
}

int SimpleGraph::edge_count() const {
    int total = 0;
    for (int u = 0; u < n_; ++u) {
        for (int v = u + 1; v < n_; ++v) total += adjacent(u, v) ? 1 : 0;
    }
    return total;
}

bool SimpleGraph::adjacent(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return adj_[static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) +
                static_cast<std::size_t>(v)] != 0;
}

void SimpleGraph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("self-loops are not allowed");
    adj_[static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v)] = 1;
    adj_[static_cast<std::size_t>(v) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(u)] = 1;
}

int SimpleGraph::degree(int v) const {
    check_vertex(v);
    int d = 0;
    for (int u = 0; u < n_; ++u) d += adjacent(v, u) ? 1 : 0;
    return d;
}

std::vector<int> SimpleGraph::neighbors(int v) const {
    check_vertex(v);
    std::vector<int> out;
    for (int u = 0; u < n_; ++u) {
        if (adjacent(v, u)) out.push_back(u);
    }
    return out;
}

bool SimpleGraph::is_independent(const std::vector<int>& vs) const {
    for (std::size_t i = 0; i < vs.size(); ++i) {
        for (std::size_t j = i + 1; j < vs.size(); ++j) {
            if (adjacent(vs[i], vs[j])) return false;
        }
    }
    return true;
}

bool SimpleGraph::is_complete() const {
    return edge_count() == n_ * (n_ - 1) / 2;
}

std::vector<std::pair<int, int>> SimpleGraph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u) {
        for (int v = u + 1; v < n_; ++v) {
            if (adjacent(u, v)) out.emplace_back(u, v);
        }
    }
    return out;
}

SimpleGraph SimpleGraph::induced(const std::vector<int>& keep) const {
    SimpleGraph g(static_cast<int>(keep.size()));
    for (std::size_t i = 0; i < keep.size(); ++i) check_vertex(keep[i]);
    for (std::size_t i = 0; i < keep.size(); ++i) {
        for (std::size_t j = i + 1; j < keep.size(); ++j) {
            if (adjacent(keep[i], keep[j])) g.add_edge(static_cast<int>(i), static_cast<int>(j));
        }
    }
    return g;
}

SimpleGraph join(const SimpleGraph& g, const SimpleGraph& h) {
    SimpleGraph out(g.n_ + h.n_);
    for (auto [u, v] : g.edges()) out.add_edge(u, v);
    for (auto [u, v] : h.edges()) out.add_edge(g.n_ + u, g.n_ + v);
    for (int u = 0; u < g.n_; ++u) {
        for (int v = 0; v < h.n_; ++v) out.add_edge(u, g.n_ + v);
    }
    return out;
}

SimpleGraph disjoint_union(const SimpleGraph& g, const SimpleGraph& h) {
    SimpleGraph out(g.n_ + h.n_);
    for (auto [u, v] : g.edges()) out.add_edge(u, v);
    for (auto [u, v] : h.edges()) out.add_edge(g.n_ + u, g.n_ + v);
    return out;
}

GraphKind graph_kind_from_string(const std::string& s) {
    if (s == "complete") return GraphKind::Complete;
    if (s == "edgeless") return GraphKind::Edgeless;
    if (s == "path") return GraphKind::Path;
    if (s == "explicit") return GraphKind::Explicit;
    throw std::invalid_argument("unknown graph kind: '" + s + "'");
}

std::string to_string(GraphKind k) {
    switch (k) {
        case GraphKind::Complete: return "complete";
        case GraphKind::Edgeless: return "edgeless";
        case GraphKind::Path: return "path";
        case GraphKind::Explicit: return "explicit";
    }
    return "explicit";
}

SimpleGraph build_graph(GraphKind kind, int n, const std::vector<std::pair<int, int>>& edges) {
    switch (kind) {
        case GraphKind::Complete: return SimpleGraph::complete(n);
        case GraphKind::Edgeless: return SimpleGraph::edgeless(n);
        case GraphKind::Path: return SimpleGraph::path(n);
        case GraphKind::Explicit: return SimpleGraph::from_edges(n, edges);
    }
    throw std::invalid_argument("unknown graph kind");
}

} // namespace dyckpaint
