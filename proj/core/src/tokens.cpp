#include "dyckpaint/tokens.hpp"

#include <algorithm>
#include <stdexcept>

namespace dyckpaint {

TokenMap::TokenMap(std::vector<int> values) : values_(std::move(values)) {
    for (int v : values_) {
        if (v < 1) throw std::invalid_argument("token counts must be positive");
    }
}

int TokenMap::at(int v) const {
    if (v < 0 || v >= size()) throw std::out_of_range("token index out of range");
    return values_[static_cast<std::size_t>(v)];
}

TokenMap TokenMap::sorted() const {
    std::vector<int> v = values_;
    std::sort(v.begin(), v.end());
    return TokenMap(std::move(v));
}

bool TokenMap::is_sorted() const { return std::is_sorted(values_.begin(), values_.end()); }

XVector x_of(const TokenMap& f) { return XVector::from_tokens(f.values()); }

std::pair<SimpleGraph, TokenMap> join_instance(const SimpleGraph& g, const TokenMap& f, int m) {
    if (f.size() != g.vertex_count()) {
        throw std::invalid_argument("token map size must match the vertex count");
    }
    if (m < 0) throw std::invalid_argument("the independent-side size must be nonnegative");
    if (m > 0 && g.vertex_count() == 0) {
        throw std::invalid_argument("joining the empty graph would assign zero tokens");
    }
    SimpleGraph joined = join(g, SimpleGraph::edgeless(m));
    std::vector<int> tokens = f.values();
    tokens.insert(tokens.end(), static_cast<std::size_t>(m), g.vertex_count());
    return {std::move(joined), TokenMap(std::move(tokens))};
}

std::pair<SimpleGraph, TokenMap> union_instance(
    const std::vector<std::pair<SimpleGraph, TokenMap>>& parts) {
    if (parts.empty()) throw std::invalid_argument("union of zero parts");
    SimpleGraph g = parts.front().first;
    std::vector<int> tokens = parts.front().second.values();
    if (parts.front().second.size() != g.vertex_count()) {
        throw std::invalid_argument("token map size must match the vertex count");
    }
    for (std::size_t i = 1; i < parts.size(); ++i) {
        const auto& [h, fh] = parts[i];
        if (fh.size() != h.vertex_count()) {
            throw std::invalid_argument("token map size must match the vertex count");
        }
        g = disjoint_union(g, h);
        tokens.insert(tokens.end(), fh.values().begin(), fh.values().end());
    }
    return {std::move(g), TokenMap(std::move(tokens))};
}

} // namespace dyckpaint
