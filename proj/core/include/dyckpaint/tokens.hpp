#pragma once

#include <utility>
#include <vector>

#include "dyckpaint/graph.hpp"
#include "dyckpaint/xvector.hpp"

namespace dyckpaint {

// Per-vertex token counts / list sizes; every value is at least one.
class TokenMap {
public:
    TokenMap() = default;
    explicit TokenMap(std::vector<int> values);

    int size() const { return static_cast<int>(values_.size()); }
    int at(int v) const;
    const std::vector<int>& values() const { return values_; }
    TokenMap sorted() const;
    bool is_sorted() const;

    bool operator==(const TokenMap& o) const { return values_ == o.values_; }

private:
    std::vector<int> values_;
};

// x(f) per the token convention x_i = f(v_i) - i; requires monotone f.
XVector x_of(const TokenMap& f);

// G joined with m extra mutually non-adjacent vertices, each of which gets
// |V(G)| tokens. G's vertices keep ids 0..|V(G)|-1.
std::pair<SimpleGraph, TokenMap> join_instance(const SimpleGraph& g, const TokenMap& f, int m);

// Disjoint union with concatenated token maps.
std::pair<SimpleGraph, TokenMap> union_instance(
    const std::vector<std::pair<SimpleGraph, TokenMap>>& parts);

} // namespace dyckpaint
