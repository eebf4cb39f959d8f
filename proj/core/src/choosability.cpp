#include "dyckpaint/choosability.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "dyckpaint/bigint.hpp"
#include "dyckpaint/caps.hpp"
#include "dyckpaint/errors.hpp"
#include "dyckpaint/pathcount.hpp"

namespace dyckpaint {

ListAssignment::ListAssignment(std::vector<std::vector<int>> lists) : lists_(std::move(lists)) {
    for (auto& l : lists_) {
        std::sort(l.begin(), l.end());
        l.erase(std::unique(l.begin(), l.end()), l.end());
        if (l.empty()) throw std::invalid_argument("colour lists must be nonempty");
        if (l.front() < 0) throw std::invalid_argument("colours must be nonnegative");
    }
}

const std::vector<int>& ListAssignment::list(int v) const {
    if (v < 0 || v >= size()) throw std::out_of_range("list index out of range");
    return lists_[static_cast<std::size_t>(v)];
}

std::vector<int> ListAssignment::colour_universe() const {
    std::set<int> u;
    for (const auto& l : lists_) u.insert(l.begin(), l.end());
    return {u.begin(), u.end()};
}

namespace {

struct ColorSearch {
    const SimpleGraph& g;
    const ListAssignment& l;
    std::vector<int> order;          // vertices, largest degree first
    std::vector<char> has_later;     // order position -> later neighbour exists
    std::vector<int> colour;         // by vertex id; -1 uncoloured

    ColorSearch(const SimpleGraph& g_, const ListAssignment& l_) : g(g_), l(l_) {
        order.resize(static_cast<std::size_t>(g.vertex_count()));
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
            return l.list(a).size() < l.list(b).size();
        });
        has_later.assign(order.size(), 0);
        for (std::size_t i = 0; i < order.size(); ++i) {
            for (std::size_t j = i + 1; j < order.size(); ++j) {
                if (g.adjacent(order[i], order[j])) {
                    has_later[i] = 1;
                    break;
                }
            }
        }
        colour.assign(order.size(), -1);
    }

    bool feasible(int v, int c) const {
        for (int u : g.neighbors(v)) {
            if (colour[static_cast<std::size_t>(u)] == c) return false;
        }
        return true;
    }

    bool run(std::size_t pos) {
        if (pos == order.size()) return true;
        const int v = order[pos];
        if (!has_later[pos]) {
            // No uncoloured neighbour is affected by the choice: the first
            // feasible colour decides this vertex.
            for (int c : l.list(v)) {
                if (feasible(v, c)) {
                    colour[static_cast<std::size_t>(v)] = c;
                    const bool ok = run(pos + 1);
                    colour[static_cast<std::size_t>(v)] = -1;
                    return ok;
                }
            }
            return false;
        }
        for (int c : l.list(v)) {
            if (!feasible(v, c)) continue;
            colour[static_cast<std::size_t>(v)] = c;
            if (run(pos + 1)) {
                colour[static_cast<std::size_t>(v)] = -1;
                return true;
            }
            colour[static_cast<std::size_t>(v)] = -1;
        }
        return false;
    }
};

} // namespace

bool is_colorable(const SimpleGraph& g, const ListAssignment& l) {
    if (l.size() != g.vertex_count()) {
        throw std::invalid_argument("assignment size must match the vertex count");
    }
    ColorSearch search(g, l);
    return search.run(0);
}

PhiKappa phi_kappa(const SimpleGraph& g, const ListAssignment& l) {
    if (l.size() != g.vertex_count()) {
        throw std::invalid_argument("assignment size must match the vertex count");
    }
    Count product(1);
    for (int v = 0; v < g.vertex_count(); ++v) product *= Count(static_cast<long>(l.list(v).size()));
    if (product > Count(caps().color_product)) {
        throw cap_exceeded("colouring enumeration of " + to_decimal(product) +
                           " candidates exceeds cap " + std::to_string(caps().color_product));
    }

    const int n = g.vertex_count();
    std::vector<int> colour(static_cast<std::size_t>(n), -1);
    std::set<std::vector<int>> family;
    bool repeated = false;

    auto rec = [&](auto&& self, int v) -> void {
        if (repeated) return;
        if (v == n) {
            std::vector<int> used = colour;
            std::sort(used.begin(), used.end());
            used.erase(std::unique(used.begin(), used.end()), used.end());
            if (static_cast<int>(used.size()) < n) {
                repeated = true;
            } else {
                family.insert(std::move(used));
            }
            return;
        }
        for (int c : l.list(v)) {
            bool ok = true;
            for (int u = 0; u < v && ok; ++u) {
                if (g.adjacent(u, v) && colour[static_cast<std::size_t>(u)] == c) ok = false;
            }
            if (!ok) continue;
            colour[static_cast<std::size_t>(v)] = c;
            self(self, v + 1);
            colour[static_cast<std::size_t>(v)] = -1;
        }
    };
    rec(rec, 0);

    PhiKappa out;
    if (repeated) {
        out.kappa = ExtNat::infinity();
    } else {
        out.phi.assign(family.begin(), family.end());
        out.kappa = ExtNat::of(family.size());
    }
    return out;
}

bool is_m_extendable(const SimpleGraph& g, const ListAssignment& l, std::uint64_t m) {
    const ExtNat kappa = phi_kappa(g, l).kappa;
    return kappa.is_infinite || m < kappa.value;
}

ExtNat m_c_small(const SimpleGraph& g, const TokenMap& f) {
    if (f.size() != g.vertex_count()) {
        throw std::invalid_argument("token map size must match the vertex count");
    }
    const int n = g.vertex_count();
    const int total = std::accumulate(f.values().begin(), f.values().end(), 0);
    if (n > 3 || total > 9) {
        throw cap_exceeded("assignment enumeration requires |V| <= 3 and sum(f) <= 9, got |V| = " +
                           std::to_string(n) + " and sum(f) = " + std::to_string(total));
    }
    if (n == 0) return ExtNat::of(1); // the empty colouring; one colour set

    ExtNat best = ExtNat::infinity();
    std::vector<std::vector<int>> lists(static_cast<std::size_t>(n));

    // Assignments up to colour renaming: new colours enter as the smallest
    // unused integers, so every class has at least one representative here.
    auto enumerate = [&](auto&& self, int v, int used) -> void {
        if (best == ExtNat::of(0)) return;
        if (v == n) {
            const ExtNat kappa = phi_kappa(g, ListAssignment(lists)).kappa;
            if (kappa < best) best = kappa;
            return;
        }
        const int want = f.at(v);
        for (int reuse = std::min(want, used); reuse >= 0; --reuse) {
            const int fresh = want - reuse;
            std::vector<int> pick(static_cast<std::size_t>(reuse));
            // combinations of `reuse` old colours out of {0..used-1}
            std::vector<int> idx(static_cast<std::size_t>(reuse));
            std::iota(idx.begin(), idx.end(), 0);
            bool more = reuse >= 0;
            if (reuse == 0) {
                lists[static_cast<std::size_t>(v)].clear();
                for (int c = 0; c < fresh; ++c) {
                    lists[static_cast<std::size_t>(v)].push_back(used + c);
                }
                self(self, v + 1, used + fresh);
                continue;
            }
            while (more) {
                auto& lv = lists[static_cast<std::size_t>(v)];
                lv.assign(idx.begin(), idx.end());
                for (int c = 0; c < fresh; ++c) lv.push_back(used + c);
                self(self, v + 1, used + fresh);
                // next combination
                int i = reuse - 1;
                while (i >= 0 && idx[static_cast<std::size_t>(i)] == used - reuse + i) --i;
                if (i < 0) {
                    more = false;
                } else {
                    ++idx[static_cast<std::size_t>(i)];
                    for (int j = i + 1; j < reuse; ++j) {
                        idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
                    }
                }
            }
        }
    };
    enumerate(enumerate, 0, 0);
    return best;
}

BadListInstance bad_list_assignment(const TokenMap& f) {
    const TokenMap fs = f.sorted();
    const XVector x = x_of(fs);
    const Count total = psi(x);
    if (total > Count(caps().enum_paths)) {
        throw cap_exceeded("the construction needs " + to_decimal(total) +
                           " independent vertices, above cap " + std::to_string(caps().enum_paths));
    }
    const auto paths = enumerate_paths(x);
    const int n = fs.size();
    const int m = static_cast<int>(paths.size());

    BadListInstance out;
    out.n = n;
    out.m = m;
    auto [graph, tokens] = join_instance(SimpleGraph::complete(n), fs, m);
    out.graph = std::move(graph);
    out.tokens = std::move(tokens);

    std::vector<std::vector<int>> lists;
    lists.reserve(static_cast<std::size_t>(n + m));
    for (int i = 0; i < n; ++i) {
        std::vector<int> l(static_cast<std::size_t>(fs.at(i)));
        std::iota(l.begin(), l.end(), 1);
        lists.push_back(std::move(l));
    }
    for (const auto& p : paths) lists.push_back(p.encode());
    out.lists = ListAssignment(std::move(lists));
    return out;
}

} // namespace dyckpaint
