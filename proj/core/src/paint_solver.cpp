#include "dyckpaint/paint_solver.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "dyckpaint/caps.hpp"
#include "dyckpaint/errors.hpp"

namespace dyckpaint {

namespace {

// Distinct values with multiplicities, ascending.
std::vector<std::pair<int, int>> value_counts(const std::vector<int>& sorted) {
    std::vector<std::pair<int, int>> out;
    for (int v : sorted) {
        if (!out.empty() && out.back().first == v) {
            ++out.back().second;
        } else {
            out.emplace_back(v, 1);
        }
    }
    return out;
}

// All sub-multisets of a sorted multiset, each sorted ascending.
void submultisets(const std::vector<int>& sorted, bool include_empty,
                  std::vector<std::vector<int>>& out) {
    const auto vals = value_counts(sorted);
    std::vector<int> current;
    auto rec = [&](auto&& self, std::size_t idx) -> void {
        if (idx == vals.size()) {
            if (include_empty || !current.empty()) out.push_back(current);
            return;
        }
        const auto [value, mult] = vals[idx];
        for (int take = 0; take <= mult; ++take) {
            self(self, idx + 1);
            current.push_back(value);
        }
        current.resize(current.size() - static_cast<std::size_t>(mult) - 1);
    };
    rec(rec, 0);
}

// Multiset difference a \ b (both sorted).
std::vector<int> multiset_minus(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    out.reserve(a.size() - b.size());
    std::size_t j = 0;
    for (int v : a) {
        if (j < b.size() && b[j] == v) {
            ++j;
        } else {
            out.push_back(v);
        }
    }
    return out;
}

int total_size(const std::vector<std::vector<int>>& s) {
    int total = 0;
    for (const auto& part : s) total += static_cast<int>(part.size());
    return total;
}

} // namespace

std::size_t PaintSolver::KeyHash::operator()(const std::vector<int>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (int x : v) {
        h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull;
        h *= 1099511628211ull;
    }
    return h;
}

PaintSolver::PaintSolver(const SimpleGraph& g) : PaintSolver(g, false) {}

PaintSolver PaintSolver::with_join_block(const SimpleGraph& g) { return PaintSolver(g, true); }

PaintSolver::PaintSolver(const SimpleGraph& g, bool with_block) : g_(g), with_block_(with_block) {
    const int n = g_.vertex_count();
    if (n > caps().solver_vertices) {
        throw cap_exceeded("game solver accepts at most " +
                           std::to_string(caps().solver_vertices) + " graph-side vertices, got " +
                           std::to_string(n));
    }

    // Twin partition: u, v interchangeable iff swapping them is an
    // automorphism. Non-adjacent: equal open neighbourhoods; adjacent:
    // equal closed neighbourhoods.
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
        while (parent[static_cast<std::size_t>(v)] != v) {
            parent[static_cast<std::size_t>(v)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
            v = parent[static_cast<std::size_t>(v)];
        }
        return v;
    };
    auto twins = [&](int u, int v) {
        for (int w = 0; w < n; ++w) {
            if (w == u || w == v) continue;
            if (g_.adjacent(u, w) != g_.adjacent(v, w)) return false;
        }
        return true;
    };
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (twins(u, v)) {
                int ru = find(u), rv = find(v);
                if (ru != rv) parent[static_cast<std::size_t>(std::max(ru, rv))] = std::min(ru, rv);
            }
        }
    }

    class_of_.assign(static_cast<std::size_t>(n), -1);
    std::vector<std::vector<int>> members;
    std::map<int, int> root_to_class;
    for (int v = 0; v < n; ++v) {
        int r = find(v);
        auto it = root_to_class.find(r);
        if (it == root_to_class.end()) {
            it = root_to_class.emplace(r, static_cast<int>(members.size())).first;
            members.emplace_back();
        }
        class_of_[static_cast<std::size_t>(v)] = it->second;
        members[static_cast<std::size_t>(it->second)].push_back(v);
    }
    const int k = static_cast<int>(members.size());
    classes_ = k + (with_block_ ? 1 : 0);

    clique_class_.assign(static_cast<std::size_t>(classes_), 0);
    for (int c = 0; c < k; ++c) {
        const auto& m = members[static_cast<std::size_t>(c)];
        clique_class_[static_cast<std::size_t>(c)] =
            m.size() >= 2 && g_.adjacent(m[0], m[1]) ? 1 : 0;
    }

    cadj_.assign(static_cast<std::size_t>(classes_),
                 std::vector<char>(static_cast<std::size_t>(classes_), 0));
    for (int a = 0; a < k; ++a) {
        for (int b = a + 1; b < k; ++b) {
            const bool adj = g_.adjacent(members[static_cast<std::size_t>(a)][0],
                                         members[static_cast<std::size_t>(b)][0]);
            for (int u : members[static_cast<std::size_t>(a)]) {
                for (int v : members[static_cast<std::size_t>(b)]) {
                    if (g_.adjacent(u, v) != adj) {
                        throw std::logic_error("twin classes have mixed cross adjacency");
                    }
                }
            }
            cadj_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = adj ? 1 : 0;
            cadj_[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] = adj ? 1 : 0;
        }
    }
    if (with_block_) {
        // The block is adjacent to everything on the graph side.
        for (int c = 0; c < k; ++c) {
            cadj_[static_cast<std::size_t>(c)][static_cast<std::size_t>(k)] = 1;
            cadj_[static_cast<std::size_t>(k)][static_cast<std::size_t>(c)] = 1;
        }
    }
}

bool PaintSolver::painter_wins(const std::vector<int>& g_tokens, const std::vector<int>& block) {
    if (static_cast<int>(g_tokens.size()) != g_.vertex_count()) {
        throw std::invalid_argument("token vector size must match the vertex count");
    }
    if (!block.empty() && !with_block_) {
        throw std::invalid_argument("solver was built without a join block");
    }
    State s(static_cast<std::size_t>(classes_));
    for (int v = 0; v < g_.vertex_count(); ++v) {
        const int t = g_tokens[static_cast<std::size_t>(v)];
        if (t < 0) continue; // absent
        if (t == 0) return false;
        s[static_cast<std::size_t>(class_of_[static_cast<std::size_t>(v)])].push_back(t);
    }
    if (with_block_) {
        for (int t : block) {
            if (t <= 0) return false;
            s.back().push_back(t);
        }
    }
    for (auto& part : s) std::sort(part.begin(), part.end());
    return solve(std::move(s));
}

void PaintSolver::prune(State& s) const {
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t c = 0; c < s.size(); ++c) {
            if (s[c].empty()) continue;
            int deg = clique_class_[c] ? static_cast<int>(s[c].size()) - 1 : 0;
            for (std::size_t d = 0; d < s.size(); ++d) {
                if (cadj_[c][d]) deg += static_cast<int>(s[d].size());
            }
            while (!s[c].empty() && s[c].back() > deg) {
                s[c].pop_back();
                changed = true;
                if (clique_class_[c]) --deg;
            }
        }
    }
}

std::vector<int> PaintSolver::key_of(const State& s) const {
    std::vector<int> key;
    key.reserve(static_cast<std::size_t>(total_size(s) + classes_));
    for (const auto& part : s) {
        key.insert(key.end(), part.begin(), part.end());
        key.push_back(-1);
    }
    return key;
}

bool PaintSolver::solve(State s) {
    prune(s);
    if (total_size(s) == 0) return true;

    std::vector<int> key = key_of(s);
    if (auto it = memo_.find(key); it != memo_.end()) {
        ++stats_.memo_hits;
        return it->second != 0;
    }
    ++stats_.states;

    // Marking moves: one sub-multiset per class, not all empty, largest
    // total first and lexicographic within a total.
    std::vector<std::vector<std::vector<int>>> choices(s.size());
    for (std::size_t c = 0; c < s.size(); ++c) {
        submultisets(s[c], true, choices[c]);
    }
    std::vector<State> moves;
    State current(s.size());
    auto build = [&](auto&& self, std::size_t c) -> void {
        if (c == s.size()) {
            if (total_size(current) > 0) moves.push_back(current);
            return;
        }
        for (const auto& pick : choices[c]) {
            current[c] = pick;
            self(self, c + 1);
        }
        current[c].clear();
    };
    build(build, 0);
    std::stable_sort(moves.begin(), moves.end(), [](const State& a, const State& b) {
        const int ta = total_size(a), tb = total_size(b);
        if (ta != tb) return ta > tb;
        return a < b;
    });

    bool painter_wins_here = true;
    for (const auto& marked : moves) {
        if (!move_has_winning_reply(s, marked)) {
            painter_wins_here = false;
            break;
        }
    }
    memo_.emplace(std::move(key), painter_wins_here ? 1 : 0);
    return painter_wins_here;
}

// Whether the colouring side has a reply to `marked` that leads to a won
// position. Every marked token of value one reaches zero and must be
// coloured this round.
bool PaintSolver::move_has_winning_reply(const State& s, const State& marked) {
    const std::size_t k = s.size();
    std::vector<int> forced(k, 0);
    for (std::size_t c = 0; c < k; ++c) {
        for (int v : marked[c]) {
            if (v == 1) ++forced[c];
        }
    }
    // Forced classes must be pairwise non-adjacent, and a clique class can
    // colour at most one vertex.
    for (std::size_t c = 0; c < k; ++c) {
        if (forced[c] == 0) continue;
        if (clique_class_[c] && forced[c] > 1) return false;
        for (std::size_t d = c + 1; d < k; ++d) {
            if (forced[d] > 0 && cadj_[c][d]) return false;
        }
    }

    // Candidate colourings per class: for a clique one marked value, for an
    // independent class any sub-multiset containing the forced tokens.
    std::vector<std::vector<std::vector<int>>> options(k);
    for (std::size_t c = 0; c < k; ++c) {
        if (marked[c].empty()) continue;
        if (clique_class_[c]) {
            if (forced[c] == 1) {
                options[c].push_back({1});
            } else {
                for (const auto& vc : value_counts(marked[c])) {
                    options[c].push_back({vc.first});
                }
            }
        } else {
            std::vector<int> rest;
            std::vector<int> ones(static_cast<std::size_t>(forced[c]), 1);
            for (int v : marked[c]) {
                if (v != 1) rest.push_back(v);
            }
            std::vector<std::vector<int>> subs;
            submultisets(rest, true, subs);
            for (auto& sub : subs) {
                std::vector<int> opt = ones;
                opt.insert(opt.end(), sub.begin(), sub.end());
                if (!opt.empty()) options[c].push_back(std::move(opt));
            }
        }
    }

    // Assemble replies: a pairwise non-adjacent family of classes covering
    // every forced class. Larger replies are tried first.
    std::vector<std::vector<std::pair<std::size_t, std::vector<int>>>> replies;
    std::vector<std::pair<std::size_t, std::vector<int>>> chosen;
    auto assemble = [&](auto&& self, std::size_t c) -> void {
        if (c == k) {
            if (!chosen.empty()) replies.push_back(chosen);
            return;
        }
        const bool must = forced[c] > 0;
        if (!must) self(self, c + 1); // skip this class
        if (!options[c].empty()) {
            bool compatible = true;
            for (const auto& [d, unused] : chosen) {
                if (cadj_[c][d]) { compatible = false; break; }
            }
            if (compatible) {
                for (const auto& opt : options[c]) {
                    chosen.emplace_back(c, opt);
                    self(self, c + 1);
                    chosen.pop_back();
                }
            } else if (must) {
                return; // forced class blocked: abandon this branch
            }
        } else if (must) {
            return;
        }
    };
    assemble(assemble, 0);
    std::stable_sort(replies.begin(), replies.end(), [](const auto& a, const auto& b) {
        std::size_t ta = 0, tb = 0;
        for (const auto& [c, opt] : a) ta += opt.size();
        for (const auto& [c, opt] : b) tb += opt.size();
        return ta > tb;
    });

    for (const auto& reply : replies) {
        State child(k);
        bool ok = true;
        for (std::size_t c = 0; c < k && ok; ++c) {
            std::vector<int> coloured;
            for (const auto& [d, opt] : reply) {
                if (d == c) { coloured = opt; break; }
            }
            std::vector<int> remaining = multiset_minus(s[c], marked[c]);
            std::vector<int> survivors = multiset_minus(marked[c], coloured);
            for (int v : survivors) {
                if (v - 1 <= 0) { ok = false; break; }
                remaining.push_back(v - 1);
            }
            std::sort(remaining.begin(), remaining.end());
            child[c] = std::move(remaining);
        }
        if (!ok) continue;
        if (solve(std::move(child))) return true;
    }
    return false;
}

bool is_paintable(const SimpleGraph& g, const TokenMap& f) {
    return is_paintable_tokens(g, f.values());
}

bool is_paintable_tokens(const SimpleGraph& g, const std::vector<int>& tokens) {
    PaintSolver solver(g);
    return solver.painter_wins(tokens);
}

int m_p(const SimpleGraph& g, const TokenMap& f) { return m_p_tokens(g, f.values()); }

int m_p_tokens(const SimpleGraph& g, const std::vector<int>& tokens) {
    if (static_cast<int>(tokens.size()) != g.vertex_count()) {
        throw std::invalid_argument("token vector size must match the vertex count");
    }
    for (int t : tokens) {
        if (t < 0) throw std::invalid_argument("token counts must be nonnegative here");
    }
    PaintSolver solver = PaintSolver::with_join_block(g);
    Count bound(1);
    for (int t : tokens) bound *= Count(std::max(t, 0));
    for (int m = 0;; ++m) {
        std::vector<int> block(static_cast<std::size_t>(m), g.vertex_count());
        if (!solver.painter_wins(tokens, block)) return m;
        if (Count(m) >= bound) {
            throw std::logic_error("search passed the product bound without ending");
        }
    }
}

std::pair<SimpleGraph, TokenMap> prune(const SimpleGraph& g, const TokenMap& f) {
    if (f.size() != g.vertex_count()) {
        throw std::invalid_argument("token map size must match the vertex count");
    }
    std::vector<int> keep(static_cast<std::size_t>(g.vertex_count()));
    std::iota(keep.begin(), keep.end(), 0);
    std::vector<int> tokens = f.values();
    SimpleGraph current = g;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v = 0; v < current.vertex_count(); ++v) {
            if (tokens[static_cast<std::size_t>(v)] > current.degree(v)) {
                std::vector<int> rest;
                for (int u = 0; u < current.vertex_count(); ++u) {
                    if (u != v) rest.push_back(u);
                }
                current = current.induced(rest);
                tokens.erase(tokens.begin() + v);
                keep.erase(keep.begin() + v);
                changed = true;
                break;
            }
        }
    }
    return {current, TokenMap(std::move(tokens))};
}

namespace {

std::vector<int> tokens_minus_marked(const std::vector<int>& tokens, unsigned mask) {
    std::vector<int> out = tokens;
    for (std::size_t v = 0; v < out.size(); ++v) {
        if (mask & (1u << v)) out[static_cast<std::size_t>(v)] -= 1;
    }
    return out;
}

SimpleGraph without_vertices(const SimpleGraph& g, unsigned mask) {
    std::vector<int> rest;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (!(mask & (1u << v))) rest.push_back(v);
    }
    return g.induced(rest);
}

std::vector<int> tokens_without(const std::vector<int>& tokens, unsigned mask) {
    std::vector<int> out;
    for (std::size_t v = 0; v < tokens.size(); ++v) {
        if (!(mask & (1u << v))) out.push_back(tokens[v]);
    }
    return out;
}

} // namespace

MpCertificates m_p_certificates(const SimpleGraph& g, const TokenMap& f, int m) {
    if (!is_paintable(g, f)) {
        throw std::invalid_argument("certificates are defined for paintable instances only");
    }
    const int n = g.vertex_count();
    if (n >= 31) throw cap_exceeded("certificate search is limited to small graphs");

    MpCertificates out;
    out.lower = true;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        const std::vector<int> fu = tokens_minus_marked(f.values(), mask);
        const int mp_marked = m_p_tokens(g, fu);
        const int slack = m - mp_marked;

        // Upper certificate: the marked set yields a legal winning opening,
        // every single-vertex reply is too weak, and no two-vertex reply
        // leaves a paintable rest.
        if (!out.upper && slack >= 0) {
            bool witness = true;
            for (int v = 0; v < n && witness; ++v) {
                if (!(mask & (1u << v))) continue;
                const int rest = m_p_tokens(without_vertices(g, 1u << v),
                                            tokens_without(fu, 1u << v));
                if (slack < rest) witness = false;
            }
            if (witness) {
                for (unsigned sub = mask; sub > 0 && witness; sub = (sub - 1) & mask) {
                    if (__builtin_popcount(sub) < 2) continue;
                    std::vector<int> vs;
                    for (int v = 0; v < n; ++v) {
                        if (sub & (1u << v)) vs.push_back(v);
                    }
                    if (!g.is_independent(vs)) continue;
                    if (is_paintable_tokens(without_vertices(g, sub), tokens_without(fu, sub))) {
                        witness = false;
                    }
                }
            }
            if (witness) out.upper = true;
        }

        // Lower certificate: every nonempty marked set admits either a
        // strong single-vertex reply or a two-vertex reply that stays
        // paintable.
        if (mask != 0 && out.lower) {
            bool good = false;
            for (int v = 0; v < n && !good; ++v) {
                if (!(mask & (1u << v))) continue;
                const int rest = m_p_tokens(without_vertices(g, 1u << v),
                                            tokens_without(fu, 1u << v));
                if (m - mp_marked <= rest) good = true;
            }
            for (unsigned sub = mask; sub > 0 && !good; sub = (sub - 1) & mask) {
                if (__builtin_popcount(sub) < 2) continue;
                std::vector<int> vs;
                for (int v = 0; v < n; ++v) {
                    if (sub & (1u << v)) vs.push_back(v);
                }
                if (!g.is_independent(vs)) continue;
                if (is_paintable_tokens(without_vertices(g, sub), tokens_without(fu, sub))) {
                    good = true;
                }
            }
            if (!good) out.lower = false;
        }
    }
    return out;
}

} // namespace dyckpaint
