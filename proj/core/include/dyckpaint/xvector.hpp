#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dyckpaint {

// Bound vector x = (x_1, ..., x_n): entry x_i limits the horizontal
// coordinate of a lattice path at height i-1. Immutable after construction.
class XVector {
public:
    XVector() = default;
    explicit XVector(std::vector<int> entries) : entries_(std::move(entries)) {}

    // x_i = f_i - i for a weakly increasing token sequence f (1-based).
    // Rejects non-monotone input.
    static XVector from_tokens(const std::vector<int>& f);

    // Parses "2,3,3,5" (negative entries permitted, "" is the empty vector).
    static XVector parse(std::string_view text);

    int size() const { return static_cast<int>(entries_.size()); }
    bool empty() const { return entries_.empty(); }

    // 1-based accessor matching the height convention.
    int at(int i) const;

    const std::vector<int>& entries() const { return entries_; }

    // True iff entries are weakly increasing.
    bool is_reduced() const;

    // The maximum weakly increasing vector that is entrywise <= *this,
    // computed by a right-to-left pass. Idempotent; preserves the path set.
    XVector reduced() const;

    // Branch at index i (1-based):
    //   first:  entries i..n decremented by one
    //   second: entry i deleted
    std::pair<XVector, XVector> branch(int i) const;

    bool operator==(const XVector& o) const { return entries_ == o.entries_; }
    bool operator!=(const XVector& o) const { return !(*this == o); }

    // Entrywise comparison; false unless lengths match.
    bool dominated_entrywise_by(const XVector& y) const;

    std::string str() const; // "2,3,3,5"

private:
    std::vector<int> entries_;
};

} // namespace dyckpaint
