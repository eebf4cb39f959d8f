#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "dyckpaint/xvector.hpp"

namespace dyckpaint {

// Monotone lattice path from (0,0): 'R' moves right, 'U' moves up.
class LatticePath {
public:
    LatticePath() = default;

    // Validates that the string is over {R, U}.
    static LatticePath parse(std::string_view steps);

    const std::string& steps() const { return steps_; }
    int length() const { return static_cast<int>(steps_.size()); }
    int ups() const;
    int rights() const { return length() - ups(); }

    // Endpoint (#R, #U) starting from (0,0).
    std::pair<int, int> endpoint() const { return {rights(), ups()}; }

    // True iff every visited vertex (i, j) with j < n satisfies i <= x_{j+1}
    // and the endpoint is (x_n, n). For the empty vector only the empty path
    // qualifies.
    bool dominated_by(const XVector& x) const;

    // s(P): 1-based positions of the vertical edges, strictly increasing.
    std::vector<int> encode() const;

    bool operator==(const LatticePath& o) const { return steps_ == o.steps_; }

private:
    explicit LatticePath(std::string s) : steps_(std::move(s)) {}
    std::string steps_;

    friend LatticePath decode_path(const std::vector<int>& ups, int total_steps);
};

// Inverse of encode(): rebuilds the path from the vertical-edge positions and
// the total edge count.
LatticePath decode_path(const std::vector<int>& ups, int total_steps);

// Membership test on the encoding alone: s = {i_0 < ... < i_{n-1}} encodes a
// path of P(x) iff |s| = n, i_j <= x_{j+1} + j for each j, and the largest
// position fits a path of n + x_n edges.
bool encoding_dominated(const std::vector<int>& s, const XVector& x);

// Encoding with verification against x: throws std::invalid_argument when the
// path is not x-dominated; cross-checks the positional characterization
// against the geometric test.
std::vector<int> encode_path_checked(const LatticePath& p, const XVector& x);

} // namespace dyckpaint
