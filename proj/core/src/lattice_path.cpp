#include "dyckpaint/lattice_path.hpp"

#include <algorithm>
#include <stdexcept>

namespace dyckpaint {

LatticePath LatticePath::parse(std::string_view steps) {
    for (char c : steps) {
        if (c != 'R' && c != 'U') {
            throw std::invalid_argument("path steps must be over {R, U}");
        }
    }
    return LatticePath(std::string(steps));
}

int LatticePath::ups() const {
    return static_cast<int>(std::count(steps_.begin(), steps_.end(), 'U'));
}

bool LatticePath::dominated_by(const XVector& x) const {
    const int n = x.size();
    if (n == 0) return steps_.empty();
    int a = 0, b = 0;
    if (a > x.at(1)) return false; // origin sits at height 0
    for (char c : steps_) {
        if (c == 'R') ++a; else ++b;
        if (b < n && a > x.at(b + 1)) return false;
        if (b > n) return false;
    }
    return a == x.at(n) && b == n;
}

std::vector<int> LatticePath::encode() const {
    std::vector<int> s;
    for (int i = 0; i < length(); ++i) {
        if (steps_[static_cast<std::size_t>(i)] == 'U') s.push_back(i + 1);
    }
    return s;
}

LatticePath decode_path(const std::vector<int>& ups, int total_steps) {
    std::string steps(static_cast<std::size_t>(total_steps), 'R');
    for (int pos : ups) {
        if (pos < 1 || pos > total_steps) {
            throw std::invalid_argument("vertical-edge position out of range");
        }
        if (steps[static_cast<std::size_t>(pos - 1)] == 'U') {
            throw std::invalid_argument("duplicate vertical-edge position");
        }
        steps[static_cast<std::size_t>(pos - 1)] = 'U';
    }
    return LatticePath(std::move(steps));
}

bool encoding_dominated(const std::vector<int>& s, const XVector& x) {
    const int n = x.size();
    if (static_cast<int>(s.size()) != n) return false;
    for (std::size_t j = 1; j < s.size(); ++j) {
        if (s[j - 1] >= s[j]) return false;
    }
    if (n == 0) return true;
    const int total = n + x.at(n);
    for (int j = 0; j < n; ++j) {
        if (s[static_cast<std::size_t>(j)] < 1 || s[static_cast<std::size_t>(j)] > total) return false;
        // With 1-based edge positions, "at most x_{j+1} horizontal edges
        // before the (j+1)-th vertical edge" reads i_j - 1 - j <= x_{j+1}.
        if (s[static_cast<std::size_t>(j)] > x.at(j + 1) + j + 1) return false;
    }
    return true;
}

std::vector<int> encode_path_checked(const LatticePath& p, const XVector& x) {
    std::vector<int> s = p.encode();
    const bool geometric = p.dominated_by(x);
    const int expected_len = x.empty() ? 0 : x.size() + x.at(x.size());
    const bool positional = p.length() == expected_len && encoding_dominated(s, x);
    if (geometric != positional) {
        throw std::logic_error("encoding characterization disagrees with the geometric test");
    }
    if (!geometric) {
        throw std::invalid_argument("path is not dominated by the given vector");
    }
    return s;
}

} // namespace dyckpaint
