#include "dyckpaint/pathcount.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

#include "dyckpaint/errors.hpp"

namespace dyckpaint {

Count binom_plus(long y, long z) {
    if (z < 0 || y < z) return Count(0);
    return binomial(static_cast<unsigned long>(y), static_cast<unsigned long>(z));
}

Count catalan(unsigned n) {
    return binomial(2ul * n, n) / Count(static_cast<unsigned long>(n) + 1);
}

namespace {

bool has_negative(const XVector& x) {
    for (int v : x.entries()) {
        if (v < 0) return true;
    }
    return false;
}

Count psi_dp(const XVector& x) {
    PsiGrid grid(x);
    return grid.total();
}

// Recursion on reduced nonnegative vectors: strip forced leading up-steps
// (a zero head), then split at i = 1 into "first move right" and "first
// move up". Memoised; states are (suffix, uniform shift) images of the input.
Count psi_rec_impl(std::vector<int> y, std::map<std::vector<int>, Count>& memo) {
    // strip zero heads; the first step cannot be horizontal there
    std::size_t start = 0;
    while (start < y.size() && y[start] == 0) ++start;
    if (start > 0) y.erase(y.begin(), y.begin() + static_cast<std::ptrdiff_t>(start));
    if (y.empty()) return Count(1);

    auto it = memo.find(y);
    if (it != memo.end()) return it->second;

    // y is reduced with y[0] >= 1: psi(y) = psi(y -> 1) + psi(y ^ 1)
    std::vector<int> down = y;
    for (int& v : down) v -= 1;
    std::vector<int> up(y.begin() + 1, y.end());

    Count result = psi_rec_impl(std::move(down), memo) + psi_rec_impl(std::move(up), memo);
    memo.emplace(std::move(y), result);
    return result;
}

Count psi_rec(const XVector& x) {
    XVector r = x.reduced();
    if (has_negative(r)) return Count(0);
    std::map<std::vector<int>, Count> memo;
    return psi_rec_impl(r.entries(), memo);
}

// Fraction-free (Bareiss) elimination; every intermediate entry stays an
// exact integer and divisions are exact.
Count bareiss_det(std::vector<std::vector<Count>> m) {
    const int n = static_cast<int>(m.size());
    if (n == 0) return Count(1);
    int sign = 1;
    Count prev(1);
    for (int k = 0; k < n - 1; ++k) {
        if (m[k][k] == 0) {
            int pivot = -1;
            for (int i = k + 1; i < n; ++i) {
                if (m[i][k] != 0) { pivot = i; break; }
            }
            if (pivot < 0) return Count(0);
            std::swap(m[k], m[pivot]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                Count num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    Count det = m[n - 1][n - 1];
    if (sign < 0) det = -det;
    return det;
}

Count psi_det(const XVector& x) {
    XVector r = x.reduced();
    if (has_negative(r)) return Count(0);
    const int n = r.size();
    if (n == 0) return Count(1);
    std::vector<std::vector<Count>> m(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        auto& row = m[static_cast<std::size_t>(i - 1)];
        row.reserve(static_cast<std::size_t>(n));
        for (int j = 1; j <= n; ++j) {
            row.push_back(binom_plus(r.at(i) + 1, j - i + 1));
        }
    }
    Count det = bareiss_det(std::move(m));
    if (det < 0) throw std::logic_error("path-count determinant came out negative");
    return det;
}

} // namespace

Count psi(const XVector& x, PsiMethod method) {
    switch (method) {
        case PsiMethod::Dp: return psi_dp(x);
        case PsiMethod::Rec: return psi_rec(x);
        case PsiMethod::Det: return psi_det(x);
        case PsiMethod::Auto: break;
    }
    // The grid costs O(n * x_n) big-int cells; fall back to the determinant
    // when the vector is wide.
    XVector r = x.reduced();
    if (has_negative(r)) return Count(0);
    const long width = r.empty() ? 0 : r.at(r.size());
    if (width <= 1024 && static_cast<long>(r.size()) * (width + 1) <= 65536) return psi_dp(x);
    return psi_det(x);
}

PsiGrid::PsiGrid(const XVector& x) {
    XVector r = x.reduced();
    n_ = r.size();
    if (has_negative(r)) {
        valid_ = false;
        return;
    }
    valid_ = true;
    width_ = n_ == 0 ? 0 : r.at(n_);
    row_limit_.resize(static_cast<std::size_t>(n_) + 1);
    for (int b = 0; b < n_; ++b) row_limit_[static_cast<std::size_t>(b)] = r.at(b + 1);
    row_limit_[static_cast<std::size_t>(n_)] = width_; // top row: endpoint column only
    rows_.resize(static_cast<std::size_t>(n_) + 1);
    for (int b = 0; b <= n_; ++b) {
        auto& row = rows_[static_cast<std::size_t>(b)];
        row.assign(static_cast<std::size_t>(row_limit_[static_cast<std::size_t>(b)]) + 1, Count(0));
        for (int a = 0; a <= row_limit_[static_cast<std::size_t>(b)]; ++a) {
            if (a == 0 && b == 0) {
                row[0] = 1;
                continue;
            }
            Count v(0);
            if (a > 0) v += row[static_cast<std::size_t>(a - 1)];
            if (b > 0 && inside(a, b - 1)) {
                v += rows_[static_cast<std::size_t>(b - 1)][static_cast<std::size_t>(a)];
            }
            row[static_cast<std::size_t>(a)] = std::move(v);
        }
    }
}

bool PsiGrid::inside(int a, int b) const {
    if (!valid_) return false;
    if (b < 0 || b > n_ || a < 0) return false;
    return a <= row_limit_[static_cast<std::size_t>(b)];
}

const Count& PsiGrid::at(int a, int b) const {
    if (!inside(a, b)) throw std::out_of_range("grid point outside the dominated region");
    return rows_[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)];
}

Count PsiGrid::total() const {
    if (!valid_) return Count(0);
    if (n_ == 0) return Count(1);
    return at(width_, n_);
}

namespace {

void enumerate_rec(const XVector& r, int a, int b, std::string& steps,
                   std::vector<LatticePath>& out) {
    const int n = r.size();
    if (b == n && a == r.at(n)) {
        out.push_back(LatticePath::parse(steps));
        return;
    }
    // 'U' before 'R' keeps the output lexicographic under U < R.
    if (b < n && (b + 1 == n || a <= r.at(b + 2))) {
        steps.push_back('U');
        enumerate_rec(r, a, b + 1, steps, out);
        steps.pop_back();
    }
    const int limit = b == n ? r.at(n) : r.at(b + 1);
    if (a + 1 <= limit) {
        steps.push_back('R');
        enumerate_rec(r, a + 1, b, steps, out);
        steps.pop_back();
    }
}

} // namespace

std::vector<LatticePath> enumerate_paths(const XVector& x) {
    return enumerate_paths(x, caps().enum_paths);
}

std::vector<LatticePath> enumerate_paths(const XVector& x, std::uint64_t cap) {
    Count total = psi(x);
    if (total > Count(cap)) {
        throw cap_exceeded("enumerate_paths: " + to_decimal(total) + " paths exceed cap " +
                           std::to_string(cap));
    }
    std::vector<LatticePath> out;
    XVector r = x.reduced();
    if (has_negative(r)) return out;
    if (r.size() == 0) {
        out.push_back(LatticePath::parse(""));
        return out;
    }
    std::string steps;
    enumerate_rec(r, 0, 0, steps, out);
    return out;
}

} // namespace dyckpaint
