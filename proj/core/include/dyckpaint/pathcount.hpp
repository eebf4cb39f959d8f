#pragma once

#include <cstdint>
#include <vector>

#include "dyckpaint/bigint.hpp"
#include "dyckpaint/caps.hpp"
#include "dyckpaint/lattice_path.hpp"
#include "dyckpaint/xvector.hpp"

namespace dyckpaint {

enum class PsiMethod { Dp, Rec, Det, Auto };

// Number of x-dominated lattice paths from (0,0) to (x_n, n).
// psi(()) = 1; zero whenever the reduced vector has a negative entry.
// All methods agree; Auto picks between the grid and the determinant.
Count psi(const XVector& x, PsiMethod method = PsiMethod::Auto);

// binom(y, z) when y >= z >= 0 (value 1 for z = 0 <= y); zero when z < 0
// or y < z.
Count binom_plus(long y, long z);

// C_n = binom(2n, n) / (n + 1).
Count catalan(unsigned n);

// The counting grid over the reduced vector: value at (a, b) is the number
// of dominated paths from (0,0) to (a, b). Heights b < n are bounded by
// a <= r_{b+1}; the top row is bounded only by the endpoint column.
class PsiGrid {
public:
    explicit PsiGrid(const XVector& x);

    int height() const { return n_; }
    int width() const { return width_; }
    // False when the reduced vector has a negative entry (no grid exists).
    bool valid() const { return valid_; }
    bool inside(int a, int b) const;
    const Count& at(int a, int b) const;
    Count total() const;

private:
    int n_ = 0;
    int width_ = 0;
    bool valid_ = false;
    std::vector<int> row_limit_;        // max column per height
    std::vector<std::vector<Count>> rows_;
};

// All x-dominated paths ending at (x_n, n), in lexicographic step order with
// 'U' ordered before 'R'. Throws cap_exceeded when psi(x) exceeds the cap.
std::vector<LatticePath> enumerate_paths(const XVector& x);
std::vector<LatticePath> enumerate_paths(const XVector& x, std::uint64_t cap);

} // namespace dyckpaint
