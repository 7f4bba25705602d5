#pragma once

#include <optional>
#include <vector>

#include "ucp/rational.hpp"

namespace ucp {

// Dense rational matrix, row-major.
struct RationalMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<Rational> a;

    Rational& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
    const Rational& at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }

    static RationalMatrix zero(int rows, int cols);
    std::vector<Rational> col(int c) const;

    bool operator==(const RationalMatrix&) const = default;
};

// Rank over Q by Gaussian elimination (exact).
int exact_rank(RationalMatrix m);

// One solution of A x = b over Q, or nullopt if the system is inconsistent.
// Free variables are set to 0.
std::optional<std::vector<Rational>> solve_linear(const RationalMatrix& a,
                                                  const std::vector<Rational>& b);

}  // namespace ucp
