#include "ucp/linalg.hpp"

namespace ucp {

RationalMatrix RationalMatrix::zero(int rows, int cols) {
    RationalMatrix m;
    m.rows = rows;
    m.cols = cols;
    m.a.assign(static_cast<std::size_t>(rows) * cols, Rational(0));
    return m;
}

std::vector<Rational> RationalMatrix::col(int c) const {
    std::vector<Rational> out;
    out.reserve(rows);
    for (int r = 0; r < rows; ++r) out.push_back(at(r, c));
    return out;
}

namespace {

// Row-echelon elimination in place; returns pivot columns.
std::vector<int> eliminate(RationalMatrix& m) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols && row < m.rows; ++col) {
        int pivot = -1;
        for (int r = row; r < m.rows; ++r) {
            if (m.at(r, col) != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        if (pivot != row) {
            for (int c = col; c < m.cols; ++c) std::swap(m.at(pivot, c), m.at(row, c));
        }
        const Rational inv = m.at(row, col);
        for (int c = col; c < m.cols; ++c) m.at(row, c) /= inv;
        for (int r = 0; r < m.rows; ++r) {
            if (r == row || m.at(r, col) == 0) continue;
            const Rational factor = m.at(r, col);
            for (int c = col; c < m.cols; ++c) m.at(r, c) -= factor * m.at(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

int exact_rank(RationalMatrix m) {
    return static_cast<int>(eliminate(m).size());
}

std::optional<std::vector<Rational>> solve_linear(const RationalMatrix& a,
                                                  const std::vector<Rational>& b) {
    RationalMatrix aug = RationalMatrix::zero(a.rows, a.cols + 1);
    for (int r = 0; r < a.rows; ++r) {
        for (int c = 0; c < a.cols; ++c) aug.at(r, c) = a.at(r, c);
        aug.at(r, a.cols) = b[r];
    }
    const std::vector<int> pivots = eliminate(aug);
    // Inconsistent iff some pivot landed in the augmented column.
    if (!pivots.empty() && pivots.back() == a.cols) return std::nullopt;
    std::vector<Rational> x(a.cols, Rational(0));
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        x[pivots[r]] = aug.at(static_cast<int>(r), a.cols);
    }
    return x;
}

}  // namespace ucp
