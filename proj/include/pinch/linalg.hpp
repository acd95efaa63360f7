#pragma once

#include <vector>

#include "pinch/prime_field.hpp"
#include "pinch/rational.hpp"

namespace pinch {

/// Dense matrix over an exact field, for the small systems that show up here
/// (projection ranks, cubic linear systems, jet normalization).
template <class K>
class Mat {
public:
    Mat(int rows, int cols, K zero)
        : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows * cols), zero) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    K& at(int i, int j) { return a_[static_cast<size_t>(i * cols_ + j)]; }
    const K& at(int i, int j) const { return a_[static_cast<size_t>(i * cols_ + j)]; }

private:
    int rows_, cols_;
    std::vector<K> a_;
};

/// Reduce to row echelon form in place; returns the pivot column of each
/// pivot row (row-reduced rows come first).
template <class K>
std::vector<int> row_echelon(Mat<K>& m) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int pr = -1;
        for (int i = r; i < m.rows(); ++i)
            if (!is_zero(m.at(i, c))) {
                pr = i;
                break;
            }
        if (pr < 0) continue;
        if (pr != r)
            for (int j = 0; j < m.cols(); ++j) std::swap(m.at(pr, j), m.at(r, j));
        K inv = k_one(m.at(r, c)) / m.at(r, c);
        for (int j = c; j < m.cols(); ++j) m.at(r, j) = m.at(r, j) * inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == r || is_zero(m.at(i, c))) continue;
            K f = m.at(i, c);
            for (int j = c; j < m.cols(); ++j) m.at(i, j) = m.at(i, j) - f * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

template <class K>
int rank(Mat<K> m) {
    return static_cast<int>(row_echelon(m).size());
}

/// Basis of the right nullspace { v : M v = 0 }, one vector per free column.
template <class K>
std::vector<std::vector<K>> nullspace(Mat<K> m, const K& zero, const K& one) {
    std::vector<int> pivots = row_echelon(m);
    std::vector<bool> is_pivot(static_cast<size_t>(m.cols()), false);
    for (int c : pivots) is_pivot[static_cast<size_t>(c)] = true;
    std::vector<std::vector<K>> basis;
    for (int fc = 0; fc < m.cols(); ++fc) {
        if (is_pivot[static_cast<size_t>(fc)]) continue;
        std::vector<K> v(static_cast<size_t>(m.cols()), zero);
        v[static_cast<size_t>(fc)] = one;
        for (size_t pr = 0; pr < pivots.size(); ++pr)
            v[static_cast<size_t>(pivots[pr])] = -m.at(static_cast<int>(pr), fc);
        basis.push_back(std::move(v));
    }
    return basis;
}

template <class K>
K det(Mat<K> m, const K& zero, const K& one) {
    if (m.rows() != m.cols()) throw ContractError("determinant of non-square matrix");
    K d = one;
    int n = m.rows();
    for (int c = 0; c < n; ++c) {
        int pr = -1;
        for (int i = c; i < n; ++i)
            if (!is_zero(m.at(i, c))) {
                pr = i;
                break;
            }
        if (pr < 0) return zero;
        if (pr != c) {
            for (int j = 0; j < n; ++j) std::swap(m.at(pr, j), m.at(c, j));
            d = -d;
        }
        d = d * m.at(c, c);
        K inv = one / m.at(c, c);
        for (int i = c + 1; i < n; ++i) {
            if (is_zero(m.at(i, c))) continue;
            K f = m.at(i, c) * inv;
            for (int j = c; j < n; ++j) m.at(i, j) = m.at(i, j) - f * m.at(c, j);
        }
    }
    return d;
}

} // namespace pinch
