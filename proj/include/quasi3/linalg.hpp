#pragma once

// Exact dense linear algebra over Eigen matrices with exact scalars
// (quasi3::Integer or quasi3::Rational). Nothing here is approximate: pivots
// are chosen as the first nonzero entry, never by magnitude.

#include "quasi3/arith.hpp"

#include <Eigen/Core>

#include <stdexcept>
#include <utility>
#include <vector>

namespace quasi3 {

/// Determinant by fraction-free (Bareiss) elimination. Every division is
/// exact, so the routine is valid over Integer as well as Rational.
template <typename Derived>
typename Derived::Scalar det_exact(const Eigen::MatrixBase<Derived>& input) {
    using Scalar = typename Derived::Scalar;
    if (input.rows() != input.cols()) throw std::invalid_argument("det_exact: matrix is not square");
    Matrix<Scalar> a = input;
    const Eigen::Index n = a.rows();
    if (n == 0) return Scalar(1);
    Scalar prev(1);
    int sign = 1;
    for (Eigen::Index k = 0; k + 1 < n; ++k) {
        Eigen::Index p = k;
        while (p < n && a(p, k) == Scalar(0)) ++p;
        if (p == n) return Scalar(0);
        if (p != k) {
            a.row(k).swap(a.row(p));
            sign = -sign;
        }
        for (Eigen::Index i = k + 1; i < n; ++i) {
            for (Eigen::Index j = k + 1; j < n; ++j) {
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
            }
            a(i, k) = Scalar(0);
        }
        prev = a(k, k);
    }
    Scalar d = a(n - 1, n - 1);
    return sign < 0 ? Scalar(-d) : d;
}

/// Reduced row echelon form over a field, with the list of pivot columns.
template <typename Derived>
std::pair<Matrix<typename Derived::Scalar>, std::vector<Eigen::Index>> rref(
    const Eigen::MatrixBase<Derived>& input) {
    using Scalar = typename Derived::Scalar;
    static_assert(!Eigen::NumTraits<Scalar>::IsInteger, "rref needs a field; cast to Rational first");
    Matrix<Scalar> a = input;
    std::vector<Eigen::Index> pivots;
    Eigen::Index row = 0;
    for (Eigen::Index col = 0; col < a.cols() && row < a.rows(); ++col) {
        Eigen::Index p = row;
        while (p < a.rows() && a(p, col) == Scalar(0)) ++p;
        if (p == a.rows()) continue;
        if (p != row) a.row(row).swap(a.row(p));
        const Scalar inv = Scalar(1) / a(row, col);
        for (Eigen::Index j = col; j < a.cols(); ++j) a(row, j) *= inv;
        for (Eigen::Index i = 0; i < a.rows(); ++i) {
            if (i == row || a(i, col) == Scalar(0)) continue;
            const Scalar f = a(i, col);
            for (Eigen::Index j = col; j < a.cols(); ++j) {
                if (a(row, j) != Scalar(0)) a(i, j) -= f * a(row, j);
            }
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(a), std::move(pivots)};
}

template <typename Derived>
Eigen::Index rank_exact(const Eigen::MatrixBase<Derived>& input) {
    return static_cast<Eigen::Index>(rref(input.template cast<Rational>()).second.size());
}

/// Basis of the right null space. Each vector is scaled so its first nonzero
/// coordinate is 1; vectors come out ordered by their free column.
template <typename Derived>
std::vector<RationalVector> nullspace_exact(const Eigen::MatrixBase<Derived>& input) {
    const auto [r, pivots] = rref(input.template cast<Rational>());
    const Eigen::Index n = r.cols();
    std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
    for (auto p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;

    std::vector<RationalVector> basis;
    for (Eigen::Index free = 0; free < n; ++free) {
        if (is_pivot[static_cast<std::size_t>(free)]) continue;
        RationalVector v = RationalVector::Constant(n, Rational(0));
        v(free) = 1;
        for (std::size_t t = 0; t < pivots.size(); ++t) {
            v(pivots[t]) = -r(static_cast<Eigen::Index>(t), free);
        }
        Eigen::Index lead = 0;
        while (v(lead) == Rational(0)) ++lead;
        const Rational scale = Rational(1) / v(lead);
        for (Eigen::Index i = 0; i < n; ++i) v(i) *= scale;
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace quasi3
