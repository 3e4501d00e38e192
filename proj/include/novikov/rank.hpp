#pragma once

#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <optional>
#include <utility>
#include <vector>

#include "novikov/scalar.hpp"

namespace novikov {

inline constexpr double kDefaultRankTolerance = 1e-10;

/// Exact elimination in the field, or singular-value thresholding at
/// tolerance * sigma_max.
struct RankMode {
    bool exact = true;
    double tolerance = kDefaultRankTolerance;

    static RankMode Exact() { return {true, 0.0}; }
    static RankMode Float(double tolerance = kDefaultRankTolerance) { return {false, tolerance}; }
};

template <class Scalar>
RankMode default_rank_mode() {
    return is_exact_v<Scalar> ? RankMode::Exact() : RankMode::Float();
}

namespace detail {

template <class Scalar>
using SparseRow = std::vector<std::pair<Index, Scalar>>;

/// a*x - b*y with exact zero dropping.
template <class Scalar>
SparseRow<Scalar> combine(const Scalar& a, const SparseRow<Scalar>& x, const Scalar& b, const SparseRow<Scalar>& y) {
    SparseRow<Scalar> out;
    out.reserve(x.size() + y.size());
    std::size_t i = 0, j = 0;
    while (i < x.size() || j < y.size()) {
        if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
            out.emplace_back(x[i].first, a * x[i].second);
            ++i;
        } else if (i == x.size() || y[j].first < x[i].first) {
            out.emplace_back(y[j].first, -(b * y[j].second));
            ++j;
        } else {
            Scalar v = a * x[i].second - b * y[j].second;
            if (!is_zero(v)) out.emplace_back(x[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    return out;
}

/// Rescales a row to keep entries small: a primitive integer vector with a
/// positive leading entry over Q, a monic row over a number field.
void normalize_row(SparseRow<Rational>& row);
void normalize_row(SparseRow<NumberFieldElement>& row);

template <class Scalar>
void check_backend(const Mat<Scalar>& m) {
    if constexpr (std::is_same_v<Scalar, NumberFieldElement>) {
        if (m.size() > 0) common_context(m.data(), m.data() + m.size());
    }
}

template <class Scalar>
std::vector<SparseRow<Scalar>> to_sparse_rows(const Mat<Scalar>& m) {
    std::vector<SparseRow<Scalar>> rows;
    rows.reserve(static_cast<std::size_t>(m.rows()));
    for (Index i = 0; i < m.rows(); ++i) {
        SparseRow<Scalar> row;
        for (Index j = 0; j < m.cols(); ++j)
            if (!is_zero(m(i, j))) row.emplace_back(j, m(i, j));
        if (!row.empty()) rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace detail

/// Row echelon form over an exact field, stored as sparse rows.
template <class Scalar>
struct EchelonForm {
    Index cols = 0;
    std::vector<detail::SparseRow<Scalar>> rows;  // rows[k] has its leading entry at pivots[k]
    std::vector<Index> pivots;                    // strictly increasing

    Index rank() const { return static_cast<Index>(pivots.size()); }
};

/// Fraction-free elimination: row <- pivot*row - lead*pivot_row, followed by
/// a per-row normalization. Columns are swept left to right; among the rows
/// whose leading entry sits in the current column, the sparsest becomes the
/// pivot. Only exact nonzero tests are used.
template <class Scalar>
EchelonForm<Scalar> row_echelon(std::vector<detail::SparseRow<Scalar>> rows, Index cols) {
    static_assert(is_exact_v<Scalar>, "row_echelon requires an exact field");
    EchelonForm<Scalar> form;
    form.cols = cols;
    std::vector<std::vector<std::size_t>> buckets(static_cast<std::size_t>(cols));
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].empty()) continue;
        detail::normalize_row(rows[r]);
        buckets[static_cast<std::size_t>(rows[r].front().first)].push_back(r);
    }
    for (Index c = 0; c < cols; ++c) {
        auto& bucket = buckets[static_cast<std::size_t>(c)];
        if (bucket.empty()) continue;
        auto best = std::min_element(bucket.begin(), bucket.end(), [&](std::size_t a, std::size_t b) {
            return rows[a].size() < rows[b].size();
        });
        const std::size_t pivot = *best;
        const Scalar lead = rows[pivot].front().second;
        for (std::size_t other : bucket) {
            if (other == pivot) continue;
            const Scalar other_lead = rows[other].front().second;
            auto updated = detail::combine(lead, rows[other], other_lead, rows[pivot]);
            if (updated.empty()) {
                rows[other].clear();
                continue;
            }
            detail::normalize_row(updated);
            buckets[static_cast<std::size_t>(updated.front().first)].push_back(other);
            rows[other] = std::move(updated);
        }
        form.rows.push_back(std::move(rows[pivot]));
        form.pivots.push_back(c);
        bucket.clear();
        bucket.shrink_to_fit();
    }
    return form;
}

template <class Scalar>
EchelonForm<Scalar> row_echelon(const Mat<Scalar>& m) {
    detail::check_backend(m);
    return row_echelon<Scalar>(detail::to_sparse_rows(m), m.cols());
}

/// Reduced row echelon form (pivot entries 1, zeros above and below pivots).
template <class Scalar>
struct ReducedEchelon {
    Mat<Scalar> matrix;  // rank x cols
    std::vector<Index> pivots;
};

template <class Scalar>
ReducedEchelon<Scalar> reduced_row_echelon(const Mat<Scalar>& m) {
    EchelonForm<Scalar> form = row_echelon(m);
    const std::size_t r = form.rows.size();
    for (std::size_t k = r; k-- > 0;) {
        auto& row = form.rows[k];
        Scalar inv = multiplicative_inverse(row.front().second);
        for (auto& entry : row) entry.second = entry.second * inv;
        const Index pc = form.pivots[k];
        for (std::size_t above = 0; above < k; ++above) {
            auto& target = form.rows[above];
            auto it = std::lower_bound(target.begin(), target.end(), pc,
                                       [](const auto& e, Index col) { return e.first < col; });
            if (it == target.end() || it->first != pc) continue;
            Scalar factor = it->second;
            target = detail::combine(Scalar(1), target, factor, row);
        }
    }
    ReducedEchelon<Scalar> out;
    out.matrix = Mat<Scalar>::Zero(static_cast<Index>(r), m.cols());
    for (std::size_t k = 0; k < r; ++k)
        for (const auto& [col, value] : form.rows[k]) out.matrix(static_cast<Index>(k), col) = value;
    out.pivots = std::move(form.pivots);
    return out;
}

/// Basis of the right kernel, one column per free variable in increasing
/// column order (free variable set to 1).
template <class Scalar>
Mat<Scalar> nullspace(const Mat<Scalar>& m) {
    ReducedEchelon<Scalar> rref = reduced_row_echelon(m);
    std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
    for (Index p : rref.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
    std::vector<Index> free;
    for (Index j = 0; j < m.cols(); ++j)
        if (!is_pivot[static_cast<std::size_t>(j)]) free.push_back(j);
    Mat<Scalar> basis = Mat<Scalar>::Zero(m.cols(), static_cast<Index>(free.size()));
    for (std::size_t k = 0; k < free.size(); ++k) {
        const Index f = free[k];
        basis(f, static_cast<Index>(k)) = Scalar(1);
        for (std::size_t r = 0; r < rref.pivots.size(); ++r)
            basis(rref.pivots[r], static_cast<Index>(k)) = -rref.matrix(static_cast<Index>(r), f);
    }
    return basis;
}

/// One solution of m x = b (free variables zero), or nothing if inconsistent.
template <class Scalar>
std::optional<Vec<Scalar>> solve_exact(const Mat<Scalar>& m, const Vec<Scalar>& b) {
    Mat<Scalar> aug(m.rows(), m.cols() + 1);
    aug << m, b;
    ReducedEchelon<Scalar> rref = reduced_row_echelon(aug);
    if (!rref.pivots.empty() && rref.pivots.back() == m.cols()) return std::nullopt;
    Vec<Scalar> x = Vec<Scalar>::Zero(m.cols());
    for (std::size_t r = 0; r < rref.pivots.size(); ++r)
        x(rref.pivots[r]) = rref.matrix(static_cast<Index>(r), m.cols());
    return x;
}

/// Singular-value rank with the conditioning diagnostics carried into reports.
struct NumericalRank {
    Index rank = 0;
    double sigma_max = 0.0;
    double cut = 0.0;
    /// Some singular value lies within a factor 10 of the cut.
    bool ill_conditioned = false;
    /// Smallest singular value above the cut (0 if rank is 0).
    double smallest_retained = 0.0;
};

template <class Scalar>
NumericalRank numerical_rank(const Mat<Scalar>& m, double tolerance) {
    if (!(tolerance > 0.0)) throw Error(ErrorKind::Parameter, "float rank tolerance must be > 0");
    NumericalRank out;
    if (m.size() == 0) return out;
    if constexpr (std::is_same_v<Scalar, NumberFieldElement>) {
        throw Error(ErrorKind::BackendMismatch, "float rank needs an embedding of the number field");
    } else if constexpr (std::is_same_v<Scalar, Rational>) {
        Mat<double> d(m.rows(), m.cols());
        for (Index i = 0; i < m.rows(); ++i)
            for (Index j = 0; j < m.cols(); ++j) d(i, j) = m(i, j).to_double();
        return numerical_rank(d, tolerance);
    } else {
        if (!m.allFinite()) throw Error(ErrorKind::Numerical, "matrix has non-finite entries");
        Eigen::BDCSVD<Mat<Scalar>> svd(m);
        const auto& sv = svd.singularValues();
        if (sv.size() == 0) return out;
        out.sigma_max = sv(0);
        if (out.sigma_max == 0.0) return out;
        out.cut = tolerance * out.sigma_max;
        for (Index i = 0; i < sv.size(); ++i) {
            const double s = sv(i);
            if (s > out.cut) {
                ++out.rank;
                out.smallest_retained = s;
            }
            if (s > out.cut / 10.0 && s < out.cut * 10.0) out.ill_conditioned = true;
        }
        return out;
    }
}

template <class Scalar>
Index rank(const Mat<Scalar>& m, RankMode mode = default_rank_mode<Scalar>()) {
    if (mode.exact) {
        if constexpr (is_exact_v<Scalar>) {
            return row_echelon(m).rank();
        } else {
            throw Error(ErrorKind::BackendMismatch, "exact rank requested for a floating-point matrix");
        }
    }
    return numerical_rank(m, mode.tolerance).rank;
}

template <class Scalar>
Index kernel_dim(const Mat<Scalar>& m, RankMode mode = default_rank_mode<Scalar>()) {
    return m.cols() - rank(m, mode);
}

}  // namespace novikov
