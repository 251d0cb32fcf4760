#pragma once

#include <cstddef>
#include <vector>

#include "polycalc/errors.hpp"
#include "polycalc/rational.hpp"

namespace polycalc {

using Vec = std::vector<Rat>;

inline void check_dim(const Vec& v, std::size_t n, const char* what) {
    require(v.size() == n, "DimensionMismatch",
            std::string(what) + ": expected dimension " + std::to_string(n) +
            ", got " + std::to_string(v.size()));
}

inline Rat dot(const Vec& a, const Vec& b) {
    check_dim(b, a.size(), "dot");
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline Vec add(const Vec& a, const Vec& b) {
    check_dim(b, a.size(), "add");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline Vec sub(const Vec& a, const Vec& b) {
    check_dim(b, a.size(), "sub");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline Vec scale(const Rat& c, const Vec& a) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

inline Vec neg(const Vec& a) { return scale(Rat(-1), a); }

inline bool is_zero(const Vec& a) {
    for (const auto& x : a)
        if (x != 0) return false;
    return true;
}

inline Vec zero_vec(std::size_t n) { return Vec(n, Rat(0)); }

inline Vec unit_vec(std::size_t n, std::size_t i) {
    Vec e(n, Rat(0));
    e[i] = 1;
    return e;
}

// Dense row-major rational matrix.  Deliberately minimal: the engine only
// needs construction, block assembly, mat-vec products and exact Gaussian
// elimination.
struct Mat {
    std::size_t rows = 0, cols = 0;
    std::vector<Rat> data;

    Mat() = default;
    Mat(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, Rat(0)) {}

    Rat& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    const Rat& at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

    static Mat identity(std::size_t n) {
        Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    static Mat from_rows(const std::vector<Vec>& rows_in, std::size_t ncols) {
        Mat m(rows_in.size(), ncols);
        for (std::size_t i = 0; i < rows_in.size(); ++i) {
            check_dim(rows_in[i], ncols, "Mat::from_rows");
            for (std::size_t j = 0; j < ncols; ++j) m.at(i, j) = rows_in[i][j];
        }
        return m;
    }

    Vec row(std::size_t i) const {
        Vec r(cols);
        for (std::size_t j = 0; j < cols; ++j) r[j] = at(i, j);
        return r;
    }
};

inline Vec mat_vec(const Mat& m, const Vec& x) {
    check_dim(x, m.cols, "mat_vec");
    Vec y(m.rows, Rat(0));
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j)
            if (m.at(i, j) != 0) y[i] += m.at(i, j) * x[j];
    return y;
}

// y = M^T x
inline Vec mat_t_vec(const Mat& m, const Vec& x) {
    check_dim(x, m.rows, "mat_t_vec");
    Vec y(m.cols, Rat(0));
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j)
            if (m.at(i, j) != 0) y[j] += m.at(i, j) * x[i];
    return y;
}

inline Mat transpose(const Mat& m) {
    Mat t(m.cols, m.rows);
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j) t.at(j, i) = m.at(i, j);
    return t;
}

// Reduces `m` in place to row echelon form, returning the pivot columns.
// Exact pivoting: any nonzero entry works, first suitable row is taken.
inline std::vector<std::size_t> row_echelon(Mat& m) {
    std::vector<std::size_t> pivot_cols;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
        std::size_t p = r;
        while (p < m.rows && m.at(p, c) == 0) ++p;
        if (p == m.rows) continue;
        if (p != r)
            for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(p, j), m.at(r, j));
        Rat inv = Rat(1) / m.at(r, c);
        for (std::size_t j = c; j < m.cols; ++j) m.at(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows; ++i) {
            if (i == r || m.at(i, c) == 0) continue;
            Rat f = m.at(i, c);
            for (std::size_t j = c; j < m.cols; ++j) m.at(i, j) -= f * m.at(r, j);
        }
        pivot_cols.push_back(c);
        ++r;
    }
    return pivot_cols;
}

inline std::size_t rank(Mat m) { return row_echelon(m).size(); }

inline std::size_t rank_of_rows(const std::vector<Vec>& rows, std::size_t ncols) {
    return rank(Mat::from_rows(rows, ncols));
}

// Basis of {x : m x = 0}.  Returned vectors have a 1 in their free column.
inline std::vector<Vec> nullspace(Mat m) {
    std::size_t n = m.cols;
    std::vector<std::size_t> pivots = row_echelon(m);
    std::vector<bool> is_pivot(n, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<Vec> basis;
    for (std::size_t free_c = 0; free_c < n; ++free_c) {
        if (is_pivot[free_c]) continue;
        Vec v(n, Rat(0));
        v[free_c] = 1;
        for (std::size_t k = 0; k < pivots.size(); ++k)
            v[pivots[k]] = -m.at(k, free_c);
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace polycalc
