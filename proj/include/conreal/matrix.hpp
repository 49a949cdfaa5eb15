#ifndef CONREAL_MATRIX_HPP
#define CONREAL_MATRIX_HPP

#include <optional>
#include <vector>

#include "conreal/error.hpp"
#include "conreal/poly.hpp"

namespace conreal {

// Dense exact matrix over a field context.  Row-major.
template <class FF>
struct Mat {
    int rows = 0, cols = 0;
    std::vector<typename FF::Elem> a;

    typename FF::Elem& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
    const typename FF::Elem& at(int i, int j) const {
        return a[static_cast<std::size_t>(i) * cols + j];
    }
};

template <class FF>
Mat<FF> mat_zero(const FF& F, int r, int c) {
    Mat<FF> m;
    m.rows = r;
    m.cols = c;
    m.a.assign(static_cast<std::size_t>(r) * c, F.zero());
    return m;
}

template <class FF>
Mat<FF> mat_identity(const FF& F, int n) {
    Mat<FF> m = mat_zero(F, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = F.one();
    return m;
}

template <class FF>
bool mat_eq(const FF&, const Mat<FF>& x, const Mat<FF>& y) {
    return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
}

template <class FF>
Mat<FF> mat_add(const FF& F, const Mat<FF>& x, const Mat<FF>& y) {
    check(x.rows == y.rows && x.cols == y.cols, "matrix shape mismatch");
    Mat<FF> r = x;
    for (std::size_t i = 0; i < r.a.size(); ++i) r.a[i] = F.add(r.a[i], y.a[i]);
    return r;
}

template <class FF>
Mat<FF> mat_sub(const FF& F, const Mat<FF>& x, const Mat<FF>& y) {
    check(x.rows == y.rows && x.cols == y.cols, "matrix shape mismatch");
    Mat<FF> r = x;
    for (std::size_t i = 0; i < r.a.size(); ++i) r.a[i] = F.sub(r.a[i], y.a[i]);
    return r;
}

template <class FF>
Mat<FF> mat_neg(const FF& F, const Mat<FF>& x) {
    Mat<FF> r = x;
    for (auto& e : r.a) e = F.neg(e);
    return r;
}

template <class FF>
Mat<FF> mat_mul(const FF& F, const Mat<FF>& x, const Mat<FF>& y) {
    check(x.cols == y.rows, "matrix shape mismatch");
    Mat<FF> r = mat_zero(F, x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            const auto& xik = x.at(i, k);
            if (F.is_zero(xik)) continue;
            for (int j = 0; j < y.cols; ++j)
                r.at(i, j) = F.add(r.at(i, j), F.mul(xik, y.at(k, j)));
        }
    return r;
}

template <class FF>
Mat<FF> mat_scale(const FF& F, const Mat<FF>& x, typename FF::Elem s) {
    Mat<FF> r = x;
    for (auto& e : r.a) e = F.mul(e, s);
    return r;
}

template <class FF>
Mat<FF> mat_transpose(const FF& F, const Mat<FF>& x) {
    Mat<FF> r = mat_zero(F, x.cols, x.rows);
    for (int i = 0; i < x.rows; ++i)
        for (int j = 0; j < x.cols; ++j) r.at(j, i) = x.at(i, j);
    return r;
}

template <class FF>
Mat<FF> mat_conj(const FF& F, const Mat<FF>& x) {
    Mat<FF> r = x;
    for (auto& e : r.a) e = F.conj(e);
    return r;
}

// conjugate transpose
template <class FF>
Mat<FF> mat_ct(const FF& F, const Mat<FF>& x) {
    return mat_transpose(F, mat_conj(F, x));
}

template <class FF>
std::vector<typename FF::Elem> mat_apply(const FF& F, const Mat<FF>& x,
                                         const std::vector<typename FF::Elem>& v) {
    check(x.cols == static_cast<int>(v.size()), "matrix/vector shape mismatch");
    std::vector<typename FF::Elem> r(x.rows, F.zero());
    for (int i = 0; i < x.rows; ++i)
        for (int j = 0; j < x.cols; ++j) r[i] = F.add(r[i], F.mul(x.at(i, j), v[j]));
    return r;
}

template <class FF>
typename FF::Elem mat_det(const FF& F, Mat<FF> x) {
    check(x.rows == x.cols, "determinant of a non-square matrix");
    int n = x.rows;
    auto det = F.one();
    for (int k = 0; k < n; ++k) {
        int piv = -1;
        for (int i = k; i < n && piv < 0; ++i)
            if (!F.is_zero(x.at(i, k))) piv = i;
        if (piv < 0) return F.zero();
        if (piv != k) {
            for (int j = 0; j < n; ++j) std::swap(x.at(piv, j), x.at(k, j));
            det = F.neg(det);
        }
        det = F.mul(det, x.at(k, k));
        auto pinv = F.inv(x.at(k, k));
        for (int i = k + 1; i < n; ++i) {
            if (F.is_zero(x.at(i, k))) continue;
            auto factor = F.mul(x.at(i, k), pinv);
            for (int j = k; j < n; ++j)
                x.at(i, j) = F.sub(x.at(i, j), F.mul(factor, x.at(k, j)));
        }
    }
    return det;
}

template <class FF>
std::optional<Mat<FF>> mat_inv_opt(const FF& F, Mat<FF> x) {
    check(x.rows == x.cols, "inverse of a non-square matrix");
    int n = x.rows;
    Mat<FF> inv = mat_identity(F, n);
    for (int k = 0; k < n; ++k) {
        int piv = -1;
        for (int i = k; i < n && piv < 0; ++i)
            if (!F.is_zero(x.at(i, k))) piv = i;
        if (piv < 0) return std::nullopt;
        if (piv != k)
            for (int j = 0; j < n; ++j) {
                std::swap(x.at(piv, j), x.at(k, j));
                std::swap(inv.at(piv, j), inv.at(k, j));
            }
        auto pinv = F.inv(x.at(k, k));
        for (int j = 0; j < n; ++j) {
            x.at(k, j) = F.mul(x.at(k, j), pinv);
            inv.at(k, j) = F.mul(inv.at(k, j), pinv);
        }
        for (int i = 0; i < n; ++i) {
            if (i == k || F.is_zero(x.at(i, k))) continue;
            auto factor = x.at(i, k);
            for (int j = 0; j < n; ++j) {
                x.at(i, j) = F.sub(x.at(i, j), F.mul(factor, x.at(k, j)));
                inv.at(i, j) = F.sub(inv.at(i, j), F.mul(factor, inv.at(k, j)));
            }
        }
    }
    return inv;
}

template <class FF>
Mat<FF> mat_inv(const FF& F, const Mat<FF>& x) {
    auto r = mat_inv_opt(F, x);
    if (!r) fail(errc::singular_matrix, "matrix is singular");
    return *r;
}

// ---------------------------------------------------------------------------
// Linear-system tools (deterministic reduced row echelon form).
// ---------------------------------------------------------------------------

struct RrefInfo {
    std::vector<int> pivot_cols;
    int rank = 0;
};

template <class FF>
RrefInfo rref(const FF& F, Mat<FF>& m) {
    RrefInfo info;
    int r = 0;
    for (int c = 0; c < m.cols && r < m.rows; ++c) {
        int piv = -1;
        for (int i = r; i < m.rows && piv < 0; ++i)
            if (!F.is_zero(m.at(i, c))) piv = i;
        if (piv < 0) continue;
        if (piv != r)
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(r, j));
        auto pinv = F.inv(m.at(r, c));
        for (int j = 0; j < m.cols; ++j) m.at(r, j) = F.mul(m.at(r, j), pinv);
        for (int i = 0; i < m.rows; ++i) {
            if (i == r || F.is_zero(m.at(i, c))) continue;
            auto factor = m.at(i, c);
            for (int j = 0; j < m.cols; ++j)
                m.at(i, j) = F.sub(m.at(i, j), F.mul(factor, m.at(r, j)));
        }
        info.pivot_cols.push_back(c);
        ++r;
    }
    info.rank = r;
    return info;
}

// basis of {v : M v = 0}
template <class FF>
std::vector<std::vector<typename FF::Elem>> nullspace(const FF& F, Mat<FF> m) {
    RrefInfo info = rref(F, m);
    std::vector<bool> is_pivot(m.cols, false);
    for (int c : info.pivot_cols) is_pivot[c] = true;
    std::vector<std::vector<typename FF::Elem>> basis;
    for (int free = 0; free < m.cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<typename FF::Elem> v(m.cols, F.zero());
        v[free] = F.one();
        for (int r = 0; r < info.rank; ++r) v[info.pivot_cols[r]] = F.neg(m.at(r, free));
        basis.push_back(std::move(v));
    }
    return basis;
}

// particular solution of M x = b (if consistent)
template <class FF>
std::optional<std::vector<typename FF::Elem>> solve_linear(const FF& F, const Mat<FF>& m,
                                                           const std::vector<typename FF::Elem>& b) {
    check(m.rows == static_cast<int>(b.size()), "system shape mismatch");
    Mat<FF> aug = mat_zero(F, m.rows, m.cols + 1);
    for (int i = 0; i < m.rows; ++i) {
        for (int j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols) = b[i];
    }
    RrefInfo info = rref(F, aug);
    for (int c : info.pivot_cols)
        if (c == m.cols) return std::nullopt; // inconsistent
    std::vector<typename FF::Elem> x(m.cols, F.zero());
    for (int r = 0; r < info.rank; ++r) x[info.pivot_cols[r]] = aug.at(r, m.cols);
    return x;
}

// block helpers
template <class FF>
void mat_paste(const FF&, Mat<FF>& dst, const Mat<FF>& src, int r0, int c0) {
    for (int i = 0; i < src.rows; ++i)
        for (int j = 0; j < src.cols; ++j) dst.at(r0 + i, c0 + j) = src.at(i, j);
}

template <class FF>
Mat<FF> mat_slice(const FF& F, const Mat<FF>& src, int r0, int c0, int r, int c) {
    Mat<FF> out = mat_zero(F, r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) out.at(i, j) = src.at(r0 + i, c0 + j);
    return out;
}

} // namespace conreal

#endif
