#ifndef CONREAL_POLYMAT_HPP
#define CONREAL_POLYMAT_HPP

#include <utility>
#include <vector>

#include "conreal/matrix.hpp"
#include "conreal/poly.hpp"

namespace conreal {

// Square matrix over F[x]; the workhorse input is xI - T.
template <class FF>
struct PolyMat {
    int n = 0;
    std::vector<Poly<FF>> e;

    Poly<FF>& at(int i, int j) { return e[static_cast<std::size_t>(i) * n + j]; }
    const Poly<FF>& at(int i, int j) const { return e[static_cast<std::size_t>(i) * n + j]; }
};

template <class FF>
PolyMat<FF> polymat_identity(const FF& F, int n) {
    PolyMat<FF> m;
    m.n = n;
    m.e.assign(static_cast<std::size_t>(n) * n, poly_zero(F));
    for (int i = 0; i < n; ++i) m.at(i, i) = poly_one(F);
    return m;
}

template <class FF>
PolyMat<FF> char_matrix(const FF& F, const Mat<FF>& T) {
    check(T.rows == T.cols, "characteristic matrix of a non-square matrix");
    PolyMat<FF> m = polymat_identity(F, T.rows);
    for (int i = 0; i < T.rows; ++i)
        for (int j = 0; j < T.rows; ++j) {
            Poly<FF> entry = poly_neg(F, poly_const(F, T.at(i, j)));
            if (i == j) entry = poly_add(F, entry, poly_x(F));
            m.at(i, j) = entry;
        }
    return m;
}

// Smith normal form D = U A V over F[x], diagonal monic with d_1 | d_2 | ...
// Tracks W = U^{-1}: its columns express the cokernel generators in the
// original basis, which is what rational-canonical-form extraction needs.
template <class FF>
struct SmithResult {
    std::vector<Poly<FF>> diag;
    PolyMat<FF> winv;
};

template <class FF>
SmithResult<FF> smith(const FF& F, PolyMat<FF> A) {
    const int n = A.n;
    PolyMat<FF> W = polymat_identity(F, n);

    auto row_swap = [&](int i, int j) {
        if (i == j) return;
        for (int c = 0; c < n; ++c) std::swap(A.at(i, c), A.at(j, c));
        for (int r = 0; r < n; ++r) std::swap(W.at(r, i), W.at(r, j)); // W columns
    };
    auto col_swap = [&](int i, int j) {
        if (i == j) return;
        for (int r = 0; r < n; ++r) std::swap(A.at(r, i), A.at(r, j));
    };
    // row_j -= f * row_i;  W: col_i += f * col_j
    auto row_sub = [&](int j, int i, const Poly<FF>& f) {
        for (int c = 0; c < n; ++c) A.at(j, c) = poly_sub(F, A.at(j, c), poly_mul(F, f, A.at(i, c)));
        for (int r = 0; r < n; ++r) W.at(r, i) = poly_add(F, W.at(r, i), poly_mul(F, f, W.at(r, j)));
    };
    // col_j -= f * col_i (right transform, untracked)
    auto col_sub = [&](int j, int i, const Poly<FF>& f) {
        for (int r = 0; r < n; ++r) A.at(r, j) = poly_sub(F, A.at(r, j), poly_mul(F, f, A.at(r, i)));
    };
    // row_k += row_i;  W: col_i -= col_k
    auto row_add = [&](int k, int i) {
        for (int c = 0; c < n; ++c) A.at(k, c) = poly_add(F, A.at(k, c), A.at(i, c));
        for (int r = 0; r < n; ++r) W.at(r, i) = poly_sub(F, W.at(r, i), W.at(r, k));
    };

    for (int k = 0; k < n; ++k) {
        for (;;) {
            int pi = -1, pj = -1, best = -1;
            for (int i = k; i < n; ++i)
                for (int j = k; j < n; ++j) {
                    const Poly<FF>& e = A.at(i, j);
                    if (e.is_zero()) continue;
                    if (best < 0 || e.deg() < best) {
                        best = e.deg();
                        pi = i;
                        pj = j;
                    }
                }
            if (pi < 0) break; // remaining block is zero
            row_swap(k, pi);
            col_swap(k, pj);

            bool clean = true;
            for (int i = k + 1; i < n; ++i) {
                if (A.at(i, k).is_zero()) continue;
                auto [q, r] = poly_divmod(F, A.at(i, k), A.at(k, k));
                row_sub(i, k, q);
                if (!r.is_zero()) clean = false;
            }
            for (int j = k + 1; j < n; ++j) {
                if (A.at(k, j).is_zero()) continue;
                auto [q, r] = poly_divmod(F, A.at(k, j), A.at(k, k));
                col_sub(j, k, q);
                if (!r.is_zero()) clean = false;
            }
            if (!clean) continue;

            bool zeroed = true;
            for (int i = k + 1; i < n && zeroed; ++i)
                if (!A.at(i, k).is_zero()) zeroed = false;
            for (int j = k + 1; j < n && zeroed; ++j)
                if (!A.at(k, j).is_zero()) zeroed = false;
            if (!zeroed) continue;

            // divisibility fixup so d_k | every remaining entry
            bool fixed = false;
            for (int i = k + 1; i < n && !fixed; ++i)
                for (int j = k + 1; j < n && !fixed; ++j)
                    if (!poly_mod(F, A.at(i, j), A.at(k, k)).is_zero()) {
                        row_add(k, i);
                        fixed = true;
                    }
            if (!fixed) break;
        }
    }

    // normalize the diagonal monic: scaling row k by u rescales W column k by 1/u
    SmithResult<FF> out;
    out.diag.reserve(n);
    for (int k = 0; k < n; ++k) {
        Poly<FF> d = A.at(k, k);
        if (!d.is_zero() && !(F.is_zero(d.c.back())) && !(d.c.back() == F.one())) {
            auto lead = d.c.back();
            d = poly_monic(F, d);
            for (int r = 0; r < n; ++r) W.at(r, k) = poly_scale(F, W.at(r, k), lead);
        }
        out.diag.push_back(d);
    }
    out.winv = std::move(W);
    return out;
}

// nonconstant invariant factors of xI - T, ascending divisibility chain
template <class FF>
std::vector<Poly<FF>> invariant_factors(const FF& F, const Mat<FF>& T) {
    auto s = smith(F, char_matrix(F, T));
    std::vector<Poly<FF>> out;
    for (const auto& d : s.diag)
        if (d.deg() >= 1) out.push_back(d);
    return out;
}

template <class FF>
Poly<FF> mat_charpoly(const FF& F, const Mat<FF>& T) {
    Poly<FF> acc = poly_one(F);
    for (const auto& f : invariant_factors(F, T)) acc = poly_mul(F, acc, f);
    return acc;
}

template <class FF>
Poly<FF> mat_minpoly(const FF& F, const Mat<FF>& T) {
    auto inv = invariant_factors(F, T);
    check(!inv.empty(), "minimal polynomial of an empty matrix");
    return inv.back();
}

// f(T) v by Horner with matrix-vector products
template <class FF>
std::vector<typename FF::Elem> apply_poly(const FF& F, const Poly<FF>& f, const Mat<FF>& T,
                                          const std::vector<typename FF::Elem>& v) {
    std::vector<typename FF::Elem> acc(v.size(), F.zero());
    for (std::size_t i = f.c.size(); i-- > 0;) {
        acc = mat_apply(F, T, acc);
        for (std::size_t j = 0; j < v.size(); ++j)
            acc[j] = F.add(acc[j], F.mul(f.c[i], v[j]));
    }
    return acc;
}

template <class FF>
Mat<FF> poly_at_matrix(const FF& F, const Poly<FF>& f, const Mat<FF>& T) {
    Mat<FF> acc = mat_zero(F, T.rows, T.cols);
    for (std::size_t i = f.c.size(); i-- > 0;) {
        acc = mat_mul(F, T, acc);
        for (int d = 0; d < T.rows; ++d) acc.at(d, d) = F.add(acc.at(d, d), f.c[i]);
    }
    return acc;
}

} // namespace conreal

#endif
