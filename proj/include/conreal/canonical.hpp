#ifndef CONREAL_CANONICAL_HPP
#define CONREAL_CANONICAL_HPP

#include <algorithm>
#include <vector>

#include "conreal/factor.hpp"
#include "conreal/field.hpp"
#include "conreal/matrix.hpp"
#include "conreal/polymat.hpp"

namespace conreal {

// Companion matrix with subdiagonal ones and the negated coefficients in the
// last column; all other modules assume exactly this layout.
template <class FF>
Mat<FF> companion(const FF& F, const Poly<FF>& f) {
    check(f.deg() >= 1, "companion matrix needs degree >= 1");
    Poly<FF> m = poly_monic(F, f);
    int k = m.deg();
    Mat<FF> T = mat_zero(F, k, k);
    for (int i = 0; i + 1 < k; ++i) T.at(i + 1, i) = F.one();
    for (int i = 0; i < k; ++i) T.at(i, k - 1) = F.neg(m.c[i]);
    return T;
}

template <class FF>
struct EDivisor {
    Poly<FF> p; // monic irreducible
    int k = 1;  // exponent
    int mult = 1;
};

// factorization of one invariant factor into prime powers (p, e).
// Finite fields use the full factorization; over Q and Q(i) only invariant
// factors of degree <= 2 are supported (decision paths never call this).
template <class FF>
std::vector<std::pair<Poly<FF>, int>> factor_prime_powers(const FF& F, const Poly<FF>& f) {
    if constexpr (FF::is_finite) {
        auto fac = factor(F, f);
        std::vector<std::pair<Poly<FF>, int>> out;
        for (auto& [p, e] : fac.factors) out.emplace_back(p, e);
        return out;
    } else {
        check(f.deg() >= 1, "factoring a constant invariant factor");
        Poly<FF> m = poly_monic(F, f);
        if (m.deg() == 1) return {{m, 1}};
        if (m.deg() == 2) {
            auto b = m.c[1], c = m.c[0];
            auto disc = F.sub(F.mul(b, b), F.mul(F.from_int(4), c));
            QElem s;
            bool has_root = F.gaussian() ? gaussian_sqrt(F, disc, s) : rat_sqrt(disc.re, s.re);
            if (!has_root) return {{m, 1}};
            auto half = F.inv(F.from_int(2));
            auto r1 = F.mul(F.add(F.neg(b), s), half);
            auto r2 = F.mul(F.sub(F.neg(b), s), half);
            if (r1 == r2) return {{poly_linear(F, r1), 2}};
            std::vector<std::pair<Poly<FF>, int>> out{{poly_linear(F, r1), 1},
                                                      {poly_linear(F, r2), 1}};
            std::sort(out.begin(), out.end(),
                      [&](const auto& x, const auto& y) { return poly_cmp(F, x.first, y.first) < 0; });
            return out;
        }
        fail(errc::unsupported,
             "factorization over " + F.spec_string() + " limited to degree <= 2");
    }
}

template <class FF>
bool edivisor_less(const FF& F, const EDivisor<FF>& a, const EDivisor<FF>& b) {
    if (int c = poly_cmp(F, a.p, b.p); c != 0) return c < 0;
    return a.k < b.k;
}

template <class FF>
std::vector<EDivisor<FF>> elementary_divisors(const FF& F, const Mat<FF>& T) {
    std::vector<EDivisor<FF>> out;
    for (const auto& f : invariant_factors(F, T))
        for (auto& [p, e] : factor_prime_powers(F, f)) {
            bool merged = false;
            for (auto& d : out)
                if (d.k == e && poly_eq(F, d.p, p)) {
                    ++d.mult;
                    merged = true;
                    break;
                }
            if (!merged) out.push_back({p, e, 1});
        }
    std::sort(out.begin(), out.end(),
              [&](const EDivisor<FF>& a, const EDivisor<FF>& b) { return edivisor_less(F, a, b); });
    return out;
}

// One cyclic block of the primary decomposition: T restricted to the block is
// companion(p^k) in the columns P[offset .. offset+size).
template <class FF>
struct PDBlock {
    Poly<FF> p;
    int k = 1;
    Poly<FF> pk;
    int offset = 0;
    int size = 0;
};

template <class FF>
struct PrimaryDecomp {
    Mat<FF> P, Pinv;
    std::vector<PDBlock<FF>> blocks;
};

template <class FF>
PrimaryDecomp<FF> primary_decomposition(const FF& F, const Mat<FF>& T) {
    check(T.rows == T.cols, "decomposition of a non-square matrix");
    const int n = T.rows;
    auto sm = smith(F, char_matrix(F, T));

    struct Piece {
        Poly<FF> p;
        int k;
        Poly<FF> pk;
        std::vector<std::vector<typename FF::Elem>> cols;
    };
    std::vector<Piece> pieces;

    for (int i = 0; i < n; ++i) {
        const Poly<FF>& d = sm.diag[i];
        if (d.deg() < 1) continue;
        // cokernel generator of the summand F[x]/(d): column i of U^{-1} at T
        std::vector<typename FF::Elem> g(n, F.zero());
        for (int j = 0; j < n; ++j) {
            const Poly<FF>& wji = sm.winv.at(j, i);
            if (wji.is_zero()) continue;
            std::vector<typename FF::Elem> ej(n, F.zero());
            ej[j] = F.one();
            auto term = apply_poly(F, wji, T, ej);
            for (int r = 0; r < n; ++r) g[r] = F.add(g[r], term[r]);
        }
        for (auto& [p, e] : factor_prime_powers(F, d)) {
            Poly<FF> pk = poly_pow(F, p, static_cast<std::uint64_t>(e));
            Poly<FF> co = poly_divmod(F, d, pk).first;
            auto v = apply_poly(F, co, T, g);
            Piece piece{p, e, pk, {}};
            int size = pk.deg();
            piece.cols.push_back(v);
            for (int s = 1; s < size; ++s) piece.cols.push_back(mat_apply(F, T, piece.cols.back()));
            pieces.push_back(std::move(piece));
        }
    }

    std::stable_sort(pieces.begin(), pieces.end(), [&](const Piece& a, const Piece& b) {
        if (int c = poly_cmp(F, a.p, b.p); c != 0) return c < 0;
        return a.k < b.k;
    });

    PrimaryDecomp<FF> out;
    out.P = mat_zero(F, n, n);
    int col = 0;
    for (auto& piece : pieces) {
        PDBlock<FF> blk{piece.p, piece.k, piece.pk, col, static_cast<int>(piece.cols.size())};
        for (const auto& v : piece.cols) {
            for (int r = 0; r < n; ++r) out.P.at(r, col) = v[r];
            ++col;
        }
        out.blocks.push_back(std::move(blk));
    }
    check(col == n, "primary decomposition dimension count");
    out.Pinv = mat_inv(F, out.P);

    // exact reconstruction check: P^{-1} T P = blockdiag(companion(p^k))
    Mat<FF> lhs = mat_mul(F, out.Pinv, mat_mul(F, T, out.P));
    Mat<FF> rhs = mat_zero(F, n, n);
    for (const auto& blk : out.blocks)
        mat_paste(F, rhs, companion(F, blk.pk), blk.offset, blk.offset);
    check(mat_eq(F, lhs, rhs), "primary decomposition reconstructs the matrix");
    return out;
}

} // namespace conreal

#endif
