#ifndef CONREAL_FACTOR_HPP
#define CONREAL_FACTOR_HPP

#include <algorithm>
#include <cstdint>
#include <vector>

#include "conreal/poly.hpp"
#include "conreal/rng.hpp"

namespace conreal {

template <class FF>
struct Factorization {
    std::vector<std::pair<Poly<FF>, int>> factors; // monic irreducible, exponent
    typename FF::Elem unit;
};

namespace detail {

// p-th root of the coefficients of f = h(x^p); valid over GF(p^m)
template <class FF>
Poly<FF> pth_root_poly(const FF& F, const Poly<FF>& f) {
    std::uint32_t p = F.characteristic();
    std::uint64_t e = 1;
    for (std::uint32_t i = 0; i + 1 < F.m(); ++i) e *= p; // a^(q/p)
    Poly<FF> h;
    h.c.resize(f.c.size() / p + 1, F.zero());
    for (std::size_t i = 0; i < f.c.size(); i += p) h.c[i / p] = F.pow(f.c[i], e);
    return poly_trim(F, std::move(h));
}

template <class FF>
void squarefree_parts(const FF& F, const Poly<FF>& f, int outer_mult,
                      std::vector<std::pair<Poly<FF>, int>>& out) {
    if (f.deg() < 1) return;
    std::uint32_t p = F.characteristic();
    Poly<FF> fp = poly_derivative(F, f);
    if (fp.is_zero()) {
        squarefree_parts(F, pth_root_poly(F, f), outer_mult * static_cast<int>(p), out);
        return;
    }
    Poly<FF> c = poly_gcd(F, f, fp);
    Poly<FF> w = poly_divmod(F, f, c).first;
    int i = 1;
    while (w.deg() > 0) {
        Poly<FF> y = poly_gcd(F, w, c);
        Poly<FF> z = poly_divmod(F, w, y).first;
        if (z.deg() > 0) out.emplace_back(poly_monic(F, z), outer_mult * i);
        w = std::move(y);
        c = poly_divmod(F, c, w).first;
        ++i;
    }
    if (c.deg() > 0) squarefree_parts(F, pth_root_poly(F, c), outer_mult * static_cast<int>(p), out);
}

// trial polynomial of index t: base-q digits as coefficients
template <class FF>
Poly<FF> trial_poly(const FF& F, std::uint64_t t, int maxdeg) {
    Poly<FF> h;
    std::uint64_t q = F.order();
    for (int i = 0; i <= maxdeg && t; ++i) {
        h.c.push_back(F.element(t % q));
        t /= q;
    }
    return poly_trim(F, std::move(h));
}

template <class FF>
Poly<FF> random_poly(const FF& F, Rng& rng, int maxdeg) {
    Poly<FF> h;
    for (int i = 0; i <= maxdeg; ++i) h.c.push_back(F.element(rng.below(F.order())));
    return poly_trim(F, std::move(h));
}

// one splitting attempt for a product of degree-d irreducibles
template <class FF>
bool split_once(const FF& F, const Poly<FF>& g, int d, const Poly<FF>& h, Poly<FF>& part) {
    Poly<FF> direct = poly_gcd(F, h, g);
    if (direct.deg() > 0 && direct.deg() < g.deg()) {
        part = direct;
        return true;
    }
    std::uint64_t q = F.order();
    Poly<FF> u;
    if (F.characteristic() == 2) {
        // F_2-trace of F_{q^d}: h + h^2 + h^4 + ... (kd summands, q = 2^k)
        std::uint64_t kd = static_cast<std::uint64_t>(F.m()) * d;
        Poly<FF> acc = poly_mod(F, h, g), term = acc;
        for (std::uint64_t j = 1; j < kd; ++j) {
            term = poly_mod(F, poly_mul(F, term, term), g);
            acc = poly_add(F, acc, term);
        }
        u = acc;
    } else {
        std::uint64_t qd = 1;
        for (int i = 0; i < d; ++i) {
            check(qd <= UINT64_MAX / q, "equal-degree exponent fits in 64 bits");
            qd *= q;
        }
        u = poly_sub(F, poly_powmod(F, h, (qd - 1) / 2, g), poly_one(F));
    }
    Poly<FF> cand = poly_gcd(F, u, g);
    if (cand.deg() > 0 && cand.deg() < g.deg()) {
        part = cand;
        return true;
    }
    return false;
}

template <class FF>
void equal_degree_factor(const FF& F, Poly<FF> g, int d, Rng& rng,
                         std::vector<Poly<FF>>& out) {
    if (g.deg() == d) {
        out.push_back(poly_monic(F, g));
        return;
    }
    Poly<FF> part;
    bool found = false;
    std::uint64_t q = F.order();
    std::uint64_t det_bound = 64 + 8u * static_cast<std::uint64_t>(g.deg()) * 2;
    for (std::uint64_t t = q; t < q + det_bound && !found; ++t)
        found = split_once(F, g, d, trial_poly(F, t, g.deg() - 1), part);
    while (!found) // seeded fallback; a splitter exists, so this terminates
        found = split_once(F, g, d, random_poly(F, rng, g.deg() - 1), part);
    equal_degree_factor(F, part, d, rng, out);
    equal_degree_factor(F, poly_divmod(F, g, part).first, d, rng, out);
}

} // namespace detail

// Complete factorization into monic irreducibles over a finite field.
// Deterministic output order: by degree, then coefficient order.
template <class FF>
Factorization<FF> factor(const FF& F, const Poly<FF>& f, std::uint64_t seed = kDefaultSeed) {
    static_assert(FF::is_finite, "factorization requires a finite field");
    if (f.is_zero()) fail(errc::bad_input, "cannot factor the zero polynomial");
    Factorization<FF> out;
    out.unit = f.c.back();
    Poly<FF> g = poly_monic(F, f);
    if (g.deg() == 0) return out;

    Rng rng(seed);
    std::vector<std::pair<Poly<FF>, int>> sqf;
    detail::squarefree_parts(F, g, 1, sqf);
    for (auto& [part, mult] : sqf) {
        // distinct-degree split of the squarefree part
        Poly<FF> v = part;
        Poly<FF> h = poly_mod(F, poly_x(F), v);
        int d = 0;
        std::vector<std::pair<Poly<FF>, int>> stages;
        while (v.deg() >= 2 * (d + 1)) {
            ++d;
            h = poly_powmod(F, h, F.order(), v);
            Poly<FF> gd = poly_gcd(F, poly_sub(F, h, poly_x(F)), v);
            if (gd.deg() > 0) {
                stages.emplace_back(gd, d);
                v = poly_divmod(F, v, gd).first;
                h = poly_mod(F, h, v);
            }
        }
        if (v.deg() > 0) stages.emplace_back(v, v.deg());
        for (auto& [prod, dd] : stages) {
            std::vector<Poly<FF>> irr;
            detail::equal_degree_factor(F, prod, dd, rng, irr);
            for (auto& pi : irr) out.factors.emplace_back(pi, mult);
        }
    }
    std::sort(out.factors.begin(), out.factors.end(), [&](const auto& a, const auto& b) {
        if (int c = poly_cmp(F, a.first, b.first); c != 0) return c < 0;
        return a.second < b.second;
    });
    return out;
}

template <class FF>
Poly<FF> factorization_product(const FF& F, const Factorization<FF>& fac) {
    Poly<FF> acc = poly_const(F, fac.unit);
    for (const auto& [p, e] : fac.factors)
        acc = poly_mul(F, acc, poly_pow(F, p, static_cast<std::uint64_t>(e)));
    return acc;
}

template <class FF>
bool poly_irreducible(const FF& F, const Poly<FF>& f) {
    static_assert(FF::is_finite);
    if (f.deg() < 1) return false;
    if (f.deg() == 1) return true;
    auto fac = factor(F, f);
    return fac.factors.size() == 1 && fac.factors[0].second == 1;
}

} // namespace conreal

#endif
