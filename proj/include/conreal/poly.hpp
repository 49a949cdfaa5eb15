#ifndef CONREAL_POLY_HPP
#define CONREAL_POLY_HPP

#include <string>
#include <utility>
#include <vector>

#include "conreal/error.hpp"

namespace conreal {

// Univariate polynomial over a field context FF.  Coefficients ascending,
// no trailing zeros; the zero polynomial has an empty coefficient vector and
// degree -1.  All operations are free functions taking the field first.
template <class FF>
struct Poly {
    std::vector<typename FF::Elem> c;

    int deg() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
};

template <class FF>
Poly<FF> poly_trim(const FF& F, Poly<FF> a) {
    while (!a.c.empty() && F.is_zero(a.c.back())) a.c.pop_back();
    return a;
}

template <class FF>
Poly<FF> poly_zero(const FF&) {
    return {};
}

template <class FF>
Poly<FF> poly_const(const FF& F, typename FF::Elem e) {
    Poly<FF> r;
    if (!F.is_zero(e)) r.c = {e};
    return r;
}

template <class FF>
Poly<FF> poly_one(const FF& F) {
    return poly_const(F, F.one());
}

// x - a
template <class FF>
Poly<FF> poly_linear(const FF& F, typename FF::Elem a) {
    Poly<FF> r;
    r.c = {F.neg(a), F.one()};
    return r;
}

template <class FF>
Poly<FF> poly_x(const FF& F) {
    Poly<FF> r;
    r.c = {F.zero(), F.one()};
    return r;
}

template <class FF>
bool poly_eq(const FF& F, const Poly<FF>& a, const Poly<FF>& b) {
    if (a.c.size() != b.c.size()) return false;
    for (std::size_t i = 0; i < a.c.size(); ++i)
        if (!(a.c[i] == b.c[i])) return false;
    (void)F;
    return true;
}

template <class FF>
Poly<FF> poly_add(const FF& F, const Poly<FF>& a, const Poly<FF>& b) {
    Poly<FF> r;
    r.c.resize(std::max(a.c.size(), b.c.size()), F.zero());
    for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] = F.add(r.c[i], b.c[i]);
    return poly_trim(F, std::move(r));
}

template <class FF>
Poly<FF> poly_neg(const FF& F, const Poly<FF>& a) {
    Poly<FF> r = a;
    for (auto& e : r.c) e = F.neg(e);
    return r;
}

template <class FF>
Poly<FF> poly_sub(const FF& F, const Poly<FF>& a, const Poly<FF>& b) {
    return poly_add(F, a, poly_neg(F, b));
}

template <class FF>
Poly<FF> poly_mul(const FF& F, const Poly<FF>& a, const Poly<FF>& b) {
    if (a.is_zero() || b.is_zero()) return {};
    Poly<FF> r;
    r.c.assign(a.c.size() + b.c.size() - 1, F.zero());
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (F.is_zero(a.c[i])) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j)
            r.c[i + j] = F.add(r.c[i + j], F.mul(a.c[i], b.c[j]));
    }
    return poly_trim(F, std::move(r));
}

template <class FF>
Poly<FF> poly_scale(const FF& F, const Poly<FF>& a, typename FF::Elem s) {
    if (F.is_zero(s)) return {};
    Poly<FF> r = a;
    for (auto& e : r.c) e = F.mul(e, s);
    return r;
}

template <class FF>
std::pair<Poly<FF>, Poly<FF>> poly_divmod(const FF& F, const Poly<FF>& a, const Poly<FF>& b) {
    if (b.is_zero()) fail(errc::division_by_zero, "polynomial division by zero");
    Poly<FF> rem = a, quo;
    if (a.deg() < b.deg()) return {quo, rem};
    quo.c.assign(a.deg() - b.deg() + 1, F.zero());
    auto linv = F.inv(b.c.back());
    while (rem.deg() >= b.deg()) {
        auto coef = F.mul(rem.c.back(), linv);
        int shift = rem.deg() - b.deg();
        quo.c[shift] = coef;
        for (int i = 0; i <= b.deg(); ++i)
            rem.c[shift + i] = F.sub(rem.c[shift + i], F.mul(coef, b.c[i]));
        rem = poly_trim(F, std::move(rem));
        if (rem.is_zero()) break;
    }
    return {poly_trim(F, std::move(quo)), rem};
}

template <class FF>
Poly<FF> poly_mod(const FF& F, const Poly<FF>& a, const Poly<FF>& b) {
    return poly_divmod(F, a, b).second;
}

template <class FF>
bool poly_divides(const FF& F, const Poly<FF>& a, const Poly<FF>& b) {
    // a | b
    if (a.is_zero()) return b.is_zero();
    return poly_mod(F, b, a).is_zero();
}

template <class FF>
Poly<FF> poly_monic(const FF& F, const Poly<FF>& a) {
    if (a.is_zero()) return a;
    return poly_scale(F, a, F.inv(a.c.back()));
}

template <class FF>
Poly<FF> poly_gcd(const FF& F, Poly<FF> a, Poly<FF> b) {
    while (!b.is_zero()) {
        Poly<FF> r = poly_mod(F, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return poly_monic(F, a);
}

template <class FF>
typename FF::Elem poly_eval(const FF& F, const Poly<FF>& a, typename FF::Elem x) {
    auto acc = F.zero();
    for (std::size_t i = a.c.size(); i-- > 0;) acc = F.add(F.mul(acc, x), a.c[i]);
    return acc;
}

template <class FF>
Poly<FF> poly_pow(const FF& F, Poly<FF> a, std::uint64_t e) {
    Poly<FF> r = poly_one(F);
    while (e) {
        if (e & 1) r = poly_mul(F, r, a);
        a = poly_mul(F, a, a);
        e >>= 1;
    }
    return r;
}

template <class FF>
Poly<FF> poly_powmod(const FF& F, Poly<FF> a, std::uint64_t e, const Poly<FF>& mod) {
    Poly<FF> r = poly_one(F);
    a = poly_mod(F, a, mod);
    while (e) {
        if (e & 1) r = poly_mod(F, poly_mul(F, r, a), mod);
        a = poly_mod(F, poly_mul(F, a, a), mod);
        e >>= 1;
    }
    return r;
}

template <class FF>
Poly<FF> poly_derivative(const FF& F, const Poly<FF>& a) {
    Poly<FF> r;
    if (a.deg() < 1) return r;
    r.c.resize(a.c.size() - 1);
    for (std::size_t i = 1; i < a.c.size(); ++i) {
        auto k = F.from_int(static_cast<long long>(i));
        r.c[i - 1] = F.mul(a.c[i], k);
    }
    return poly_trim(F, std::move(r));
}

// coefficientwise involution
template <class FF>
Poly<FF> poly_conj(const FF& F, const Poly<FF>& a) {
    Poly<FF> r = a;
    for (auto& e : r.c) e = F.conj(e);
    return r;
}

// dual f*(x) = (f(0)^c)^{-1} x^d f^c(1/x); monic for monic input.
// Requires f(0) != 0.  Non-monic inputs are normalized first.
template <class FF>
Poly<FF> poly_dual(const FF& F, const Poly<FF>& f0) {
    if (f0.is_zero() || F.is_zero(f0.c.front()))
        fail(errc::bad_input, "dual is undefined when f(0) = 0");
    Poly<FF> f = poly_monic(F, f0);
    Poly<FF> r;
    r.c.resize(f.c.size());
    auto scale = F.inv(F.conj(f.c.front()));
    for (std::size_t i = 0; i < f.c.size(); ++i)
        r.c[i] = F.mul(scale, F.conj(f.c[f.c.size() - 1 - i]));
    return poly_trim(F, std::move(r));
}

// is f a power of (x - root)?
template <class FF>
bool poly_is_power_of_linear(const FF& F, const Poly<FF>& f, typename FF::Elem root) {
    if (f.deg() < 1) return false;
    Poly<FF> lin = poly_linear(F, root);
    return poly_eq(F, f, poly_pow(F, lin, static_cast<std::uint64_t>(f.deg())));
}

template <class FF>
bool poly_is_unipotent_kind(const FF& F, const Poly<FF>& f) {
    // power of x - 1 or x + 1 (they coincide in characteristic 2)
    return poly_is_power_of_linear(F, f, F.one()) ||
           poly_is_power_of_linear(F, f, F.neg(F.one()));
}

struct SelfDualResult {
    bool self_dual = false;
    bool degenerate = false; // f(0) = 0, dual undefined
};

// Extended convention: powers of x +- 1 count as self-dual.
template <class FF>
SelfDualResult poly_is_self_dual(const FF& F, const Poly<FF>& f) {
    if (f.deg() < 1) fail(errc::bad_input, "self-duality needs a nonconstant polynomial");
    Poly<FF> m = poly_monic(F, f);
    if (poly_is_unipotent_kind(F, m)) return {true, false};
    if (F.is_zero(m.c.front())) return {false, true};
    return {poly_eq(F, m, poly_dual(F, m)), false};
}

// canonical order: by degree, then coefficient order from the constant term up
template <class FF>
int poly_cmp(const FF& F, const Poly<FF>& a, const Poly<FF>& b) {
    if (a.deg() != b.deg()) return a.deg() < b.deg() ? -1 : 1;
    for (std::size_t i = 0; i < a.c.size(); ++i)
        if (int c = F.cmp(a.c[i], b.c[i]); c != 0) return c;
    return 0;
}

} // namespace conreal

#endif
