#ifndef CONREAL_FIELD_HPP
#define CONREAL_FIELD_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "conreal/error.hpp"

namespace conreal {

using Rat = boost::multiprecision::cpp_rational;
using Int = boost::multiprecision::cpp_int;

// ---------------------------------------------------------------------------
// Small finite fields GF(p^m), element = packed base-p coordinate vector with
// respect to the power basis of the defining generator.  Multiplication runs
// on discrete-log tables; everything is immutable after construction.
//
// The involution is the half-Frobenius a -> a^(p^(m/2)) when m is even, and
// the identity otherwise (or when explicitly forced trivial).  The canonical
// total order on elements is by packed index.
// ---------------------------------------------------------------------------

struct GFElem {
    std::uint32_t v = 0;
    friend bool operator==(const GFElem&, const GFElem&) = default;
};

class SmallField {
  public:
    static constexpr bool is_finite = true;
    using Elem = GFElem;

    // Defining polynomials are deterministic:
    //   m=1: prime field; m=2, p odd: x^2 - a (a = least non-residue);
    //   m=2, p=2: x^2+x+1; m=4, p=2: x^4+x+1;
    //   otherwise the lexicographically least monic irreducible of degree m.
    SmallField(std::uint32_t p, std::uint32_t m, bool force_trivial_involution = false);

    std::uint32_t p() const { return p_; }
    std::uint32_t m() const { return m_; }
    std::uint32_t q() const { return q_; }
    std::uint32_t characteristic() const { return p_; }
    bool involution_trivial() const { return trivial_; }

    Elem zero() const { return {0}; }
    Elem one() const { return {1}; }
    bool is_zero(Elem a) const { return a.v == 0; }

    Elem from_int(long long n) const {
        long long r = n % static_cast<long long>(p_);
        if (r < 0) r += p_;
        return {static_cast<std::uint32_t>(r)};
    }

    Elem add(Elem a, Elem b) const {
        if (p_ == 2) return {a.v ^ b.v};
        if (!add_.empty()) return {add_[a.v * q_ + b.v]};
        return add_digits(a, b);
    }
    Elem neg(Elem a) const { return {neg_[a.v]}; }
    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }

    Elem mul(Elem a, Elem b) const {
        if (a.v == 0 || b.v == 0) return {0};
        return {exp_[log_[a.v] + log_[b.v]]};
    }
    Elem inv(Elem a) const {
        if (a.v == 0) fail(errc::division_by_zero, "inverse of zero");
        return {inv_[a.v]};
    }
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

    Elem pow(Elem a, std::uint64_t e) const {
        if (a.v == 0) return e == 0 ? one() : zero();
        std::uint64_t le = (static_cast<std::uint64_t>(log_[a.v]) * (e % (q_ - 1))) % (q_ - 1);
        return {exp_[le]};
    }

    Elem conj(Elem a) const { return {conj_[a.v]}; }

    std::size_t order() const { return q_; }
    Elem element(std::size_t i) const { return {static_cast<std::uint32_t>(i)}; }
    std::size_t index(Elem a) const { return a.v; }
    int cmp(Elem a, Elem b) const { return a.v < b.v ? -1 : (a.v > b.v ? 1 : 0); }

    // fixed field E = {a : a^c = a}, ascending
    const std::vector<Elem>& fixed_field() const { return fixed_; }
    bool in_fixed_field(Elem a) const { return conj_[a.v] == a.v; }

    // class of x in F_p[x]/(f); generates F over the prime field (m >= 2)
    Elem gen() const { return gen_; }

    // char 2: least w with 1 + w + w^c = 0; otherwise least nonzero w with
    // w^c = -w.  Requires a non-trivial involution.
    Elem special_element() const {
        if (trivial_) fail(errc::unsupported, "special element needs a non-trivial involution");
        return special_;
    }

    // E-coordinates with respect to the basis {1, gen}: a = u + v*gen.
    // Only meaningful when the involution is non-trivial.
    void split(Elem a, Elem& u, Elem& v) const {
        Elem den = sub(gen_, conj(gen_));
        v = div(sub(a, conj(a)), den);
        u = sub(a, mul(v, gen_));
    }
    Elem combine(Elem u, Elem v) const { return add(u, mul(v, gen_)); }

    // base-p digit of the packed representation
    std::uint32_t digit(Elem a, std::uint32_t i) const {
        std::uint32_t v = a.v;
        for (std::uint32_t k = 0; k < i; ++k) v /= p_;
        return v % p_;
    }

    std::string symbol() const; // "i" when gen^2 = -1 and m = 2, else "w"
    std::string to_string(Elem a) const;
    std::string spec_string() const;

    const std::vector<std::uint32_t>& minpoly_digits() const { return minpoly_; }

  private:
    Elem add_digits(Elem a, Elem b) const;

    std::uint32_t p_ = 0, m_ = 0, q_ = 0;
    bool trivial_ = false;
    std::vector<std::uint32_t> minpoly_; // coefficients c_0..c_m of the defining poly
    std::vector<std::uint32_t> exp_, log_, inv_, neg_, conj_;
    std::vector<std::uint32_t> add_; // q*q table when q is small, else empty
    std::vector<Elem> fixed_;
    Elem gen_{0}, special_{0};
};

// Embedding table of `sub` into `big` (same characteristic, sub.m | big.m):
// image of sub.element(i) is table[i].  Deterministic (least root of the
// defining polynomial of `sub` inside `big`).
std::vector<GFElem> embed_table(const SmallField& sub, const SmallField& big);

// ---------------------------------------------------------------------------
// Q and Q(i) with exact rational coordinates.  conj is the identity on Q and
// complex conjugation on Q(i).
// ---------------------------------------------------------------------------

struct QElem {
    Rat re, im;
    friend bool operator==(const QElem&, const QElem&) = default;
};

class BigField {
  public:
    static constexpr bool is_finite = false;
    using Elem = QElem;

    explicit BigField(bool gaussian) : gaussian_(gaussian) {}

    bool gaussian() const { return gaussian_; }
    std::uint32_t characteristic() const { return 0; }
    bool involution_trivial() const { return !gaussian_; }

    Elem zero() const { return {}; }
    Elem one() const { return {1, 0}; }
    bool is_zero(const Elem& a) const { return a.re == 0 && a.im == 0; }

    Elem from_int(long long n) const { return {Rat(n), 0}; }
    Elem from_rat(const Rat& r) const { return {r, 0}; }

    Elem add(const Elem& a, const Elem& b) const { return {a.re + b.re, a.im + b.im}; }
    Elem sub(const Elem& a, const Elem& b) const { return {a.re - b.re, a.im - b.im}; }
    Elem neg(const Elem& a) const { return {-a.re, -a.im}; }
    Elem mul(const Elem& a, const Elem& b) const {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    Elem inv(const Elem& a) const {
        if (is_zero(a)) fail(errc::division_by_zero, "inverse of zero");
        Rat n = a.re * a.re + a.im * a.im;
        return {a.re / n, -a.im / n};
    }
    Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }
    Elem conj(const Elem& a) const { return gaussian_ ? Elem{a.re, -a.im} : a; }

    Elem pow(Elem a, std::uint64_t e) const {
        Elem r = one();
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }

    int cmp(const Elem& a, const Elem& b) const {
        if (a.re != b.re) return a.re < b.re ? -1 : 1;
        if (a.im != b.im) return a.im < b.im ? -1 : 1;
        return 0;
    }

    Elem gen() const { return {0, 1}; }
    Elem special_element() const {
        if (!gaussian_) fail(errc::unsupported, "special element needs a non-trivial involution");
        return {0, 1};
    }

    void split(const Elem& a, Elem& u, Elem& v) const {
        u = {a.re, 0};
        v = {a.im, 0};
    }
    Elem combine(const Elem& u, const Elem& v) const { return {u.re, v.re}; }

    // deterministic probe sequence 0, 1, -1, 2, -2, ... for sweeps over an
    // infinite field
    Elem nth_probe(std::size_t k) const {
        if (k == 0) return zero();
        long long n = static_cast<long long>((k + 1) / 2);
        return from_int(k % 2 ? n : -n);
    }

    std::string symbol() const { return "i"; }
    std::string to_string(const Elem& a) const;
    std::string spec_string() const { return gaussian_ ? "Qi" : "Q"; }

  private:
    bool gaussian_;
};

// square root in Q (exact), if it exists
bool rat_sqrt(const Rat& r, Rat& out);
// square root in Q(i) (exact), if it exists
bool gaussian_sqrt(const BigField& F, const QElem& z, QElem& out);

// ---------------------------------------------------------------------------
// Field-spec grammar: "F<q>" (q = p or p^2, plus the quadratic towers F16,
// F64, ... read as (p^k)^2), "Fp2:p=<prime>", "Q", "Qi".
// ---------------------------------------------------------------------------

using AnyField = std::variant<std::shared_ptr<SmallField>, std::shared_ptr<BigField>>;

AnyField make_field(const std::string& spec);

template <class Fn>
auto with_field(const AnyField& f, Fn&& fn) {
    return std::visit([&](const auto& ptr) { return fn(*ptr); }, f);
}

} // namespace conreal

#endif
