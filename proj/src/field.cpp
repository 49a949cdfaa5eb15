#include "conreal/field.hpp"

#include <algorithm>
#include <sstream>

namespace conreal {

namespace {

// --- raw arithmetic on base-p digit vectors, used only while building tables ---

using Digits = std::vector<std::uint32_t>;

Digits unpack(std::uint32_t v, std::uint32_t p, std::uint32_t m) {
    Digits d(m, 0);
    for (std::uint32_t i = 0; i < m && v; ++i) {
        d[i] = v % p;
        v /= p;
    }
    return d;
}

std::uint32_t pack(const Digits& d, std::uint32_t p) {
    std::uint32_t v = 0;
    for (std::size_t i = d.size(); i-- > 0;) v = v * p + d[i];
    return v;
}

// multiply mod the monic defining polynomial f (degree m, digits c_0..c_m)
std::uint32_t raw_mul(std::uint32_t a, std::uint32_t b, std::uint32_t p, std::uint32_t m,
                      const Digits& f) {
    Digits da = unpack(a, p, m), db = unpack(b, p, m);
    Digits prod(2 * m - 1, 0);
    for (std::uint32_t i = 0; i < m; ++i) {
        if (!da[i]) continue;
        for (std::uint32_t j = 0; j < m; ++j)
            prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
    }
    for (std::size_t k = prod.size(); k-- > m;) {
        std::uint32_t c = prod[k];
        if (!c) continue;
        prod[k] = 0;
        // x^k = -sum c_i x^(i + k - m)
        for (std::uint32_t i = 0; i < m; ++i) {
            std::uint32_t t = (c * f[i]) % p;
            std::uint32_t idx = static_cast<std::uint32_t>(k - m + i);
            prod[idx] = (prod[idx] + p - t) % p;
        }
    }
    prod.resize(m);
    return pack(prod, p);
}

std::uint32_t raw_pow(std::uint32_t a, std::uint64_t e, std::uint32_t p, std::uint32_t m,
                      const Digits& f) {
    std::uint32_t r = 1;
    while (e) {
        if (e & 1) r = raw_mul(r, a, p, m, f);
        a = raw_mul(a, a, p, m, f);
        e >>= 1;
    }
    return r;
}

std::vector<std::uint32_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint32_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(static_cast<std::uint32_t>(d));
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(static_cast<std::uint32_t>(n));
    return out;
}

// --- polynomial helpers over F_p (digit vectors, lowest degree first) ---

void trim(Digits& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Digits pmod(Digits a, const Digits& b, std::uint32_t p) {
    // b monic-normalizable, nonzero
    Digits bb = b;
    trim(bb);
    std::uint32_t lead = bb.back();
    std::uint32_t il = 1;
    for (std::uint32_t t = 1; t < p; ++t)
        if (t * lead % p == 1) il = t;
    trim(a);
    while (a.size() >= bb.size()) {
        std::uint32_t c = (a.back() * il) % p;
        std::size_t sh = a.size() - bb.size();
        if (c)
            for (std::size_t i = 0; i < bb.size(); ++i)
                a[sh + i] = (a[sh + i] + p - (c * bb[i]) % p) % p;
        trim(a);
        if (a.empty()) break;
    }
    return a;
}

Digits pgcd(Digits a, Digits b, std::uint32_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Digits r = pmod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

Digits pmulmod(const Digits& a, const Digits& b, const Digits& f, std::uint32_t p) {
    Digits prod(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i])
            for (std::size_t j = 0; j < b.size(); ++j)
                prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    return pmod(std::move(prod), f, p);
}

Digits ppowmod_x(std::uint64_t e, const Digits& f, std::uint32_t p) {
    // x^e mod f
    Digits r{1}, x{0, 1};
    while (e) {
        if (e & 1) r = pmulmod(r, x, f, p);
        x = pmulmod(x, x, f, p);
        e >>= 1;
    }
    return r;
}

bool irreducible(const Digits& f, std::uint32_t m, std::uint32_t p) {
    // f monic of degree m over F_p: x^(p^m) = x mod f, and for each prime l | m
    // gcd(x^(p^(m/l)) - x, f) = 1
    std::uint64_t pm = 1;
    for (std::uint32_t i = 0; i < m; ++i) pm *= p;
    Digits xm = ppowmod_x(pm, f, p);
    Digits x{0, 1};
    Digits diff = xm;
    diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
    diff[1] = (diff[1] + p - 1) % p;
    trim(diff);
    if (!diff.empty()) return false;
    for (std::uint32_t l : prime_factors(m)) {
        std::uint64_t pe = 1;
        for (std::uint32_t i = 0; i < m / l; ++i) pe *= p;
        Digits xe = ppowmod_x(pe, f, p);
        xe.resize(std::max<std::size_t>(xe.size(), 2), 0);
        xe[1] = (xe[1] + p - 1) % p;
        trim(xe);
        Digits g = pgcd(f, xe, p);
        if (g.size() > 1) return false;
    }
    return true;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

} // namespace

SmallField::SmallField(std::uint32_t p, std::uint32_t m, bool force_trivial_involution) {
    if (!is_prime(p)) fail(errc::bad_input, "field characteristic must be prime");
    if (m == 0) fail(errc::bad_input, "extension degree must be positive");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < m; ++i) {
        q *= p;
        if (q > (1u << 20)) fail(errc::bad_input, "field too large (q > 2^20)");
    }
    p_ = p;
    m_ = m;
    q_ = static_cast<std::uint32_t>(q);
    trivial_ = force_trivial_involution || (m % 2 != 0);

    // defining polynomial, digits c_0..c_m with c_m = 1
    if (m == 1) {
        minpoly_ = {0, 1};
    } else if (p == 2 && m == 2) {
        minpoly_ = {1, 1, 1};
    } else if (p == 2 && m == 4) {
        minpoly_ = {1, 1, 0, 0, 1};
    } else if (m == 2) {
        std::uint32_t a = 2;
        for (;; ++a) {
            bool residue = false;
            for (std::uint32_t t = 1; t < p; ++t)
                if (t * t % p == a) residue = true;
            if (!residue) break;
        }
        minpoly_ = {p - a, 0, 1}; // x^2 - a
    } else {
        // least monic irreducible of degree m, by packed coefficient order
        for (std::uint32_t c = 1;; ++c) {
            Digits f = unpack(c, p, m);
            f.push_back(1);
            if (irreducible(f, m, p)) {
                minpoly_ = f;
                break;
            }
            if (c == q_ - 1) fail(errc::internal, "no irreducible polynomial found");
        }
    }

    // negation
    neg_.resize(q_);
    for (std::uint32_t v = 0; v < q_; ++v) {
        Digits d = unpack(v, p, m);
        for (auto& x : d) x = (p - x) % p;
        neg_[v] = pack(d, p);
    }

    // addition table for small fields (p = 2 uses xor directly)
    if (p != 2 && q_ <= 1024) {
        add_.resize(static_cast<std::size_t>(q_) * q_);
        for (std::uint32_t a = 0; a < q_; ++a) {
            Digits da = unpack(a, p, m);
            for (std::uint32_t b = 0; b < q_; ++b) {
                Digits db = unpack(b, p, m);
                Digits s(m);
                for (std::uint32_t i = 0; i < m; ++i) s[i] = (da[i] + db[i]) % p;
                add_[static_cast<std::size_t>(a) * q_ + b] = pack(s, p);
            }
        }
    }

    // primitive element and discrete-log tables
    std::uint32_t g = 0;
    auto factors = prime_factors(q_ - 1);
    for (std::uint32_t cand = 1; cand < q_; ++cand) {
        bool ok = true;
        for (std::uint32_t l : factors)
            if (raw_pow(cand, (q_ - 1) / l, p, m, minpoly_) == 1) {
                ok = false;
                break;
            }
        if (ok) {
            g = cand;
            break;
        }
    }
    check(g != 0 || q_ == 2, "primitive element search");
    if (q_ == 2) g = 1;

    exp_.resize(2 * (q_ - 1));
    log_.assign(q_, 0);
    std::uint32_t acc = 1;
    for (std::uint32_t j = 0; j < q_ - 1; ++j) {
        exp_[j] = acc;
        exp_[j + (q_ - 1)] = acc;
        log_[acc] = j;
        acc = raw_mul(acc, g, p, m, minpoly_);
    }
    check(acc == 1, "primitive element order");

    inv_.assign(q_, 0);
    for (std::uint32_t v = 1; v < q_; ++v) inv_[v] = exp_[(q_ - 1 - log_[v]) % (q_ - 1)];

    // involution a -> a^(p^(m/2)), or identity
    conj_.resize(q_);
    if (trivial_) {
        for (std::uint32_t v = 0; v < q_; ++v) conj_[v] = v;
    } else {
        std::uint64_t e = 1;
        for (std::uint32_t i = 0; i < m / 2; ++i) e *= p;
        conj_[0] = 0;
        for (std::uint32_t v = 1; v < q_; ++v)
            conj_[v] = exp_[(static_cast<std::uint64_t>(log_[v]) * e) % (q_ - 1)];
        for (std::uint32_t v = 0; v < q_; ++v)
            check(conj_[conj_[v]] == v, "involution has order two");
    }

    fixed_.clear();
    for (std::uint32_t v = 0; v < q_; ++v)
        if (conj_[v] == v) fixed_.push_back({v});

    gen_ = m >= 2 ? Elem{p_} : Elem{1};

    if (!trivial_) {
        bool found = false;
        for (std::uint32_t v = 0; v < q_ && !found; ++v) {
            Elem x{v};
            if (p == 2) {
                if (add(add(one(), x), conj(x)).v == 0 && v != 0) {
                    special_ = x;
                    found = true;
                }
            } else {
                if (v != 0 && conj(x) == neg(x)) {
                    special_ = x;
                    found = true;
                }
            }
        }
        check(found, "special element exists");
    }
}

GFElem SmallField::add_digits(Elem a, Elem b) const {
    std::uint32_t va = a.v, vb = b.v, out = 0, mult = 1;
    for (std::uint32_t i = 0; i < m_; ++i) {
        out += ((va % p_) + (vb % p_)) % p_ * mult;
        va /= p_;
        vb /= p_;
        mult *= p_;
    }
    return {out};
}

std::string SmallField::symbol() const {
    if (m_ == 2) {
        // gen^2 = -1 prints as "i"
        Elem g2 = mul(gen_, gen_);
        if (g2 == neg(one())) return "i";
    }
    return "w";
}

std::string SmallField::to_string(Elem a) const {
    if (m_ == 1) return std::to_string(a.v);
    std::string sym = symbol();
    std::ostringstream os;
    bool first = true;
    for (std::uint32_t i = 0; i < m_; ++i) {
        std::uint32_t d = digit(a, i);
        if (!d) continue;
        if (!first) os << "+";
        first = false;
        if (i == 0) {
            os << d;
        } else {
            if (d != 1) os << d << "*";
            os << sym;
            if (i > 1) os << "^" << i;
        }
    }
    if (first) return "0";
    return os.str();
}

std::string SmallField::spec_string() const {
    if (trivial_ && m_ > 1) return "F" + std::to_string(q_) + ":c=id";
    return "F" + std::to_string(q_);
}

std::vector<GFElem> embed_table(const SmallField& sub, const SmallField& big) {
    if (sub.p() != big.p() || big.m() % sub.m() != 0)
        fail(errc::bad_input, "no embedding between these fields");
    if (sub.m() == 1) {
        std::vector<GFElem> t(sub.q());
        for (std::uint32_t v = 0; v < sub.q(); ++v) t[v] = big.from_int(v);
        return t;
    }
    // least root of sub's defining polynomial inside big
    const auto& f = sub.minpoly_digits();
    GFElem beta{0};
    bool found = false;
    for (std::uint32_t v = 0; v < big.q() && !found; ++v) {
        GFElem x{v}, acc = big.zero();
        for (std::size_t k = f.size(); k-- > 0;)
            acc = big.add(big.mul(acc, x), big.from_int(f[k]));
        if (big.is_zero(acc)) {
            beta = x;
            found = true;
        }
    }
    check(found, "embedding root exists");
    std::vector<GFElem> t(sub.q());
    for (std::uint32_t v = 0; v < sub.q(); ++v) {
        GFElem acc = big.zero(), pw = big.one();
        for (std::uint32_t i = 0; i < sub.m(); ++i) {
            acc = big.add(acc, big.mul(big.from_int(sub.digit({v}, i)), pw));
            pw = big.mul(pw, beta);
        }
        t[v] = acc;
    }
    return t;
}

std::string BigField::to_string(const Elem& a) const {
    auto rat_str = [](const Rat& r) {
        std::ostringstream os;
        os << numerator(r);
        if (denominator(r) != 1) os << "/" << denominator(r);
        return os.str();
    };
    if (a.im == 0) return rat_str(a.re);
    std::ostringstream os;
    bool have_re = a.re != 0;
    if (have_re) os << rat_str(a.re);
    Rat im = a.im;
    if (im < 0) {
        os << "-";
        im = -im;
    } else if (have_re) {
        os << "+";
    }
    if (im != 1) os << rat_str(im) << "*";
    os << "i";
    return os.str();
}

bool rat_sqrt(const Rat& r, Rat& out) {
    if (r < 0) return false;
    if (r == 0) {
        out = 0;
        return true;
    }
    Int n = numerator(r), d = denominator(r);
    Int sn = sqrt(n), sd = sqrt(d);
    if (sn * sn != n || sd * sd != d) return false;
    out = Rat(sn, sd);
    return true;
}

bool gaussian_sqrt(const BigField& F, const QElem& z, QElem& out) {
    if (z.im == 0) {
        Rat s;
        if (rat_sqrt(z.re, s)) {
            out = {s, 0};
            return true;
        }
        if (rat_sqrt(-z.re, s)) {
            out = {0, s}; // sqrt of a negative rational is purely imaginary
            return true;
        }
        return false;
    }
    // |z|^2 must be a rational square N^2; then c^2 = (a+N)/2, d^2 = (N-a)/2
    Rat norm = z.re * z.re + z.im * z.im, N;
    if (!rat_sqrt(norm, N)) return false;
    Rat c2 = (z.re + N) / 2, d2 = (N - z.re) / 2, c, d;
    if (!rat_sqrt(c2, c) || !rat_sqrt(d2, d)) return false;
    if (z.im < 0) d = -d; // fix sign so 2cd = b
    out = {c, d};
    QElem sq = F.mul(out, out);
    return sq == z;
}

AnyField make_field(const std::string& spec) {
    std::string s;
    for (char ch : spec)
        if (!isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s == "Q") return std::make_shared<BigField>(false);
    if (s == "Qi" || s == "Q(i)") return std::make_shared<BigField>(true);
    if (s.rfind("Fp2:p=", 0) == 0) {
        std::uint64_t p = 0;
        try {
            p = std::stoull(s.substr(6));
        } catch (...) {
            fail(errc::bad_input, "malformed field spec: " + spec);
        }
        if (!is_prime(p)) fail(errc::bad_input, "non-prime p in field spec: " + spec);
        return std::make_shared<SmallField>(static_cast<std::uint32_t>(p), 2);
    }
    if (!s.empty() && s[0] == 'F') {
        bool force_trivial = false;
        std::string body = s.substr(1);
        if (auto pos = body.find(":c=id"); pos != std::string::npos) {
            force_trivial = true;
            body = body.substr(0, pos);
        }
        std::uint64_t qv = 0;
        try {
            qv = std::stoull(body);
        } catch (...) {
            fail(errc::bad_input, "malformed field spec: " + spec);
        }
        if (qv < 2) fail(errc::bad_input, "malformed field spec: " + spec);
        if (is_prime(qv))
            return std::make_shared<SmallField>(static_cast<std::uint32_t>(qv), 1,
                                                force_trivial);
        // q = s^2 with s = p^k a prime power: the quadratic tower F_q / F_s
        std::uint64_t root = static_cast<std::uint64_t>(sqrt(Int(qv)).convert_to<std::uint64_t>());
        if (root * root == qv) {
            std::uint64_t base = root, p = 0, k = 0;
            for (std::uint64_t d = 2; d <= base; ++d) {
                if (base % d == 0) {
                    p = d;
                    k = 0;
                    while (base % d == 0) {
                        base /= d;
                        ++k;
                    }
                    break;
                }
            }
            if (base == 1 && p != 0 && is_prime(p))
                return std::make_shared<SmallField>(static_cast<std::uint32_t>(p),
                                                    static_cast<std::uint32_t>(2 * k),
                                                    force_trivial);
        }
        fail(errc::bad_input, "unsupported field order in spec: " + spec);
    }
    fail(errc::bad_input, "malformed field spec: " + spec);
}

} // namespace conreal
