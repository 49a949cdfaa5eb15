#ifndef CONREAL_IO_HPP
#define CONREAL_IO_HPP

#include <cctype>
#include <string>
#include <vector>

#include "conreal/error.hpp"
#include "conreal/field.hpp"
#include "conreal/matrix.hpp"
#include "conreal/poly.hpp"

namespace conreal {

// split "a,b,c" at depth 0 of () and []
std::vector<std::string> split_top_level(const std::string& s, char sep);
std::string strip_spaces(const std::string& s);

namespace detail {

// Recursive-descent evaluator for the element/polynomial grammar:
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := ['-'] atom ['^' uint]
//   atom   := '(' expr ')' | integer | 'w' | 'i' | 'x'
// Division is only defined by (nonzero) constants.
template <class FF>
class PolyParser {
  public:
    PolyParser(const FF& F, const std::string& text) : F_(F), s_(strip_spaces(text)) {}

    Poly<FF> parse() {
        Poly<FF> r = expr();
        if (pos_ != s_.size()) fail(errc::bad_input, "trailing input in '" + s_ + "'");
        return r;
    }

  private:
    Poly<FF> expr() {
        Poly<FF> acc = term();
        while (peek() == '+' || peek() == '-') {
            char op = get();
            Poly<FF> t = term();
            acc = op == '+' ? poly_add(F_, acc, t) : poly_sub(F_, acc, t);
        }
        return acc;
    }

    Poly<FF> term() {
        Poly<FF> acc = factor();
        while (peek() == '*' || peek() == '/') {
            char op = get();
            Poly<FF> t = factor();
            if (op == '*') {
                acc = poly_mul(F_, acc, t);
            } else {
                if (t.deg() > 0) fail(errc::bad_input, "division by a non-constant");
                if (t.is_zero()) fail(errc::division_by_zero, "division by zero in literal");
                acc = poly_scale(F_, acc, F_.inv(t.c[0]));
            }
        }
        return acc;
    }

    Poly<FF> factor() {
        bool negate = false;
        while (peek() == '-') {
            get();
            negate = !negate;
        }
        Poly<FF> a = atom();
        if (peek() == '^') {
            get();
            std::uint64_t e = read_uint();
            a = poly_pow(F_, a, e);
        }
        if (negate) a = poly_neg(F_, a);
        return a;
    }

    Poly<FF> atom() {
        char c = peek();
        if (c == '(') {
            get();
            Poly<FF> r = expr();
            if (get() != ')') fail(errc::bad_input, "missing ')' in '" + s_ + "'");
            return r;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return poly_const(F_, number());
        if (c == 'x') {
            get();
            return poly_x(F_);
        }
        if (c == 'w' || c == 'i') {
            get();
            return poly_const(F_, generator(c));
        }
        fail(errc::bad_input, "unexpected character in '" + s_ + "'");
    }

    typename FF::Elem generator(char c) {
        if constexpr (FF::is_finite) {
            if (F_.m() < 2)
                fail(errc::bad_input, std::string("no element '") + c + "' in " + F_.spec_string());
            return F_.gen();
        } else {
            if (!F_.gaussian())
                fail(errc::bad_input, std::string("no element '") + c + "' in " + F_.spec_string());
            return F_.gen();
        }
    }

    typename FF::Elem number() {
        std::string digits;
        while (std::isdigit(static_cast<unsigned char>(peek()))) digits.push_back(get());
        if constexpr (FF::is_finite) {
            unsigned long long v = 0;
            for (char d : digits) v = (v * 10 + static_cast<unsigned>(d - '0')) % F_.characteristic();
            return F_.from_int(static_cast<long long>(v));
        } else {
            return F_.from_rat(Rat(Int(digits)));
        }
    }

    std::uint64_t read_uint() {
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            fail(errc::bad_input, "expected an integer exponent");
        std::uint64_t v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) v = v * 10 + (get() - '0');
        return v;
    }

    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    char get() { return pos_ < s_.size() ? s_[pos_++] : '\0'; }

    const FF& F_;
    std::string s_;
    std::size_t pos_ = 0;
};

} // namespace detail

template <class FF>
Poly<FF> parse_poly(const FF& F, const std::string& text) {
    return detail::PolyParser<FF>(F, text).parse();
}

template <class FF>
typename FF::Elem parse_element(const FF& F, const std::string& text) {
    Poly<FF> p = parse_poly(F, text);
    if (p.deg() > 0) fail(errc::bad_input, "expected an element, got a polynomial: " + text);
    return p.is_zero() ? F.zero() : p.c[0];
}

// "[[a,b];[c,d]]" — rows split by ';', entries by ','
template <class FF>
Mat<FF> parse_matrix(const FF& F, const std::string& text) {
    std::string s = strip_spaces(text);
    if (s.size() < 2 || s.front() != '[' || s.back() != ']')
        fail(errc::bad_input, "matrix literal must be bracketed: " + text);
    std::string body = s.substr(1, s.size() - 2);
    std::vector<std::string> rows = split_top_level(body, ';');
    if (rows.empty()) fail(errc::bad_input, "empty matrix literal");
    std::vector<std::vector<typename FF::Elem>> entries;
    for (auto& row : rows) {
        std::string r = row;
        if (r.size() >= 2 && r.front() == '[' && r.back() == ']') r = r.substr(1, r.size() - 2);
        std::vector<typename FF::Elem> vals;
        for (auto& cell : split_top_level(r, ',')) vals.push_back(parse_element(F, cell));
        entries.push_back(std::move(vals));
    }
    std::size_t cols = entries.front().size();
    for (auto& e : entries)
        if (e.size() != cols) fail(errc::bad_input, "ragged matrix literal");
    Mat<FF> m = mat_zero(F, static_cast<int>(entries.size()), static_cast<int>(cols));
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) m.at(i, j) = entries[i][j];
    return m;
}

// canonical printing, highest degree first; compound coefficients get parens
template <class FF>
std::string poly_to_string(const FF& F, const Poly<FF>& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (int d = f.deg(); d >= 0; --d) {
        const auto& c = f.c[d];
        if (F.is_zero(c)) continue;
        std::string cs = F.to_string(c);
        bool compound = cs.find_first_of("+-", 1) != std::string::npos;
        if (compound) cs = "(" + cs + ")";
        bool negative = !compound && cs.size() > 1 && cs[0] == '-';
        if (negative) cs = cs.substr(1);
        if (!out.empty())
            out += negative ? " - " : " + ";
        else if (negative)
            out += "-";
        bool unit = cs == "1";
        if (d == 0) {
            out += cs;
        } else {
            if (!unit) out += cs + "*";
            out += "x";
            if (d > 1) out += "^" + std::to_string(d);
        }
    }
    return out;
}

template <class FF>
std::string matrix_to_string(const FF& F, const Mat<FF>& m) {
    std::string out = "[";
    for (int i = 0; i < m.rows; ++i) {
        out += "[";
        for (int j = 0; j < m.cols; ++j) {
            if (j) out += ",";
            out += F.to_string(m.at(i, j));
        }
        out += "]";
        if (i + 1 < m.rows) out += ";";
    }
    return out + "]";
}

} // namespace conreal

#endif
