#include "doctest.h"

#include "conreal/field.hpp"
#include "conreal/io.hpp"
#include "conreal/rng.hpp"

using namespace conreal;

namespace {

GFElem rand_elem(const SmallField& F, Rng& rng) { return F.element(rng.below(F.order())); }

QElem rand_big(const BigField& F, Rng& rng) {
    auto num = static_cast<long long>(rng.below(2001)) - 1000;
    auto den = static_cast<long long>(rng.below(40)) + 1;
    QElem a{Rat(num, den), 0};
    if (F.gaussian()) a.im = Rat(static_cast<long long>(rng.below(2001)) - 1000, den);
    return a;
}

} // namespace

TEST_CASE("make_field picks the documented representations") {
    auto f4 = std::get<std::shared_ptr<SmallField>>(make_field("F4"));
    CHECK(f4->p() == 2);
    CHECK(f4->m() == 2);
    // w^2 = w + 1
    auto w = f4->gen();
    CHECK(f4->mul(w, w) == f4->add(w, f4->one()));
    CHECK(f4->conj(w) == f4->mul(w, w)); // Frobenius

    auto f9 = std::get<std::shared_ptr<SmallField>>(make_field("F9"));
    CHECK(f9->p() == 3);
    auto i = f9->gen();
    CHECK(f9->mul(i, i) == f9->neg(f9->one())); // i^2 = -1 (least non-residue is 2)
    CHECK(f9->symbol() == "i");

    auto qi = std::get<std::shared_ptr<BigField>>(make_field("Qi"));
    CHECK(qi->gaussian());
    CHECK(qi->mul(qi->gen(), qi->gen()) == qi->neg(qi->one()));

    CHECK(std::get<std::shared_ptr<SmallField>>(make_field("Fp2:p=7"))->q() == 49);
    CHECK(std::get<std::shared_ptr<SmallField>>(make_field("F16"))->m() == 4);
    CHECK(std::get<std::shared_ptr<SmallField>>(make_field("F25"))->q() == 25);

    CHECK_THROWS_AS((void)make_field("F6"), error);
    CHECK_THROWS_AS((void)make_field("Fp2:p=6"), error);
    CHECK_THROWS_AS((void)make_field("bogus"), error);
}

TEST_CASE("involution invariants on the finite menu") {
    for (const char* spec : {"F4", "F9", "F16", "F25"}) {
        CAPTURE(spec);
        auto F = *std::get<std::shared_ptr<SmallField>>(make_field(spec));
        REQUIRE_FALSE(F.involution_trivial());
        Rng rng(7);
        for (int t = 0; t < 1000; ++t) {
            auto a = rand_elem(F, rng), b = rand_elem(F, rng);
            CHECK(F.conj(F.conj(a)) == a);
            CHECK(F.conj(F.add(a, b)) == F.add(F.conj(a), F.conj(b)));
            CHECK(F.conj(F.mul(a, b)) == F.mul(F.conj(a), F.conj(b)));
            // norm lands in the fixed field
            CHECK(F.in_fixed_field(F.mul(a, F.conj(a))));
        }
        // prime subfield fixed elementwise
        for (std::uint32_t v = 0; v < F.p(); ++v) CHECK(F.conj(F.from_int(v)) == F.from_int(v));
        // involution of order exactly two
        bool moves_something = false;
        for (std::size_t v = 0; v < F.order(); ++v)
            if (!(F.conj(F.element(v)) == F.element(v))) moves_something = true;
        CHECK(moves_something);

        auto w = F.special_element();
        if (F.characteristic() == 2) {
            CHECK(F.is_zero(F.add(F.add(F.one(), w), F.conj(w))));
        } else {
            CHECK(F.conj(w) == F.neg(w));
            CHECK_FALSE(F.is_zero(w));
        }
    }
}

TEST_CASE("fixed field has q^(1/2) elements, exhaustively for p = 2, 3, 5") {
    for (const char* spec : {"F4", "F9", "F25"}) {
        auto F = *std::get<std::shared_ptr<SmallField>>(make_field(spec));
        CHECK(F.fixed_field().size() == F.p());
        // closed under arithmetic
        for (auto a : F.fixed_field())
            for (auto b : F.fixed_field()) {
                CHECK(F.in_fixed_field(F.add(a, b)));
                CHECK(F.in_fixed_field(F.mul(a, b)));
                if (!F.is_zero(b)) CHECK(F.in_fixed_field(F.div(a, b)));
            }
    }
    auto F16 = *std::get<std::shared_ptr<SmallField>>(make_field("F16"));
    CHECK(F16.fixed_field().size() == 4);
}

TEST_CASE("field axioms on random triples") {
    Rng rng(11);
    for (const char* spec : {"F2", "F4", "F9", "F16", "F25"}) {
        auto F = *std::get<std::shared_ptr<SmallField>>(make_field(spec));
        for (int t = 0; t < 300; ++t) {
            auto a = rand_elem(F, rng), b = rand_elem(F, rng), c = rand_elem(F, rng);
            CHECK(F.add(F.add(a, b), c) == F.add(a, F.add(b, c)));
            CHECK(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)));
            CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
            if (!F.is_zero(a)) CHECK(F.mul(a, F.inv(a)) == F.one());
            CHECK(F.is_zero(F.add(a, F.neg(a))));
        }
    }
    for (const char* spec : {"Q", "Qi"}) {
        auto F = *std::get<std::shared_ptr<BigField>>(make_field(spec));
        for (int t = 0; t < 100; ++t) {
            auto a = rand_big(F, rng), b = rand_big(F, rng), c = rand_big(F, rng);
            CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
            if (!F.is_zero(a)) CHECK(F.mul(a, F.inv(a)) == F.one());
            CHECK(F.conj(F.conj(a)) == a);
        }
    }
}

TEST_CASE("involute examples") {
    auto F4 = *std::get<std::shared_ptr<SmallField>>(make_field("F4"));
    auto w = F4.gen();
    CHECK(F4.conj(w) == F4.add(w, F4.one())); // w^2 = w + 1

    auto F9 = *std::get<std::shared_ptr<SmallField>>(make_field("F9"));
    auto i = F9.gen();
    auto one_plus_i = F9.add(F9.one(), i);
    auto one_minus_i = F9.add(F9.one(), F9.mul(F9.from_int(2), i));
    CHECK(F9.conj(one_plus_i) == one_minus_i); // (1+i)^3 = 1+2i

    CHECK(F9.conj(F9.one()) == F9.one());
}

TEST_CASE("special elements") {
    auto F4 = *std::get<std::shared_ptr<SmallField>>(make_field("F4"));
    CHECK(F4.special_element() == F4.gen()); // w + w^2 = 1

    auto F9 = *std::get<std::shared_ptr<SmallField>>(make_field("F9"));
    CHECK(F9.special_element() == F9.gen()); // i^c = -i

    auto F16 = *std::get<std::shared_ptr<SmallField>>(make_field("F16"));
    auto w = F16.special_element();
    CHECK(F16.is_zero(F16.add(F16.add(F16.one(), w), F16.conj(w))));

    auto Qi = *std::get<std::shared_ptr<BigField>>(make_field("Qi"));
    CHECK(Qi.special_element() == Qi.gen());

    auto F5 = *std::get<std::shared_ptr<SmallField>>(make_field("F5"));
    CHECK_THROWS_AS((void)F5.special_element(), error);
    auto Q = *std::get<std::shared_ptr<BigField>>(make_field("Q"));
    CHECK_THROWS_AS((void)Q.special_element(), error);
}

TEST_CASE("arith examples") {
    auto F4 = *std::get<std::shared_ptr<SmallField>>(make_field("F4"));
    auto w = F4.gen();
    CHECK(F4.mul(w, w) == F4.add(w, F4.one()));

    auto F9 = *std::get<std::shared_ptr<SmallField>>(make_field("F9"));
    auto x = parse_element(F9, "1+2*i");
    CHECK(F9.mul(x, x) == F9.gen()); // (1+2i)^2 = i

    auto Q = *std::get<std::shared_ptr<BigField>>(make_field("Q"));
    auto third = Q.div(Q.one(), Q.from_int(3));
    auto sixth = Q.div(Q.one(), Q.from_int(6));
    CHECK(Q.add(third, sixth) == Q.div(Q.one(), Q.from_int(2)));

    CHECK_THROWS_AS((void)F4.inv(F4.zero()), error);
    CHECK_THROWS_AS((void)Q.inv(Q.zero()), error);
}

TEST_CASE("element parsing and printing round-trips") {
    Rng rng(3);
    for (const char* spec : {"F4", "F9", "F16", "F25", "Q", "Qi"}) {
        CAPTURE(spec);
        auto any = make_field(spec);
        with_field(any, [&](const auto& F) {
            using FF = std::decay_t<decltype(F)>;
            for (int t = 0; t < 100; ++t) {
                typename FF::Elem a;
                if constexpr (FF::is_finite)
                    a = rand_elem(F, rng);
                else
                    a = rand_big(F, rng);
                CHECK(parse_element(F, F.to_string(a)) == a);
            }
        });
    }
    auto F9 = *std::get<std::shared_ptr<SmallField>>(make_field("F9"));
    CHECK(parse_element(F9, " 1 + 2*i ") == parse_element(F9, "1+2*i"));
    CHECK(parse_element(F9, "i^2") == F9.neg(F9.one()));
    auto Qi = *std::get<std::shared_ptr<BigField>>(make_field("Qi"));
    CHECK(parse_element(Qi, "1/2 - 3*i") == (QElem{Rat(1, 2), Rat(-3)}));
}

TEST_CASE("trivial-involution variant for the claim checker") {
    auto F4id = *std::get<std::shared_ptr<SmallField>>(make_field("F4:c=id"));
    CHECK(F4id.involution_trivial());
    for (std::size_t v = 0; v < F4id.order(); ++v)
        CHECK(F4id.conj(F4id.element(v)) == F4id.element(v));
    CHECK(F4id.fixed_field().size() == 4);
}

TEST_CASE("embedding tables respect arithmetic") {
    auto F4 = *std::get<std::shared_ptr<SmallField>>(make_field("F4"));
    SmallField F64(2, 6);
    auto t = embed_table(F4, F64);
    for (std::size_t a = 0; a < F4.order(); ++a)
        for (std::size_t b = 0; b < F4.order(); ++b) {
            auto ea = F4.element(a), eb = F4.element(b);
            CHECK(t[F4.index(F4.mul(ea, eb))] == F64.mul(t[a], t[b]));
            CHECK(t[F4.index(F4.add(ea, eb))] == F64.add(t[a], t[b]));
        }
}

TEST_CASE("gaussian square roots") {
    auto Qi = *std::get<std::shared_ptr<BigField>>(make_field("Qi"));
    QElem s;
    CHECK(gaussian_sqrt(Qi, parse_element(Qi, "2*i"), s));
    CHECK(Qi.mul(s, s) == parse_element(Qi, "2*i")); // (1+i)^2 = 2i
    CHECK(gaussian_sqrt(Qi, parse_element(Qi, "-4"), s));
    CHECK(Qi.mul(s, s) == parse_element(Qi, "-4"));
    CHECK_FALSE(gaussian_sqrt(Qi, parse_element(Qi, "i+1"), s));
    Rat r;
    CHECK(rat_sqrt(Rat(9, 4), r));
    CHECK(r == Rat(3, 2));
    CHECK_FALSE(rat_sqrt(Rat(2), r));
}
