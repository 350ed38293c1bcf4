#include "horoct/dual_horadam.hpp"

#include <catch2/catch.hpp>

using namespace horoct;

namespace {

Oct make(std::initializer_list<BigRat> coeffs) {
    Oct o;
    std::size_t i = 0;
    for (const BigRat& v : coeffs) o.c[i++] = v;
    return o;
}

const HoradamParams kFib = preset_params("fibonacci");

} // namespace

TEST_CASE("coefficient windows of og and dog", "[dual-horadam]") {
    SeqWindow lucas(preset_params("lucas"));
    CHECK(og(lucas, 0) == make({2, 1, 3, 4, 7, 11, 18, 29}));

    SeqWindow pell(preset_params("pell"));
    CHECK(og(pell, 1) == make({1, 2, 5, 12, 29, 70, 169, 408}));

    SeqWindow fib(kFib);
    const DualOct g = dog(fib, 3);
    CHECK(g.re == og(fib, 3));
    CHECK(g.du == og(fib, 4));
}

TEST_CASE("underline packs successive powers", "[dual-horadam]") {
    const ClosedForms f(kFib);
    for (std::size_t i = 0; i < 8; ++i) {
        CHECK(f.ua.c[i] == quad_pow(f.roots.alpha, static_cast<unsigned>(i)));
        CHECK(f.ub.c[i] == quad_pow(f.roots.beta, static_cast<unsigned>(i)));
    }
    CHECK(f.omega * f.omega_inv == QuadScalar(1));
    CHECK(f.omega_sq_inv * f.omega * f.omega == QuadScalar(1));
}

TEST_CASE("reduction to rational octonions is guarded", "[dual-horadam]") {
    const ClosedForms f(kFib);
    CHECK_THROWS_AS(to_rational_oct(f.ua), std::logic_error);
    CHECK_NOTHROW(to_rational_oct(f.uab + f.uba));
    const Oct sym = to_rational_oct(f.ua + f.ub);
    CHECK(sym.c[0] == 2);
    CHECK(sym.c[1] == 1);  // alpha + beta = p
}

TEST_CASE("closed forms need distinct roots", "[dual-horadam]") {
    CHECK_THROWS_WITH(ClosedForms({BigRat(0), BigRat(1), BigRat(2), BigRat(-1)}), "D = 0");
}

TEST_CASE("dual binet agrees with the recurrence", "[dual-horadam]") {
    const HoradamParams grid[] = {
        kFib,
        preset_params("lucas"),
        preset_params("pell"),
        {BigRat(-1), BigRat(2), BigRat(-1), BigRat(3)},
        {BigRat(1) / 2, BigRat(-2), BigRat(3), BigRat(1) / 3},
    };
    for (const HoradamParams& hp : grid) {
        SeqWindow w(hp);
        const ClosedForms f(hp);
        for (unsigned n = 0; n <= 12; ++n) {
            CHECK(binet_w(f, n) == w.at(n));
            CHECK(binet_dog(f, n) == dog(w, n));
        }
    }
}

TEST_CASE("dual octonion generating function", "[dual-horadam]") {
    SeqWindow fib(kFib);
    CHECK(dog_series_oracle(fib, 16) == dog_series_closed(fib, 16));

    SeqWindow gen({BigRat(2), BigRat(-1), BigRat(-2), BigRat(5)});
    CHECK(dog_series_oracle(gen, 12) == dog_series_closed(gen, 12));
}

TEST_CASE("pinned cassini values at fibonacci n = 1", "[dual-horadam]") {
    SeqWindow fib(kFib);
    const Oct both = make({-2, -2, -4, -6, -10, -2, -12, -35});
    const DualOct lhs = cassini_dog_lhs(fib, 1);
    CHECK(lhs.re == both);
    CHECK(lhs.du == both);
    CHECK_THROWS_AS(cassini_dog_lhs(fib, 0), DomainError);

    const ClosedForms f(kFib);
    CHECK(cassini_c1(f, 1, C1Variant::theorem) == both);
    CHECK(cassini_c1(f, 1, C1Variant::proof) == make({-2, 0, -2, -2, -4, -20, -24, -23}));
    CHECK(cassini_c2_as_printed(f, 1) ==
          make({BigRat(-1381) / 5, BigRat(-8) / 5, BigRat(-24) / 5, BigRat(-32) / 5,
                BigRat(-56) / 5, BigRat(-88) / 5, BigRat(-144) / 5, BigRat(-232) / 5}));
}

TEST_CASE("reversed-order cassini lhs swaps only the product", "[dual-horadam]") {
    SeqWindow fib(kFib);
    const DualOct a = cassini_dog_lhs(fib, 2);
    const DualOct b = cassini_dog_lhs_reversed(fib, 2);
    CHECK(a != b);
    const DualOct g1 = dog(fib, 1), g2 = dog(fib, 2), g3 = dog(fib, 3);
    CHECK(a == g1 * g3 - g2 * g2);
    CHECK(b == g3 * g1 - g2 * g2);
}

TEST_CASE("the corrected cassini closed form holds everywhere", "[dual-horadam]") {
    const HoradamParams grid[] = {
        kFib,
        preset_params("lucas"),
        {BigRat(-1), BigRat(2), BigRat(3), BigRat(2)},
    };
    for (const HoradamParams& hp : grid) {
        SeqWindow w(hp);
        const ClosedForms f(hp);
        for (unsigned n = 1; n <= 8; ++n) {
            const Oct c1 = cassini_c1(f, n, C1Variant::theorem);
            CHECK(cassini_dog_lhs(w, n) == DualOct{c1, hp.p * c1});
        }
    }
}

TEST_CASE("pinned partial-sum values at fibonacci n = 5", "[dual-horadam]") {
    SeqWindow fib(kFib);
    const ClosedForms f(kFib);
    const DualOct want{make({12, 20, 32, 52, 84, 136, 220, 356}),
                       make({20, 32, 52, 84, 136, 220, 356, 576})};
    CHECK(sum_dog_lhs(fib, 5) == want);
    CHECK(sum_dog_rhs(f, fib, 5) == want);
    for (unsigned n = 0; n <= 12; ++n) CHECK(sum_dog_lhs(fib, n) == sum_dog_rhs(f, fib, n));

    const HoradamParams unit{BigRat(3), BigRat(1), BigRat(-1), BigRat(2)};  // p + q = 1
    SeqWindow w(unit);
    const ClosedForms g(unit);
    CHECK_THROWS_WITH(sum_dog_rhs(g, w, 2), "p + q = 1");
}

TEST_CASE("pinned norm values at fibonacci n = 0", "[dual-horadam]") {
    SeqWindow fib(kFib);
    const ClosedForms f(kFib);
    CHECK(norm_dog_oracle(fib, 0) == DualElem<BigRat>{273, 882});
    CHECK(norm_dog_rhs(f, fib, 0, NormLead::corrected) == DualElem<BigRat>{273, 882});

    const DualElem<BigRat> printed = norm_dog_rhs(f, fib, 0, NormLead::as_printed);
    CHECK(printed.re == BigRat(1367) / 5);
    CHECK(printed.du == 882);

    for (unsigned n = 0; n <= 16; ++n)
        CHECK(norm_dog_oracle(fib, n) == norm_dog_rhs(f, fib, n, NormLead::corrected));
}

TEST_CASE("norm closed form across parameters", "[dual-horadam]") {
    const HoradamParams grid[] = {
        preset_params("lucas"),
        preset_params("pell"),
        {BigRat(-1), BigRat(2), BigRat(-1), BigRat(3)},
    };
    for (const HoradamParams& hp : grid) {
        SeqWindow w(hp);
        const ClosedForms f(hp);
        for (unsigned n = 0; n <= 10; ++n) {
            const DualElem<BigRat> oracle = norm_dog_oracle(w, n);
            CHECK(oracle == norm_dog_rhs(f, w, n, NormLead::corrected));
            // the dual part never carries the defect
            CHECK(oracle.du == norm_dog_rhs(f, w, n, NormLead::as_printed).du);
        }
    }
}
