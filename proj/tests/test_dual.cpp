#include "horoct/dual.hpp"

#include <catch2/catch.hpp>

using namespace horoct;

namespace {

using Oct = Octonion<BigRat>;
using DualOct = DualElem<Oct>;
using DualRat = DualElem<BigRat>;

Oct e(std::size_t i) { return Oct::basis(i); }

} // namespace

TEST_CASE("epsilon squares to zero", "[dual]") {
    const DualRat eps{0, 1};
    CHECK(eps * eps == DualRat{0, 0});
    const DualRat x{3, 5};
    const DualRat y{2, -1};
    CHECK(x * y == DualRat{6, 7});
    CHECK(x + y == DualRat{5, 4});
    CHECK(x - y == DualRat{1, 6});
    CHECK(-x == DualRat{-3, -5});
}

TEST_CASE("the cross term keeps operand order", "[dual]") {
    const DualOct x{e(1), e(2)};
    const DualOct y{e(4), Oct{}};
    CHECK((x * y).re == e(5));
    CHECK((x * y).du == e(6));
    CHECK((y * x).re == -e(5));
    CHECK((y * x).du == -e(6));
    CHECK(x * y != y * x);
}

TEST_CASE("conjugation lifts componentwise", "[dual]") {
    const DualOct x{e(0) + e(1), e(2) - e(3)};
    const DualOct c = conj(x);
    CHECK(c.re == e(0) - e(1));
    CHECK(c.du == e(3) - e(2));
}

TEST_CASE("dual norm collapses to a dual scalar", "[dual]") {
    const DualOct x{e(0) + BigRat(2) * e(1), e(2) + BigRat(3) * e(7)};
    const DualElem<BigRat> n = dual_norm(x);
    CHECK(n.re == norm(x.re));
    CHECK(n.re == 5);
    // cross part: 2 * sum_i re_i du_i, here both supports are disjoint
    CHECK(n.du == 0);

    const DualOct y{e(0) + e(2), BigRat(4) * e(2)};
    CHECK(dual_norm(y).du == 8);
}

TEST_CASE("the dual norm is degenerate on pure-dual elements", "[dual]") {
    const DualOct eps{Oct{}, e(0)};
    CHECK(dual_norm(eps) == DualElem<BigRat>{0, 0});
}

TEST_CASE("scale multiplies both parts", "[dual]") {
    const DualOct x{e(1), e(2)};
    const DualOct s = scale(BigRat(3), x);
    CHECK(s.re == BigRat(3) * e(1));
    CHECK(s.du == BigRat(3) * e(2));
}

TEST_CASE("rendering", "[dual]") {
    CHECK(to_string(DualRat{273, 882}) == "273 + 882ε");
    CHECK(to_string(DualRat{1, -2}) == "1 - 2ε");
    CHECK(to_string(DualRat{BigRat(-1) / 2, BigRat(1) / 3}) == "-1/2 + 1/3ε");
    const DualOct g{e(0), e(1)};
    CHECK(to_string(g) == "(1,0,0,0,0,0,0,0) + (0,1,0,0,0,0,0,0)ε");
}
