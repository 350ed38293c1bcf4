#include "horoct/quadratic.hpp"

#include <catch2/catch.hpp>

using namespace horoct;

namespace {
const BigRat five(5);
}

TEST_CASE("rationals embed with a null context", "[quadratic]") {
    QuadScalar x(BigRat(3) / 2);
    CHECK(x.is_rational());
    CHECK(x.context() == 0);
    CHECK(x.as_rational() == BigRat(3) / 2);
    CHECK(QuadScalar(7).rational_part() == 7);
}

TEST_CASE("the formal root squares to its context", "[quadratic]") {
    QuadScalar w = QuadScalar::root(five);
    CHECK(w.rational_part() == 0);
    CHECK(w.root_coeff() == 1);
    CHECK(w.context() == 5);
    CHECK(w * w == QuadScalar(5));
    CHECK((w * w).is_rational());
}

TEST_CASE("galois-symmetric combinations collapse to rationals", "[quadratic]") {
    QuadScalar w = QuadScalar::root(five);
    QuadScalar x = QuadScalar(1) + w;
    QuadScalar y = QuadScalar(1) - w;
    CHECK(x * y == QuadScalar(-4));
    CHECK((x * y).as_rational() == -4);
    CHECK(x + x.galois() == QuadScalar(2));
    CHECK(x * x.galois() == QuadScalar(-4));
}

TEST_CASE("as_rational refuses a surviving root coefficient", "[quadratic]") {
    QuadScalar x = QuadScalar(1) + QuadScalar::root(five);
    CHECK_FALSE(x.is_rational());
    CHECK_THROWS_AS(x.as_rational(), std::logic_error);
}

TEST_CASE("mixing distinct contexts is refused", "[quadratic]") {
    QuadScalar a = QuadScalar::root(five);
    QuadScalar b = QuadScalar::root(BigRat(8));
    CHECK_THROWS_AS(a + b, std::logic_error);
    CHECK_THROWS_AS(a * b, std::logic_error);
    CHECK_NOTHROW(a + QuadScalar(2));
    CHECK_NOTHROW(a * QuadScalar(0));
}

TEST_CASE("norm and inverse", "[quadratic]") {
    QuadScalar x(BigRat(1), BigRat(2), five);
    CHECK(x.norm() == 1 - 5 * 4);
    CHECK(x * x.inv() == QuadScalar(1));
    CHECK_THROWS_AS(QuadScalar(0).inv(), DomainError);

    // The context is formal, so a perfect-square D admits nonzero elements of
    // norm zero; those must be rejected, not inverted into nonsense.
    QuadScalar z(BigRat(3), BigRat(1), BigRat(9));
    CHECK(z.norm() == 0);
    CHECK_THROWS_AS(z.inv(), DomainError);
}

TEST_CASE("powers of the golden-ratio root", "[quadratic]") {
    QuadScalar half(BigRat(1) / 2);
    QuadScalar alpha = half * (QuadScalar(1) + QuadScalar::root(five));
    CHECK(quad_pow(alpha, 0) == QuadScalar(1));
    CHECK(quad_pow(alpha, 1) == alpha);
    CHECK(quad_pow(alpha, 5) == QuadScalar(BigRat(11) / 2, BigRat(5) / 2, five));
    CHECK(quad_pow(alpha, 7) == QuadScalar(BigRat(29) / 2, BigRat(13) / 2, five));
    CHECK(quad_pow(QuadScalar(0), 0) == QuadScalar(1));
}

TEST_CASE("subtraction and negation respect the context rules", "[quadratic]") {
    QuadScalar w = QuadScalar::root(five);
    CHECK(w - w == QuadScalar(0));
    CHECK((w - w).context() == 0);
    CHECK(-w == QuadScalar(0) - w);
    CHECK((w - w) + QuadScalar::root(BigRat(8)) == QuadScalar::root(BigRat(8)));
}
