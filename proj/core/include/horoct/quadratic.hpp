#pragma once

#include "horoct/errors.hpp"
#include "horoct/rational.hpp"

namespace horoct {

// Element x + y*w of the formal extension Q[w]/(w^2 - d). Every value carries
// its own context d; plain rationals use the neutral context d = 0 and mix
// with any other. Combining two irrational values from different contexts is
// an internal error (std::logic_error), not a user-facing condition.
//
// The extension is formal for every nonzero d, including negative d and
// perfect squares, so closed forms evaluate exactly without floating point.
class QuadScalar {
public:
    QuadScalar() = default;
    QuadScalar(int v) : x_(v) {}
    QuadScalar(BigRat v) : x_(std::move(v)) {}
    QuadScalar(BigRat x, BigRat y, BigRat d);

    // w for the context d; requires d != 0.
    static QuadScalar root(const BigRat& d);

    const BigRat& rational_part() const { return x_; }
    const BigRat& root_coeff() const { return y_; }
    const BigRat& context() const { return d_; }
    bool is_rational() const { return y_ == 0; }

    // Exact rational value; std::logic_error if the root coefficient survives.
    const BigRat& as_rational() const;

    QuadScalar galois() const;   // w -> -w
    BigRat norm() const;         // x^2 - d y^2
    QuadScalar inv() const;      // DomainError on zero norm

    friend QuadScalar operator+(const QuadScalar& a, const QuadScalar& b);
    friend QuadScalar operator-(const QuadScalar& a, const QuadScalar& b);
    friend QuadScalar operator*(const QuadScalar& a, const QuadScalar& b);
    QuadScalar operator-() const;

    friend bool operator==(const QuadScalar& a, const QuadScalar& b) {
        return a.x_ == b.x_ && a.y_ == b.y_;
    }
    friend bool operator!=(const QuadScalar& a, const QuadScalar& b) { return !(a == b); }

private:
    static const BigRat& joint_context(const QuadScalar& a, const QuadScalar& b);

    BigRat x_{0};
    BigRat y_{0};
    BigRat d_{0};
};

QuadScalar quad_pow(const QuadScalar& base, unsigned exp);  // 0^0 == 1

} // namespace horoct
