#include "horoct/quadratic.hpp"

namespace horoct {

QuadScalar::QuadScalar(BigRat x, BigRat y, BigRat d)
    : x_(std::move(x)), y_(std::move(y)), d_(std::move(d)) {
    if (y_ == 0)
        d_ = 0;
    else if (d_ == 0)
        throw std::logic_error("root coefficient without a quadratic context");
}

QuadScalar QuadScalar::root(const BigRat& d) {
    if (d == 0) throw std::logic_error("quadratic context needs d != 0");
    return QuadScalar(BigRat(0), BigRat(1), d);
}

const BigRat& QuadScalar::as_rational() const {
    if (y_ != 0) throw std::logic_error("irrational value where a rational is required");
    return x_;
}

QuadScalar QuadScalar::galois() const {
    QuadScalar out = *this;
    out.y_ = -out.y_;
    return out;
}

BigRat QuadScalar::norm() const { return x_ * x_ - d_ * y_ * y_; }

QuadScalar QuadScalar::inv() const {
    const BigRat nm = norm();
    if (nm == 0) throw DomainError("inverse of a zero-norm quadratic value");
    QuadScalar out;
    out.x_ = x_ / nm;
    out.y_ = -y_ / nm;
    out.d_ = out.y_ == 0 ? BigRat(0) : d_;
    return out;
}

const BigRat& QuadScalar::joint_context(const QuadScalar& a, const QuadScalar& b) {
    if (a.d_ == b.d_ || b.d_ == 0) return a.d_;
    if (a.d_ == 0) return b.d_;
    throw std::logic_error("mixed quadratic contexts");
}

QuadScalar operator+(const QuadScalar& a, const QuadScalar& b) {
    const BigRat d = QuadScalar::joint_context(a, b);
    QuadScalar out;
    out.x_ = a.x_ + b.x_;
    out.y_ = a.y_ + b.y_;
    out.d_ = out.y_ == 0 ? BigRat(0) : d;
    return out;
}

QuadScalar operator-(const QuadScalar& a, const QuadScalar& b) {
    const BigRat d = QuadScalar::joint_context(a, b);
    QuadScalar out;
    out.x_ = a.x_ - b.x_;
    out.y_ = a.y_ - b.y_;
    out.d_ = out.y_ == 0 ? BigRat(0) : d;
    return out;
}

QuadScalar operator*(const QuadScalar& a, const QuadScalar& b) {
    const BigRat d = QuadScalar::joint_context(a, b);
    QuadScalar out;
    out.x_ = a.x_ * b.x_ + d * a.y_ * b.y_;
    out.y_ = a.x_ * b.y_ + a.y_ * b.x_;
    out.d_ = out.y_ == 0 ? BigRat(0) : d;
    return out;
}

QuadScalar QuadScalar::operator-() const {
    QuadScalar out = *this;
    out.x_ = -out.x_;
    out.y_ = -out.y_;
    return out;
}

QuadScalar quad_pow(const QuadScalar& base, unsigned exp) {
    QuadScalar r(1);
    for (unsigned i = 0; i < exp; ++i) r = r * base;
    return r;
}

} // namespace horoct
