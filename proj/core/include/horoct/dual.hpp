#pragma once

#include "horoct/octonion.hpp"

#include <string>

namespace horoct {

// re + du*eps with eps^2 = 0, over any exact algebra A. Multiplication is
// (p, q)(r, s) = (p r, p s + q r); the cross term order matters when A is
// non-commutative.
template <class A>
struct DualElem {
    A re{};
    A du{};

    friend bool operator==(const DualElem&, const DualElem&) = default;
};

template <class A>
DualElem<A> operator+(const DualElem<A>& x, const DualElem<A>& y) {
    return {x.re + y.re, x.du + y.du};
}

template <class A>
DualElem<A> operator-(const DualElem<A>& x, const DualElem<A>& y) {
    return {x.re - y.re, x.du - y.du};
}

template <class A>
DualElem<A> operator-(const DualElem<A>& x) {
    return {-x.re, -x.du};
}

template <class A>
DualElem<A> operator*(const DualElem<A>& x, const DualElem<A>& y) {
    return {x.re * y.re, x.re * y.du + x.du * y.re};
}

template <class A, class S>
DualElem<A> scale(const S& s, const DualElem<A>& x) {
    return {s * x.re, s * x.du};
}

// Componentwise lift of the algebra conjugate: conj(k + l eps) = conj(k) + conj(l) eps.
template <class A>
DualElem<A> conj(const DualElem<A>& x) {
    return {conj(x.re), conj(x.du)};
}

// x conj(x) collapsed to scalars: (N(k), e_0 part of k conj(l) + l conj(k)).
// Both parts of the product are pure scalars for any anticommutative table;
// std::logic_error if an imaginary coefficient survives. Degenerate: the norm
// of a pure-dual element is 0.
template <ExactRing R>
DualElem<R> dual_norm(const DualElem<Octonion<R>>& x) {
    const R zero{};
    Octonion<R> cross = x.re * conj(x.du) + x.du * conj(x.re);
    for (std::size_t i = 1; i < 8; ++i)
        if (!(cross.c[i] == zero)) throw std::logic_error("dual norm is not a pure scalar");
    return {norm(x.re), cross.c[0]};
}

std::string to_string(const DualElem<BigRat>& x);             // "x + yε"
std::string to_string(const DualElem<Octonion<BigRat>>& x);   // "(...) + (...)ε"

} // namespace horoct
