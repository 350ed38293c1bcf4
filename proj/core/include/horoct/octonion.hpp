#pragma once

#include "horoct/rational.hpp"

#include <array>
#include <concepts>
#include <cstdint>
#include <string>

namespace horoct {

template <class R>
concept ExactRing = std::regular<R> && requires(R a, R b) {
    { a + b } -> std::convertible_to<R>;
    { a - b } -> std::convertible_to<R>;
    { a * b } -> std::convertible_to<R>;
    { -a } -> std::convertible_to<R>;
    R{0};
    R{1};
};

// e_i e_j = sign[i][j] * e_index[i][j]
struct MulTable {
    std::array<std::array<std::int8_t, 8>, 8> sign{};
    std::array<std::array<std::uint8_t, 8>, 8> index{};
};

using IndexTriple = std::array<std::uint8_t, 3>;

// Each (i,j,k) is read cyclically: e_i e_j = e_k, e_j e_k = e_i, e_k e_i = e_j,
// with swapped operands negating. The seven lines below cover every unordered
// pair of imaginary units exactly once.
inline constexpr std::array<IndexTriple, 7> kCanonicalTriples{{
    {1, 2, 3}, {1, 4, 5}, {1, 7, 6}, {2, 4, 6}, {2, 5, 7}, {3, 4, 7}, {3, 6, 5},
}};

// Expands seven ordered triples into the full 8x8 table; e_0 is the unit and
// e_i e_i = -e_0 for i >= 1. Throws std::invalid_argument unless every pair
// 1 <= i < j <= 7 is covered exactly once.
MulTable build_mul_table(const std::array<IndexTriple, 7>& triples);

// The table for kCanonicalTriples, built once.
const MulTable& octonion_table();

// Draws `trials` pseudo-random octonion pairs with small rational coefficients
// from `seed` and checks, exactly: N(x y) = N(x) N(y) where N(x) is the e_0
// coefficient of x conj(x) (which must be pure), both alternative laws
// x(xy) = (xx)y and (yx)x = y(xx), and conj(xy) = conj(y) conj(x). A single
// wrong triple orientation fails within a few trials.
bool certify_composition(const MulTable& table, std::uint64_t seed, int trials);

template <ExactRing R>
struct Octonion {
    std::array<R, 8> c{};

    static Octonion scalar(R v) {
        Octonion o;
        o.c[0] = std::move(v);
        return o;
    }
    static Octonion basis(std::size_t i) {
        Octonion o;
        o.c.at(i) = R{1};
        return o;
    }

    friend bool operator==(const Octonion&, const Octonion&) = default;
};

template <ExactRing R>
Octonion<R> operator+(const Octonion<R>& a, const Octonion<R>& b) {
    Octonion<R> out;
    for (std::size_t i = 0; i < 8; ++i) out.c[i] = a.c[i] + b.c[i];
    return out;
}

template <ExactRing R>
Octonion<R> operator-(const Octonion<R>& a, const Octonion<R>& b) {
    Octonion<R> out;
    for (std::size_t i = 0; i < 8; ++i) out.c[i] = a.c[i] - b.c[i];
    return out;
}

template <ExactRing R>
Octonion<R> operator-(const Octonion<R>& a) {
    Octonion<R> out;
    for (std::size_t i = 0; i < 8; ++i) out.c[i] = -a.c[i];
    return out;
}

template <ExactRing R>
Octonion<R> operator*(const R& s, const Octonion<R>& a) {
    Octonion<R> out;
    for (std::size_t i = 0; i < 8; ++i) out.c[i] = s * a.c[i];
    return out;
}

template <ExactRing R>
Octonion<R> mul(const Octonion<R>& x, const Octonion<R>& y, const MulTable& t) {
    const R zero{};
    Octonion<R> out;
    for (std::size_t i = 0; i < 8; ++i) {
        if (x.c[i] == zero) continue;
        for (std::size_t j = 0; j < 8; ++j) {
            if (y.c[j] == zero) continue;
            R term = x.c[i] * y.c[j];
            const auto k = t.index[i][j];
            if (t.sign[i][j] >= 0)
                out.c[k] = out.c[k] + term;
            else
                out.c[k] = out.c[k] - term;
        }
    }
    return out;
}

template <ExactRing R>
Octonion<R> operator*(const Octonion<R>& x, const Octonion<R>& y) {
    return mul(x, y, octonion_table());
}

template <ExactRing R>
Octonion<R> conj(const Octonion<R>& a) {
    Octonion<R> out;
    out.c[0] = a.c[0];
    for (std::size_t i = 1; i < 8; ++i) out.c[i] = -a.c[i];
    return out;
}

// e_0 coefficient of x conj(x); std::logic_error if any imaginary coefficient
// of that product survives (it cannot for a valid table).
template <ExactRing R>
R norm(const Octonion<R>& a) {
    Octonion<R> p = a * conj(a);
    const R zero{};
    for (std::size_t i = 1; i < 8; ++i)
        if (!(p.c[i] == zero)) throw std::logic_error("octonion norm is not a pure scalar");
    return p.c[0];
}

std::string to_string(const Octonion<BigRat>& a);  // "(c0,c1,...,c7)"

} // namespace horoct
