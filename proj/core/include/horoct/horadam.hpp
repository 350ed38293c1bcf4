#pragma once

#include "horoct/errors.hpp"
#include "horoct/quadratic.hpp"
#include "horoct/rational.hpp"
#include "horoct/series.hpp"

#include <cstddef>
#include <string_view>
#include <vector>

namespace horoct {

// w_0 = a, w_1 = b, w_n = p w_{n-1} + q w_{n-2}
struct HoradamParams {
    BigRat a, b, p, q;

    friend bool operator==(const HoradamParams&, const HoradamParams&) = default;
};

// Lexicographic by (a, b, p, q); the canonical ordering of sweep points.
bool params_less(const HoradamParams& lhs, const HoradamParams& rhs);

// fibonacci (0,1;1,1), lucas (2,1;1,1), pell (0,1;2,1); UsageError otherwise.
HoradamParams preset_params(std::string_view name);

inline BigRat discriminant(const HoradamParams& hp) { return hp.p * hp.p + 4 * hp.q; }

// Memoized prefix w_0..w_n, grown on demand.
class SeqWindow {
public:
    explicit SeqWindow(HoradamParams hp);
    const HoradamParams& params() const { return p_; }
    // By value: growing the window reallocates, so references would dangle.
    BigRat at(std::size_t n);

private:
    HoradamParams p_;
    std::vector<BigRat> w_;
};

BigRat horadam_w(const HoradamParams& hp, unsigned n);

// alpha, beta = (p ± w)/2 in the context w^2 = D = p^2 + 4q, together with
// the seed combinations A = b - a beta, B = b - a alpha.
struct RootPair {
    QuadScalar alpha, beta;
    QuadScalar A, B;
    BigRat disc;
};

// DomainError("D = 0") when the characteristic roots coincide.
RootPair char_roots(const HoradamParams& hp);

// (A alpha^n - B beta^n)/(alpha - beta), reduced to a rational.
BigRat binet_w(const HoradamParams& hp, unsigned n);

// Coefficients of sum w_n t^n: directly from the recurrence, and as the
// expansion of (w_0 + (w_1 - p w_0) t) / (1 - p t - q t^2).
TruncSeries<BigRat> gen_series_oracle(const HoradamParams& hp, std::size_t order);
TruncSeries<BigRat> gen_series_closed(const HoradamParams& hp, std::size_t order);

// w_{n+1} w_{n-1} - w_n^2, n >= 1.
BigRat cassini_w_lhs(SeqWindow& w, unsigned n);
// q^{n-1} (p a b - b^2 - a^2 q)
BigRat cassini_w_rhs_as_printed(const HoradamParams& hp, unsigned n);
// (-q)^{n-1} (p a b - b^2 + q a^2)
BigRat cassini_w_rhs_corrected(const HoradamParams& hp, unsigned n);

// sum_{i=0}^{n} w_i by direct summation.
BigRat sum_w_lhs(SeqWindow& w, unsigned n);
// (b - a(p-1) + q w_n - w_{n+1}) / (1 - p - q); DomainError("p + q = 1").
BigRat sum_w_rhs_as_printed(SeqWindow& w, unsigned n);
// Same with -q w_n in the numerator.
BigRat sum_w_rhs_corrected(SeqWindow& w, unsigned n);

} // namespace horoct
