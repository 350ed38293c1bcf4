#pragma once

#include "horoct/errors.hpp"

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace horoct {

// Polynomial truncation of a formal power series: coefficients of t^0..t^order.
// All products are exact; terms beyond the order are discarded.
template <class T>
class TruncSeries {
public:
    explicit TruncSeries(std::size_t order) : c_(order + 1) {}

    static TruncSeries from_coeffs(std::vector<T> coeffs) {
        if (coeffs.empty()) throw std::logic_error("series needs at least the constant term");
        TruncSeries s(coeffs.size() - 1);
        s.c_ = std::move(coeffs);
        return s;
    }

    std::size_t order() const { return c_.size() - 1; }
    T& operator[](std::size_t k) { return c_.at(k); }
    const T& operator[](std::size_t k) const { return c_.at(k); }

    friend bool operator==(const TruncSeries&, const TruncSeries&) = default;

    friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
        auto [x, y] = matched(a, b);
        TruncSeries out(x.order());
        for (std::size_t k = 0; k <= x.order(); ++k) out.c_[k] = x.c_[k] + y.c_[k];
        return out;
    }

    friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) {
        auto [x, y] = matched(a, b);
        TruncSeries out(x.order());
        for (std::size_t k = 0; k <= x.order(); ++k) out.c_[k] = x.c_[k] - y.c_[k];
        return out;
    }

    // Cauchy product truncated at the common order.
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
        auto [x, y] = matched(a, b);
        TruncSeries out(x.order());
        for (std::size_t k = 0; k <= x.order(); ++k)
            for (std::size_t i = 0; i <= k; ++i) out.c_[k] = out.c_[k] + x.c_[i] * y.c_[k - i];
        return out;
    }

    // Division by a series whose constant term is invertible (nonzero for a
    // field scalar): b_k = (a_k - sum_{i=1..k} den_i b_{k-i}) / den_0.
    TruncSeries div(const TruncSeries& den) const
        requires requires(T a, T b) { { a / b } -> std::convertible_to<T>; }
    {
        auto [num, d] = matched(*this, den);
        if (d.c_[0] == T{}) throw DomainError("series division needs a nonzero constant term");
        TruncSeries out(num.order());
        for (std::size_t k = 0; k <= num.order(); ++k) {
            T acc = num.c_[k];
            for (std::size_t i = 1; i <= k; ++i) acc = acc - d.c_[i] * out.c_[k - i];
            out.c_[k] = acc / d.c_[0];
        }
        return out;
    }

private:
    static std::pair<const TruncSeries&, const TruncSeries&> matched(const TruncSeries& a,
                                                                     const TruncSeries& b) {
        if (a.order() != b.order()) throw std::logic_error("series order mismatch");
        return {a, b};
    }

    std::vector<T> c_;
};

} // namespace horoct
