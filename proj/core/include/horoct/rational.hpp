#pragma once

#include "horoct/errors.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace horoct {

using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;
using BigRat = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                             boost::multiprecision::et_off>;

// Canonical form: "num/den" in lowest terms with the sign on the numerator;
// integers print without "/1".
std::string to_canonical(const BigRat& r);

// Accepts "3", "-3", "3/2". Throws UsageError on anything else, including
// zero denominators. No floating-point literals anywhere.
BigRat parse_rational(std::string_view text);

inline BigRat rat_pow(const BigRat& base, unsigned exp) {
    BigRat r(1);
    for (unsigned i = 0; i < exp; ++i) r *= base;
    return r;
}

} // namespace horoct
