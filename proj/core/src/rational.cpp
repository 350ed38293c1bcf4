#include "horoct/rational.hpp"

#include "horoct/errors.hpp"

#include <cctype>

namespace horoct {

std::string to_canonical(const BigRat& r) {
    const BigInt num(numerator(r));
    const BigInt den(denominator(r));
    std::string out = num.str();
    if (den != 1) {
        out += '/';
        out += den.str();
    }
    return out;
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char ch : s)
        if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    return true;
}

} // namespace

BigRat parse_rational(std::string_view text) {
    const std::string shown(text);
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }

    std::string_view num = body;
    std::string_view den = "1";
    if (const auto slash = body.find('/'); slash != std::string_view::npos) {
        num = body.substr(0, slash);
        den = body.substr(slash + 1);
    }
    if (!all_digits(num) || !all_digits(den))
        throw UsageError("malformed rational literal: \"" + shown + "\"");

    const BigInt n{std::string(num)};
    const BigInt d{std::string(den)};
    if (d == 0) throw UsageError("zero denominator in rational literal: \"" + shown + "\"");

    BigRat r(n);
    r /= BigRat(d);
    return negative ? BigRat(-r) : r;
}

} // namespace horoct
