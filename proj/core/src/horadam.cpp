#include "horoct/horadam.hpp"

#include "horoct/dual_horadam.hpp"

#include <tuple>

namespace horoct {

bool params_less(const HoradamParams& lhs, const HoradamParams& rhs) {
    return std::tie(lhs.a, lhs.b, lhs.p, lhs.q) < std::tie(rhs.a, rhs.b, rhs.p, rhs.q);
}

HoradamParams preset_params(std::string_view name) {
    if (name == "fibonacci") return {BigRat(0), BigRat(1), BigRat(1), BigRat(1)};
    if (name == "lucas") return {BigRat(2), BigRat(1), BigRat(1), BigRat(1)};
    if (name == "pell") return {BigRat(0), BigRat(1), BigRat(2), BigRat(1)};
    throw UsageError("unknown preset: \"" + std::string(name) + "\"");
}

SeqWindow::SeqWindow(HoradamParams hp) : p_(std::move(hp)), w_{p_.a, p_.b} {}

BigRat SeqWindow::at(std::size_t n) {
    while (w_.size() <= n) {
        const std::size_t k = w_.size();
        w_.push_back(p_.p * w_[k - 1] + p_.q * w_[k - 2]);
    }
    return w_[n];
}

BigRat horadam_w(const HoradamParams& hp, unsigned n) {
    SeqWindow w(hp);
    return w.at(n);
}

RootPair char_roots(const HoradamParams& hp) {
    const BigRat d = discriminant(hp);
    if (d == 0) throw DomainError("D = 0");
    const QuadScalar half(BigRat(1) / 2);
    const QuadScalar omega = QuadScalar::root(d);
    RootPair r;
    r.alpha = half * (QuadScalar(hp.p) + omega);
    r.beta = half * (QuadScalar(hp.p) - omega);
    r.A = QuadScalar(hp.b) - QuadScalar(hp.a) * r.beta;
    r.B = QuadScalar(hp.b) - QuadScalar(hp.a) * r.alpha;
    r.disc = d;
    return r;
}

BigRat binet_w(const HoradamParams& hp, unsigned n) {
    return binet_w(ClosedForms(hp), n);
}

TruncSeries<BigRat> gen_series_oracle(const HoradamParams& hp, std::size_t order) {
    SeqWindow w(hp);
    TruncSeries<BigRat> s(order);
    for (std::size_t k = 0; k <= order; ++k) s[k] = w.at(k);
    return s;
}

TruncSeries<BigRat> gen_series_closed(const HoradamParams& hp, std::size_t order) {
    TruncSeries<BigRat> num(order);
    num[0] = hp.a;
    if (order >= 1) num[1] = hp.b - hp.p * hp.a;
    TruncSeries<BigRat> den(order);
    den[0] = 1;
    if (order >= 1) den[1] = -hp.p;
    if (order >= 2) den[2] = -hp.q;
    return num.div(den);
}

BigRat cassini_w_lhs(SeqWindow& w, unsigned n) {
    if (n < 1) throw DomainError("n >= 1 required");
    return w.at(n + 1) * w.at(n - 1) - w.at(n) * w.at(n);
}

BigRat cassini_w_rhs_as_printed(const HoradamParams& hp, unsigned n) {
    if (n < 1) throw DomainError("n >= 1 required");
    return rat_pow(hp.q, n - 1) * (hp.p * hp.a * hp.b - hp.b * hp.b - hp.a * hp.a * hp.q);
}

BigRat cassini_w_rhs_corrected(const HoradamParams& hp, unsigned n) {
    if (n < 1) throw DomainError("n >= 1 required");
    return rat_pow(BigRat(-hp.q), n - 1) * (hp.p * hp.a * hp.b - hp.b * hp.b + hp.q * hp.a * hp.a);
}

BigRat sum_w_lhs(SeqWindow& w, unsigned n) {
    BigRat acc(0);
    for (unsigned i = 0; i <= n; ++i) acc += w.at(i);
    return acc;
}

namespace {

BigRat sum_w_rhs(SeqWindow& w, unsigned n, int qn_sign) {
    const auto& hp = w.params();
    const BigRat denom = 1 - hp.p - hp.q;
    if (denom == 0) throw DomainError("p + q = 1");
    const BigRat numer =
        hp.b - hp.a * (hp.p - 1) + qn_sign * hp.q * w.at(n) - w.at(n + 1);
    return numer / denom;
}

} // namespace

BigRat sum_w_rhs_as_printed(SeqWindow& w, unsigned n) { return sum_w_rhs(w, n, +1); }

BigRat sum_w_rhs_corrected(SeqWindow& w, unsigned n) { return sum_w_rhs(w, n, -1); }

} // namespace horoct
