#include "horoct/dual_horadam.hpp"

namespace horoct {

Oct og(SeqWindow& w, unsigned n) {
    Oct out;
    for (std::size_t i = 0; i < 8; ++i) out.c[i] = w.at(n + i);
    return out;
}

DualOct dog(SeqWindow& w, unsigned n) { return {og(w, n), og(w, n + 1)}; }

QOct underline(const QuadScalar& s) {
    QOct out;
    for (std::size_t i = 0; i < 8; ++i) out.c[i] = quad_pow(s, static_cast<unsigned>(i));
    return out;
}

Oct to_rational_oct(const QOct& x) {
    Oct out;
    for (std::size_t i = 0; i < 8; ++i) out.c[i] = x.c[i].as_rational();
    return out;
}

ClosedForms::ClosedForms(const HoradamParams& hp)
    : params(hp),
      roots(char_roots(hp)),
      omega(QuadScalar::root(roots.disc)),
      omega_inv(omega.inv()),
      omega_sq_inv((omega * omega).inv()),
      ua(underline(roots.alpha)),
      ub(underline(roots.beta)),
      uab(ua * ub),
      uba(ub * ua),
      ua2(ua * ua),
      ub2(ub * ub) {}

BigRat binet_w(const ClosedForms& f, unsigned n) {
    const QuadScalar v =
        (f.roots.A * quad_pow(f.roots.alpha, n) - f.roots.B * quad_pow(f.roots.beta, n)) *
        f.omega_inv;
    return v.as_rational();
}

DualOct binet_dog(const ClosedForms& f, unsigned n) {
    const QuadScalar sa = f.roots.A * quad_pow(f.roots.alpha, n);
    const QuadScalar sb = f.roots.B * quad_pow(f.roots.beta, n);
    const QOct re = f.omega_inv * (sa * f.ua - sb * f.ub);
    const QOct du = f.omega_inv * ((sa * f.roots.alpha) * f.ua - (sb * f.roots.beta) * f.ub);
    return {to_rational_oct(re), to_rational_oct(du)};
}

TruncSeries<DualOct> dog_series_oracle(SeqWindow& w, std::size_t order) {
    std::vector<DualOct> coeffs(order + 1);
    for (std::size_t k = 0; k <= order; ++k) coeffs[k] = dog(w, static_cast<unsigned>(k));
    return TruncSeries<DualOct>::from_coeffs(std::move(coeffs));
}

TruncSeries<DualOct> dog_series_closed(SeqWindow& w, std::size_t order) {
    const auto& hp = w.params();
    TruncSeries<BigRat> num(order);
    num[0] = 1;
    TruncSeries<BigRat> den(order);
    den[0] = 1;
    if (order >= 1) den[1] = -hp.p;
    if (order >= 2) den[2] = -hp.q;
    const TruncSeries<BigRat> inv_den = num.div(den);

    const DualOct g0 = dog(w, 0);
    const DualOct g1_shift = dog(w, 1) - scale(hp.p, g0);
    std::vector<DualOct> coeffs(order + 1);
    for (std::size_t k = 0; k <= order; ++k) {
        coeffs[k] = scale(inv_den[k], g0);
        if (k >= 1) coeffs[k] = coeffs[k] + scale(inv_den[k - 1], g1_shift);
    }
    return TruncSeries<DualOct>::from_coeffs(std::move(coeffs));
}

DualOct cassini_dog_lhs(SeqWindow& w, unsigned n) {
    if (n < 1) throw DomainError("n >= 1 required");
    return dog(w, n - 1) * dog(w, n + 1) - dog(w, n) * dog(w, n);
}

DualOct cassini_dog_lhs_reversed(SeqWindow& w, unsigned n) {
    if (n < 1) throw DomainError("n >= 1 required");
    return dog(w, n + 1) * dog(w, n - 1) - dog(w, n) * dog(w, n);
}

Oct cassini_c1(const ClosedForms& f, unsigned n, C1Variant v) {
    if (n < 1) throw DomainError("n >= 1 required");
    const QuadScalar& al = f.roots.alpha;
    const QuadScalar& be = f.roots.beta;
    const QOct inner = v == C1Variant::theorem ? be * f.uab - al * f.uba
                                               : be * f.uba - al * f.uab;
    const QuadScalar lead = f.roots.A * f.roots.B * quad_pow(al * be, n - 1) * f.omega_inv;
    return to_rational_oct(lead * inner);
}

Oct cassini_c2_as_printed(const ClosedForms& f, unsigned n) {
    if (n < 1) throw DomainError("n >= 1 required");
    const QuadScalar& al = f.roots.alpha;
    const QuadScalar& be = f.roots.beta;
    const QuadScalar one(1);

    const QuadScalar sa = f.roots.A * f.roots.A * quad_pow(al, 2 * n) * (al - one) * (al - one);
    const QuadScalar sb = f.roots.B * f.roots.B * quad_pow(be, 2 * n) * (be - one) * (be - one);
    const QOct first = f.omega_sq_inv * (sa * f.ua2 + sb * f.ub2);

    const QuadScalar co_ab = be * be + al * quad_pow(be, 3) - al * be * be - al * al * be;
    const QuadScalar co_ba = al * al + quad_pow(al, 3) * be - al * al * be - al * be * be;
    const QuadScalar lead = f.roots.A * f.roots.B * quad_pow(al * be, n - 1);
    const QOct second = lead * (co_ab * f.uab + co_ba * f.uba);

    return to_rational_oct(first - second);
}

DualOct sum_dog_lhs(SeqWindow& w, unsigned n) {
    DualOct acc = dog(w, 0);
    for (unsigned i = 1; i <= n; ++i) acc = acc + dog(w, i);
    return acc;
}

DualOct sum_dog_rhs(const ClosedForms& f, SeqWindow& w, unsigned n) {
    const auto& hp = f.params;
    if (1 - hp.p - hp.q == 0) throw DomainError("p + q = 1");
    const QuadScalar& al = f.roots.alpha;
    const QuadScalar& be = f.roots.beta;
    const QuadScalar one(1);
    const QuadScalar ia = (one - al).inv();
    const QuadScalar ib = (one - be).inv();

    const QOct k_num = (f.roots.A * (one - be)) * f.ua - (f.roots.B * (one - al)) * f.ub;
    const QOct K = (f.omega_inv * ia * ib) * k_num;

    const auto tail = [&](unsigned exp) {
        return f.omega_inv * ((f.roots.B * quad_pow(be, exp) * ib) * f.ub -
                              (f.roots.A * quad_pow(al, exp) * ia) * f.ua);
    };
    const QOct d1 = tail(n + 1) + K;

    QOct og0;
    for (std::size_t i = 0; i < 8; ++i) og0.c[i] = QuadScalar(w.at(i));
    const QOct d2 = tail(n + 2) - og0 + K;

    return {to_rational_oct(d1), to_rational_oct(d2)};
}

DualElem<BigRat> norm_dog_oracle(SeqWindow& w, unsigned n) { return dual_norm(dog(w, n)); }

DualElem<BigRat> norm_dog_rhs(const ClosedForms& f, SeqWindow& w, unsigned n, NormLead lead) {
    const auto& hp = f.params;
    const QuadScalar& al = f.roots.alpha;
    const QuadScalar& be = f.roots.beta;

    QuadScalar sa(0), sb(0);
    for (unsigned i = 0; i < 8; ++i) {
        sa = sa + quad_pow(al, 2 * i);
        sb = sb + quad_pow(be, 2 * i);
    }
    QuadScalar geo(lead == NormLead::as_printed ? hp.a : BigRat(1));
    const QuadScalar mq(BigRat(-hp.q));
    for (unsigned i = 1; i < 8; ++i) geo = geo + quad_pow(mq, i);

    const QuadScalar big = f.roots.A * f.roots.A * quad_pow(al, 2 * n) * sa +
                           f.roots.B * f.roots.B * quad_pow(be, 2 * n) * sb;
    const QuadScalar L = QuadScalar(2) * f.roots.A * f.roots.B * quad_pow(mq, n) * geo;
    const QuadScalar e1 = (big - L) * f.omega_sq_inv;

    BigRat e2(0);
    for (unsigned i = 0; i < 8; ++i) e2 += w.at(n + i) * w.at(n + 1 + i);
    e2 *= 2;

    return {e1.as_rational(), e2};
}

} // namespace horoct
