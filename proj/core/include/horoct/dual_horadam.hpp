#pragma once

#include "horoct/dual.hpp"
#include "horoct/horadam.hpp"
#include "horoct/octonion.hpp"
#include "horoct/quadratic.hpp"
#include "horoct/series.hpp"

namespace horoct {

using Oct = Octonion<BigRat>;
using QOct = Octonion<QuadScalar>;
using DualOct = DualElem<Oct>;

// OG_n = w_n e_0 + w_{n+1} e_1 + ... + w_{n+7} e_7
Oct og(SeqWindow& w, unsigned n);

// dog_n = OG_n + OG_{n+1} eps
DualOct dog(SeqWindow& w, unsigned n);

// underline(s) = 1 e_0 + s e_1 + s^2 e_2 + ... + s^7 e_7
QOct underline(const QuadScalar& s);

// Componentwise reduction; std::logic_error if any root coefficient survives.
// Every registered right-hand side is invariant under w -> -w, so this never
// fires on a correct evaluation.
Oct to_rational_oct(const QOct& x);

// Per-parameter-point closed-form ingredients, computed once and shared by
// every formula at that point. Construction throws DomainError("D = 0") when
// the characteristic roots coincide.
struct ClosedForms {
    explicit ClosedForms(const HoradamParams& hp);

    HoradamParams params;
    RootPair roots;
    QuadScalar omega;          // alpha - beta
    QuadScalar omega_inv;      // 1/(alpha - beta)
    QuadScalar omega_sq_inv;   // 1/(alpha - beta)^2
    QOct ua, ub;               // underline(alpha), underline(beta)
    QOct uab, uba;             // underline products, both operand orders
    QOct ua2, ub2;             // underline squares
};

BigRat binet_w(const ClosedForms& f, unsigned n);
DualOct binet_dog(const ClosedForms& f, unsigned n);

// Coefficients of sum dog_n t^n: from the recurrence, and as the expansion of
// (dog_0 + (dog_1 - p dog_0) t) / (1 - p t - q t^2). The scalar denominator
// is inverted once; the octonion numerators never multiply each other.
TruncSeries<DualOct> dog_series_oracle(SeqWindow& w, std::size_t order);
TruncSeries<DualOct> dog_series_closed(SeqWindow& w, std::size_t order);

// dog_{n-1} dog_{n+1} - dog_n^2 with the left factor first; n >= 1.
DualOct cassini_dog_lhs(SeqWindow& w, unsigned n);
// dog_{n+1} dog_{n-1} - dog_n^2 (swapped product order); n >= 1.
DualOct cassini_dog_lhs_reversed(SeqWindow& w, unsigned n);

// The real part AB (al be)^{n-1} (...) / (al - be) is catalogued in two
// variants that differ in the parenthesized products:
//   theorem: be ua ub - al ub ua
//   proof:   be ub ua - al ua ub
enum class C1Variant { theorem, proof };
Oct cassini_c1(const ClosedForms& f, unsigned n, C1Variant v);

// Dual part as catalogued:
//   [A^2 ua^2 al^{2n} (al-1)^2 + B^2 ub^2 be^{2n} (be-1)^2] / (al-be)^2
//   - AB (al be)^{n-1} [(be^2 + al be^3 - al be^2 - al^2 be) ua ub
//                       + (al^2 + al^3 be - al^2 be - al be^2) ub ua]
// with the second bracket literally not divided by (al-be)^2.
Oct cassini_c2_as_printed(const ClosedForms& f, unsigned n);

// sum_{i=0}^{n} dog_i by direct summation.
DualOct sum_dog_lhs(SeqWindow& w, unsigned n);
// (d1, d2) with d1 = [B ub be^{n+1}/(1-be) - A ua al^{n+1}/(1-al)]/(al-be) + K,
// d2 the same at n+2 minus OG_0 plus K, and
// K = [A ua (1-be) - B ub (1-al)] / [(al-be)(1-al)(1-be)].
// DomainError("p + q = 1") when 1 is a characteristic root.
DualOct sum_dog_rhs(const ClosedForms& f, SeqWindow& w, unsigned n);

// dual_norm(dog_n), computed from the literal octonion products.
DualElem<BigRat> norm_dog_oracle(SeqWindow& w, unsigned n);

// (e1, e2) with
//   e1 = [A^2 al^{2n} sum al^{2i} + B^2 be^{2n} sum be^{2i}]/(al-be)^2 - L,
//   L  = 2AB(-q)^n (lead + (-q) + ... + (-q)^7) / (al-be)^2,
//   e2 = 2 sum_{i=0}^{7} w_{n+i} w_{n+1+i},
// where lead is the catalogued literal "a" or the corrected "1".
enum class NormLead { as_printed, corrected };
DualElem<BigRat> norm_dog_rhs(const ClosedForms& f, SeqWindow& w, unsigned n, NormLead lead);

} // namespace horoct
