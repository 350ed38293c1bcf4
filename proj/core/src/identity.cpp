#include "horoct/identity.hpp"

#include <algorithm>

namespace horoct {

std::string_view to_string(Status s) {
    switch (s) {
        case Status::match: return "match";
        case Status::mismatch: return "mismatch";
        case Status::inapplicable: return "inapplicable";
    }
    throw std::logic_error("unreachable status");
}

const ClosedForms& EvalContext::forms() {
    if (!forms_) forms_.emplace(params_);
    return *forms_;
}

const TruncSeries<BigRat>& EvalContext::scalar_series_oracle(std::size_t order) {
    if (!scalar_oracle_ || scalar_oracle_->order() < order)
        scalar_oracle_ = gen_series_oracle(params_, std::max<std::size_t>(order, 32));
    return *scalar_oracle_;
}

const TruncSeries<BigRat>& EvalContext::scalar_series_closed(std::size_t order) {
    if (!scalar_closed_ || scalar_closed_->order() < order)
        scalar_closed_ = gen_series_closed(params_, std::max<std::size_t>(order, 32));
    return *scalar_closed_;
}

const TruncSeries<DualOct>& EvalContext::dog_series_oracle_at(std::size_t order) {
    if (!dog_oracle_ || dog_oracle_->order() < order)
        dog_oracle_ = dog_series_oracle(window_, std::max<std::size_t>(order, 32));
    return *dog_oracle_;
}

const TruncSeries<DualOct>& EvalContext::dog_series_closed_at(std::size_t order) {
    if (!dog_closed_ || dog_closed_->order() < order)
        dog_closed_ = dog_series_closed(window_, std::max<std::size_t>(order, 32));
    return *dog_closed_;
}

namespace {

EvalOutcome judge(const BigRat& lhs, const BigRat& rhs) {
    if (lhs == rhs) return {Status::match, std::nullopt};
    return {Status::mismatch, Witness{to_canonical(lhs), to_canonical(rhs)}};
}

EvalOutcome judge(const DualOct& lhs, const DualOct& rhs) {
    if (lhs == rhs) return {Status::match, std::nullopt};
    return {Status::mismatch, Witness{to_string(lhs), to_string(rhs)}};
}

EvalOutcome judge(const DualElem<BigRat>& lhs, const DualElem<BigRat>& rhs) {
    if (lhs == rhs) return {Status::match, std::nullopt};
    return {Status::mismatch, Witness{to_string(lhs), to_string(rhs)}};
}

std::string coeff_label(std::size_t k, const BigRat& v) {
    return "[t^" + std::to_string(k) + "] " + to_canonical(v);
}

std::string coeff_label(std::size_t k, const DualOct& v) {
    return "[t^" + std::to_string(k) + "] " + to_string(v);
}

template <class T>
EvalOutcome judge_series(const TruncSeries<T>& lhs, const TruncSeries<T>& rhs, unsigned upto) {
    for (std::size_t k = 0; k <= upto; ++k) {
        if (!(lhs[k] == rhs[k]))
            return {Status::mismatch, Witness{coeff_label(k, lhs[k]), coeff_label(k, rhs[k])}};
    }
    return {Status::match, std::nullopt};
}

void require_fib(const EvalContext& cx) {
    static const HoradamParams fib = preset_params("fibonacci");
    if (!(cx.params() == fib)) throw DomainError("outside the (0,1;1,1) specialization");
}

void require_index(unsigned n, unsigned min) {
    if (n < min) throw DomainError("n >= " + std::to_string(min) + " required");
}

std::vector<Identity> build_catalog() {
    std::vector<Identity> ids;

    ids.push_back({"eq-2.3-binet-scalar", "as-printed",
                   "w_n = (A al^n - B be^n)/(al - be)",
                   [](EvalContext& cx, unsigned n) {
                       return judge(cx.window().at(n), binet_w(cx.forms(), n));
                   }});

    ids.push_back({"eq-2.4-genfunc-scalar", "as-printed",
                   "sum w_n t^n = (w_0 + (w_1 - p w_0) t)/(1 - p t - q t^2)",
                   [](EvalContext& cx, unsigned n) {
                       return judge_series(cx.scalar_series_oracle(n),
                                           cx.scalar_series_closed(n), n);
                   }});

    ids.push_back({"eq-2.5-cassini-scalar-as-printed", "as-printed",
                   "w_{n+1} w_{n-1} - w_n^2 = q^{n-1} (p a b - b^2 - a^2 q)",
                   [](EvalContext& cx, unsigned n) {
                       return judge(cassini_w_lhs(cx.window(), n),
                                    cassini_w_rhs_as_printed(cx.params(), n));
                   }});

    ids.push_back({"eq-2.5-cassini-scalar-corrected", "candidate-correction",
                   "w_{n+1} w_{n-1} - w_n^2 = (-q)^{n-1} (p a b - b^2 + q a^2)",
                   [](EvalContext& cx, unsigned n) {
                       return judge(cassini_w_lhs(cx.window(), n),
                                    cassini_w_rhs_corrected(cx.params(), n));
                   }});

    ids.push_back({"eq-2.6-sum-scalar-as-printed", "as-printed",
                   "sum_{i=0}^{n} w_i = (b - a(p-1) + q w_n - w_{n+1})/(1 - p - q)",
                   [](EvalContext& cx, unsigned n) {
                       return judge(sum_w_lhs(cx.window(), n),
                                    sum_w_rhs_as_printed(cx.window(), n));
                   }});

    ids.push_back({"eq-2.6-sum-scalar-corrected", "candidate-correction",
                   "sum_{i=0}^{n} w_i = (b - a(p-1) - q w_n - w_{n+1})/(1 - p - q)",
                   [](EvalContext& cx, unsigned n) {
                       return judge(sum_w_lhs(cx.window(), n),
                                    sum_w_rhs_corrected(cx.window(), n));
                   }});

    ids.push_back({"eq-3.1-binet-dog", "as-printed",
                   "dog_n = (A ua al^n (1 + al eps) - B ub be^n (1 + be eps))/(al - be)",
                   [](EvalContext& cx, unsigned n) {
                       return judge(dog(cx.window(), n), binet_dog(cx.forms(), n));
                   }});

    ids.push_back({"eq-3.6-genfunc-dog", "as-printed",
                   "sum dog_n t^n = (dog_0 + (dog_1 - p dog_0) t)/(1 - p t - q t^2)",
                   [](EvalContext& cx, unsigned n) {
                       return judge_series(cx.dog_series_oracle_at(n),
                                           cx.dog_series_closed_at(n), n);
                   }});

    ids.push_back({"eq-3.10-cassini-theorem-variant", "as-printed",
                   "dog_{n-1} dog_{n+1} - dog_n^2 = (c1, c2), "
                   "c1 = AB(al be)^{n-1}(be ua ub - al ub ua)/(al - be)",
                   [](EvalContext& cx, unsigned n) {
                       const Oct c1 = cassini_c1(cx.forms(), n, C1Variant::theorem);
                       const DualOct rhs{c1, cassini_c2_as_printed(cx.forms(), n)};
                       return judge(cassini_dog_lhs(cx.window(), n), rhs);
                   }});

    ids.push_back({"eq-3.10-cassini-proof-variant", "as-printed",
                   "dog_{n-1} dog_{n+1} - dog_n^2 = (c1, c2), "
                   "c1 = AB(al be)^{n-1}(be ub ua - al ua ub)/(al - be)",
                   [](EvalContext& cx, unsigned n) {
                       const Oct c1 = cassini_c1(cx.forms(), n, C1Variant::proof);
                       const DualOct rhs{c1, cassini_c2_as_printed(cx.forms(), n)};
                       return judge(cassini_dog_lhs(cx.window(), n), rhs);
                   }});

    ids.push_back({"eq-3.10-cassini-corrected", "candidate-correction",
                   "dog_{n-1} dog_{n+1} - dog_n^2 = (c1, p c1) with the theorem-variant c1",
                   [](EvalContext& cx, unsigned n) {
                       const Oct c1 = cassini_c1(cx.forms(), n, C1Variant::theorem);
                       const DualOct rhs{c1, cx.params().p * c1};
                       return judge(cassini_dog_lhs(cx.window(), n), rhs);
                   }});

    ids.push_back({"eq-3.11-sum-dog", "as-printed",
                   "sum_{i=0}^{n} dog_i = (d1, d2) with "
                   "d1 = (B ub be^{n+1}/(1-be) - A ua al^{n+1}/(1-al))/(al-be) + K",
                   [](EvalContext& cx, unsigned n) {
                       return judge(sum_dog_lhs(cx.window(), n),
                                    sum_dog_rhs(cx.forms(), cx.window(), n));
                   }});

    ids.push_back({"eq-3.12-norm-dog-as-printed", "as-printed",
                   "Nr(dog_n) = (e1, e2), L = 2AB(-q)^n (a + (-q) + ... + (-q)^7)/(al-be)^2",
                   [](EvalContext& cx, unsigned n) {
                       return judge(norm_dog_oracle(cx.window(), n),
                                    norm_dog_rhs(cx.forms(), cx.window(), n,
                                                 NormLead::as_printed));
                   }});

    ids.push_back({"eq-3.12-norm-dog-L-corrected", "candidate-correction",
                   "Nr(dog_n) = (e1, e2), L = 2AB(-q)^n (1 + (-q) + ... + (-q)^7)/(al-be)^2",
                   [](EvalContext& cx, unsigned n) {
                       return judge(norm_dog_oracle(cx.window(), n),
                                    norm_dog_rhs(cx.forms(), cx.window(), n,
                                                 NormLead::corrected));
                   }});

    ids.push_back({"dual-fib-binet", "as-printed",
                   "(0,1;1,1) only: dog_n = (ua al^n (1 + al eps) - ub be^n (1 + be eps))/(al - be)",
                   [](EvalContext& cx, unsigned n) {
                       require_fib(cx);
                       return judge(dog(cx.window(), n), binet_dog(cx.forms(), n));
                   }});

    ids.push_back({"dual-fib-genfunc", "as-printed",
                   "(0,1;1,1) only: sum dog_n t^n = (dog_0 + (dog_1 - dog_0) t)/(1 - t - t^2)",
                   [](EvalContext& cx, unsigned n) {
                       require_fib(cx);
                       return judge_series(cx.dog_series_oracle_at(n),
                                           cx.dog_series_closed_at(n), n);
                   }});

    ids.push_back({"dual-fib-cassini-as-printed", "as-printed",
                   "(0,1;1,1) only: dog_{n-1} dog_{n+1} - dog_n^2 = "
                   "(-1)^n (dog_1^2 - dog_0^2 - dog_1 dog_0)",
                   [](EvalContext& cx, unsigned n) {
                       require_fib(cx);
                       require_index(n, 1);
                       SeqWindow& w = cx.window();
                       const DualOct g0 = dog(w, 0), g1 = dog(w, 1);
                       const DualOct base = g1 * g1 - g0 * g0 - g1 * g0;
                       const DualOct rhs = n % 2 == 0 ? base : -base;
                       return judge(cassini_dog_lhs(w, n), rhs);
                   }});

    ids.push_back({"dual-fib-cassini-reversed-order", "candidate-correction",
                   "(0,1;1,1) only: dog_{n+1} dog_{n-1} - dog_n^2 = "
                   "(-1)^n (dog_1^2 - dog_0^2 - dog_1 dog_0)",
                   [](EvalContext& cx, unsigned n) {
                       require_fib(cx);
                       require_index(n, 1);
                       SeqWindow& w = cx.window();
                       const DualOct g0 = dog(w, 0), g1 = dog(w, 1);
                       const DualOct base = g1 * g1 - g0 * g0 - g1 * g0;
                       const DualOct rhs = n % 2 == 0 ? base : -base;
                       return judge(cassini_dog_lhs_reversed(w, n), rhs);
                   }});

    ids.push_back({"dual-fib-sum-as-printed", "as-printed",
                   "(0,1;1,1) only: sum_{i=1}^{n} dog_i = dog_2 F_{n+1} + dog_1 F_{n-1} - dog_2",
                   [](EvalContext& cx, unsigned n) {
                       require_fib(cx);
                       require_index(n, 1);
                       SeqWindow& w = cx.window();
                       const DualOct lhs = sum_dog_lhs(w, n) - dog(w, 0);
                       const DualOct rhs = scale(w.at(n + 1), dog(w, 2)) +
                                           scale(w.at(n - 1), dog(w, 1)) - dog(w, 2);
                       return judge(lhs, rhs);
                   }});

    ids.push_back({"dual-fib-sum-corrected", "candidate-correction",
                   "(0,1;1,1) only: sum_{i=1}^{n} dog_i = dog_2 F_{n+1} + dog_1 F_n - dog_2",
                   [](EvalContext& cx, unsigned n) {
                       require_fib(cx);
                       require_index(n, 1);
                       SeqWindow& w = cx.window();
                       const DualOct lhs = sum_dog_lhs(w, n) - dog(w, 0);
                       const DualOct rhs = scale(w.at(n + 1), dog(w, 2)) +
                                           scale(w.at(n), dog(w, 1)) - dog(w, 2);
                       return judge(lhs, rhs);
                   }});

    ids.push_back({"dual-fib-norm-21", "as-printed",
                   "(0,1;1,1) only: Nr(dog_n) = 21 (F_{2n+7} + 2 F_{2n+8} eps)",
                   [](EvalContext& cx, unsigned n) {
                       require_fib(cx);
                       SeqWindow& w = cx.window();
                       const DualElem<BigRat> rhs{21 * w.at(2 * n + 7), 42 * w.at(2 * n + 8)};
                       return judge(norm_dog_oracle(w, n), rhs);
                   }});

    std::sort(ids.begin(), ids.end(),
              [](const Identity& x, const Identity& y) { return x.id < y.id; });
    return ids;
}

} // namespace

const Registry& Registry::builtin() {
    static const Registry reg = [] {
        Registry r;
        r.identities_ = build_catalog();
        return r;
    }();
    return reg;
}

const Identity* Registry::find(std::string_view id) const {
    const auto it = std::lower_bound(
        identities_.begin(), identities_.end(), id,
        [](const Identity& lhs, std::string_view key) { return lhs.id < key; });
    if (it == identities_.end() || it->id != id) return nullptr;
    return &*it;
}

} // namespace horoct
