#include "horoct/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>

namespace horoct {

SweepConfig default_sweep() {
    static const int seeds[] = {-1, 0, 1, 2};
    static const int coeffs[] = {-1, 1, 2, 3};
    SweepConfig cfg;
    for (int a : seeds)
        for (int b : seeds)
            for (int p : coeffs)
                for (int q : coeffs) {
                    HoradamParams pt{BigRat(a), BigRat(b), BigRat(p), BigRat(q)};
                    if (discriminant(pt) == 0) continue;
                    cfg.points.push_back(std::move(pt));
                }
    return cfg;
}

namespace {

std::vector<const Identity*> resolve_identities(const Registry& reg,
                                                const std::vector<std::string>& ids) {
    std::vector<const Identity*> out;
    if (ids.empty()) {
        for (const Identity& ident : reg.all()) out.push_back(&ident);
        return out;
    }
    std::vector<std::string> wanted = ids;
    std::sort(wanted.begin(), wanted.end());
    wanted.erase(std::unique(wanted.begin(), wanted.end()), wanted.end());
    for (const std::string& id : wanted) {
        const Identity* ident = reg.find(id);
        if (!ident) throw UsageError("unknown identity: " + id);
        out.push_back(ident);
    }
    return out;
}

} // namespace

std::vector<Verdict> run_sweep(const Registry& reg, const SweepConfig& cfg) {
    if (cfg.n_min > cfg.n_max) throw UsageError("empty index range");
    const std::vector<const Identity*> idents = resolve_identities(reg, cfg.ids);

    std::vector<HoradamParams> points = cfg.points;
    std::sort(points.begin(), points.end(), params_less);
    points.erase(std::unique(points.begin(), points.end()), points.end());

    const std::size_t span = cfg.n_max - cfg.n_min + 1;
    const std::size_t per_point = idents.size() * span;
    std::vector<std::vector<Verdict>> slots(points.size());

    auto eval_point = [&](std::size_t pi) {
        EvalContext cx(points[pi]);
        std::vector<Verdict>& out = slots[pi];
        out.reserve(per_point);
        for (const Identity* ident : idents)
            for (unsigned n = cfg.n_min; n <= cfg.n_max; ++n) {
                EvalOutcome res;
                try {
                    res = ident->eval(cx, n);
                } catch (const DomainError&) {
                    res = {Status::inapplicable, std::nullopt};
                }
                out.push_back({ident->id, points[pi], n, res.status, std::move(res.witness)});
            }
    };

    const unsigned jobs =
        std::min<std::size_t>(std::max(1u, cfg.jobs), std::max<std::size_t>(points.size(), 1));
    if (jobs <= 1) {
        for (std::size_t pi = 0; pi < points.size(); ++pi) eval_point(pi);
    } else {
        std::atomic<std::size_t> next{0};
        std::mutex fail_mu;
        std::exception_ptr failure;
        auto worker = [&] {
            for (;;) {
                const std::size_t pi = next.fetch_add(1);
                if (pi >= points.size()) return;
                try {
                    eval_point(pi);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(fail_mu);
                    if (!failure) failure = std::current_exception();
                    return;
                }
            }
        };
        std::vector<std::thread> pool;
        pool.reserve(jobs);
        for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (std::thread& t : pool) t.join();
        if (failure) std::rethrow_exception(failure);
    }

    std::vector<Verdict> verdicts;
    verdicts.reserve(points.size() * per_point);
    for (std::size_t ii = 0; ii < idents.size(); ++ii)
        for (std::size_t pi = 0; pi < points.size(); ++pi)
            for (std::size_t k = 0; k < span; ++k)
                verdicts.push_back(std::move(slots[pi][ii * span + k]));
    return verdicts;
}

} // namespace horoct
