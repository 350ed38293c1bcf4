#pragma once

#include "horoct/dual_horadam.hpp"
#include "horoct/horadam.hpp"

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace horoct {

enum class Status { match, mismatch, inapplicable };

std::string_view to_string(Status s);

struct Witness {
    std::string lhs, rhs;

    friend bool operator==(const Witness&, const Witness&) = default;
};

struct Verdict {
    std::string identity_id;
    HoradamParams params;
    unsigned n = 0;
    Status status = Status::inapplicable;
    std::optional<Witness> witness;  // present iff status == mismatch
};

struct EvalOutcome {
    Status status;
    std::optional<Witness> witness;
};

// Everything one parameter point needs, built lazily and reused across every
// identity and index evaluated there. Not thread-safe; each sweep task owns
// its own context.
class EvalContext {
public:
    explicit EvalContext(const HoradamParams& hp) : params_(hp), window_(hp) {}

    const HoradamParams& params() const { return params_; }
    SeqWindow& window() { return window_; }
    const ClosedForms& forms();  // DomainError("D = 0") on repeated roots

    const TruncSeries<BigRat>& scalar_series_oracle(std::size_t order);
    const TruncSeries<BigRat>& scalar_series_closed(std::size_t order);
    const TruncSeries<DualOct>& dog_series_oracle_at(std::size_t order);
    const TruncSeries<DualOct>& dog_series_closed_at(std::size_t order);

private:
    HoradamParams params_;
    SeqWindow window_;
    std::optional<ClosedForms> forms_;
    std::optional<TruncSeries<BigRat>> scalar_oracle_, scalar_closed_;
    std::optional<TruncSeries<DualOct>> dog_oracle_, dog_closed_;
};

// One catalogued claim, adjudicated pointwise against the direct oracle.
// Evaluators throw DomainError outside their precondition; the sweep records
// those points as inapplicable.
struct Identity {
    std::string id;
    std::string tag;    // "as-printed" or "candidate-correction"
    std::string claim;  // the formula under audit, human-readable
    std::function<EvalOutcome(EvalContext&, unsigned)> eval;
};

class Registry {
public:
    // The built-in catalog, ordered by id.
    static const Registry& builtin();

    const std::vector<Identity>& all() const { return identities_; }
    const Identity* find(std::string_view id) const;

private:
    std::vector<Identity> identities_;
};

} // namespace horoct
