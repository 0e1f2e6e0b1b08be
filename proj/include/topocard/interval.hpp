#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace topocard {

// Failure modes shared by interval operations and the theorem estimators.
// Every one of them means "the hypotheses cannot hold together", never
// "the implementation gave up".
enum class EstimateErrorCode {
    EmptyAfterClamp,      // upper endpoint negative after intersecting with N0
    DivisorContainsZero,  // interval division with 0 in the divisor
    DisjointEstimates,    // refinement of two non-overlapping estimates
    EmptyEstimate,        // a theorem formula produced lo > hi
    HypothesisViolated,   // input bundle breaks a stated invariant
};

const char* estimate_error_name(EstimateErrorCode code);

class EstimateError : public std::runtime_error {
  public:
    EstimateError(EstimateErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    EstimateErrorCode code() const { return code_; }
    const char* code_name() const { return estimate_error_name(code_); }

  private:
    EstimateErrorCode code_;
};

namespace detail {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in interval arithmetic");
    return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in interval arithmetic");
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in interval arithmetic");
    return r;
}

}  // namespace detail

// Closed integer interval [lo, hi] with 0 <= lo <= hi; the estimate
// "cardinality of some set lies between lo and hi". Empty intervals are
// rejected at construction, they are never a value.
struct NatInterval {
    std::int64_t lo = 0;
    std::int64_t hi = 0;

    NatInterval() = default;
    NatInterval(std::int64_t lo_, std::int64_t hi_) : lo(lo_), hi(hi_) {
        if (lo < 0)
            throw std::invalid_argument("NatInterval endpoint must be nonnegative, got lo=" +
                                        std::to_string(lo));
        if (lo > hi)
            throw std::invalid_argument("NatInterval requires lo <= hi, got [" +
                                        std::to_string(lo) + ", " + std::to_string(hi) + "]");
    }

    bool contains(std::int64_t v) const { return lo <= v && v <= hi; }
    std::int64_t width() const { return hi - lo; }
    bool is_scalar() const { return lo == hi; }

    friend bool operator==(const NatInterval&, const NatInterval&) = default;
};

// Intermediate result of interval subtraction, before clamping to N0.
struct SignedInterval {
    std::int64_t lo = 0;
    std::int64_t hi = 0;

    SignedInterval() = default;
    SignedInterval(std::int64_t lo_, std::int64_t hi_) : lo(lo_), hi(hi_) {
        if (lo > hi)
            throw std::invalid_argument("SignedInterval requires lo <= hi, got [" +
                                        std::to_string(lo) + ", " + std::to_string(hi) + "]");
    }

    friend bool operator==(const SignedInterval&, const SignedInterval&) = default;
};

// A known scalar cardinality k is the width-0 interval [k, k].
inline NatInterval from_scalar(std::int64_t k) { return NatInterval(k, k); }

// [a1,a2] + [b1,b2] = [a1+b1, a2+b2]
inline NatInterval add(const NatInterval& a, const NatInterval& b) {
    return NatInterval(detail::checked_add(a.lo, b.lo), detail::checked_add(a.hi, b.hi));
}

// [a1,a2] - [b1,b2] = [a1-b2, a2-b1]; may dip below zero, hence signed.
inline SignedInterval sub(const NatInterval& a, const NatInterval& b) {
    return SignedInterval(detail::checked_sub(a.lo, b.hi), detail::checked_sub(a.hi, b.lo));
}

// Intersect a signed interval with N0. Fails when the whole interval is
// negative: no nonnegative cardinality satisfies the estimate.
inline NatInterval clamp_nat(const SignedInterval& s) {
    if (s.hi < 0)
        throw EstimateError(EstimateErrorCode::EmptyAfterClamp,
                            "interval [" + std::to_string(s.lo) + ", " + std::to_string(s.hi) +
                                "] has no nonnegative member");
    return NatInterval(s.lo < 0 ? 0 : s.lo, s.hi);
}

// Nonnegative endpoints make the generic min/max product rule collapse to
// [a1*b1, a2*b2].
inline NatInterval mul(const NatInterval& a, const NatInterval& b) {
    return NatInterval(detail::checked_mul(a.lo, b.lo), detail::checked_mul(a.hi, b.hi));
}

// Integer interval division for cardinalities: [ceil(c1/a2), floor(c2/a1)],
// defined only when 0 is not in the divisor. The quotient interval can be
// empty (e.g. c=[7,7], a=[2,2]), which signals inconsistent hypotheses.
NatInterval div_card(const NatInterval& c, const NatInterval& a);

// Two estimates for the same cardinality combine into their intersection.
NatInterval refine(const NatInterval& a, const NatInterval& b);

}  // namespace topocard
