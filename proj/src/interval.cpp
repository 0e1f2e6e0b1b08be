#include "topocard/interval.hpp"

namespace topocard {

const char* estimate_error_name(EstimateErrorCode code) {
    switch (code) {
        case EstimateErrorCode::EmptyAfterClamp: return "EmptyAfterClamp";
        case EstimateErrorCode::DivisorContainsZero: return "DivisorContainsZero";
        case EstimateErrorCode::DisjointEstimates: return "DisjointEstimates";
        case EstimateErrorCode::EmptyEstimate: return "EmptyEstimate";
        case EstimateErrorCode::HypothesisViolated: return "HypothesisViolated";
    }
    return "UnknownError";
}

NatInterval div_card(const NatInterval& c, const NatInterval& a) {
    if (a.lo == 0)
        throw EstimateError(EstimateErrorCode::DivisorContainsZero,
                            "divisor interval [" + std::to_string(a.lo) + ", " +
                                std::to_string(a.hi) + "] contains 0");
    // Endpoints are nonnegative, so ceil(c.lo/a.hi) = (c.lo + a.hi - 1) / a.hi
    // and floor(c.hi/a.lo) is plain integer division.
    std::int64_t lo = (c.lo + a.hi - 1) / a.hi;
    std::int64_t hi = c.hi / a.lo;
    if (lo > hi)
        throw EstimateError(EstimateErrorCode::EmptyAfterClamp,
                            "quotient interval [" + std::to_string(lo) + ", " +
                                std::to_string(hi) + "] is empty");
    return NatInterval(lo, hi);
}

NatInterval refine(const NatInterval& a, const NatInterval& b) {
    std::int64_t lo = a.lo > b.lo ? a.lo : b.lo;
    std::int64_t hi = a.hi < b.hi ? a.hi : b.hi;
    if (lo > hi)
        throw EstimateError(EstimateErrorCode::DisjointEstimates,
                            "estimates [" + std::to_string(a.lo) + ", " + std::to_string(a.hi) +
                                "] and [" + std::to_string(b.lo) + ", " + std::to_string(b.hi) +
                                "] are disjoint");
    return NatInterval(lo, hi);
}

}  // namespace topocard
