#include "topocard/estimators.hpp"

#include <algorithm>
#include <numeric>

namespace topocard {

namespace {

[[noreturn]] void hypothesis_violated(const std::string& what) {
    throw EstimateError(EstimateErrorCode::HypothesisViolated, what);
}

void check_union_split(const UnionSplitHypothesis& h) {
    if (h.a.hi > h.x.hi)
        hypothesis_violated("card(A) upper bound " + std::to_string(h.a.hi) +
                           " exceeds card(X) upper bound " + std::to_string(h.x.hi));
    if (h.b.hi > h.x.hi)
        hypothesis_violated("card(B) upper bound " + std::to_string(h.b.hi) +
                           " exceeds card(X) upper bound " + std::to_string(h.x.hi));
}

}  // namespace

NatInterval est_superset_card(const SupersetHypothesis& h) {
    if (h.n < 1) hypothesis_violated("carrier cardinality must be positive");
    if (h.a.hi > h.n)
        hypothesis_violated("card(A) upper bound " + std::to_string(h.a.hi) +
                           " exceeds carrier cardinality " + std::to_string(h.n));
    // Strict chain A < B < X: card(B) at least a1+1 and at most n-1.
    std::int64_t lo = h.a.lo + 1;
    std::int64_t hi = h.n - 1;
    if (lo > hi)
        throw EstimateError(EstimateErrorCode::EmptyEstimate,
                            "no strict chain fits: [" + std::to_string(lo) + ", " +
                                std::to_string(hi) + "] is empty");
    return NatInterval(lo, hi);
}

NatInterval est_factor_card(const ProductHypothesis& h) {
    if (h.a.lo < 1)
        throw EstimateError(EstimateErrorCode::DivisorContainsZero,
                            "card(A) lower bound must be at least 1 for interval division");
    try {
        return div_card(h.c, h.a);
    } catch (const EstimateError& e) {
        if (e.code() == EstimateErrorCode::EmptyAfterClamp)
            throw EstimateError(EstimateErrorCode::EmptyEstimate,
                                std::string("no factor cardinality is consistent: ") + e.what());
        throw;
    }
}

NatInterval est_intersection_card(const UnionSplitHypothesis& h) {
    check_union_split(h);
    // Inclusion-exclusion: card(A int B) = card(A) + card(B) - card(A un B).
    return clamp_nat(sub(add(h.a, h.b), h.x));
}

NatInterval est_closure_card(const ClosureHypothesis& h) {
    if (h.n < 1) hypothesis_violated("carrier cardinality must be positive");
    if (h.m < 1 || h.m > h.n / 2)
        hypothesis_violated("card(A) = " + std::to_string(h.m) + " outside [1, " +
                           std::to_string(h.n / 2) + "]");
    return NatInterval(2 * h.m, h.n);
}

NatInterval est_interior_card(const InteriorHypothesis& h) {
    if (h.n < 1) hypothesis_violated("carrier cardinality must be positive");
    std::int64_t half_up = (h.n + 1) / 2;
    if (h.p < half_up || h.p > h.n)
        hypothesis_violated("card(A) = " + std::to_string(h.p) + " outside [" +
                           std::to_string(half_up) + ", " + std::to_string(h.n) + "]");
    if (static_cast<std::int64_t>(h.k_caps.size()) != h.n - h.p)
        hypothesis_violated("expected " + std::to_string(h.n - h.p) +
                           " closure caps (one per point outside A), got " +
                           std::to_string(h.k_caps.size()));
    for (std::int64_t k : h.k_caps) {
        if (k < 2) hypothesis_violated("closure cap " + std::to_string(k) + " is below 2");
    }
    std::int64_t sum = std::accumulate(h.k_caps.begin(), h.k_caps.end(), std::int64_t{0});
    if (h.n <= sum) return NatInterval(0, 2 * h.p - h.n);
    return NatInterval(h.n - sum, 2 * h.p - h.n);
}

NatInterval est_semiopen_card(const SemiOpenHypothesis& h) {
    if (h.n < 1) hypothesis_violated("carrier cardinality must be positive");
    if (h.k < 1 || h.k > h.n / 2)
        hypothesis_violated("witness cardinality k = " + std::to_string(h.k) + " outside [1, " +
                           std::to_string(h.n / 2) + "]");
    if (h.k == 1)
        throw EstimateError(EstimateErrorCode::EmptyEstimate,
                            "k = 1 yields the empty interval [2, 1]");
    return NatInterval(h.k + 1, 2 * h.k - 1);
}

NatInterval est_ed_union_closure_card(const EdUnionHypothesis& h) {
    check_union_split(UnionSplitHypothesis{h.x, h.a, h.b});
    std::int64_t lo = 2 * h.a.lo + 2 * h.b.lo;
    if (lo > h.x.hi)
        throw EstimateError(EstimateErrorCode::EmptyEstimate,
                            "closure lower bound " + std::to_string(lo) +
                                " exceeds carrier upper bound " + std::to_string(h.x.hi));
    return NatInterval(lo, h.x.hi);
}

NatInterval est_hyperconnected_intersection_card(const UnionSplitHypothesis& h) {
    return est_intersection_card(h);
}

bool is_known_theorem(const std::string& id) {
    return std::find(kTheoremIds.begin(), kTheoremIds.end(), id) != kTheoremIds.end();
}

}  // namespace topocard
