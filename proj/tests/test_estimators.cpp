#include <doctest.h>

#include <vector>

#include "topocard/estimators.hpp"

using namespace topocard;

namespace {

template <typename Fn>
EstimateErrorCode error_code(Fn&& fn) {
    try {
        fn();
    } catch (const EstimateError& e) {
        return e.code();
    }
    FAIL("expected EstimateError");
    return EstimateErrorCode::HypothesisViolated;
}

}  // namespace

TEST_CASE("strict superset chain bound") {
    CHECK(est_superset_card({5, NatInterval(2, 2)}) == NatInterval(3, 4));
    CHECK(est_superset_card({5, NatInterval(0, 3)}) == NatInterval(1, 4));
    CHECK(est_superset_card({10, NatInterval(4, 6)}) == NatInterval(5, 9));
    // Two points leave no room for a strict chain.
    CHECK(error_code([] { est_superset_card({2, NatInterval(1, 1)}); }) ==
          EstimateErrorCode::EmptyEstimate);
    CHECK(error_code([] { est_superset_card({3, NatInterval(4, 5)}); }) ==
          EstimateErrorCode::HypothesisViolated);
}

TEST_CASE("factor cardinality via interval division") {
    CHECK(est_factor_card({NatInterval(12, 20), NatInterval(3, 4)}) == NatInterval(3, 6));
    CHECK(est_factor_card({NatInterval(0, 0), NatInterval(2, 2)}) == NatInterval(0, 0));
    CHECK(est_factor_card({NatInterval(9, 9), NatInterval(3, 3)}) == NatInterval(3, 3));
    CHECK(error_code([] { est_factor_card({NatInterval(4, 8), NatInterval(0, 2)}); }) ==
          EstimateErrorCode::DivisorContainsZero);
    // An empty quotient means the product hypothesis is inconsistent.
    CHECK(error_code([] { est_factor_card({NatInterval(5, 5), NatInterval(7, 7)}); }) ==
          EstimateErrorCode::EmptyEstimate);
}

TEST_CASE("intersection cardinality from a union split") {
    CHECK(est_intersection_card({NatInterval(10, 10), NatInterval(4, 6), NatInterval(5, 7)}) ==
          NatInterval(0, 3));
    // Width-0 inputs collapse to the exact inclusion-exclusion value.
    CHECK(est_intersection_card({NatInterval(7, 7), NatInterval(4, 4), NatInterval(5, 5)}) ==
          NatInterval(2, 2));
    CHECK(est_intersection_card({NatInterval(3, 3), NatInterval(3, 3), NatInterval(1, 1)}) ==
          NatInterval(1, 1));
    CHECK(error_code([] {
              est_intersection_card({NatInterval(4, 4), NatInterval(1, 1), NatInterval(1, 1)});
          }) == EstimateErrorCode::EmptyAfterClamp);
    CHECK(error_code([] {
              est_intersection_card({NatInterval(3, 3), NatInterval(4, 4), NatInterval(1, 1)});
          }) == EstimateErrorCode::HypothesisViolated);
}

TEST_CASE("closure cardinality doubles the subset size") {
    CHECK(est_closure_card({6, 2}) == NatInterval(4, 6));
    CHECK(est_closure_card({5, 2}) == NatInterval(4, 5));
    CHECK(est_closure_card({4, 2}) == NatInterval(4, 4));
    CHECK(est_closure_card({2, 1}) == NatInterval(2, 2));
    CHECK(error_code([] { est_closure_card({5, 0}); }) == EstimateErrorCode::HypothesisViolated);
    CHECK(error_code([] { est_closure_card({5, 3}); }) == EstimateErrorCode::HypothesisViolated);
}

TEST_CASE("interior cardinality from closure caps") {
    CHECK(est_interior_card({6, 4, {3, 3}}) == NatInterval(0, 2));
    CHECK(est_interior_card({6, 4, {2, 2}}) == NatInterval(2, 2));
    CHECK(est_interior_card({5, 5, {}}) == NatInterval(5, 5));  // A = X, no outside points
    CHECK(est_interior_card({4, 2, {2, 2}}) == NatInterval(0, 0));
    CHECK(error_code([] { est_interior_card({6, 2, {3, 3, 3, 3}}); }) ==
          EstimateErrorCode::HypothesisViolated);  // p below half the carrier
    CHECK(error_code([] { est_interior_card({6, 4, {3}}); }) ==
          EstimateErrorCode::HypothesisViolated);  // wrong cap count
    CHECK(error_code([] { est_interior_card({6, 4, {3, 1}}); }) ==
          EstimateErrorCode::HypothesisViolated);  // cap below 2
}

TEST_CASE("semi-open cardinality from a witness") {
    CHECK(est_semiopen_card({7, 2}) == NatInterval(3, 3));
    CHECK(est_semiopen_card({7, 3}) == NatInterval(4, 5));
    CHECK(est_semiopen_card({10, 4}) == NatInterval(5, 7));
    CHECK(error_code([] { est_semiopen_card({7, 1}); }) == EstimateErrorCode::EmptyEstimate);
    CHECK(error_code([] { est_semiopen_card({7, 4}); }) == EstimateErrorCode::HypothesisViolated);
    CHECK(error_code([] { est_semiopen_card({7, 0}); }) == EstimateErrorCode::HypothesisViolated);
}

TEST_CASE("closure of a disjoint open union") {
    CHECK(est_ed_union_closure_card({NatInterval(8, 10), NatInterval(1, 2), NatInterval(2, 3)}) ==
          NatInterval(6, 10));
    CHECK(est_ed_union_closure_card({NatInterval(4, 4), NatInterval(1, 1), NatInterval(1, 1)}) ==
          NatInterval(4, 4));
    CHECK(error_code([] {
              est_ed_union_closure_card({NatInterval(4, 4), NatInterval(2, 2), NatInterval(2, 2)});
          }) == EstimateErrorCode::EmptyEstimate);
}

TEST_CASE("open cover intersection shares the inclusion-exclusion arithmetic") {
    std::vector<UnionSplitHypothesis> grid;
    for (int xl = 1; xl <= 4; ++xl)
        for (int xh = xl; xh <= 4; ++xh)
            for (int al = 0; al <= xh; ++al)
                for (int ah = al; ah <= xh; ++ah)
                    for (int bl = 0; bl <= xh; ++bl)
                        for (int bh = bl; bh <= xh; ++bh)
                            grid.push_back({NatInterval(xl, xh), NatInterval(al, ah),
                                            NatInterval(bl, bh)});
    for (const UnionSplitHypothesis& h : grid) {
        NatInterval a(0, 0), b(0, 0);
        bool a_threw = false, b_threw = false;
        EstimateErrorCode ca{}, cb{};
        try {
            a = est_intersection_card(h);
        } catch (const EstimateError& e) {
            a_threw = true;
            ca = e.code();
        }
        try {
            b = est_hyperconnected_intersection_card(h);
        } catch (const EstimateError& e) {
            b_threw = true;
            cb = e.code();
        }
        REQUIRE(a_threw == b_threw);
        if (a_threw)
            CHECK(ca == cb);
        else
            CHECK(a == b);
    }
    CHECK(est_hyperconnected_intersection_card(
              {NatInterval(5, 6), NatInterval(3, 4), NatInterval(3, 4)}) == NatInterval(0, 3));
}

TEST_CASE("widening inputs never narrows outputs") {
    auto nested = [](const NatInterval& inner, const NatInterval& outer) {
        return outer.lo <= inner.lo && inner.hi <= outer.hi;
    };
    std::vector<NatInterval> grid;
    for (int lo = 0; lo <= 6; ++lo)
        for (int hi = lo; hi <= 6; ++hi) grid.emplace_back(lo, hi);

    for (const NatInterval& a1 : grid) {
        for (const NatInterval& a2 : grid) {
            if (!nested(a1, a2)) continue;

            // est_factor_card, widening the divisor (dividend fixed).
            if (a1.lo >= 1 && a2.lo >= 1) {
                try {
                    NatInterval narrow = est_factor_card({NatInterval(4, 12), a1});
                    NatInterval wide = est_factor_card({NatInterval(4, 12), a2});
                    CHECK(nested(narrow, wide));
                } catch (const EstimateError&) {
                }
            }

            // est_intersection_card, widening card(A) with x and b fixed.
            try {
                NatInterval narrow =
                    est_intersection_card({NatInterval(6, 6), a1, NatInterval(3, 4)});
                NatInterval wide =
                    est_intersection_card({NatInterval(6, 6), a2, NatInterval(3, 4)});
                CHECK(nested(narrow, wide));
            } catch (const EstimateError&) {
            }

            // est_superset_card in the subset bound.
            try {
                NatInterval narrow = est_superset_card({8, a1});
                NatInterval wide = est_superset_card({8, a2});
                CHECK(nested(narrow, wide));
            } catch (const EstimateError&) {
            }

            // est_ed_union_closure_card in both open bounds.
            try {
                NatInterval narrow =
                    est_ed_union_closure_card({NatInterval(10, 12), a1, NatInterval(1, 2)});
                NatInterval wide =
                    est_ed_union_closure_card({NatInterval(10, 12), a2, NatInterval(1, 2)});
                CHECK(nested(narrow, wide));
            } catch (const EstimateError&) {
            }
        }
    }
}

TEST_CASE("theorem identifiers") {
    for (const char* id : kTheoremIds) CHECK(is_known_theorem(id));
    CHECK_FALSE(is_known_theorem("thm9.9"));
    CHECK_FALSE(is_known_theorem(""));
    CHECK(kTheoremIds.size() == 8);
}
