#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "topocard/interval.hpp"

namespace topocard {

// Hypothesis bundles for the eight cardinality theorems. Each estimator is
// pure arithmetic on its bundle; pairing a bundle with an actual space and
// sets is the verifier's job.

// A strictly between B strictly between X, with card(X) = n known exactly
// and card(A) only known as an interval.
struct SupersetHypothesis {
    std::int64_t n = 0;
    NatInterval a;
};

// C = A x B with both card(C) and card(A) interval-valued.
struct ProductHypothesis {
    NatInterval c;
    NatInterval a;
};

// X = A union B; card(X) in x, card(A) in a, card(B) in b.
struct UnionSplitHypothesis {
    NatInterval x;
    NatInterval a;
    NatInterval b;
};

// Nonempty A with exact cardinality m in a space of n points where no
// singleton closure is trivial.
struct ClosureHypothesis {
    std::int64_t n = 0;
    std::int64_t m = 0;
};

// A of exact cardinality p covering at least half the carrier; one closure
// cap (>= 2) per point outside A.
struct InteriorHypothesis {
    std::int64_t n = 0;
    std::int64_t p = 0;
    std::vector<std::int64_t> k_caps;
};

// Semi-open A with a witness open of exact cardinality k.
struct SemiOpenHypothesis {
    std::int64_t n = 0;
    std::int64_t k = 0;
};

// Disjoint nonempty opens A and B in an extremally disconnected space.
struct EdUnionHypothesis {
    NatInterval x;
    NatInterval a;
    NatInterval b;
};

// card(B) in [a1+1, n-1]
NatInterval est_superset_card(const SupersetHypothesis& h);

// card(B) in [ceil(c1/a2), floor(c2/a1)]
NatInterval est_factor_card(const ProductHypothesis& h);

// card(A int B) in [a1+b1-n, a2+b2-m] intersect N0
NatInterval est_intersection_card(const UnionSplitHypothesis& h);

// card(cl(A)) in [2m, n]
NatInterval est_closure_card(const ClosureHypothesis& h);

// card(int(A)) in [0, 2p-n] when n <= sum(k), else [n-sum(k), 2p-n]
NatInterval est_interior_card(const InteriorHypothesis& h);

// card(A) in [k+1, 2k-1]
NatInterval est_semiopen_card(const SemiOpenHypothesis& h);

// card(cl(A union B)) in [2a1+2b1, n] intersect N0
NatInterval est_ed_union_closure_card(const EdUnionHypothesis& h);

// Same arithmetic as est_intersection_card; kept as its own operation because
// the hypothesis class (hyperconnected space, open cover) is different.
NatInterval est_hyperconnected_intersection_card(const UnionSplitHypothesis& h);

// Stable identifiers used by the CLI and the verification reports.
inline constexpr std::array<const char*, 8> kTheoremIds = {
    "thm2.1", "thm2.2", "thm2.3", "thm3.1", "thm3.2", "thm3.3", "thm3.4", "thm3.5",
};

bool is_known_theorem(const std::string& id);

}  // namespace topocard
