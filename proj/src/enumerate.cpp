#include "topocard/enumerate.hpp"

namespace topocard {

bool EnumerationFilter::matches(const FiniteSpace& space) const {
    if (require_non_t1 && is_t1(space)) return false;
    if (require_pointwise_non_t1 && !is_pointwise_non_t1(space)) return false;
    if (require_ed && !is_extremally_disconnected(space)) return false;
    if (require_hyperconnected && !is_hyperconnected(space)) return false;
    if (require_t0 && !is_t0(space)) return false;
    return true;
}

std::uint64_t preorder_candidate_count(int n) {
    return std::uint64_t{1} << (n * (n - 1));
}

bool decode_preorder(int n, std::uint64_t index, SpecializationPreorder& out) {
    out.n = n;
    out.up.fill(0);
    const int cells = n * (n - 1);
    int cell = 0;
    for (int i = 0; i < n; ++i) {
        std::uint32_t row = 1u << i;
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            // Cell 0 = matrix entry (0,1) sits in the most significant bit,
            // so increasing index is lexicographic matrix order.
            if ((index >> (cells - 1 - cell)) & 1u) row |= 1u << j;
            ++cell;
        }
        out.up[i] = row;
    }
    // Transitivity: the up-set of every reachable point stays inside.
    for (int i = 0; i < n; ++i) {
        std::uint32_t rest = out.up[i];
        while (rest) {
            int j = std::countr_zero(rest);
            rest &= rest - 1;
            if ((out.up[j] & ~out.up[i]) != 0) return false;
        }
    }
    return true;
}

void for_each_space_in_range(int n, const EnumerationFilter& filter, std::uint64_t begin,
                             std::uint64_t end, const SpaceBody& body) {
    if (n < 1 || n > kMaxEnumCarrier)
        throw CarrierTooLarge("enumeration supports carriers of 1 to " +
                              std::to_string(kMaxEnumCarrier) + " points, got " +
                              std::to_string(n));
    SpecializationPreorder pre;
    for (std::uint64_t c = begin; c < end; ++c) {
        if (!decode_preorder(n, c, pre)) continue;
        FiniteSpace space = alexandrov_space(pre);
        if (filter.matches(space)) body(space);
    }
}

void for_each_space(int n, const EnumerationFilter& filter, const SpaceBody& body) {
    if (n < 1 || n > kMaxEnumCarrier)
        throw CarrierTooLarge("enumeration supports carriers of 1 to " +
                              std::to_string(kMaxEnumCarrier) + " points, got " +
                              std::to_string(n));
    for_each_space_in_range(n, filter, 0, preorder_candidate_count(n), body);
}

std::vector<FiniteSpace> enumerate_spaces(int n, const EnumerationFilter& filter) {
    std::vector<FiniteSpace> out;
    for_each_space(n, filter, [&](const FiniteSpace& s) { out.push_back(s); });
    return out;
}

void for_each_subset_pair(const FiniteSpace& space, PairMode mode, const PairBody& body) {
    const int n = space.n();
    switch (mode) {
        case PairMode::AllSubsets: {
            const std::uint32_t full = space.full_mask();
            for (std::uint32_t a = 0; a <= full; ++a)
                for (std::uint32_t b = 0; b <= full; ++b)
                    body(PointSet(a, n), PointSet(b, n));
            break;
        }
        case PairMode::OpenPairsDisjoint:
            for (std::uint32_t a : space.opens())
                for (std::uint32_t b : space.opens())
                    if (a != 0 && b != 0 && (a & b) == 0) body(PointSet(a, n), PointSet(b, n));
            break;
        case PairMode::OpenCovers:
            for (std::uint32_t a : space.opens())
                for (std::uint32_t b : space.opens())
                    if (a != 0 && b != 0 && (a | b) == space.full_mask())
                        body(PointSet(a, n), PointSet(b, n));
            break;
    }
}

std::vector<std::pair<PointSet, PointSet>> enumerate_subset_pairs(const FiniteSpace& space,
                                                                  PairMode mode) {
    std::vector<std::pair<PointSet, PointSet>> out;
    for_each_subset_pair(space, mode, [&](const PointSet& a, const PointSet& b) {
        out.emplace_back(a, b);
    });
    return out;
}

}  // namespace topocard
