#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "topocard/topology.hpp"

namespace topocard {

// Exhaustive enumeration is supported up to this carrier size; beyond it the
// labeled-topology counts explode (209527 already at n=6).
inline constexpr int kMaxEnumCarrier = 5;

class CarrierTooLarge : public std::runtime_error {
  public:
    explicit CarrierTooLarge(const std::string& what) : std::runtime_error(what) {}
};

// Conjunctive space-class filter; all-false selects every space.
struct EnumerationFilter {
    bool require_non_t1 = false;            // literal: not is_t1
    bool require_pointwise_non_t1 = false;  // every singleton closure has >= 2 points
    bool require_ed = false;
    bool require_hyperconnected = false;
    bool require_t0 = false;

    bool matches(const FiniteSpace& space) const;
};

// Labeled topologies on n points are in bijection with preorders on n points.
// The generator walks all reflexive relations in lexicographic order of the
// n x n relation matrix (row-major, diagonal fixed at 1) and keeps the
// transitive ones, so emission order is deterministic and a contiguous
// counter range is a shardable unit of work.

// Number of candidate relations: 2^(n(n-1)).
std::uint64_t preorder_candidate_count(int n);

// Decodes candidate `index` into preorder rows; false when not transitive.
bool decode_preorder(int n, std::uint64_t index, SpecializationPreorder& out);

using SpaceBody = std::function<void(const FiniteSpace&)>;

// Every labeled topology on n points passing the filter, exactly once, in
// candidate order. Throws CarrierTooLarge for n outside [1, kMaxEnumCarrier].
void for_each_space(int n, const EnumerationFilter& filter, const SpaceBody& body);

// Same sweep restricted to candidate indices [begin, end); the building block
// for sharded and multi-threaded runs.
void for_each_space_in_range(int n, const EnumerationFilter& filter, std::uint64_t begin,
                             std::uint64_t end, const SpaceBody& body);

std::vector<FiniteSpace> enumerate_spaces(int n, const EnumerationFilter& filter = {});

enum class PairMode {
    AllSubsets,         // every ordered pair of subsets
    OpenPairsDisjoint,  // ordered pairs of nonempty opens with empty intersection
    OpenCovers,         // ordered pairs of nonempty opens whose union is X
};

using PairBody = std::function<void(const PointSet&, const PointSet&)>;

void for_each_subset_pair(const FiniteSpace& space, PairMode mode, const PairBody& body);

std::vector<std::pair<PointSet, PointSet>> enumerate_subset_pairs(const FiniteSpace& space,
                                                                  PairMode mode);

}  // namespace topocard
