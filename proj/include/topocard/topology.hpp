#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace topocard {

// Carrier sizes are capped so every subset fits in one machine word and the
// set operations below are single instructions.
inline constexpr int kMaxCarrier = 16;

// Subset of an n-point carrier {0, ..., n-1}; bit i set <=> point i in the set.
struct PointSet {
    std::uint32_t bits = 0;
    int n = 0;

    PointSet() = default;
    PointSet(std::uint32_t bits_, int n_) : bits(bits_), n(n_) {
        if (n < 0 || n > kMaxCarrier)
            throw std::invalid_argument("PointSet carrier size out of range: " + std::to_string(n));
        if ((bits >> n) != 0)
            throw std::invalid_argument("PointSet has bits outside the carrier");
    }

    int card() const { return std::popcount(bits); }
    bool empty() const { return bits == 0; }
    bool contains(int point) const { return (bits >> point) & 1u; }
    bool subset_of(const PointSet& other) const { return (bits & ~other.bits) == 0; }

    friend bool operator==(const PointSet&, const PointSet&) = default;
};

class NotATopology : public std::runtime_error {
  public:
    explicit NotATopology(const std::string& what) : std::runtime_error(what) {}
};

// A finite topological space: carrier {0..n-1} plus its open-set family,
// stored as sorted deduplicated bitmasks. Construction goes through
// validate(), which enforces the axioms; instances are immutable afterwards.
class FiniteSpace {
  public:
    // Checks that `opens` contains the empty set and the full carrier and is
    // closed under pairwise union and intersection (enough for a finite
    // family). Throws NotATopology naming the first violation found.
    static FiniteSpace validate(int n, std::vector<std::uint32_t> opens);

    int n() const { return n_; }
    std::uint32_t full_mask() const { return full_; }
    const std::vector<std::uint32_t>& opens() const { return opens_; }

    bool is_open(std::uint32_t mask) const;
    bool is_closed(std::uint32_t mask) const { return is_open(full_ & ~mask); }

    // cl(A) = X minus the union of all opens disjoint from A.
    std::uint32_t closure_mask(std::uint32_t a) const;
    // int(A) = union of all opens contained in A.
    std::uint32_t interior_mask(std::uint32_t a) const;

    // Closure of the singleton {x}, precomputed at validation time.
    std::uint32_t singleton_closure(int x) const { return cl_singleton_[x]; }

    friend bool operator==(const FiniteSpace& a, const FiniteSpace& b) {
        return a.n_ == b.n_ && a.opens_ == b.opens_;
    }

  private:
    FiniteSpace(int n, std::vector<std::uint32_t> opens);

    int n_ = 0;
    std::uint32_t full_ = 0;
    std::vector<std::uint32_t> opens_;
    std::array<std::uint32_t, kMaxCarrier> cl_singleton_{};
};

PointSet closure(const FiniteSpace& space, const PointSet& a);
PointSet interior(const FiniteSpace& space, const PointSet& a);

// Distinguishability flags. t1 implies t0; t1 and pointwise_non_t1 exclude
// each other on nonempty carriers.
struct SpaceClassification {
    bool t0 = false;
    bool t1 = false;
    bool pointwise_non_t1 = false;
    bool extremally_disconnected = false;
    bool hyperconnected = false;
};

// Every singleton is closed.
bool is_t1(const FiniteSpace& space);
// No two distinct points share membership in each other's closures.
bool is_t0(const FiniteSpace& space);
// Every singleton closure has at least two points. Strictly stronger than
// "not T1": it forbids closed singletons pointwise.
bool is_pointwise_non_t1(const FiniteSpace& space);
// The closure of every open set is open.
bool is_extremally_disconnected(const FiniteSpace& space);
// Every nonempty open set is dense.
bool is_hyperconnected(const FiniteSpace& space);

SpaceClassification classify(const FiniteSpace& space);

struct SemiOpenCheck {
    bool semi_open = false;
    // The witness open O = int(A) with O <= A <= cl(O); present exactly when
    // the set is semi-open and nonempty.
    std::optional<PointSet> witness;
};

// A is semi-open iff A <= cl(int(A)).
SemiOpenCheck is_semi_open(const FiniteSpace& space, const PointSet& a);
// B is semi-closed iff int(cl(B)) <= B; equivalently the complement is semi-open.
bool is_semi_closed(const FiniteSpace& space, const PointSet& b);

// The specialization preorder of a space: y <= x iff y is in cl({x}).
// Stored row-wise as up[y] = { x : y <= x }, which is exactly the minimal
// open neighborhood of y. Opens of the space are the up-closed sets.
struct SpecializationPreorder {
    int n = 0;
    std::array<std::uint32_t, kMaxCarrier> up{};

    bool leq(int y, int x) const { return (up[y] >> x) & 1u; }

    friend bool operator==(const SpecializationPreorder&, const SpecializationPreorder&) = default;
};

SpecializationPreorder specialization_preorder(const FiniteSpace& space);

// Rebuilds the Alexandrov topology whose specialization preorder is `pre`:
// opens are the sets S with up[y] <= S for every y in S. Round-trips with
// specialization_preorder on every finite space.
FiniteSpace alexandrov_space(const SpecializationPreorder& pre);

}  // namespace topocard
