#include "topocard/topology.hpp"

#include <algorithm>

namespace topocard {

namespace {

std::string mask_to_string(std::uint32_t mask, int n) {
    std::string out = "{";
    bool first = true;
    for (int i = 0; i < n; ++i) {
        if ((mask >> i) & 1u) {
            if (!first) out += ",";
            out += std::to_string(i);
            first = false;
        }
    }
    out += "}";
    return out;
}

}  // namespace

FiniteSpace FiniteSpace::validate(int n, std::vector<std::uint32_t> opens) {
    if (n < 1 || n > kMaxCarrier)
        throw NotATopology("carrier size must be in [1, " + std::to_string(kMaxCarrier) +
                           "], got " + std::to_string(n));
    const std::uint32_t full = (1u << n) - 1u;
    for (std::uint32_t o : opens) {
        if ((o & ~full) != 0)
            throw NotATopology("open set " + std::to_string(o) + " has points outside the carrier");
    }

    std::sort(opens.begin(), opens.end());
    opens.erase(std::unique(opens.begin(), opens.end()), opens.end());

    if (opens.empty() || opens.front() != 0)
        throw NotATopology("the empty set is missing from the open-set family");
    if (opens.back() != full)
        throw NotATopology("the full carrier " + mask_to_string(full, n) +
                           " is missing from the open-set family");

    // Pairwise closure suffices for finite families.
    for (std::size_t i = 0; i < opens.size(); ++i) {
        for (std::size_t j = i + 1; j < opens.size(); ++j) {
            std::uint32_t u = opens[i] | opens[j];
            if (!std::binary_search(opens.begin(), opens.end(), u))
                throw NotATopology("union of opens " + mask_to_string(opens[i], n) + " and " +
                                   mask_to_string(opens[j], n) + " = " + mask_to_string(u, n) +
                                   " is not in the family");
            std::uint32_t v = opens[i] & opens[j];
            if (!std::binary_search(opens.begin(), opens.end(), v))
                throw NotATopology("intersection of opens " + mask_to_string(opens[i], n) +
                                   " and " + mask_to_string(opens[j], n) + " = " +
                                   mask_to_string(v, n) + " is not in the family");
        }
    }

    return FiniteSpace(n, std::move(opens));
}

FiniteSpace::FiniteSpace(int n, std::vector<std::uint32_t> opens)
    : n_(n), full_((1u << n) - 1u), opens_(std::move(opens)) {
    for (int x = 0; x < n_; ++x) cl_singleton_[x] = closure_mask(1u << x);
}

bool FiniteSpace::is_open(std::uint32_t mask) const {
    return std::binary_search(opens_.begin(), opens_.end(), mask);
}

std::uint32_t FiniteSpace::closure_mask(std::uint32_t a) const {
    std::uint32_t avoid = 0;
    for (std::uint32_t o : opens_) {
        if ((o & a) == 0) avoid |= o;
    }
    return full_ & ~avoid;
}

std::uint32_t FiniteSpace::interior_mask(std::uint32_t a) const {
    std::uint32_t inner = 0;
    for (std::uint32_t o : opens_) {
        if ((o & ~a) == 0) inner |= o;
    }
    return inner;
}

PointSet closure(const FiniteSpace& space, const PointSet& a) {
    return PointSet(space.closure_mask(a.bits), space.n());
}

PointSet interior(const FiniteSpace& space, const PointSet& a) {
    return PointSet(space.interior_mask(a.bits), space.n());
}

bool is_t1(const FiniteSpace& space) {
    for (int x = 0; x < space.n(); ++x) {
        if (space.singleton_closure(x) != (1u << x)) return false;
    }
    return true;
}

bool is_t0(const FiniteSpace& space) {
    // Antisymmetry of the specialization preorder.
    for (int x = 0; x < space.n(); ++x) {
        for (int y = x + 1; y < space.n(); ++y) {
            bool y_in_clx = (space.singleton_closure(x) >> y) & 1u;
            bool x_in_cly = (space.singleton_closure(y) >> x) & 1u;
            if (y_in_clx && x_in_cly) return false;
        }
    }
    return true;
}

bool is_pointwise_non_t1(const FiniteSpace& space) {
    for (int x = 0; x < space.n(); ++x) {
        if (std::popcount(space.singleton_closure(x)) < 2) return false;
    }
    return true;
}

bool is_extremally_disconnected(const FiniteSpace& space) {
    for (std::uint32_t o : space.opens()) {
        if (!space.is_open(space.closure_mask(o))) return false;
    }
    return true;
}

bool is_hyperconnected(const FiniteSpace& space) {
    for (std::uint32_t o : space.opens()) {
        if (o != 0 && space.closure_mask(o) != space.full_mask()) return false;
    }
    return true;
}

SpaceClassification classify(const FiniteSpace& space) {
    SpaceClassification c;
    c.t0 = is_t0(space);
    c.t1 = is_t1(space);
    c.pointwise_non_t1 = is_pointwise_non_t1(space);
    c.extremally_disconnected = is_extremally_disconnected(space);
    c.hyperconnected = is_hyperconnected(space);
    return c;
}

SemiOpenCheck is_semi_open(const FiniteSpace& space, const PointSet& a) {
    SemiOpenCheck result;
    std::uint32_t inner = space.interior_mask(a.bits);
    result.semi_open = (a.bits & ~space.closure_mask(inner)) == 0;
    if (result.semi_open && a.bits != 0) result.witness = PointSet(inner, space.n());
    return result;
}

bool is_semi_closed(const FiniteSpace& space, const PointSet& b) {
    std::uint32_t m = space.interior_mask(space.closure_mask(b.bits));
    return (m & ~b.bits) == 0;
}

SpecializationPreorder specialization_preorder(const FiniteSpace& space) {
    SpecializationPreorder pre;
    pre.n = space.n();
    for (int x = 0; x < pre.n; ++x) {
        std::uint32_t clx = space.singleton_closure(x);
        for (int y = 0; y < pre.n; ++y) {
            if ((clx >> y) & 1u) pre.up[y] |= 1u << x;
        }
    }
    return pre;
}

FiniteSpace alexandrov_space(const SpecializationPreorder& pre) {
    const std::uint32_t full = (1u << pre.n) - 1u;
    std::vector<std::uint32_t> opens;
    for (std::uint32_t s = 0; s <= full; ++s) {
        bool up_closed = true;
        std::uint32_t rest = s;
        while (rest) {
            int y = std::countr_zero(rest);
            rest &= rest - 1;
            if ((pre.up[y] & ~s) != 0) {
                up_closed = false;
                break;
            }
        }
        if (up_closed) opens.push_back(s);
    }
    return FiniteSpace::validate(pre.n, std::move(opens));
}

}  // namespace topocard
