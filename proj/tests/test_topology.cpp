#include <doctest.h>

#include <cstdint>
#include <vector>

#include "topocard/enumerate.hpp"
#include "topocard/topology.hpp"

using namespace topocard;

namespace {

FiniteSpace make(int n, std::vector<std::uint32_t> opens) {
    return FiniteSpace::validate(n, std::move(opens));
}

// {}, {0}, {0,1} on two points.
FiniteSpace sierpinski() { return make(2, {0, 1, 3}); }

}  // namespace

TEST_CASE("validate accepts real topologies") {
    CHECK(make(1, {0, 1}).opens().size() == 2);
    CHECK(sierpinski().n() == 2);
    CHECK(make(3, {0, 1, 7}).is_open(1));
    // Duplicates collapse, order does not matter.
    FiniteSpace s = make(2, {3, 0, 1, 1});
    CHECK(s.opens() == std::vector<std::uint32_t>{0, 1, 3});
}

TEST_CASE("validate rejects families breaking an axiom") {
    CHECK_THROWS_AS(make(2, {0, 1, 2}), NotATopology);        // missing X
    CHECK_THROWS_AS(make(2, {1, 3}), NotATopology);           // missing empty set
    CHECK_THROWS_AS(make(3, {0, 1, 2, 7}), NotATopology);     // {0} u {1} missing
    CHECK_THROWS_AS(make(3, {0, 3, 5, 7}), NotATopology);     // {0,1} n {0,2} missing
    CHECK_THROWS_AS(make(2, {0, 4, 3}), NotATopology);        // open outside carrier
    CHECK_THROWS_AS(make(0, {0}), NotATopology);              // carrier out of range
    CHECK_THROWS_AS(make(17, {0}), NotATopology);
}

TEST_CASE("closure and interior on the Sierpinski space") {
    FiniteSpace s = sierpinski();
    CHECK(s.closure_mask(1) == 3);  // the open point is dense
    CHECK(s.closure_mask(2) == 2);  // the closed point stays put
    CHECK(s.closure_mask(0) == 0);
    CHECK(s.interior_mask(3) == 3);
    CHECK(s.interior_mask(2) == 0);
    CHECK(s.interior_mask(1) == 1);
    CHECK(s.singleton_closure(0) == 3);
    CHECK(s.singleton_closure(1) == 2);

    PointSet a(1, 2);
    CHECK(closure(s, a) == PointSet(3, 2));
    CHECK(interior(s, PointSet(2, 2)) == PointSet(0, 2));
}

TEST_CASE("operator laws hold on every space with n <= 3") {
    for (int n = 1; n <= 3; ++n) {
        for (const FiniteSpace& s : enumerate_spaces(n)) {
            const std::uint32_t full = s.full_mask();
            for (std::uint32_t a = 0; a <= full; ++a) {
                std::uint32_t cl = s.closure_mask(a);
                CHECK((a & ~cl) == 0);              // extensive
                CHECK(s.closure_mask(cl) == cl);    // idempotent
                CHECK(s.is_closed(cl));
                std::uint32_t in = s.interior_mask(a);
                CHECK((in & ~a) == 0);
                CHECK(s.is_open(in));
                // Duality int(A) = X \ cl(X \ A).
                CHECK(in == (full & ~s.closure_mask(full & ~a)));
                // Closure is the union of its singleton closures.
                std::uint32_t u = 0;
                for (int x = 0; x < n; ++x)
                    if ((a >> x) & 1u) u |= s.singleton_closure(x);
                CHECK(cl == u);
                // Monotone in the argument.
                for (std::uint32_t b = a;; b = (b + 1) | a) {
                    if (b > full) break;
                    CHECK((s.closure_mask(a) & ~s.closure_mask(b)) == 0);
                    if (b == full) break;
                }
            }
        }
    }
}

TEST_CASE("separation flags") {
    FiniteSpace discrete = make(2, {0, 1, 2, 3});
    CHECK(is_t1(discrete));
    CHECK(is_t0(discrete));
    CHECK_FALSE(is_pointwise_non_t1(discrete));

    FiniteSpace s = sierpinski();
    CHECK_FALSE(is_t1(s));
    CHECK(is_t0(s));
    CHECK_FALSE(is_pointwise_non_t1(s));  // {1} is closed

    FiniteSpace indiscrete = make(3, {0, 7});
    CHECK_FALSE(is_t1(indiscrete));
    CHECK_FALSE(is_t0(indiscrete));
    CHECK(is_pointwise_non_t1(indiscrete));

    // In finite spaces T1 forces the discrete topology.
    for (int n = 1; n <= 4; ++n) {
        int t1_count = 0;
        for (const FiniteSpace& s2 : enumerate_spaces(n))
            if (is_t1(s2)) ++t1_count;
        CHECK(t1_count == 1);
    }
}

TEST_CASE("extremal disconnectedness and hyperconnectedness") {
    CHECK(is_extremally_disconnected(make(2, {0, 1, 2, 3})));
    CHECK(is_extremally_disconnected(sierpinski()));
    CHECK_FALSE(is_extremally_disconnected(make(3, {0, 1, 2, 3, 7})));  // cl({0}) = {0,2}

    CHECK(is_hyperconnected(sierpinski()));
    CHECK(is_hyperconnected(make(3, {0, 7})));
    CHECK_FALSE(is_hyperconnected(make(2, {0, 1, 2, 3})));

    SpaceClassification c = classify(sierpinski());
    CHECK_FALSE(c.t1);
    CHECK(c.t0);
    CHECK(c.extremally_disconnected);
    CHECK(c.hyperconnected);
}

TEST_CASE("semi-open sets and their witnesses") {
    FiniteSpace s = make(3, {0, 1, 7});
    SemiOpenCheck yes = is_semi_open(s, PointSet(3, 3));  // {0,1} contains the open {0}
    CHECK(yes.semi_open);
    REQUIRE(yes.witness.has_value());
    CHECK(yes.witness->bits == 1);
    CHECK(s.closure_mask(yes.witness->bits) == 7);

    SemiOpenCheck no = is_semi_open(s, PointSet(6, 3));  // {1,2} has empty interior
    CHECK_FALSE(no.semi_open);
    CHECK_FALSE(no.witness.has_value());

    // The empty set is semi-open with no witness to report.
    CHECK(is_semi_open(s, PointSet(0, 3)).semi_open);

    // Complement duality against an explicit witness search, all small spaces.
    for (int n = 1; n <= 3; ++n) {
        for (const FiniteSpace& sp : enumerate_spaces(n)) {
            const std::uint32_t full = sp.full_mask();
            for (std::uint32_t a = 0; a <= full; ++a) {
                bool witnessed = false;
                for (std::uint32_t o : sp.opens()) {
                    if ((o & ~a) == 0 && (a & ~sp.closure_mask(o)) == 0) witnessed = true;
                }
                CHECK(is_semi_open(sp, PointSet(a, n)).semi_open == witnessed);
                CHECK(is_semi_closed(sp, PointSet(full & ~a, n)) == witnessed);
            }
        }
    }
}

TEST_CASE("specialization preorder round-trips through the Alexandrov opens") {
    SpecializationPreorder pre = specialization_preorder(sierpinski());
    CHECK(pre.n == 2);
    CHECK(pre.up[0] == 1);  // minimal open of the open point
    CHECK(pre.up[1] == 3);  // the closed point sits below it
    CHECK(pre.leq(1, 0));
    CHECK_FALSE(pre.leq(0, 1));
    CHECK(alexandrov_space(pre) == sierpinski());

    for (int n = 1; n <= 4; ++n)
        for (const FiniteSpace& s : enumerate_spaces(n))
            CHECK(alexandrov_space(specialization_preorder(s)) == s);
}
