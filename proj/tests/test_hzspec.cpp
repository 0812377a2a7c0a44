#include "excisive/hzspec.hpp"
#include "excisive/errors.hpp"

#include <doctest.h>

using namespace exc;

TEST_CASE("HZ inclusions")
{
    CHECK(hz_leq(HZPrime{4, 2}, HZPrime{2, 0}));
    CHECK_FALSE(hz_leq(HZPrime{3, 0}, HZPrime{1, 0}));
    CHECK(hz_leq(HZPrime{3, 3}, HZPrime{1, 3}));
    CHECK_FALSE(hz_leq(HZPrime{2, 3}, HZPrime{1, 3}));
    CHECK_FALSE(hz_leq(HZPrime{3, 3}, HZPrime{1, 2}));
    CHECK_FALSE(hz_leq(HZPrime{1, 0}, HZPrime{1, 2}));
    CHECK(HZPrime{2, 5}.label() == "hz(2|5)");
    CHECK_THROWS_AS(HZPrime::make(1, 6), PreconditionError);
}

TEST_CASE("hz_leq is a partial order")
{
    for (int d = 1; d <= 8; ++d) {
        const auto pts = hz_points(d, {2, 3, 5, 7, 11, 13});
        Relation leq(pts.size(), std::vector<char>(pts.size(), 0));
        for (std::size_t a = 0; a < pts.size(); ++a)
            for (std::size_t b = 0; b < pts.size(); ++b)
                leq[a][b] = hz_leq(pts[a], pts[b]);
        std::string why;
        CHECK_MESSAGE(is_partial_order(leq, &why), why);
    }
}

TEST_CASE("base change")
{
    CHECK(hz_base_change(HZPrime{2, 5}) == BalmerPrime::make(2, 5, NatInf::infinity()));
    CHECK(hz_base_change(HZPrime{3, 0}) == BalmerPrime::make(3, 0, 1));
    for (int d = 1; d <= 4; ++d) {
        const auto pts = hz_points(d, {2, 3, 5});
        for (const auto& a : pts)
            for (const auto& b : pts) {
                CHECK(hz_leq(a, b) == b_leq(hz_base_change(a), hz_base_change(b)));
                CHECK((a == b) == (hz_base_change(a) == hz_base_change(b)));
            }
    }
    CHECK(hz_points(3, {2, 3, 5}).size() == 12);
}

TEST_CASE("admissible subsets")
{
    CHECK(hz_admissible_subset({}, 3, {2, 3}));
    CHECK_FALSE(hz_admissible_subset({HZPrime{1, 0}}, 3, {2}));
    CHECK_FALSE(hz_admissible_subset({HZPrime{1, 2}}, 2, {2}));
    CHECK(hz_admissible_subset({HZPrime{2, 3}}, 3, {2, 3}));

    // Down-closures of single points are admissible.
    const std::vector<std::uint64_t> primes{2, 3};
    for (int d = 1; d <= 4; ++d) {
        const auto pts = hz_points(d, primes);
        for (const auto& top : pts) {
            std::set<HZPrime> y;
            for (const auto& a : pts)
                if (hz_leq(a, top))
                    y.insert(a);
            CHECK(hz_admissible_subset(y, d, primes));
        }
    }
    CHECK_THROWS_AS(hz_admissible_subset({HZPrime{4, 2}}, 3, {2}), PreconditionError);
}

TEST_CASE("admissible means specialization-closed")
{
    const std::vector<std::uint64_t> primes{2, 3};
    for (int d = 1; d <= 4; ++d) {
        const auto pts = hz_points(d, primes);
        const std::size_t n = pts.size();
        for (std::uint64_t mask = 0; mask < (1ULL << n); ++mask) {
            std::set<HZPrime> y;
            for (std::size_t i = 0; i < n; ++i)
                if (mask >> i & 1)
                    y.insert(pts[i]);
            CHECK(hz_admissible_subset(y, d, primes) == hz_specialization_closed(y, d, primes));
        }
    }
}

TEST_CASE("HZ posets")
{
    const Poset p = hz_poset(3, {2, 3});
    CHECK(p.nodes.size() == 9);
    const Poset slice = hfp_poset(5, 3);
    CHECK(slice.nodes.size() == 5);
    // Layers 1 < 3 < 5 and 2 < 4 at p = 3; covers point from larger layers.
    CHECK(slice.covers.size() == 3);
}
