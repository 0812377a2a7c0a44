#include "excisive/balmer.hpp"
#include "excisive/combinat.hpp"
#include "excisive/errors.hpp"

#include <doctest.h>

#include <set>

using namespace exc;

namespace {

const NatInf kInf = NatInf::infinity();

BalmerPrime P(int k, std::uint64_t p, NatInf h) { return BalmerPrime::make(k, p, h); }

std::vector<std::uint64_t> primes_up_to(std::uint64_t n)
{
    std::vector<std::uint64_t> out;
    for (std::uint64_t q = 2; q <= n; ++q)
        if (is_prime(q))
            out.push_back(q);
    return out;
}

} // namespace

TEST_CASE("canonical points and equality")
{
    CHECK(b_equal(P(2, 2, 1), P(2, 3, 1)));
    CHECK(P(2, 2, 1) == P(2, 3, 1));
    CHECK_FALSE(b_equal(P(2, 2, 3), P(2, 3, 3)));
    for (NatInf h : {NatInf(1), NatInf(2), NatInf(5), kInf})
        CHECK_FALSE(b_equal(P(1, 2, h), P(2, 2, h)));
    CHECK(P(3, 5, 1).label() == "P(3|*,1)");
    CHECK(P(3, 5, kInf).label() == "P(3|5,inf)");
    CHECK_THROWS_AS(P(1, 0, 2), PreconditionError);
    CHECK_THROWS_AS(P(1, 2, 0), PreconditionError);
    CHECK_THROWS_AS(P(0, 2, 2), PreconditionError);
}

TEST_CASE("inclusion examples")
{
    for (std::uint64_t h = 1; h <= 8; ++h) {
        CHECK(b_leq(P(4, 2, h + 1), P(2, 2, h)));
        CHECK_FALSE(b_leq(P(4, 2, h), P(2, 2, h)) );
        CHECK(b_leq(P(3, 2, h + 2), P(1, 2, h)));
        CHECK_FALSE(b_leq(P(3, 2, h + 1), P(1, 2, h)));
    }
    for (std::uint64_t p : {2, 3, 5})
        for (int k = 1; k <= 4; ++k) {
            for (std::uint64_t n = 1; n <= 6; ++n)
                CHECK_FALSE(b_leq(P(k, p, n), P(k, p, kInf)));
            CHECK(b_leq(P(k, p, kInf), P(k, p, kInf)));
        }
    // Different primes only meet at height 1.
    CHECK_FALSE(b_leq(P(1, 2, 3), P(1, 3, 2)));
    CHECK(b_leq(P(1, 2, 3), P(1, 3, 1)));
    CHECK(b_leq(P(2, 3, kInf), P(2, 5, 1)));
    // The rational point only contains itself within its layer.
    CHECK_FALSE(b_leq(P(3, 0, 1), P(1, 0, 1)));
    CHECK_FALSE(b_leq(P(1, 0, 1), P(1, 2, 2)));
    CHECK(b_leq(P(2, 0, 1), P(2, 0, 1)));
}

TEST_CASE("truncation sizes and shapes")
{
    const SpectrumTruncation one(1, {2}, 3, true);
    CHECK(one.size() == 4);
    CHECK(one.size() == one.expected_size());
    // A chain: every pair is comparable.
    for (std::size_t a = 0; a < one.size(); ++a)
        for (std::size_t b = 0; b < one.size(); ++b)
            CHECK((one.leq(a, b) || one.leq(b, a)));
    CHECK(one.poset().covers.size() == 3);

    for (int d = 1; d <= 4; ++d)
        for (std::uint64_t h = 1; h <= 4; ++h)
            for (bool inf : {false, true}) {
                const SpectrumTruncation t(d, {2, 3, 5}, h, inf);
                CHECK(t.size() == t.expected_size());
            }

    // d = 2 at p = 2: layer-2 points sit under layer-1 points one height lower.
    const SpectrumTruncation two(2, {2}, 5, true);
    for (std::uint64_t h = 2; h <= 4; ++h) {
        CHECK(b_leq(P(2, 2, h + 1), P(1, 2, h)));
        CHECK_FALSE(b_leq(P(2, 2, h), P(1, 2, h)));
    }
    CHECK(b_leq(P(2, 2, kInf), P(1, 2, kInf)));
}

TEST_CASE("partial order and monotonicity")
{
    for (int d = 1; d <= 5; ++d)
        for (std::uint64_t h = 1; h <= 5; ++h) {
            const SpectrumTruncation t(d, primes_up_to(7), h, true);
            std::string why;
            CHECK_MESSAGE(is_partial_order(t.leq(), &why), why);
            for (std::size_t a = 0; a < t.size(); ++a)
                for (std::size_t b = 0; b < t.size(); ++b) {
                    if (!t.leq(a, b))
                        continue;
                    const auto& pa = t.points()[a];
                    const auto& pb = t.points()[b];
                    CHECK(pa.layer >= pb.layer);
                    CHECK(pa.height >= pb.height);
                    CHECK(z_leq(rho(pb), rho(pa)));
                }
        }
}

TEST_CASE("vertical slices reproduce the spectrum of finite spectra")
{
    const SpectrumTruncation t(3, {2, 3}, 5, true);
    for (const auto& a : t.points())
        for (const auto& b : t.points()) {
            if (a.layer != b.layer)
                continue;
            const bool expected =
                a.height >= b.height && (b.height == NatInf(1) || a.ch == b.ch);
            CHECK(b_leq(a, b) == expected);
        }
}

TEST_CASE("comparison map")
{
    CHECK(rho(P(3, 2, kInf)) == ZariskiPrime{1, 2});
    CHECK(rho(P(2, 0, 1)) == ZariskiPrime{2, 0});
    CHECK(rho(P(2, 3, 5)) == ZariskiPrime{2, 3});
}

TEST_CASE("blueshift numbers")
{
    for (std::uint64_t h = 1; h <= 6; ++h) {
        CHECK(tate_blueshift(2, 4, 2, h) == NatInf(1));
        CHECK(tate_blueshift(2, 3, 1, h) == NatInf(h));
        CHECK(tate_blueshift(5, 6, 2, h) == NatInf(1));
        CHECK(tate_blueshift(3, 4, 4, h) == NatInf(h));
    }
    CHECK_THROWS_AS(tate_blueshift(2, 2, 3, 1), PreconditionError);
    CHECK_THROWS_AS(tate_blueshift(2, 3, 1, kInf), PreconditionError);

    CHECK(geometric_blueshift(7, 3, 3) == NatInf(0));
    CHECK(geometric_blueshift(2, 4, 2) == NatInf(1));
    CHECK(geometric_blueshift(2, 3, 1) == NatInf(2));
    CHECK_THROWS_AS(geometric_blueshift(3, 4, 3), PreconditionError);

    // Along a shortest partition chain each step is a Tate step of value 1,
    // so the number of steps is the geometric blueshift.
    for (std::uint64_t p : {2, 3, 5})
        for (std::uint64_t k = 1; k <= 20; ++k)
            for (std::uint64_t l = 1; l <= k; ++l) {
                if ((k - l) % (p - 1) != 0)
                    continue;
                const auto chain = shortest_partition_chain(p, k, l);
                const NatInf g = geometric_blueshift(p, k, l);
                if (chain.empty()) {
                    CHECK(g.is_infinite());
                    continue;
                }
                std::uint64_t steps = 0;
                for (std::size_t s = 0; s + 1 < chain.size(); ++s) {
                    CHECK(tate_blueshift(p, chain[s], chain[s + 1], 9) == NatInf(1));
                    ++steps;
                }
                CHECK(g == NatInf(steps));
            }
}

TEST_CASE("generator supports")
{
    const SpectrumTruncation t(4, {2, 3}, 3, true);
    CHECK(generator_support(1, t).size() == t.size());
    for (const auto& pt : generator_support(4, t))
        CHECK(pt.layer == 4);
    CHECK(generator_support(4, t).size() == t.size() / 4);
    for (int k = 1; k <= 4; ++k) {
        const auto supp = generator_support(k, t);
        const std::set<BalmerPrime> in(supp.begin(), supp.end());
        // Supports are closed (down-sets); their complements are open (up-sets).
        for (const auto& a : t.points())
            for (const auto& b : t.points())
                if (b_leq(a, b)) {
                    if (in.count(b))
                        CHECK(in.count(a));
                    if (!in.count(a))
                        CHECK(!in.count(b));
                }
    }
    CHECK_THROWS_AS(generator_support(5, t), PreconditionError);
}

TEST_CASE("open embeddings")
{
    CHECK(open_embedding_check(3, 3, {2, 3}, 3, true));
    CHECK(open_embedding_check(1, 3, {2, 3}, 3, true));
    CHECK(open_embedding_check(2, 4, {2, 3}, 4, true));
    CHECK(open_embedding_check(2, 4, {2}, 2, false));
}

TEST_CASE("Smith statements")
{
    for (std::uint64_t h = 0; h <= 5; ++h) {
        CHECK(smith_holds(4, 2, 2, 2, h, h));
        CHECK(smith_holds(4, 2, 4, 2, h + 1, h));
        CHECK_FALSE(smith_holds(3, 2, 3, 1, h + 1, h));
        CHECK(smith_holds(3, 2, 3, 1, h + 2, h));
    }
    const SmithReport r = smith_report(4, 2, 4, 2, 3, 2);
    CHECK(r.holds);
    CHECK(r.witness == "P(4|2,4) <= P(2|2,3): 1 | 4-2, 4 >= 3 + 1");
    CHECK_THROWS_AS(smith_holds(3, 2, 4, 1, 1, 1), PreconditionError);
}
