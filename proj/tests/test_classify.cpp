#include "excisive/classify.hpp"
#include "excisive/combinat.hpp"
#include "excisive/errors.hpp"

#include <doctest.h>

#include <cstdlib>

using namespace exc;

namespace {

const NatInf kInf = NatInf::infinity();

BalmerPrime P(int k, std::uint64_t p, NatInf h) { return BalmerPrime::make(k, p, h); }

TypeVector tv(std::initializer_list<NatInf> v) { return TypeVector(v); }

// Independent filter: every vector in {0..H,∞}^d checked pair by pair
// against the closed-form δ.
std::uint64_t brute_count(int d, std::uint64_t p, std::uint64_t hmax)
{
    std::uint64_t total = 1;
    for (int i = 0; i < d; ++i)
        total *= hmax + 2;
    std::uint64_t count = 0;
    for (std::uint64_t code = 0; code < total; ++code) {
        std::vector<NatInf> f;
        std::uint64_t c = code;
        for (int i = 0; i < d; ++i) {
            const std::uint64_t v = c % (hmax + 2);
            c /= hmax + 2;
            f.push_back(v == hmax + 1 ? kInf : NatInf(v));
        }
        bool ok = true;
        for (int k = 1; k <= d; ++k)
            for (int l = 1; l < k; ++l)
                if ((k - l) % (p - 1) == 0 && f[k - 1] > delta_p_brute(p, k, l) + f[l - 1])
                    ok = false;
        count += ok;
    }
    return count;
}

} // namespace

TEST_CASE("p-admissible functions")
{
    for (int d = 1; d <= 5; ++d)
        for (std::uint64_t p : {2, 3, 5}) {
            CHECK(is_p_admissible(TypeVector(d, kInf), p, d));
            CHECK(is_p_admissible(TypeVector(d, NatInf(0)), p, d));
        }
    CHECK_FALSE(is_p_admissible(tv({0, 2}), 2, 2));
    CHECK(is_p_admissible(tv({0, 1}), 2, 2));
    const auto v = p_admissibility_violation(tv({0, 2}), 2);
    REQUIRE(v.has_value());
    CHECK(v->describe() == "f(2) > delta_2(2,1) + f(1)");
    CHECK_THROWS_AS(is_p_admissible(tv({0, 1}), 2, 3), PreconditionError);
}

TEST_CASE("admissible functions")
{
    CHECK(is_admissible(AdmissibleFunction::uniform(3, {2, 3}, TypeVector(3, kInf))));
    // d = 1 has no inequalities, so only the zero-coherence condition acts.
    AdmissibleFunction f = AdmissibleFunction::uniform(1, {2, 3}, tv({kInf}));
    f.values[2][0] = 0;
    f.values[3][0] = 1;
    CHECK_FALSE(is_admissible(f));
    f.values[3][0] = 0;
    CHECK(is_admissible(f));
    // f(2,2) = inf exceeds delta_2(2,1) + f(1,2) = 1.
    AdmissibleFunction g = AdmissibleFunction::uniform(2, {2, 3}, tv({0, kInf}));
    CHECK_FALSE(is_admissible(g));
    g.values[2][1] = 1;
    CHECK(is_admissible(g));
}

TEST_CASE("admissible restricts to p-admissible")
{
    const std::vector<std::uint64_t> primes{2, 3};
    const auto e2 = enumerate_p_admissible(3, 2, 2, true);
    const auto e3 = enumerate_p_admissible(3, 3, 2, true);
    for (const auto& f2 : e2.functions)
        for (const auto& f3 : e3.functions) {
            AdmissibleFunction f;
            f.d = 3;
            f.primes = primes;
            f.values[2] = f2;
            f.values[3] = f3;
            if (is_admissible(f)) {
                CHECK(is_p_admissible(f.restrict_to(2), 2, 3));
                CHECK(is_p_admissible(f.restrict_to(3), 3, 3));
            }
        }
}

TEST_CASE("Thomason subsets from functions")
{
    const SpectrumTruncation t(2, {2}, 3, true);
    CHECK(mask_points(thomason_from_function(AdmissibleFunction::uniform(2, {2}, tv({kInf, kInf})), t), t)
              .empty());
    CHECK(mask_points(thomason_from_function(AdmissibleFunction::uniform(2, {2}, tv({0, 0})), t), t)
              .size() == t.size());

    const PointMask y = thomason_from_function(AdmissibleFunction::uniform(2, {2}, tv({1, 0})), t);
    for (std::size_t i = 0; i < t.size(); ++i) {
        const auto& pt = t.points()[i];
        CHECK(y[i] == (pt.layer == 2 || pt.height >= NatInf(2)));
    }
    CHECK(is_valid_thomason(y, t));

    CHECK_THROWS_AS(thomason_from_function(AdmissibleFunction::uniform(2, {2}, tv({0, 2})), t),
                    PreconditionError);
    CHECK_THROWS_AS(thomason_from_function(AdmissibleFunction::uniform(2, {2}, tv({0, 0})),
                                           SpectrumTruncation(2, {2}, 3, false)),
                    PreconditionError);
}

TEST_CASE("functions from Thomason subsets")
{
    const SpectrumTruncation t(2, {2}, 4, true);
    CHECK(function_from_thomason(PointMask(t.size(), false), t) ==
          AdmissibleFunction::uniform(2, {2}, tv({kInf, kInf})));

    // Closure of P([2],2,2): only layer-2 points lie below it, because a
    // layer-1 point is never contained in a layer-2 point.
    const PointMask closure = thomason_union_closure({P(2, 2, 2)}, t);
    for (std::size_t i = 0; i < t.size(); ++i)
        CHECK(closure[i] == (t.points()[i].layer == 2 && t.points()[i].height >= NatInf(2)));
    CHECK(function_from_thomason(closure, t) == AdmissibleFunction::uniform(2, {2}, tv({kInf, 1})));

    // Closure of P([1],2,2) pulls in layer 2 from height 3 on.
    const PointMask below = thomason_union_closure({P(1, 2, 2)}, t);
    CHECK(function_from_thomason(below, t) == AdmissibleFunction::uniform(2, {2}, tv({1, 2})));

    // Not closed under specialization.
    PointMask bad(t.size(), false);
    bad[t.index_of(P(1, 2, 2))] = true;
    try {
        function_from_thomason(bad, t);
        FAIL("expected rejection");
    } catch (const PreconditionError& e) {
        CHECK(std::string(e.what()).find("P(") != std::string::npos);
    }

    // An infinite-height point on its own is not Thomason.
    PointMask lonely(t.size(), false);
    lonely[t.index_of(P(2, 2, kInf))] = true;
    CHECK_FALSE(is_valid_thomason(lonely, t));
    CHECK(thomason_violation(lonely, t)->find("P(2|2,inf)") != std::string::npos);
}

TEST_CASE("round trips on small truncations")
{
    for (int d = 1; d <= 3; ++d)
        for (std::uint64_t h = 1; h <= 3; ++h) {
            const SpectrumTruncation t(d, {2}, h, true);
            const std::size_t n = t.size();
            for (std::uint64_t mask = 0; mask < (1ULL << n); ++mask) {
                PointMask y(n);
                for (std::size_t i = 0; i < n; ++i)
                    y[i] = mask >> i & 1;
                if (!is_valid_thomason(y, t))
                    continue;
                const AdmissibleFunction f = function_from_thomason(y, t);
                CHECK(is_admissible(f));
                CHECK(thomason_from_function(f, t) == y);
            }
        }
}

TEST_CASE("union closures")
{
    const SpectrumTruncation t(3, {2, 3}, 3, true);
    CHECK(mask_points(thomason_union_closure({}, t), t).empty());

    // Below the rational point of layer 1: its own column, plus the layers
    // reachable by p-power partitions, shifted up by the blueshift.
    const auto single = mask_points(thomason_union_closure({P(1, 2, 1)}, t), t);
    const std::vector<BalmerPrime> expected{
        P(1, 0, 1),   P(1, 2, 2), P(1, 2, 3), P(1, 2, kInf), P(1, 3, 2), P(1, 3, 3),
        P(1, 3, kInf), P(2, 2, 2), P(2, 2, 3), P(2, 2, kInf), P(3, 2, 3), P(3, 2, kInf),
        P(3, 3, 2),   P(3, 3, 3), P(3, 3, kInf)};
    CHECK(single == expected);

    std::vector<BalmerPrime> seeds;
    for (int k = 1; k <= 3; ++k)
        for (std::uint64_t p : {2, 3})
            seeds.push_back(P(k, p, 3));
    const PointMask all = thomason_union_closure(seeds, t);
    for (std::size_t i = 0; i < t.size(); ++i)
        CHECK(all[i] == (t.points()[i].height >= NatInf(3)));
    CHECK_THROWS_AS(thomason_union_closure({P(1, 2, kInf)}, t), PreconditionError);

    const std::vector<std::vector<BalmerPrime>> seed_sets{
        {P(1, 2, 2)}, {P(2, 3, 2), P(3, 2, 3)}, {P(3, 0, 1), P(1, 3, 3)}, seeds};
    for (const auto& s : seed_sets) {
        const PointMask y = thomason_union_closure(s, t);
        CHECK(is_valid_thomason(y, t));
        CHECK(thomason_from_function(function_from_thomason(y, t), t) == y);
    }
}

TEST_CASE("order reversal")
{
    const SpectrumTruncation t(3, {2}, 3, true);
    const auto e = enumerate_p_admissible(3, 2, 2, true);
    for (const auto& f : e.functions)
        for (const auto& g : e.functions) {
            bool leq = true;
            for (int k = 0; k < 3; ++k)
                leq = leq && f[k] <= g[k];
            if (!leq)
                continue;
            const PointMask yf = thomason_from_function(AdmissibleFunction::uniform(3, {2}, f), t);
            const PointMask yg = thomason_from_function(AdmissibleFunction::uniform(3, {2}, g), t);
            for (std::size_t i = 0; i < t.size(); ++i)
                if (yg[i])
                    CHECK(yf[i]);
        }
}

TEST_CASE("enumeration counts")
{
    for (std::uint64_t h = 0; h <= 5; ++h) {
        CHECK(enumerate_p_admissible(1, 2, h).count == h + 2);
        CHECK(enumerate_p_admissible(2, 3, h).count == (h + 2) * (h + 2));
    }
    CHECK(enumerate_p_admissible(2, 2, 1).count == brute_count(2, 2, 1));
    CHECK(enumerate_p_admissible(2, 2, 1).count == 7);
    for (int d = 1; d <= 4; ++d)
        for (std::uint64_t p : {2, 3, 5})
            for (std::uint64_t h = 0; h <= 3; ++h)
                CHECK(enumerate_p_admissible(d, p, h).count == brute_count(d, p, h));

    const auto listed = enumerate_p_admissible(2, 2, 1, true);
    CHECK(listed.functions.size() == listed.count);
    CHECK(listed.functions.front() == tv({0, 0}));
    CHECK(listed.functions.back() == tv({kInf, kInf}));
}

TEST_CASE("enumeration budget")
{
    CHECK_THROWS_AS(enumerate_p_admissible(12, 2, 6), BudgetExceeded);
    setenv("EXCSPEC_ENUM_BUDGET", "10", 1);
    CHECK(enumeration_budget() == 10);
    CHECK_THROWS_AS(enumerate_p_admissible(2, 2, 2), BudgetExceeded);
    CHECK(enumerate_p_admissible(2, 2, 1).count == 7);
    unsetenv("EXCSPEC_ENUM_BUDGET");
    CHECK(enumeration_budget() == kEnumerationBudget);
}
