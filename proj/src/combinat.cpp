#include "excisive/combinat.hpp"

#include "excisive/errors.hpp"

#include <bit>
#include <deque>
#include <string>

namespace exc {

namespace {

std::string pair_str(std::uint64_t a, std::uint64_t b)
{
    return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

void require_prime(std::uint64_t p)
{
    require(is_prime(p), "p = " + std::to_string(p) + " is not prime");
}

} // namespace

// ---------------------------------------------------------------------------
// CountCache

CountCache& CountCache::local()
{
    thread_local CountCache cache;
    return cache;
}

void CountCache::grow_pascal(int n)
{
    while (static_cast<int>(pascal_.size()) <= n) {
        const int m = static_cast<int>(pascal_.size());
        std::vector<BigInt> row(m + 1);
        row[0] = 1;
        row[m] = 1;
        for (int k = 1; k < m; ++k)
            row[k] = pascal_[m - 1][k - 1] + pascal_[m - 1][k];
        pascal_.push_back(std::move(row));
    }
}

BigInt CountCache::binomial(int n, int k)
{
    if (n < 0 || k < 0 || k > n)
        return 0;
    grow_pascal(n);
    return pascal_[n][k];
}

BigInt CountCache::factorial(int n)
{
    require(n >= 0, "factorial of a negative number");
    if (factorial_.empty())
        factorial_.push_back(1);
    while (static_cast<int>(factorial_.size()) <= n) {
        const auto m = factorial_.size();
        factorial_.push_back(factorial_.back() * static_cast<unsigned long>(m));
    }
    return factorial_[n];
}

void CountCache::grow_stirling(int n)
{
    if (stirling2_.empty()) {
        stirling2_.push_back({BigInt(1)});
        stirling1_.push_back({BigInt(1)});
    }
    while (static_cast<int>(stirling2_.size()) <= n) {
        const int m = static_cast<int>(stirling2_.size()); // new row index
        const auto& prev2 = stirling2_[m - 1];
        const auto& prev1 = stirling1_[m - 1];
        std::vector<BigInt> row2(m + 1), row1(m + 1);
        for (int k = 0; k <= m; ++k) {
            const BigInt left2 = k >= 1 ? prev2[k - 1] : BigInt(0);
            const BigInt same2 = k <= m - 1 ? prev2[k] : BigInt(0);
            row2[k] = left2 + static_cast<long>(k) * same2;

            const BigInt left1 = k >= 1 ? prev1[k - 1] : BigInt(0);
            const BigInt same1 = k <= m - 1 ? prev1[k] : BigInt(0);
            row1[k] = left1 - static_cast<long>(m - 1) * same1;
        }
        stirling2_.push_back(std::move(row2));
        stirling1_.push_back(std::move(row1));
    }
}

BigInt CountCache::stirling2(int n, int k)
{
    if (n < 0 || k < 0 || k > n)
        return 0;
    grow_stirling(n);
    return stirling2_[n][k];
}

BigInt CountCache::stirling1(int n, int k)
{
    if (n < 0 || k < 0 || k > n)
        return 0;
    grow_stirling(n);
    return stirling1_[n][k];
}

BigInt CountCache::surjections(int i, int j)
{
    require(i >= 1 && j >= 1, "surjections(i,j) needs i,j >= 1");
    if (j > i)
        return 0;
    if (static_cast<int>(surj_.size()) <= i)
        surj_.resize(i + 1);
    auto& row = surj_[i];
    if (static_cast<int>(row.size()) <= j)
        row.resize(j + 1, BigInt(-1));
    if (row[j] >= 0)
        return row[j];

    // j^i + Σ_{s=1}^{j-1} (-1)^s C(j,s) (j-s)^i
    BigInt total = 0;
    for (int s = 0; s < j; ++s) {
        BigInt power;
        mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(j - s),
                      static_cast<unsigned long>(i));
        BigInt term = binomial(j, s) * power;
        if (s % 2 == 0)
            total += term;
        else
            total -= term;
    }
    row[j] = total;
    return total;
}

BigInt binomial(int n, int k) { return CountCache::local().binomial(n, k); }
BigInt factorial(int n) { return CountCache::local().factorial(n); }
BigInt stirling2(int n, int k) { return CountCache::local().stirling2(n, k); }
BigInt stirling1(int n, int k) { return CountCache::local().stirling1(n, k); }
BigInt surjections(int i, int j) { return CountCache::local().surjections(i, j); }

// ---------------------------------------------------------------------------
// Good subsets

std::vector<BigInt> mu_brute_all(int i, int j)
{
    require(i >= 1 && j >= 1, "mu_brute needs i,j >= 1");
    if (i * j > kMuBruteBudget)
        throw BudgetExceeded("mu_brute: i*j = " + std::to_string(i * j) +
                             " exceeds the enumeration budget of " +
                             std::to_string(kMuBruteBudget));

    const int cells = i * j;
    // Cell (r,c) is bit r*j + c.
    std::vector<std::uint32_t> row_masks(i, 0), col_masks(j, 0);
    for (int r = 0; r < i; ++r)
        for (int c = 0; c < j; ++c) {
            row_masks[r] |= 1u << (r * j + c);
            col_masks[c] |= 1u << (r * j + c);
        }

    std::vector<std::uint64_t> counts(cells + 1, 0);
    const std::uint32_t end = cells == 32 ? 0 : (1u << cells);
    for (std::uint32_t u = 0; u < end; ++u) {
        bool good = true;
        for (auto m : row_masks)
            if ((u & m) == 0) {
                good = false;
                break;
            }
        if (!good)
            continue;
        for (auto m : col_masks)
            if ((u & m) == 0) {
                good = false;
                break;
            }
        if (good)
            ++counts[std::popcount(u)];
    }

    std::vector<BigInt> out(cells + 1);
    for (int k = 0; k <= cells; ++k)
        out[k] = static_cast<unsigned long>(counts[k]);
    return out;
}

BigInt mu_brute(int i, int j, int k)
{
    require(k >= 1, "mu_brute needs k >= 1");
    auto all = mu_brute_all(i, j);
    if (k >= static_cast<int>(all.size()))
        return 0;
    return all[k];
}

BigInt mu_incl_excl(int i, int j, int k)
{
    require(i >= 1 && j >= 1 && k >= 1, "mu_incl_excl needs i,j,k >= 1");
    auto& cache = CountCache::local();
    BigInt total = 0;
    for (int s = 0; s <= i; ++s) {
        for (int t = 0; t <= j; ++t) {
            BigInt term = cache.binomial((i - s) * (j - t), k) * cache.binomial(i, s) *
                          cache.binomial(j, t);
            if ((s + t) % 2 == 0)
                total += term;
            else
                total -= term;
        }
    }
    return total;
}

BigInt mu_stirling(int i, int j, int k)
{
    require(i >= 1 && j >= 1 && k >= 1, "mu_stirling needs i,j,k >= 1");
    auto& cache = CountCache::local();
    // Σ_m M_{mi} M_{mj} (M^{-1})_{km}, M_{ab} = b! S(a,b), (M^{-1})_{ab} = s(a,b)/a!.
    Rational total = 0;
    const Rational inv_kfact(BigInt(1), cache.factorial(k));
    for (int m = 1; m <= k; ++m) {
        const BigInt s1 = cache.stirling1(k, m);
        if (s1 == 0)
            continue;
        const BigInt mi = cache.factorial(i) * cache.stirling2(m, i);
        const BigInt mj = cache.factorial(j) * cache.stirling2(m, j);
        total += Rational(mi * mj * s1) * inv_kfact;
    }
    total.canonicalize();
    if (total.get_den() != 1)
        throw InternalError("mu_stirling(" + std::to_string(i) + "," + std::to_string(j) +
                            "," + std::to_string(k) +
                            ") produced a non-integer: " + total.get_str());
    return total.get_num();
}

// ---------------------------------------------------------------------------
// p-power partitions

bool is_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t q = 2; q * q <= n; ++q)
        if (n % q == 0)
            return false;
    return true;
}

std::uint64_t digit_sum(std::uint64_t k, std::uint64_t p)
{
    require(p >= 2, "digit_sum needs a base >= 2");
    std::uint64_t s = 0;
    for (; k > 0; k /= p)
        s += k % p;
    return s;
}

std::uint64_t Partition::total() const
{
    std::uint64_t t = 0;
    for (auto x : parts)
        t += x;
    return t;
}

bool ppp_exists(std::uint64_t p, std::uint64_t k, std::uint64_t l)
{
    require_prime(p);
    require(k >= 1 && l >= 1, "ppp_exists needs k,l >= 1");
    if (k < l)
        return false;
    return (k - l) % (p - 1) == 0 && l >= digit_sum(k, p);
}

namespace {

void enumerate_parts(std::uint64_t remaining, std::uint64_t slots,
                     const std::vector<std::uint64_t>& powers, std::size_t first,
                     std::vector<std::uint64_t>& current, std::vector<Partition>& out)
{
    if (slots == 0) {
        if (remaining == 0)
            out.push_back(Partition{current});
        return;
    }
    // Every remaining part is at least 1.
    if (remaining < slots)
        return;
    for (std::size_t e = first; e < powers.size(); ++e) {
        const std::uint64_t part = powers[e];
        if (part > remaining)
            continue;
        // The largest remaining part bounds the rest.
        if (part * slots < remaining)
            break;
        current.push_back(part);
        enumerate_parts(remaining - part, slots - 1, powers, e, current, out);
        current.pop_back();
    }
}

} // namespace

std::vector<Partition> ppp_enumerate(std::uint64_t p, std::uint64_t k, std::uint64_t l)
{
    require_prime(p);
    require(k >= 1 && l >= 1, "ppp_enumerate needs k,l >= 1");
    if (k > kPartitionBudget)
        throw BudgetExceeded("ppp_enumerate: k = " + std::to_string(k) +
                             " exceeds the enumeration budget of " +
                             std::to_string(kPartitionBudget));

    // Powers of p not exceeding k, largest first.
    std::vector<std::uint64_t> powers;
    for (std::uint64_t q = 1; q <= k; q *= p)
        powers.insert(powers.begin(), q);

    std::vector<Partition> out;
    std::vector<std::uint64_t> current;
    enumerate_parts(k, l, powers, 0, current, out);
    return out;
}

NatInf delta_p(std::uint64_t p, std::uint64_t k, std::uint64_t l)
{
    require_prime(p);
    require(l >= 1 && k >= l, "delta_p needs k >= l >= 1, got " + pair_str(k, l));
    if (k == l)
        return 0;
    if ((k - l) % (p - 1) != 0)
        return NatInf::infinity();
    return l >= digit_sum(k, p) ? 1 : 2;
}

std::vector<std::uint64_t> shortest_partition_chain(std::uint64_t p, std::uint64_t k,
                                                    std::uint64_t l)
{
    require_prime(p);
    require(l >= 1 && k >= l, "partition chains need k >= l >= 1, got " + pair_str(k, l));
    if (k > kPartitionBudget)
        throw BudgetExceeded("delta_p_brute: k = " + std::to_string(k) +
                             " exceeds the enumeration budget of " +
                             std::to_string(kPartitionBudget));
    if (k == l)
        return {k};

    // Vertices l..k, offset by l. parent[v] = predecessor on a shortest path from k.
    const std::size_t n = k - l + 1;
    std::vector<std::int64_t> parent(n, -1);
    std::vector<bool> seen(n, false);
    std::deque<std::uint64_t> queue{k};
    seen[k - l] = true;
    while (!queue.empty()) {
        const std::uint64_t a = queue.front();
        queue.pop_front();
        for (std::uint64_t b = l; b < a; ++b) {
            if (seen[b - l] || ppp_enumerate(p, a, b).empty())
                continue;
            seen[b - l] = true;
            parent[b - l] = static_cast<std::int64_t>(a);
            queue.push_back(b);
        }
    }
    if (!seen[0])
        return {};
    std::vector<std::uint64_t> chain{l};
    for (std::uint64_t v = l; v != k;) {
        v = static_cast<std::uint64_t>(parent[v - l]);
        chain.insert(chain.begin(), v);
    }
    return chain;
}

NatInf delta_p_brute(std::uint64_t p, std::uint64_t k, std::uint64_t l)
{
    auto chain = shortest_partition_chain(p, k, l);
    if (chain.empty())
        return NatInf::infinity();
    return NatInf(chain.size() - 1);
}

} // namespace exc
