#pragma once

#include "excisive/bigint.hpp"
#include "excisive/natinf.hpp"

#include <cstdint>
#include <vector>

namespace exc {

/// Memo tables for the elementary counting functions.
///
/// Tables grow on demand and entries are never rewritten once filled. A cache
/// is not synchronized; share one only after it has been warmed up by a single
/// writer, or give each thread its own (the free functions below use a
/// thread_local instance).
class CountCache {
public:
    /// C(n,k); zero when k < 0 or k > n.
    BigInt binomial(int n, int k);
    BigInt factorial(int n);
    /// Stirling numbers of the second kind S(n,k).
    BigInt stirling2(int n, int k);
    /// Signed Stirling numbers of the first kind s(n,k).
    BigInt stirling1(int n, int k);
    /// |surj([i],[j])| by inclusion-exclusion.
    BigInt surjections(int i, int j);

    static CountCache& local();

private:
    void grow_pascal(int n);
    void grow_stirling(int n);

    std::vector<std::vector<BigInt>> pascal_;
    std::vector<BigInt> factorial_;
    std::vector<std::vector<BigInt>> stirling2_;
    std::vector<std::vector<BigInt>> stirling1_;
    std::vector<std::vector<BigInt>> surj_;
};

BigInt binomial(int n, int k);
BigInt factorial(int n);
BigInt stirling2(int n, int k);
BigInt stirling1(int n, int k);
BigInt surjections(int i, int j);

// Good subsets: U ⊆ [i]×[j] projecting onto both factors. mu(i,j,k) counts
// those of cardinality k; they are also the structure constants of A(d).

/// Largest i·j accepted by the exhaustive counters.
inline constexpr int kMuBruteBudget = 20;

/// Counts of good subsets of [i]×[j] by cardinality (index 0..i·j), by
/// walking all 2^(ij) subsets. Throws BudgetExceeded when i·j > 20.
std::vector<BigInt> mu_brute_all(int i, int j);
BigInt mu_brute(int i, int j, int k);
/// Double alternating sum over deleted rows and columns.
BigInt mu_incl_excl(int i, int j, int k);
/// Σ_m m!-scaled Stirling products over rationals; throws InternalError if the
/// sum is not an integer.
BigInt mu_stirling(int i, int j, int k);

bool is_prime(std::uint64_t n);

/// Sum of the base-p digits of k.
std::uint64_t digit_sum(std::uint64_t k, std::uint64_t p);

/// A multiset of positive parts, stored in non-increasing order.
struct Partition {
    std::vector<std::uint64_t> parts;

    std::uint64_t total() const;
    std::size_t length() const { return parts.size(); }

    friend bool operator==(const Partition&, const Partition&) = default;
};

/// Whether k is a sum of exactly l powers of p (p^0 = 1 allowed).
bool ppp_exists(std::uint64_t p, std::uint64_t k, std::uint64_t l);

inline constexpr std::uint64_t kPartitionBudget = 64;

/// Every way to write k as a sum of l powers of p, by recursion over
/// exponents. Partitions are listed in lexicographically decreasing order.
/// Throws BudgetExceeded when k > 64.
std::vector<Partition> ppp_enumerate(std::uint64_t p, std::uint64_t k, std::uint64_t l);

/// Length of the shortest chain k = l_s > ... > l_0 = l in which each l_a is
/// a sum of l_{a-1} powers of p. Requires k >= l >= 1.
NatInf delta_p(std::uint64_t p, std::uint64_t k, std::uint64_t l);

/// Breadth-first search for the same chain length over the partition graph on
/// {l,…,k}; edges come from ppp_enumerate. Throws BudgetExceeded when k > 64.
NatInf delta_p_brute(std::uint64_t p, std::uint64_t k, std::uint64_t l);

/// A shortest chain [k, …, l] found by the search above (empty if none).
std::vector<std::uint64_t> shortest_partition_chain(std::uint64_t p, std::uint64_t k,
                                                    std::uint64_t l);

} // namespace exc
