#pragma once

#include "excisive/balmer.hpp"
#include "excisive/poset.hpp"

#include <compare>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace exc {

/// The point P^Z([k],𝔭) for HZ coefficients; residue 0 is the zero ideal.
struct HZPrime {
    int layer = 1;
    std::uint64_t residue = 0;

    static HZPrime make(int layer, std::uint64_t residue);

    /// "hz(k|p)".
    std::string label() const;

    friend auto operator<=>(const HZPrime&, const HZPrime&) = default;
};

/// a ⊆ b.
bool hz_leq(const HZPrime& a, const HZPrime& b);

/// ([k],(p)) ↦ P([k],p,∞), ([k],(0)) ↦ P([k],0,1).
BalmerPrime hz_base_change(const HZPrime& a);

/// [d] × ({0} ∪ primes), sorted by (layer, residue).
std::vector<HZPrime> hz_points(int d, const std::vector<std::uint64_t>& primes);

/// Both closure properties for Y ⊆ [d] × ({0} ∪ primes).
bool hz_admissible_subset(const std::set<HZPrime>& y, int d,
                          const std::vector<std::uint64_t>& primes);

/// Whether Y is closed under passing to smaller primes in hz_leq.
bool hz_specialization_closed(const std::set<HZPrime>& y, int d,
                              const std::vector<std::uint64_t>& primes);

Poset hz_poset(int d, const std::vector<std::uint64_t>& primes);

/// The slice {([k],(p)) : k ∈ [d]}, i.e. the order k ≤_p l on layers.
Poset hfp_poset(int d, std::uint64_t p);

} // namespace exc
