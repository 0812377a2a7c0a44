#pragma once

#include "excisive/burnside.hpp"
#include "excisive/poset.hpp"

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace exc {

/// The prime 𝔭([i],p) of A(d): the preimage of (p) ⊂ Z under φ_i.
/// Characteristic 0 stands for the zero ideal.
struct ZariskiPrime {
    int layer = 1;
    std::uint64_t ch = 0;

    /// Validates and returns the canonical representative: for p > 0 the
    /// least layer congruent to i modulo p - 1.
    static ZariskiPrime make(int layer, std::uint64_t ch);

    ZariskiPrime canonical() const { return make(layer, ch); }

    /// "z(i|p)".
    std::string label() const;

    friend auto operator<=>(const ZariskiPrime&, const ZariskiPrime&) = default;
};

/// Equality as ideals of A(d).
bool z_equal(const ZariskiPrime& a, const ZariskiPrime& b);

/// a ⊆ b.
bool z_leq(const ZariskiPrime& a, const ZariskiPrime& b);

/// Whether the element lies in q, read off the ghost component at q's layer.
bool z_membership(const BurnsidePresentation& pres, const RingElement& a,
                  const ZariskiPrime& q);

/// Canonical points of Spec A(d) over the given primes, sorted by (layer, char).
std::vector<ZariskiPrime> z_points(int d, const std::vector<std::uint64_t>& primes);

/// Hasse diagram of z_leq; minimal primes drawn at the bottom.
Poset z_poset(int d, const std::vector<std::uint64_t>& primes);

/// Sorted, de-duplicated prime list; throws PreconditionError on a non-prime.
std::vector<std::uint64_t> normalize_primes(std::vector<std::uint64_t> primes);

} // namespace exc
