#pragma once

#include "excisive/natinf.hpp"
#include "excisive/poset.hpp"
#include "excisive/zariski.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace exc {

/// The point P([k],p,h) of the spectrum of compact d-excisive functors.
/// Height 1 is the rational point and is stored with char 0.
struct BalmerPrime {
    int layer = 1;
    std::uint64_t ch = 0;
    NatInf height = 1;

    /// Validates (h ≥ 1; p prime when h > 1) and canonicalizes.
    static BalmerPrime make(int layer, std::uint64_t ch, NatInf height);

    /// "P(k|p,h)", with p = * at height 1.
    std::string label() const;

    friend auto operator<=>(const BalmerPrime&, const BalmerPrime&) = default;
};

/// Equality as prime ideals.
bool b_equal(const BalmerPrime& a, const BalmerPrime& b);

/// a ⊆ b. A height-1 source only sits inside the height-1 point of its own
/// layer; this is the same answer whichever prime the rational point is
/// attached to, so no prime scope is needed.
bool b_leq(const BalmerPrime& a, const BalmerPrime& b);

/// Finite model of the spectrum: heights 1..Hmax, optionally ∞.
class SpectrumTruncation {
public:
    SpectrumTruncation(int d, std::vector<std::uint64_t> primes, std::uint64_t hmax,
                       bool include_infinity);

    int d() const { return d_; }
    const std::vector<std::uint64_t>& primes() const { return primes_; }
    std::uint64_t hmax() const { return hmax_; }
    bool include_infinity() const { return include_infinity_; }

    /// Sorted by (layer, char, height).
    const std::vector<BalmerPrime>& points() const { return points_; }
    std::size_t size() const { return points_.size(); }
    const Relation& leq() const { return leq_; }
    bool leq(std::size_t a, std::size_t b) const { return leq_[a][b] != 0; }

    /// Index of a point, or size() if absent.
    std::size_t index_of(const BalmerPrime& p) const;
    bool contains(const BalmerPrime& p) const { return index_of(p) != size(); }

    /// d·(1 + |P|·(Hmax−1) + |P|·[∞]).
    std::size_t expected_size() const;

    Poset poset() const;

private:
    int d_;
    std::vector<std::uint64_t> primes_;
    std::uint64_t hmax_;
    bool include_infinity_;
    std::vector<BalmerPrime> points_;
    std::map<BalmerPrime, std::size_t> index_;
    Relation leq_;
};

/// Comparison map to Spec A(d).
ZariskiPrime rho(const BalmerPrime& a);

/// Height left after the Tate construction between layers k ≥ l:
/// 1 if k > l and k is a sum of l powers of p, else h.
NatInf tate_blueshift(std::uint64_t p, std::uint64_t k, std::uint64_t l, NatInf h);

/// δ_p(k,l); requires p − 1 | k − l ≥ 0.
NatInf geometric_blueshift(std::uint64_t p, std::uint64_t k, std::uint64_t l);

/// Points of layer ≥ k: the support of P_d h(k).
std::vector<BalmerPrime> generator_support(int k, const SpectrumTruncation& t);

/// Whether the inclusion of the m-truncation into the d-truncation (same
/// primes and heights) is an order-embedding whose image is the complement
/// of the support of P_d h(m+1), and that image is open (an up-set).
bool open_embedding_check(int m, int d, const std::vector<std::uint64_t>& primes,
                          std::uint64_t hmax, bool include_infinity);

struct SmithReport {
    bool holds = false;
    BalmerPrime source;
    BalmerPrime target;
    std::string witness;
};

/// The Smith statement for (k,n) → (l,h) at p, decided as
/// P([k],p,n+1) ⊆ P([l],p,h+1). Also answers the equivalent Floyd query.
SmithReport smith_report(int d, std::uint64_t p, int k, int l, NatInf n, NatInf h);
bool smith_holds(int d, std::uint64_t p, int k, int l, NatInf n, NatInf h);

} // namespace exc
