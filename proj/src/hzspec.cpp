#include "excisive/hzspec.hpp"

#include "excisive/combinat.hpp"
#include "excisive/errors.hpp"

#include <algorithm>

namespace exc {

namespace {

bool divides_gap(std::uint64_t p, int k, int l)
{
    return k >= l && (k - l) % static_cast<int>(p - 1) == 0;
}

Poset poset_of(const std::string& name, const std::vector<HZPrime>& points)
{
    const std::size_t n = points.size();
    Relation leq(n, std::vector<char>(n, 0));
    std::vector<PosetNode> nodes;
    for (std::size_t a = 0; a < n; ++a) {
        nodes.push_back({points[a].layer, points[a].residue, std::nullopt, points[a].label()});
        for (std::size_t b = 0; b < n; ++b)
            leq[a][b] = hz_leq(points[a], points[b]);
    }
    return make_poset(name, "TB", std::move(nodes), leq);
}

} // namespace

HZPrime HZPrime::make(int layer, std::uint64_t residue)
{
    require(layer >= 1, "layer must be positive");
    require(residue == 0 || is_prime(residue), "residue must be 0 or a prime");
    return HZPrime{layer, residue};
}

std::string HZPrime::label() const
{
    return "hz(" + std::to_string(layer) + "|" + std::to_string(residue) + ")";
}

bool hz_leq(const HZPrime& a, const HZPrime& b)
{
    if (a.residue == 0)
        return b.residue == 0 && a.layer == b.layer;
    if (b.residue != 0 && b.residue != a.residue)
        return false;
    return divides_gap(a.residue, a.layer, b.layer);
}

BalmerPrime hz_base_change(const HZPrime& a)
{
    if (a.residue == 0)
        return BalmerPrime::make(a.layer, 0, 1);
    return BalmerPrime::make(a.layer, a.residue, NatInf::infinity());
}

std::vector<HZPrime> hz_points(int d, const std::vector<std::uint64_t>& primes)
{
    require(d >= 1, "d must be positive");
    std::vector<HZPrime> out;
    for (int k = 1; k <= d; ++k) {
        out.push_back(HZPrime::make(k, 0));
        for (auto p : normalize_primes(primes))
            out.push_back(HZPrime::make(k, p));
    }
    return out;
}

bool hz_admissible_subset(const std::set<HZPrime>& y, int d,
                          const std::vector<std::uint64_t>& primes)
{
    const auto ps = normalize_primes(primes);
    for (const auto& pt : y)
        require(pt.layer >= 1 && pt.layer <= d &&
                    (pt.residue == 0 || std::binary_search(ps.begin(), ps.end(), pt.residue)),
                "subset point " + pt.label() + " outside the model");
    for (const auto& pt : y) {
        const int l = pt.layer;
        for (int k = l; k <= d; ++k)
            for (auto p : ps) {
                if (!divides_gap(p, k, l))
                    continue;
                // (a) from a generic point, (b) from a closed point of the same residue.
                if ((pt.residue == 0 || pt.residue == p) && !y.count(HZPrime{k, p}))
                    return false;
            }
    }
    return true;
}

bool hz_specialization_closed(const std::set<HZPrime>& y, int d,
                              const std::vector<std::uint64_t>& primes)
{
    const auto all = hz_points(d, primes);
    for (const auto& b : y)
        for (const auto& a : all)
            if (hz_leq(a, b) && !y.count(a))
                return false;
    return true;
}

Poset hz_poset(int d, const std::vector<std::uint64_t>& primes)
{
    return poset_of("hz", hz_points(d, primes));
}

Poset hfp_poset(int d, std::uint64_t p)
{
    require(d >= 1, "d must be positive");
    require(is_prime(p), "p must be prime");
    std::vector<HZPrime> points;
    for (int k = 1; k <= d; ++k)
        points.push_back(HZPrime::make(k, p));
    return poset_of("hfp", points);
}

} // namespace exc
