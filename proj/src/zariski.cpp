#include "excisive/zariski.hpp"

#include "excisive/combinat.hpp"
#include "excisive/errors.hpp"

#include <algorithm>

namespace exc {

std::vector<std::uint64_t> normalize_primes(std::vector<std::uint64_t> primes)
{
    for (auto p : primes)
        require(is_prime(p), std::to_string(p) + " is not a prime");
    std::sort(primes.begin(), primes.end());
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
    return primes;
}

ZariskiPrime ZariskiPrime::make(int layer, std::uint64_t ch)
{
    require(layer >= 1, "layer must be positive");
    require(ch == 0 || is_prime(ch), "characteristic must be 0 or a prime");
    ZariskiPrime z;
    z.ch = ch;
    z.layer = ch == 0 ? layer : static_cast<int>((layer - 1) % (ch - 1)) + 1;
    return z;
}

std::string ZariskiPrime::label() const
{
    return "z(" + std::to_string(layer) + "|" + std::to_string(ch) + ")";
}

bool z_equal(const ZariskiPrime& a, const ZariskiPrime& b)
{
    if (a.ch != b.ch)
        return false;
    if (a.ch == 0)
        return a.layer == b.layer;
    const int diff = a.layer > b.layer ? a.layer - b.layer : b.layer - a.layer;
    return diff % static_cast<int>(a.ch - 1) == 0;
}

bool z_leq(const ZariskiPrime& a, const ZariskiPrime& b)
{
    if (z_equal(a, b))
        return true;
    if (a.ch == 0 && b.ch != 0)
        return z_equal(ZariskiPrime{a.layer, b.ch}, b);
    return false;
}

bool z_membership(const BurnsidePresentation& pres, const RingElement& a, const ZariskiPrime& q)
{
    require(q.layer >= 1 && q.layer <= pres.d(), "prime layer outside [d]");
    const GhostVector g = pres.ghost(a);
    const BigInt& v = g[q.layer - 1];
    if (q.ch == 0)
        return v == 0;
    return v % BigInt(static_cast<unsigned long>(q.ch)) == 0;
}

std::vector<ZariskiPrime> z_points(int d, const std::vector<std::uint64_t>& primes)
{
    require(d >= 1, "d must be positive");
    const auto ps = normalize_primes(primes);
    std::vector<ZariskiPrime> out;
    for (int i = 1; i <= d; ++i) {
        out.push_back(ZariskiPrime::make(i, 0));
        for (auto p : ps) {
            const ZariskiPrime z = ZariskiPrime::make(i, p);
            if (z.layer == i)
                out.push_back(z);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

Poset z_poset(int d, const std::vector<std::uint64_t>& primes)
{
    require(!primes.empty(), "z_poset needs at least one prime");
    const auto points = z_points(d, primes);
    const std::size_t n = points.size();
    Relation leq(n, std::vector<char>(n, 0));
    std::vector<PosetNode> nodes;
    for (std::size_t a = 0; a < n; ++a) {
        nodes.push_back({points[a].layer, points[a].ch, std::nullopt, points[a].label()});
        for (std::size_t b = 0; b < n; ++b)
            leq[a][b] = z_leq(points[a], points[b]);
    }
    return make_poset("zariski", "BT", std::move(nodes), leq);
}

} // namespace exc
