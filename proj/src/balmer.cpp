#include "excisive/balmer.hpp"

#include "excisive/combinat.hpp"
#include "excisive/errors.hpp"

#include <algorithm>
#include <sstream>

namespace exc {

BalmerPrime BalmerPrime::make(int layer, std::uint64_t ch, NatInf height)
{
    require(layer >= 1, "layer must be positive");
    require(height >= NatInf(1), "height must be at least 1");
    BalmerPrime b;
    b.layer = layer;
    b.height = height;
    if (height == NatInf(1)) {
        require(ch == 0 || is_prime(ch), "characteristic must be 0 or a prime");
        b.ch = 0;
    } else {
        require(is_prime(ch), "points of height > 1 need a prime characteristic");
        b.ch = ch;
    }
    return b;
}

std::string BalmerPrime::label() const
{
    return "P(" + std::to_string(layer) + "|" + (height == NatInf(1) ? "*" : std::to_string(ch)) +
           "," + height.str() + ")";
}

bool b_equal(const BalmerPrime& a, const BalmerPrime& b)
{
    if (a.layer != b.layer || a.height != b.height)
        return false;
    return a.height == NatInf(1) || a.ch == b.ch;
}

namespace {

bool layers_compatible(std::uint64_t p, int k, int l)
{
    return k >= l && (k - l) % static_cast<int>(p - 1) == 0;
}

} // namespace

bool b_leq(const BalmerPrime& a, const BalmerPrime& b)
{
    if (a.height == NatInf(1))
        return b.height == NatInf(1) && a.layer == b.layer;
    const std::uint64_t p = a.ch;
    if (b.height > NatInf(1) && b.ch != p)
        return false;
    if (!layers_compatible(p, a.layer, b.layer))
        return false;
    return a.height >= b.height + delta_p(p, a.layer, b.layer);
}

SpectrumTruncation::SpectrumTruncation(int d, std::vector<std::uint64_t> primes,
                                       std::uint64_t hmax, bool include_infinity)
    : d_(d), primes_(normalize_primes(std::move(primes))), hmax_(hmax),
      include_infinity_(include_infinity)
{
    require(d >= 1, "d must be positive");
    require(hmax >= 1, "Hmax must be at least 1");
    for (int k = 1; k <= d; ++k) {
        points_.push_back(BalmerPrime::make(k, 0, 1));
        for (auto p : primes_) {
            for (std::uint64_t h = 2; h <= hmax; ++h)
                points_.push_back(BalmerPrime::make(k, p, h));
            if (include_infinity)
                points_.push_back(BalmerPrime::make(k, p, NatInf::infinity()));
        }
    }
    std::sort(points_.begin(), points_.end());
    for (std::size_t i = 0; i < points_.size(); ++i)
        index_[points_[i]] = i;
    const std::size_t n = points_.size();
    leq_.assign(n, std::vector<char>(n, 0));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            leq_[a][b] = b_leq(points_[a], points_[b]);
}

std::size_t SpectrumTruncation::index_of(const BalmerPrime& p) const
{
    const auto it = index_.find(p);
    return it == index_.end() ? size() : it->second;
}

std::size_t SpectrumTruncation::expected_size() const
{
    const std::size_t np = primes_.size();
    return static_cast<std::size_t>(d_) * (1 + np * (hmax_ - 1) + (include_infinity_ ? np : 0));
}

Poset SpectrumTruncation::poset() const
{
    std::vector<PosetNode> nodes;
    for (const auto& pt : points_)
        nodes.push_back({pt.layer, pt.ch, pt.height, pt.label()});
    return make_poset("balmer", "TB", std::move(nodes), leq_);
}

ZariskiPrime rho(const BalmerPrime& a)
{
    if (a.height == NatInf(1))
        return ZariskiPrime::make(a.layer, 0);
    require(is_prime(a.ch), "rho: height > 1 needs a prime characteristic");
    return ZariskiPrime::make(a.layer, a.ch);
}

NatInf tate_blueshift(std::uint64_t p, std::uint64_t k, std::uint64_t l, NatInf h)
{
    require(is_prime(p), "p must be prime");
    require(k >= l && l >= 1, "tate_blueshift needs k >= l >= 1");
    require(h.is_finite() && h >= NatInf(1), "tate_blueshift needs a finite height >= 1");
    if (k > l && ppp_exists(p, k, l))
        return 1;
    return h;
}

NatInf geometric_blueshift(std::uint64_t p, std::uint64_t k, std::uint64_t l)
{
    require(is_prime(p), "p must be prime");
    require(l >= 1 && k >= l && (k - l) % (p - 1) == 0,
            "geometric_blueshift needs p-1 | k-l >= 0");
    return delta_p(p, k, l);
}

std::vector<BalmerPrime> generator_support(int k, const SpectrumTruncation& t)
{
    require(k >= 1 && k <= t.d(), "generator_support needs 1 <= k <= d");
    std::vector<BalmerPrime> out;
    for (const auto& pt : t.points())
        if (pt.layer >= k)
            out.push_back(pt);
    return out;
}

bool open_embedding_check(int m, int d, const std::vector<std::uint64_t>& primes,
                          std::uint64_t hmax, bool include_infinity)
{
    require(m >= 1 && m <= d, "open_embedding_check needs 1 <= m <= d");
    const SpectrumTruncation small(m, primes, hmax, include_infinity);
    const SpectrumTruncation big(d, primes, hmax, include_infinity);

    std::vector<std::size_t> image;
    for (const auto& pt : small.points()) {
        const std::size_t j = big.index_of(pt);
        if (j == big.size())
            return false;
        image.push_back(j);
    }
    for (std::size_t a = 0; a < small.size(); ++a)
        for (std::size_t b = 0; b < small.size(); ++b)
            if (small.leq(a, b) != big.leq(image[a], image[b]))
                return false;

    std::vector<char> in_image(big.size(), 0);
    for (auto j : image)
        in_image[j] = 1;
    std::vector<char> in_support(big.size(), 0);
    if (m < d)
        for (const auto& pt : generator_support(m + 1, big))
            in_support[big.index_of(pt)] = 1;
    for (std::size_t j = 0; j < big.size(); ++j) {
        if (in_image[j] == in_support[j])
            return false;
        // Open: anything containing an image point is in the image.
        for (std::size_t i = 0; i < big.size(); ++i)
            if (in_image[j] && big.leq(j, i) && !in_image[i])
                return false;
    }
    return true;
}

SmithReport smith_report(int d, std::uint64_t p, int k, int l, NatInf n, NatInf h)
{
    require(is_prime(p), "p must be prime");
    require(k >= 1 && k <= d && l >= 1 && l <= d, "smith needs 1 <= k,l <= d");
    SmithReport r;
    r.source = BalmerPrime::make(k, p, n + NatInf(1));
    r.target = BalmerPrime::make(l, p, h + NatInf(1));
    r.holds = b_leq(r.source, r.target);

    std::ostringstream os;
    os << r.source.label() << (r.holds ? " <= " : " !<= ") << r.target.label() << ": ";
    if (r.source.height == NatInf(1)) {
        os << "height-1 source requires height-1 target in the same layer";
    } else if (!layers_compatible(p, k, l)) {
        os << p - 1 << " does not divide " << k << "-" << l << " >= 0";
    } else {
        const NatInf delta = delta_p(p, k, l);
        os << p - 1 << " | " << k << "-" << l << ", " << r.source.height.str()
           << (r.holds ? " >= " : " < ") << r.target.height.str() << " + " << delta.str();
    }
    r.witness = os.str();
    return r;
}

bool smith_holds(int d, std::uint64_t p, int k, int l, NatInf n, NatInf h)
{
    return smith_report(d, p, k, l, n, h).holds;
}

} // namespace exc
