#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace exc {

/// An element of N ∪ {∞}. Infinity is its own state, never a sentinel value.
///
/// Ordering is total with n < ∞ for every finite n (and ∞ == ∞). Addition
/// absorbs: ∞ + n = n + ∞ = ∞.
class NatInf {
public:
    constexpr NatInf() = default;
    constexpr NatInf(std::uint64_t n) : value_(n), infinite_(false) {} // NOLINT: implicit by design of N ⊂ N∞

    static constexpr NatInf infinity()
    {
        NatInf x;
        x.infinite_ = true;
        return x;
    }

    constexpr bool is_infinite() const { return infinite_; }
    constexpr bool is_finite() const { return !infinite_; }

    /// The finite value; throws PreconditionError on ∞.
    std::uint64_t value() const;

    std::optional<std::uint64_t> finite() const
    {
        if (infinite_)
            return std::nullopt;
        return value_;
    }

    friend constexpr bool operator==(const NatInf& a, const NatInf& b)
    {
        if (a.infinite_ || b.infinite_)
            return a.infinite_ == b.infinite_;
        return a.value_ == b.value_;
    }

    friend constexpr std::strong_ordering operator<=>(const NatInf& a, const NatInf& b)
    {
        if (a.infinite_ || b.infinite_)
            return a.infinite_ <=> b.infinite_;
        return a.value_ <=> b.value_;
    }

    friend constexpr NatInf operator+(const NatInf& a, const NatInf& b)
    {
        if (a.infinite_ || b.infinite_)
            return infinity();
        return NatInf(a.value_ + b.value_);
    }

    /// "inf" or the decimal value.
    std::string str() const;

    /// Inverse of str(); also accepts "∞" and "infinity".
    static NatInf parse(const std::string& s);

private:
    std::uint64_t value_ = 0;
    bool infinite_ = false;
};

std::ostream& operator<<(std::ostream& os, const NatInf& x);

} // namespace exc
