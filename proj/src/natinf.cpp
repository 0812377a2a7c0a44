#include "excisive/natinf.hpp"

#include "excisive/errors.hpp"

#include <charconv>
#include <ostream>

namespace exc {

std::uint64_t NatInf::value() const
{
    require(!infinite_, "NatInf::value() called on infinity");
    return value_;
}

std::string NatInf::str() const
{
    return infinite_ ? std::string("inf") : std::to_string(value_);
}

NatInf NatInf::parse(const std::string& s)
{
    if (s == "inf" || s == "infinity" || s == "∞")
        return infinity();
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
        throw PreconditionError("not a natural number or 'inf': '" + s + "'");
    return NatInf(v);
}

std::ostream& operator<<(std::ostream& os, const NatInf& x)
{
    return os << x.str();
}

} // namespace exc
