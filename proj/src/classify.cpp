#include "excisive/classify.hpp"

#include "excisive/combinat.hpp"
#include "excisive/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace exc {

std::string AdmissibilityViolation::describe() const
{
    std::ostringstream os;
    os << "f(" << k << ") > delta_" << p << "(" << k << "," << l << ") + f(" << l << ")";
    return os.str();
}

std::optional<AdmissibilityViolation> p_admissibility_violation(const TypeVector& f,
                                                                std::uint64_t p)
{
    require(is_prime(p), "p must be prime");
    const int d = static_cast<int>(f.size());
    for (int k = 1; k <= d; ++k)
        for (int l = 1; l < k; ++l) {
            if ((k - l) % static_cast<int>(p - 1) != 0)
                continue;
            if (f[k - 1] > delta_p(p, k, l) + f[l - 1])
                return AdmissibilityViolation{k, l, p};
        }
    return std::nullopt;
}

bool is_p_admissible(const TypeVector& f, std::uint64_t p, int d)
{
    require(static_cast<int>(f.size()) == d, "type vector length differs from d");
    return !p_admissibility_violation(f, p).has_value();
}

AdmissibleFunction AdmissibleFunction::uniform(int d, std::vector<std::uint64_t> primes,
                                               const TypeVector& f)
{
    require(static_cast<int>(f.size()) == d, "type vector length differs from d");
    AdmissibleFunction out;
    out.d = d;
    out.primes = normalize_primes(std::move(primes));
    for (auto p : out.primes)
        out.values[p] = f;
    return out;
}

NatInf AdmissibleFunction::at(int k, std::uint64_t p) const
{
    require(k >= 1 && k <= d, "layer outside [d]");
    return restrict_to(p)[k - 1];
}

const TypeVector& AdmissibleFunction::restrict_to(std::uint64_t p) const
{
    const auto it = values.find(p);
    require(it != values.end(), "prime " + std::to_string(p) + " not in the function's domain");
    return it->second;
}

bool is_admissible(const AdmissibleFunction& f)
{
    require(f.values.size() == f.primes.size(), "function values do not match its prime set");
    for (auto p : f.primes) {
        const TypeVector& column = f.restrict_to(p);
        require(static_cast<int>(column.size()) == f.d, "type vector length differs from d");
        if (p_admissibility_violation(column, p))
            return false;
    }
    for (int k = 1; k <= f.d; ++k) {
        bool any_zero = false, all_zero = true;
        for (auto p : f.primes) {
            const bool z = f.at(k, p) == NatInf(0);
            any_zero = any_zero || z;
            all_zero = all_zero && z;
        }
        if (any_zero && !all_zero)
            return false;
    }
    return true;
}

std::vector<BalmerPrime> mask_points(const PointMask& y, const SpectrumTruncation& t)
{
    require(y.size() == t.size(), "mask size differs from truncation");
    std::vector<BalmerPrime> out;
    for (std::size_t i = 0; i < y.size(); ++i)
        if (y[i])
            out.push_back(t.points()[i]);
    return out;
}

PointMask thomason_from_function(const AdmissibleFunction& f, const SpectrumTruncation& t)
{
    require(t.include_infinity(), "thomason_from_function needs the infinite-height points");
    require(f.d == t.d() && f.primes == t.primes(), "function and truncation disagree on d or primes");
    require(!t.primes().empty(), "classification needs at least one prime");
    require(is_admissible(f), "function is not admissible");
    PointMask y(t.size(), false);
    for (std::size_t i = 0; i < t.size(); ++i) {
        const BalmerPrime& pt = t.points()[i];
        // Admissibility makes the height-1 test independent of the prime.
        const std::uint64_t p = pt.height == NatInf(1) ? t.primes().front() : pt.ch;
        y[i] = pt.height > f.at(pt.layer, p);
    }
    return y;
}

std::optional<std::string> thomason_violation(const PointMask& y, const SpectrumTruncation& t)
{
    require(y.size() == t.size(), "mask size differs from truncation");
    const auto& pts = t.points();
    for (std::size_t b = 0; b < t.size(); ++b) {
        if (!y[b])
            continue;
        for (std::size_t a = 0; a < t.size(); ++a)
            if (t.leq(a, b) && !y[a])
                return "not specialization-closed: " + pts[a].label() + " <= " + pts[b].label() +
                       " but only the latter is in Y";
        bool finite_cover = false;
        for (std::size_t c = 0; c < t.size() && !finite_cover; ++c)
            finite_cover = y[c] && pts[c].height.is_finite() && t.leq(b, c);
        if (!finite_cover)
            return "no finite-height member of Y contains " + pts[b].label();
    }
    return std::nullopt;
}

bool is_valid_thomason(const PointMask& y, const SpectrumTruncation& t)
{
    return !thomason_violation(y, t).has_value();
}

AdmissibleFunction function_from_thomason(const PointMask& y, const SpectrumTruncation& t)
{
    require(!t.primes().empty(), "classification needs at least one prime");
    if (const auto why = thomason_violation(y, t))
        throw PreconditionError("invalid Thomason subset: " + *why);

    AdmissibleFunction f;
    f.d = t.d();
    f.primes = t.primes();
    for (auto p : f.primes)
        f.values[p] = TypeVector(f.d, NatInf::infinity());
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (!y[i])
            continue;
        const BalmerPrime& pt = t.points()[i];
        const NatInf value = pt.height.is_finite() ? NatInf(pt.height.value() - 1) : NatInf(t.hmax());
        if (pt.height == NatInf(1)) {
            for (auto p : f.primes)
                f.values[p][pt.layer - 1] = std::min(f.values[p][pt.layer - 1], value);
        } else {
            NatInf& slot = f.values[pt.ch][pt.layer - 1];
            slot = std::min(slot, value);
        }
    }
    if (!is_admissible(f))
        throw InternalError("type function of a valid Thomason subset is not admissible");
    return f;
}

PointMask thomason_union_closure(const std::vector<BalmerPrime>& seeds, const SpectrumTruncation& t)
{
    PointMask y(t.size(), false);
    for (const auto& seed : seeds) {
        require(seed.height.is_finite(), "seed " + seed.label() + " has infinite height");
        const std::size_t s = t.index_of(seed);
        require(s != t.size(), "seed " + seed.label() + " is not in the truncation");
        for (std::size_t a = 0; a < t.size(); ++a)
            if (t.leq(a, s))
                y[a] = true;
    }
    return y;
}

std::uint64_t enumeration_budget()
{
    if (const char* env = std::getenv("EXCSPEC_ENUM_BUDGET")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0)
            return v;
    }
    return kEnumerationBudget;
}

Enumeration enumerate_p_admissible(int d, std::uint64_t p, std::uint64_t hmax, bool keep_list)
{
    require(d >= 1, "d must be positive");
    require(is_prime(p), "p must be prime");
    const std::uint64_t budget = enumeration_budget();
    const std::uint64_t base = hmax + 2;
    std::uint64_t total = 1;
    for (int i = 0; i < d; ++i) {
        if (total > budget / base)
            throw BudgetExceeded("enumeration of (" + std::to_string(base) + ")^" +
                                 std::to_string(d) + " vectors exceeds the budget of " +
                                 std::to_string(budget));
        total *= base;
    }

    // Digit v < base encodes v ≤ Hmax as itself and v = Hmax+1 as ∞.
    auto value_of = [&](std::uint64_t v) { return v > hmax ? NatInf::infinity() : NatInf(v); };
    Enumeration out;
    std::vector<std::uint64_t> digits(d, 0);
    TypeVector f(d, NatInf(0));
    for (std::uint64_t n = 0; n < total; ++n) {
        for (int i = 0; i < d; ++i)
            f[i] = value_of(digits[i]);
        if (!p_admissibility_violation(f, p)) {
            ++out.count;
            if (keep_list)
                out.functions.push_back(f);
        }
        for (int i = d - 1; i >= 0; --i) {
            if (++digits[i] < base)
                break;
            digits[i] = 0;
        }
    }
    return out;
}

std::string to_string(const TypeVector& f)
{
    std::string s = "(";
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (i)
            s += ",";
        s += f[i].str();
    }
    return s + ")";
}

} // namespace exc
