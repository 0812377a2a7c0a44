#pragma once

#include "excisive/balmer.hpp"
#include "excisive/natinf.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace exc {

/// A p-local type function [d] → N∞; entry k-1 is the value at layer k.
using TypeVector = std::vector<NatInf>;

/// A pair (k,l) breaking f(k) ≤ δ_p(k,l) + f(l).
struct AdmissibilityViolation {
    int k = 0;
    int l = 0;
    std::uint64_t p = 0;
    std::string describe() const;
};

/// First violated inequality, scanning k then l upward. This is the single
/// evaluator behind both is_p_admissible and is_admissible.
std::optional<AdmissibilityViolation> p_admissibility_violation(const TypeVector& f,
                                                                std::uint64_t p);

bool is_p_admissible(const TypeVector& f, std::uint64_t p, int d);

/// A type function [d] × primes → N∞.
struct AdmissibleFunction {
    int d = 0;
    std::vector<std::uint64_t> primes;
    std::map<std::uint64_t, TypeVector> values;

    /// Every prime of `primes` gets a copy of f.
    static AdmissibleFunction uniform(int d, std::vector<std::uint64_t> primes,
                                      const TypeVector& f);

    NatInf at(int k, std::uint64_t p) const;
    const TypeVector& restrict_to(std::uint64_t p) const;

    friend bool operator==(const AdmissibleFunction&, const AdmissibleFunction&) = default;
};

/// Per-prime inequality plus: f(k,p) = 0 for one p forces f(k,q) = 0 for all q.
bool is_admissible(const AdmissibleFunction& f);

/// Membership mask over the points of a truncation.
using PointMask = std::vector<bool>;

std::vector<BalmerPrime> mask_points(const PointMask& y, const SpectrumTruncation& t);

/// Y_f = {P([k],p,m) : m > f(k,p)}. Rejects non-admissible f and truncations
/// without ∞ points.
PointMask thomason_from_function(const AdmissibleFunction& f, const SpectrumTruncation& t);

/// Why Y is not a valid Thomason subset of the truncation, naming a witness
/// point; nullopt if it is valid.
std::optional<std::string> thomason_violation(const PointMask& y, const SpectrumTruncation& t);
bool is_valid_thomason(const PointMask& y, const SpectrumTruncation& t);

/// f(k,p) = min{m − 1 : P([k],p,m) ∈ Y}. A column meeting Y only in its ∞
/// point gets the top finite height of the truncation; a column missing Y
/// gets ∞. Throws PreconditionError with a witness on invalid Y.
AdmissibleFunction function_from_thomason(const PointMask& y, const SpectrumTruncation& t);

/// Union of the closures of finite-height seeds.
PointMask thomason_union_closure(const std::vector<BalmerPrime>& seeds,
                                 const SpectrumTruncation& t);

inline constexpr std::uint64_t kEnumerationBudget = 10'000'000;

/// Budget for enumerate_p_admissible; EXCSPEC_ENUM_BUDGET overrides it.
std::uint64_t enumeration_budget();

struct Enumeration {
    std::uint64_t count = 0;
    std::vector<TypeVector> functions; // filled only on request
};

/// All f with values in {0,…,Hmax,∞} that are p-admissible, in lexicographic
/// order (∞ last). Throws BudgetExceeded when (Hmax+2)^d exceeds the budget.
Enumeration enumerate_p_admissible(int d, std::uint64_t p, std::uint64_t hmax,
                                   bool keep_list = false);

std::string to_string(const TypeVector& f);

} // namespace exc
