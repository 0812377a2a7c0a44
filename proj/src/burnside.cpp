#include "excisive/burnside.hpp"

#include "excisive/combinat.hpp"
#include "excisive/errors.hpp"

#include <random>
#include <sstream>

namespace exc {

// ---------------------------------------------------------------------------
// RingElement

RingElement RingElement::zero(int d)
{
    require(d >= 1, "ring dimension must be positive");
    return RingElement(std::vector<BigInt>(d, BigInt(0)));
}

RingElement RingElement::basis(int d, int i)
{
    require(i >= 1 && i <= d, "basis index out of range");
    RingElement e = zero(d);
    e.coeffs[i - 1] = 1;
    return e;
}

bool RingElement::is_zero() const
{
    for (const auto& c : coeffs)
        if (c != 0)
            return false;
    return true;
}

RingElement& RingElement::operator+=(const RingElement& other)
{
    require(dim() == other.dim(), "ring element dimension mismatch");
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        coeffs[i] += other.coeffs[i];
    return *this;
}

RingElement& RingElement::operator-=(const RingElement& other)
{
    require(dim() == other.dim(), "ring element dimension mismatch");
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        coeffs[i] -= other.coeffs[i];
    return *this;
}

RingElement operator*(const BigInt& s, RingElement a)
{
    for (auto& c : a.coeffs)
        c *= s;
    return a;
}

std::string RingElement::str() const
{
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        const BigInt& c = coeffs[i];
        if (c == 0)
            continue;
        if (first) {
            if (c < 0)
                os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        const BigInt mag = abs(c);
        if (mag != 1)
            os << mag.get_str() << " ";
        os << "x" << (i + 1);
        first = false;
    }
    return first ? std::string("0") : os.str();
}

// ---------------------------------------------------------------------------
// BurnsidePresentation

BurnsidePresentation::BurnsidePresentation(int d) : d_(d)
{
    require(d >= 1, "A(d) needs d >= 1");
    if (d > kPresentationBudget)
        throw BudgetExceeded("A(d): d = " + std::to_string(d) +
                             " exceeds the table budget of " +
                             std::to_string(kPresentationBudget));

    full_.assign(d, std::vector<std::vector<BigInt>>(d));
    for (int i = 1; i <= d; ++i)
        for (int j = i; j <= d; ++j) {
            std::vector<BigInt> row(i * j + 1, BigInt(0));
            for (int l = std::max(i, j); l <= i * j; ++l)
                row[l] = mu_incl_excl(i, j, l);
            full_[i - 1][j - 1] = row;
            full_[j - 1][i - 1] = std::move(row);
        }

    ghost_ = IntMatrix(d, d);
    for (int i = 1; i <= d; ++i)
        for (int j = 1; j <= d; ++j)
            ghost_(i - 1, j - 1) = surjections(i, j);
    ghost_inv_ = lower_triangular_inverse(ghost_);
}

const std::vector<BigInt>& BurnsidePresentation::full_products(int i, int j) const
{
    require(i >= 1 && i <= d_ && j >= 1 && j <= d_, "basis index out of range");
    return full_[i - 1][j - 1];
}

const BigInt& BurnsidePresentation::mu(int i, int j, int l) const
{
    static const BigInt zero = 0;
    require(l >= 1 && l <= d_, "structure constant index out of range");
    const auto& row = full_products(i, j);
    return l < static_cast<int>(row.size()) ? row[l] : zero;
}

void BurnsidePresentation::check(const RingElement& a) const
{
    if (a.dim() != d_)
        throw PreconditionError("element of A(" + std::to_string(a.dim()) +
                                ") used with A(" + std::to_string(d_) + ")");
}

RingElement BurnsidePresentation::multiply(const RingElement& a, const RingElement& b) const
{
    check(a);
    check(b);
    RingElement out = RingElement::zero(d_);
    for (int i = 1; i <= d_; ++i) {
        const BigInt& ai = a.coeffs[i - 1];
        if (ai == 0)
            continue;
        for (int j = 1; j <= d_; ++j) {
            const BigInt& bj = b.coeffs[j - 1];
            if (bj == 0)
                continue;
            const BigInt scale = ai * bj;
            const auto& row = full_[i - 1][j - 1];
            const int top = std::min<int>(d_, static_cast<int>(row.size()) - 1);
            for (int l = 1; l <= top; ++l)
                if (row[l] != 0)
                    out.coeffs[l - 1] += scale * row[l];
        }
    }
    return out;
}

GhostVector BurnsidePresentation::ghost(const RingElement& a) const
{
    check(a);
    GhostVector g(d_, BigInt(0));
    for (int i = 0; i < d_; ++i)
        for (int j = 0; j < d_; ++j)
            g[i] += ghost_(i, j) * a.coeffs[j];
    return g;
}

RingElement BurnsidePresentation::from_ghost(const GhostVector& g) const
{
    require(static_cast<int>(g.size()) == d_, "ghost vector dimension mismatch");
    RingElement out = RingElement::zero(d_);
    for (int i = 0; i < d_; ++i) {
        Rational acc = 0;
        for (int j = 0; j < d_; ++j)
            acc += ghost_inv_(i, j) * Rational(g[j]);
        acc.canonicalize();
        if (acc.get_den() != 1)
            throw PreconditionError("ghost vector is not in the image of A(d)");
        out.coeffs[i] = acc.get_num();
    }
    return out;
}

GhostVector ghost_product(const GhostVector& a, const GhostVector& b)
{
    require(a.size() == b.size(), "ghost vector dimension mismatch");
    GhostVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = a[i] * b[i];
    return out;
}

// ---------------------------------------------------------------------------
// Checks

bool ghost_is_hom_check(int d, int trials, std::uint64_t seed)
{
    require(d >= 1 && d <= 8, "ghost_is_hom_check needs 1 <= d <= 8");
    require(trials >= 0, "trial count must be non-negative");
    const BurnsidePresentation pres(d);

    auto hom_on = [&](const RingElement& a, const RingElement& b) {
        return pres.ghost(pres.multiply(a, b)) == ghost_product(pres.ghost(a), pres.ghost(b));
    };

    for (int i = 1; i <= d; ++i)
        for (int j = 1; j <= d; ++j)
            if (!hom_on(RingElement::basis(d, i), RingElement::basis(d, j)))
                return false;

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> coeff(-9, 9);
    auto random_element = [&] {
        RingElement e = RingElement::zero(d);
        for (auto& c : e.coeffs)
            c = coeff(rng);
        return e;
    };
    for (int t = 0; t < trials; ++t) {
        const RingElement a = random_element();
        const RingElement b = random_element();
        if (!hom_on(a, b))
            return false;
    }
    return true;
}

std::vector<BigInt> cokernel_invariants(int d)
{
    const BurnsidePresentation pres(d);
    return smith_invariants(pres.ghost_matrix());
}

bool cokernel_matches_factorials(int d)
{
    std::vector<BigInt> factorials;
    for (int i = 1; i <= d; ++i)
        factorials.push_back(factorial(i));
    return primary_decomposition(cokernel_invariants(d)) == primary_decomposition(factorials);
}

bool quotient_presentation_check(int d)
{
    require(d >= 1 && d <= 6, "quotient_presentation_check needs 1 <= d <= 6");
    const BurnsidePresentation pres(d);
    for (int i = 1; i <= d; ++i)
        for (int j = 1; j <= d; ++j) {
            const RingElement xij =
                pres.multiply(RingElement::basis(d, i), RingElement::basis(d, j));
            for (int k = 1; k <= d; ++k) {
                const RingElement xk = RingElement::basis(d, k);
                const RingElement xjk = pres.multiply(RingElement::basis(d, j), xk);
                if (pres.multiply(xij, xk) != pres.multiply(RingElement::basis(d, i), xjk))
                    return false;
            }
        }
    return true;
}

RingAxiomReport ring_axioms(int d)
{
    require(d >= 1 && d <= 8, "ring_axioms needs 1 <= d <= 8");
    const BurnsidePresentation pres(d);
    RingAxiomReport report;
    const RingElement one = RingElement::one(d);
    for (int i = 1; i <= d; ++i) {
        const RingElement xi = RingElement::basis(d, i);
        if (pres.multiply(one, xi) != xi || pres.multiply(xi, one) != xi)
            report.unital = false;
        for (int j = 1; j <= d; ++j) {
            const RingElement xj = RingElement::basis(d, j);
            const RingElement xij = pres.multiply(xi, xj);
            if (xij != pres.multiply(xj, xi))
                report.commutative = false;
            for (int k = 1; k <= d; ++k) {
                const RingElement xk = RingElement::basis(d, k);
                if (pres.multiply(xij, xk) != pres.multiply(xi, pres.multiply(xj, xk)))
                    report.associative = false;
            }
        }
    }
    report.ghost_hom = ghost_is_hom_check(d, 32);
    return report;
}

} // namespace exc
