#pragma once

#include "excisive/bigint.hpp"
#include "excisive/matrix.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace exc {

/// An element of A(d) in the basis x_1, …, x_d; coeffs[i-1] multiplies x_i.
struct RingElement {
    std::vector<BigInt> coeffs;

    RingElement() = default;
    explicit RingElement(std::vector<BigInt> c) : coeffs(std::move(c)) {}

    static RingElement zero(int d);
    static RingElement one(int d) { return basis(d, 1); }
    /// x_i, 1-based.
    static RingElement basis(int d, int i);

    int dim() const { return static_cast<int>(coeffs.size()); }
    bool is_zero() const;

    RingElement& operator+=(const RingElement& other);
    RingElement& operator-=(const RingElement& other);

    friend RingElement operator+(RingElement a, const RingElement& b) { return a += b; }
    friend RingElement operator-(RingElement a, const RingElement& b) { return a -= b; }
    friend RingElement operator*(const BigInt& s, RingElement a);

    friend bool operator==(const RingElement&, const RingElement&) = default;

    /// "2 x2 + 4 x3"; "0" for zero.
    std::string str() const;
};

/// Image under the ghost map in ∏_{i≤d} Z; component i-1 is φ_i.
using GhostVector = std::vector<BigInt>;

inline constexpr int kPresentationBudget = 16;

/// The ring A(d): structure constants, the ghost matrix and its inverse.
///
/// The multiplication keeps only x_l with l ≤ d. The untruncated good-subset
/// counts are kept as well (full_products) for callers that need every
/// cardinality up to i·j.
class BurnsidePresentation {
public:
    /// 1 ≤ d ≤ 16; BudgetExceeded above.
    explicit BurnsidePresentation(int d);

    int d() const { return d_; }

    /// mu(i,j,l) for 1 ≤ i,j,l ≤ d.
    const BigInt& mu(int i, int j, int l) const;
    /// mu(i,j,l) for l = 0..i·j (index 0 is always zero).
    const std::vector<BigInt>& full_products(int i, int j) const;

    /// M_{ij} = |surj(i,j)|, 0-based storage.
    const IntMatrix& ghost_matrix() const { return ghost_; }
    const RatMatrix& ghost_inverse() const { return ghost_inv_; }

    RingElement multiply(const RingElement& a, const RingElement& b) const;
    GhostVector ghost(const RingElement& a) const;

    /// Recover the element with a given ghost vector (must lie in the image).
    RingElement from_ghost(const GhostVector& g) const;

private:
    void check(const RingElement& a) const;

    int d_;
    std::vector<std::vector<std::vector<BigInt>>> full_; // [i-1][j-1][l]
    IntMatrix ghost_;
    RatMatrix ghost_inv_;
};

/// Componentwise product in ∏ Z.
GhostVector ghost_product(const GhostVector& a, const GhostVector& b);

inline constexpr std::uint64_t kDefaultSeed = 0x5eed'2024'0001ULL;

/// φ(ab) == φ(a)φ(b) on every basis pair and on `trials` random elements with
/// coefficients in [-9, 9] drawn from a generator seeded with `seed`.
/// Requires d ≤ 8.
bool ghost_is_hom_check(int d, int trials, std::uint64_t seed = kDefaultSeed);

/// Invariant factors of the ghost matrix (units included), i.e. coker φ.
std::vector<BigInt> cokernel_invariants(int d);

/// Whether coker φ ≅ ∏_{i≤d} Z/i! as abstract groups, by comparing
/// prime-power cyclic factors.
bool cokernel_matches_factorials(int d);

/// Associativity of x_i x_j x_k over all triples, with products reduced
/// through the structure constants. Requires d ≤ 6.
bool quotient_presentation_check(int d);

struct RingAxiomReport {
    bool associative = true;
    bool commutative = true;
    bool unital = true;
    bool ghost_hom = true;
    bool ok() const { return associative && commutative && unital && ghost_hom; }
};

/// Exhaustive basis sweep of the ring axioms plus the ghost-hom check.
RingAxiomReport ring_axioms(int d);

} // namespace exc
