#pragma once

#include "excisive/natinf.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace exc {

/// leq[a][b] != 0 iff a ≤ b.
using Relation = std::vector<std::vector<char>>;

using Edge = std::pair<std::size_t, std::size_t>;

struct PosetNode {
    int layer = 0;
    std::uint64_t ch = 0;
    std::optional<NatInf> height; // absent for Zariski and HZ points
    std::string label;
};

/// A finite poset ready for serialization. Edges (a, b) always mean a ⊆ b.
struct Poset {
    std::string name;
    std::string rankdir; // "TB" or "BT"
    std::vector<PosetNode> nodes;
    std::vector<Edge> covers;
    std::vector<Edge> relation; // strict pairs only
};

/// Reflexive, antisymmetric and transitive. On failure `witness` (if given)
/// describes the offending indices.
bool is_partial_order(const Relation& leq, std::string* witness = nullptr);

/// Covers a < b with no c strictly between, in lexicographic order.
std::vector<Edge> transitive_reduction(const Relation& leq);

/// Strict pairs of `leq`, in lexicographic order.
std::vector<Edge> strict_pairs(const Relation& leq);

Poset make_poset(std::string name, std::string rankdir, std::vector<PosetNode> nodes,
                 const Relation& leq);

} // namespace exc
