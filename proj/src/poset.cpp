#include "excisive/poset.hpp"

#include "excisive/errors.hpp"

namespace exc {

bool is_partial_order(const Relation& leq, std::string* witness)
{
    const std::size_t n = leq.size();
    auto fail = [&](const std::string& why) {
        if (witness)
            *witness = why;
        return false;
    };
    for (std::size_t a = 0; a < n; ++a) {
        if (leq[a].size() != n)
            return fail("relation matrix is not square");
        if (!leq[a][a])
            return fail("not reflexive at " + std::to_string(a));
    }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            if (leq[a][b] && leq[b][a])
                return fail("not antisymmetric: " + std::to_string(a) + ", " + std::to_string(b));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            if (!leq[a][b])
                continue;
            for (std::size_t c = 0; c < n; ++c)
                if (leq[b][c] && !leq[a][c])
                    return fail("not transitive: " + std::to_string(a) + " <= " +
                                std::to_string(b) + " <= " + std::to_string(c));
        }
    return true;
}

std::vector<Edge> strict_pairs(const Relation& leq)
{
    std::vector<Edge> out;
    for (std::size_t a = 0; a < leq.size(); ++a)
        for (std::size_t b = 0; b < leq.size(); ++b)
            if (a != b && leq[a][b])
                out.emplace_back(a, b);
    return out;
}

std::vector<Edge> transitive_reduction(const Relation& leq)
{
    const std::size_t n = leq.size();
    std::vector<Edge> out;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            if (a == b || !leq[a][b])
                continue;
            bool cover = true;
            for (std::size_t c = 0; c < n && cover; ++c)
                if (c != a && c != b && leq[a][c] && leq[c][b])
                    cover = false;
            if (cover)
                out.emplace_back(a, b);
        }
    return out;
}

Poset make_poset(std::string name, std::string rankdir, std::vector<PosetNode> nodes,
                 const Relation& leq)
{
    require(leq.size() == nodes.size(), "poset: relation size differs from node count");
    std::string why;
    if (!is_partial_order(leq, &why))
        throw InternalError("poset '" + name + "': " + why);
    Poset p;
    p.name = std::move(name);
    p.rankdir = std::move(rankdir);
    p.nodes = std::move(nodes);
    p.covers = transitive_reduction(leq);
    p.relation = strict_pairs(leq);
    return p;
}

} // namespace exc
