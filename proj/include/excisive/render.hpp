#pragma once

#include "excisive/classify.hpp"
#include "excisive/poset.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace exc {

enum class Format { Dot, Json, Csv, Text };

/// DOT digraph with one node per point and one edge a -> b per cover a ⊆ b.
std::string to_dot(const Poset& p);

/// {"points":[…], "covers":[[a,b]…], "relation":[[a,b]…]}, indices into points.
std::string to_json(const Poset& p);

/// One line per point followed by one line per cover.
std::string to_text(const Poset& p);

/// node,layer,char,height rows followed by a blank line and cover rows.
std::string to_csv(const Poset& p);

std::string render(const Poset& p, Format f);

/// {"d":…,"p":…,"hmax":…,"count":…,"functions":[[…]…]} with "inf" for ∞.
std::string enumeration_to_json(int d, std::uint64_t p, std::uint64_t hmax,
                                const Enumeration& e);

/// Header "d,p,hmax,count" and one row.
std::string enumeration_to_csv(int d, std::uint64_t p, std::uint64_t hmax,
                               const Enumeration& e);

} // namespace exc
