#include "excisive/render.hpp"

#include <json.hpp>

#include <sstream>

namespace exc {

namespace {

std::string node_id(std::size_t i) { return "n" + std::to_string(i); }

nlohmann::ordered_json natinf_json(const NatInf& x)
{
    if (x.is_infinite())
        return "inf";
    return x.value();
}

} // namespace

std::string to_dot(const Poset& p)
{
    std::ostringstream os;
    os << "digraph " << p.name << " {\n";
    os << "  rankdir=" << p.rankdir << ";\n";
    os << "  node [shape=plaintext];\n";
    for (std::size_t i = 0; i < p.nodes.size(); ++i)
        os << "  " << node_id(i) << " [label=\"" << p.nodes[i].label << "\"];\n";
    for (const auto& [a, b] : p.covers)
        os << "  " << node_id(a) << " -> " << node_id(b) << ";\n";
    os << "}\n";
    return os.str();
}

std::string to_json(const Poset& p)
{
    nlohmann::ordered_json j;
    j["points"] = nlohmann::ordered_json::array();
    for (const auto& n : p.nodes) {
        nlohmann::ordered_json pt;
        pt["label"] = n.label;
        pt["layer"] = n.layer;
        pt["char"] = n.ch;
        if (n.height)
            pt["height"] = natinf_json(*n.height);
        j["points"].push_back(pt);
    }
    j["covers"] = nlohmann::ordered_json::array();
    for (const auto& [a, b] : p.covers)
        j["covers"].push_back({a, b});
    j["relation"] = nlohmann::ordered_json::array();
    for (const auto& [a, b] : p.relation)
        j["relation"].push_back({a, b});
    return j.dump(2) + "\n";
}

std::string to_text(const Poset& p)
{
    std::ostringstream os;
    os << p.name << ": " << p.nodes.size() << " points, " << p.covers.size() << " covers, "
       << p.relation.size() << " strict inclusions\n";
    for (const auto& n : p.nodes)
        os << "  " << n.label << "\n";
    for (const auto& [a, b] : p.covers)
        os << "  " << p.nodes[a].label << " < " << p.nodes[b].label << "\n";
    return os.str();
}

std::string to_csv(const Poset& p)
{
    std::ostringstream os;
    os << "index,label,layer,char,height\n";
    for (std::size_t i = 0; i < p.nodes.size(); ++i) {
        const auto& n = p.nodes[i];
        os << i << "," << n.label << "," << n.layer << "," << n.ch << ","
           << (n.height ? n.height->str() : "") << "\n";
    }
    os << "\nfrom,to\n";
    for (const auto& [a, b] : p.covers)
        os << a << "," << b << "\n";
    return os.str();
}

std::string render(const Poset& p, Format f)
{
    switch (f) {
    case Format::Dot:
        return to_dot(p);
    case Format::Json:
        return to_json(p);
    case Format::Csv:
        return to_csv(p);
    case Format::Text:
        break;
    }
    return to_text(p);
}

std::string enumeration_to_json(int d, std::uint64_t p, std::uint64_t hmax, const Enumeration& e)
{
    nlohmann::ordered_json j;
    j["d"] = d;
    j["p"] = p;
    j["hmax"] = hmax;
    j["count"] = e.count;
    j["functions"] = nlohmann::ordered_json::array();
    for (const auto& f : e.functions) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (const auto& v : f)
            row.push_back(natinf_json(v));
        j["functions"].push_back(row);
    }
    return j.dump(2) + "\n";
}

std::string enumeration_to_csv(int d, std::uint64_t p, std::uint64_t hmax, const Enumeration& e)
{
    std::ostringstream os;
    os << "d,p,hmax,count\n" << d << "," << p << "," << hmax << "," << e.count << "\n";
    return os.str();
}

} // namespace exc
