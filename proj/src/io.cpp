#include "tdc/io.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "tdc/errors.hpp"

namespace tdc {

Graph parse_edge_list(std::istream& in) {
    std::string line;
    long long n = -1;
    std::vector<std::pair<int, int>> edges;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream ls(line);
        if (n < 0) {
            if (!(ls >> n) || n < 1)
                throw ParseError("edge list: bad vertex count on line " + std::to_string(lineno));
            std::string rest;
            if (ls >> rest) throw ParseError("edge list: trailing tokens after vertex count");
            continue;
        }
        long long u, v;
        if (!(ls >> u >> v))
            throw ParseError("edge list: expected 'i j' on line " + std::to_string(lineno));
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw ParseError("edge list: vertex out of range on line " + std::to_string(lineno));
        if (u == v) throw ParseError("edge list: self-loop on line " + std::to_string(lineno));
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    if (n < 0) throw ParseError("edge list: empty input");
    return Graph(static_cast<int>(n), std::move(edges));
}

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    return parse_edge_list(in);
}

std::string format_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.order() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

std::string format_central(const CentralGraph& cg) {
    std::ostringstream out;
    out << "# central graph: base n=" << cg.base.order() << " m=" << cg.base.size()
        << ", result n=" << cg.result.order() << " m=" << cg.result.size() << '\n';
    for (int v = 0; v < cg.result.order(); ++v)
        out << "# vertex " << v << ": " << cg.role_label(v) << '\n';
    out << format_edge_list(cg.result);
    return out.str();
}

Coloring parse_coloring_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("coloring file: ") + e.what(), e.byte);
    }
    if (!j.is_object() || !j.contains("assignment") || !j["assignment"].is_array())
        throw ParseError("coloring file: expected {\"assignment\": [...]}");
    Coloring c;
    for (const auto& item : j["assignment"]) {
        if (!item.is_number_integer()) throw ParseError("coloring file: non-integer class index");
        c.assignment.push_back(item.get<int>());
    }
    if (c.assignment.empty()) throw ParseError("coloring file: empty assignment");
    int max_class = *std::max_element(c.assignment.begin(), c.assignment.end());
    int min_class = *std::min_element(c.assignment.begin(), c.assignment.end());
    if (min_class < 0) throw ParseError("coloring file: negative class index");
    c.num_classes = max_class + 1;
    std::vector<char> seen(c.num_classes, 0);
    for (int k : c.assignment) seen[k] = 1;
    for (int k = 0; k < c.num_classes; ++k)
        if (!seen[k])
            throw ParseError("coloring file: classes not contiguous, missing " + std::to_string(k));
    return c;
}

std::string format_coloring_json(const Coloring& c) {
    nlohmann::ordered_json j;
    j["classes"] = c.num_classes;
    j["assignment"] = c.assignment;
    return j.dump();
}

std::vector<int> parse_vertex_set_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("vertex set file: ") + e.what(), e.byte);
    }
    if (!j.is_object() || !j.contains("set") || !j["set"].is_array())
        throw ParseError("vertex set file: expected {\"set\": [...]}");
    std::vector<int> s;
    for (const auto& item : j["set"]) {
        if (!item.is_number_integer()) throw ParseError("vertex set file: non-integer vertex");
        s.push_back(item.get<int>());
    }
    return s;
}

std::string format_vertex_set_json(const std::vector<int>& s) {
    nlohmann::ordered_json j;
    j["set"] = s;
    return j.dump();
}

}  // namespace tdc
