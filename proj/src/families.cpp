#include "tdc/families.hpp"

#include <algorithm>
#include <sstream>

#include "tdc/errors.hpp"

namespace tdc {

namespace {

const char* family_name(Family f) {
    switch (f) {
        case Family::kPath: return "path";
        case Family::kCycle: return "cycle";
        case Family::kComplete: return "complete";
        case Family::kWheel: return "wheel";
        case Family::kCompleteMultipartite: return "multipartite";
        case Family::kDoubleStar: return "double_star";
        case Family::kKnMinusMatching: return "kn_minus_matching";
        case Family::kEmpty: return "empty";
    }
    return "?";
}

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            int v = std::stoi(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            out.push_back(v);
        } catch (const std::exception&) {
            throw ParameterError("bad integer parameter '" + item + "'");
        }
    }
    return out;
}

}  // namespace

FamilySpec FamilySpec::parse(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos)
        throw ParameterError("family spec must look like 'path:8', got '" + text + "'");
    std::string name = text.substr(0, colon);
    std::vector<int> params = parse_int_list(text.substr(colon + 1));
    if (params.empty()) throw ParameterError("family spec '" + text + "' has no parameters");

    FamilySpec spec;
    if (name == "path") spec.family = Family::kPath;
    else if (name == "cycle") spec.family = Family::kCycle;
    else if (name == "complete") spec.family = Family::kComplete;
    else if (name == "wheel") spec.family = Family::kWheel;
    else if (name == "multipartite" || name == "bipartite") spec.family = Family::kCompleteMultipartite;
    else if (name == "double_star") spec.family = Family::kDoubleStar;
    else if (name == "kn_minus_matching") spec.family = Family::kKnMinusMatching;
    else if (name == "empty") spec.family = Family::kEmpty;
    else throw ParameterError("unknown family '" + name + "'");

    if (spec.family == Family::kCompleteMultipartite) {
        spec.parts = params;
        spec.n = 0;
        for (int p : spec.parts) spec.n += p;
    } else {
        if (params.size() != 1)
            throw ParameterError("family '" + name + "' takes exactly one parameter");
        spec.n = params[0];
    }
    spec.validate();
    return spec;
}

std::string FamilySpec::to_string() const {
    std::string out = family_name(family);
    out += ':';
    if (family == Family::kCompleteMultipartite) {
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(parts[i]);
        }
    } else {
        out += std::to_string(n);
    }
    return out;
}

void FamilySpec::validate() const {
    switch (family) {
        case Family::kPath:
            if (n < 1) throw ParameterError("path requires n >= 1");
            break;
        case Family::kCycle:
            if (n < 3) throw ParameterError("cycle requires n >= 3");
            break;
        case Family::kComplete:
        case Family::kEmpty:
            if (n < 1) throw ParameterError(std::string(family_name(family)) + " requires n >= 1");
            break;
        case Family::kWheel:
            if (n < 3) throw ParameterError("wheel requires rim size n >= 3 (order n+1 >= 4)");
            break;
        case Family::kCompleteMultipartite: {
            if (parts.empty()) throw ParameterError("multipartite requires at least one part");
            for (int p : parts)
                if (p < 1) throw ParameterError("multipartite part sizes must be >= 1");
            if (!std::is_sorted(parts.begin(), parts.end()))
                throw ParameterError("multipartite part sizes must be sorted ascending");
            break;
        }
        case Family::kDoubleStar:
            if (n < 1) throw ParameterError("double_star requires n >= 1");
            break;
        case Family::kKnMinusMatching:
            if (n < 4) throw ParameterError("kn_minus_matching requires n >= 4");
            break;
    }
}

Graph build_family(const FamilySpec& spec) {
    spec.validate();
    std::vector<std::pair<int, int>> edges;
    switch (spec.family) {
        case Family::kPath:
            for (int i = 0; i + 1 < spec.n; ++i) edges.emplace_back(i, i + 1);
            return Graph(spec.n, std::move(edges));
        case Family::kCycle:
            for (int i = 0; i + 1 < spec.n; ++i) edges.emplace_back(i, i + 1);
            edges.emplace_back(spec.n - 1, 0);
            return Graph(spec.n, std::move(edges));
        case Family::kComplete:
            for (int i = 0; i < spec.n; ++i)
                for (int j = i + 1; j < spec.n; ++j) edges.emplace_back(i, j);
            return Graph(spec.n, std::move(edges));
        case Family::kEmpty:
            return Graph(spec.n);
        case Family::kWheel: {
            for (int i = 1; i <= spec.n; ++i) edges.emplace_back(0, i);
            for (int i = 1; i < spec.n; ++i) edges.emplace_back(i, i + 1);
            edges.emplace_back(spec.n, 1);
            return Graph(spec.n + 1, std::move(edges));
        }
        case Family::kCompleteMultipartite: {
            std::vector<int> part_of;
            for (std::size_t p = 0; p < spec.parts.size(); ++p)
                part_of.insert(part_of.end(), spec.parts[p], static_cast<int>(p));
            const int n = static_cast<int>(part_of.size());
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    if (part_of[i] != part_of[j]) edges.emplace_back(i, j);
            return Graph(n, std::move(edges));
        }
        case Family::kDoubleStar: {
            for (int i = 1; i <= spec.n; ++i) {
                edges.emplace_back(0, i);
                edges.emplace_back(i, spec.n + i);
            }
            return Graph(2 * spec.n + 1, std::move(edges));
        }
        case Family::kKnMinusMatching: {
            const int n = spec.n;
            auto removed = [&](int u, int v) {  // 0-based endpoints, u < v
                if (u == 0 && v == 3) return true;                       // v1v4
                if (n % 2 == 1 && u == 3 && v == n - 1) return true;     // v4vn, odd n
                if (v == u + 1 && u % 2 == 0) return true;               // matching v_{2i-1}v_{2i}
                return false;
            };
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    if (!removed(i, j)) edges.emplace_back(i, j);
            return Graph(n, std::move(edges));
        }
    }
    throw ParameterError("unreachable family");
}

int singleton_part_count(const FamilySpec& spec) {
    int t1 = 0;
    for (int p : spec.parts)
        if (p == 1) ++t1;
    return t1;
}

}  // namespace tdc
