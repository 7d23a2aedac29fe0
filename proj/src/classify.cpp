#include "tdc/classify.hpp"

#include <algorithm>

namespace tdc {

StructureTags classify(const Graph& g) {
    StructureTags tags;
    const int n = g.order();
    tags.min_degree = g.min_degree();
    tags.max_degree = g.max_degree();
    tags.is_connected = is_connected(g);
    tags.is_tree = tags.is_connected && g.size() == n - 1;
    tags.is_complete = g.size() == n * (n - 1) / 2;

    // Complete multipartite iff the complement is a disjoint union of cliques;
    // the parts are the complement's components.
    Graph co = complement(g);
    bool multipartite = true;
    std::vector<int> parts;
    for (const auto& comp : components(co)) {
        const int k = static_cast<int>(comp.size());
        for (std::size_t a = 0; a < comp.size() && multipartite; ++a)
            for (std::size_t b = a + 1; b < comp.size(); ++b)
                if (!co.has_edge(comp[a], comp[b])) {
                    multipartite = false;
                    break;
                }
        parts.push_back(k);
    }
    if (multipartite) {
        std::sort(parts.begin(), parts.end());
        tags.is_complete_multipartite = true;
        tags.multipartite_parts = parts;
        tags.is_complete_bipartite = parts.size() == 2;
    }
    return tags;
}

}  // namespace tdc
