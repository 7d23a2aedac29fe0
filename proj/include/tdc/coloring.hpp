#pragma once

#include <vector>

#include "tdc/graph.hpp"

namespace tdc {

// Partition of vertices into color classes 0..num_classes-1. Every class
// must be nonempty and the assignment total; verifiers reject anything else
// as malformed rather than reporting "false".
struct Coloring {
    std::vector<int> assignment;
    int num_classes = 0;

    static Coloring from_classes(int n, const std::vector<std::vector<int>>& classes);
    std::vector<std::vector<int>> classes() const;
};

struct ProperVerdict {
    bool ok = false;
    int edge_u = -1, edge_v = -1;  // lowest violating edge when !ok
};

enum class TdcFailureKind { kNone, kProperness, kDomination };

struct TdcVerdict {
    bool ok = false;
    TdcFailureKind kind = TdcFailureKind::kNone;
    int vertex = -1;               // first failing vertex (domination failures)
    int edge_u = -1, edge_v = -1;  // violating edge (properness failures)
};

// Throws MalformedColoringError unless c is a total assignment onto
// contiguous nonempty classes of g's vertices.
void validate_coloring(const Graph& g, const Coloring& c);

ProperVerdict is_proper(const Graph& g, const Coloring& c);

// Class indices k with V_k fully inside N(v). A class containing v never
// qualifies via v itself (v is not its own neighbor).
std::vector<int> dominated_classes(const Graph& g, const Coloring& c, int v);

// Proper and every vertex totally dominates some class. Requires min degree
// >= 1 (throws UndefinedInvariantError otherwise).
TdcVerdict is_tdc(const Graph& g, const Coloring& c);

}  // namespace tdc
