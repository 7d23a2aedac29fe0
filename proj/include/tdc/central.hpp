#pragma once

#include <string>

#include "tdc/graph.hpp"

namespace tdc {

// Central graph C(G): every edge of the base subdivided once, every
// non-adjacent base pair joined. Base vertices keep indices 0..n-1; the
// subdivision vertex of base edge (i, j), i < j, sits at n + rank of (i, j)
// in the lexicographically sorted edge list.
struct CentralGraph {
    Graph base;
    Graph result;

    struct Role {
        bool is_subdivision = false;
        int i = 0;  // original index, or smaller edge endpoint
        int j = 0;  // larger edge endpoint (subdivision only)
    };

    int original_index(int i) const { return i; }
    int subdivision_index(int i, int j) const;  // throws ParameterError if (i,j) not a base edge
    Role role(int v) const;
    std::string role_label(int v) const;  // "original:i" or "subdiv:i,j"
};

CentralGraph central(const Graph& g);

}  // namespace tdc
