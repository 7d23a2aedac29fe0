#pragma once

#include <cstdint>
#include <functional>

#include "tdc/graph.hpp"

namespace tdc {

// Canonical certificate for graphs of order <= 11: the lexicographically
// smallest upper-triangle adjacency bitstring over an individualization-
// refinement search, with the order packed into the high bits. Equal
// certificates <=> isomorphic graphs.
std::uint64_t canonical_certificate(const Graph& g);

Graph graph_from_certificate(std::uint64_t cert);

struct EnumerateOptions {
    bool connected_only = false;
    int min_degree = 0;
};

// Calls fn once per isomorphism class of graphs of order n, in certificate
// order. Generation extends each (n-1)-graph by one vertex and deduplicates
// by certificate.
void enumerate_graphs(int n, const EnumerateOptions& opts,
                      const std::function<void(const Graph&)>& fn);

}  // namespace tdc
