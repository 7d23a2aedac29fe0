#pragma once

#include <string>
#include <vector>

#include "tdc/graph.hpp"

namespace tdc {

enum class Family {
    kPath,
    kCycle,
    kComplete,
    kWheel,
    kCompleteMultipartite,
    kDoubleStar,
    kKnMinusMatching,
    kEmpty,
};

// A named graph family plus its integer parameters.
//
// Fixed labelings, so constructions can name vertices deterministically:
//   path/cycle: vertices in path/cycle order, cycle closes n-1 -> 0
//   wheel(n):   hub = 0, rim cycle 1..n (order n+1)
//   complete_multipartite: parts sorted ascending, vertices grouped part by part
//   double_star(n): center = 0, middles 1..n, leaf of middle i is n+i
//   kn_minus_matching(n): K_n minus {v1v4} u maximum matching (even n), minus
//                       {v1v4, v4vn} u maximum matching (odd n), 1-based as displayed
struct FamilySpec {
    Family family = Family::kPath;
    int n = 0;
    std::vector<int> parts;  // complete_multipartite only

    // Accepts "path:8", "cycle:5", "complete:4", "wheel:5", "multipartite:3,3,3",
    // "bipartite:2,3", "double_star:3", "kn_minus_matching:6", "empty:4".
    static FamilySpec parse(const std::string& text);

    std::string to_string() const;
    void validate() const;  // throws ParameterError naming the violated constraint
};

Graph build_family(const FamilySpec& spec);

// Number of singleton parts of a multipartite family (t_1).
int singleton_part_count(const FamilySpec& spec);

}  // namespace tdc
