#pragma once

#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "tdc/graph.hpp"

namespace tdc {

// One theorem checked against one graph. lhs/rhs are parallel arrays of
// comparison pairs: the entry holds iff lhs[i] <= rhs[i] for every i (an
// equality is recorded as the two opposite pairs). Inapplicable or skipped
// entries carry empty arrays and the reason in the note.
struct TheoremEntry {
    std::string theorem;
    bool applicable = false;
    bool skipped = false;
    bool holds = false;
    std::vector<long long> lhs, rhs;
    std::string note;
};

struct TheoremReport {
    int n = 0;
    int m = 0;
    std::string graph6;
    std::vector<TheoremEntry> entries;
};

struct ReportOptions {
    double budget_seconds = 60;  // per exact solve; 0 = unlimited
    int solver_cap = 40;
    int longest_path_cap = 32;
    int chromatic_cap = 64;
};

// Exact values keyed by (graph6 of the solved graph, invariant tag); safe for
// concurrent insertion so sweeps can share one cache.
class ValueCache {
  public:
    std::optional<long long> get(const std::string& key);
    void put(const std::string& key, long long value);

  private:
    std::mutex mu_;
    std::unordered_map<std::string, long long> values_;
};

TheoremReport theorem_report(const Graph& g, const ReportOptions& opts = {},
                             ValueCache* cache = nullptr);

// {"graph": {n, m, graph6}, "entries": [{theorem, applicable, lhs, rhs,
// holds, note, skipped}]}; key order fixed, integers only.
std::string serialize_report(const TheoremReport& report);
TheoremReport parse_report(const std::string& text);

// True when some applicable, unskipped entry fails.
bool report_has_violation(const TheoremReport& report);

}  // namespace tdc
