#include "tdc/formulas.hpp"

#include "tdc/classify.hpp"
#include "tdc/errors.hpp"

namespace tdc {

namespace {

long long path_formula(int n) {
    // floor(2n/3)+2 when n = 1 (mod 3) or n in {3, 5}, else floor(2n/3)+1
    long long base = 2LL * n / 3;
    return base + ((n % 3 == 1 || n == 3 || n == 5) ? 2 : 1);
}

long long cycle_formula(int n) {
    long long base = 2LL * n / 3;
    return base + ((n % 3 == 0 && n != 3) ? 1 : 2);
}

long long complete_formula(int n) {
    long long v = n + (n + 1) / 2;
    return n <= 3 ? v - 1 : v;  // n = 2, 3: C(K_2) = P_3, C(K_3) = C_6
}

long long wheel_formula(int n) {
    if (n == 3) return 6;  // W_3 = K_4
    return cycle_formula(n) + 2;
}

long long bipartite_formula(int m, int n) {
    if (m == 1 && n == 2) return 4;
    return m + n;
}

long long multipartite_formula(const FamilySpec& spec) {
    const int p = static_cast<int>(spec.parts.size());
    const int t1 = singleton_part_count(spec);
    if (t1 == p) return complete_formula(spec.n);
    if (p == 1) throw UnsupportedFamilyError("no formula for a single-part (empty) graph");
    if (p == 2) return bipartite_formula(spec.parts[0], spec.parts[1]);
    // p >= 3 and not complete forces n >= 4
    bool prefix_twos = true;
    for (int i = 0; i + 1 < p; ++i) prefix_twos = prefix_twos && spec.parts[i] == 2;
    if (prefix_twos) return spec.n + 1;
    return spec.n + (t1 + 1) / 2;
}

}  // namespace

long long formula_value(const FamilySpec& spec, FormulaInvariant invariant) {
    spec.validate();
    if (invariant == FormulaInvariant::kGammaT) {
        if (spec.family == Family::kComplete && spec.n >= 2)
            return spec.n + (spec.n + 1) / 2 - 1;  // gamma_t(C(K_n))
        throw UnsupportedFamilyError("gamma_t closed form only covers complete:n (n >= 2)");
    }
    switch (spec.family) {
        case Family::kPath:
            if (spec.n < 2) throw UnsupportedFamilyError("path formula requires n >= 2");
            return path_formula(spec.n);
        case Family::kCycle:
            return cycle_formula(spec.n);
        case Family::kComplete:
            if (spec.n < 2) throw UnsupportedFamilyError("complete formula requires n >= 2");
            return complete_formula(spec.n);
        case Family::kWheel:
            return wheel_formula(spec.n);
        case Family::kCompleteMultipartite:
            return multipartite_formula(spec);
        case Family::kDoubleStar:
            return spec.n + 3;
        case Family::kKnMinusMatching:
            return spec.n;
        case Family::kEmpty:
            throw UnsupportedFamilyError("no formula for the empty family");
    }
    throw UnsupportedFamilyError("unreachable family");
}

long long formula_complement_central(const Graph& g) {
    if (g.order() < 4 || !is_connected(g))
        throw ParameterError("formula_complement_central requires a connected graph with n >= 4");
    return classify(g).is_tree ? g.order() : g.size();
}

}  // namespace tdc
