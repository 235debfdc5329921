#pragma once
/// Brute-force Kauffman bracket by summation over all 2^n smoothing states.
/// Deliberately naive: this is the oracle other evaluation strategies are
/// validated against.  Conventions: smoothing weights A = i*s and
/// A^{-1} = -i*s^{-1}, each closed loop contributes [2] = s^2 + s^{-2}
/// (multiplicatively, so the 0-crossing unknot evaluates to [2]), and the
/// writhe normalization multiplies by (i*s^3)^{-writhe}.

#include <vector>

#include "skein/laurent.hpp"
#include "skein/linkdiag.hpp"
#include "skein/qint.hpp"

namespace skein {

namespace detail {
struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(size_t(n)) {
        for (int j = 0; j < n; ++j) parent[size_t(j)] = j;
    }
    int find(int x) {
        while (parent[size_t(x)] != x) x = parent[size_t(x)] = parent[size_t(parent[size_t(x)])];
        return x;
    }
    /// returns true if the two were already joined (closing a loop)
    bool unite(int a, int b) {
        int ra = find(a), rb = find(b);
        if (ra == rb) return true;
        parent[size_t(ra)] = rb;
        return false;
    }
};
}  // namespace detail

/// Sum over all smoothing states.  In each crossing X[a,b,c,d] the A-smoothing
/// joins (a,b) and (c,d); the A^{-1}-smoothing joins (a,d) and (b,c).
inline Laurent kauffman_bracket_statesum(const LinkDiagram& D) {
    const auto& xs = D.crossings();
    const size_t n = xs.size();
    if (n > 24) throw std::invalid_argument("state-sum oracle limited to 24 crossings");
    Laurent total;
    const Laurent delta = qint_laurent(2);
    const Laurent A = Laurent::var_pow(VAR_S, 1, Int(1), 1);        // i*s
    const Laurent Ainv = Laurent::var_pow(VAR_S, -1, Int(-1), 1);   // -i*s^{-1}
    for (unsigned long state = 0; state < (1ul << n); ++state) {
        detail::UnionFind uf(D.arc_count());
        int loops = 0;
        int a_count = 0;
        for (size_t ci = 0; ci < n; ++ci) {
            const auto& e = xs[ci].end;
            if (state >> ci & 1) {
                ++a_count;
                if (uf.unite(e[0], e[1])) ++loops;
                if (uf.unite(e[2], e[3])) ++loops;
            } else {
                if (uf.unite(e[0], e[3])) ++loops;
                if (uf.unite(e[1], e[2])) ++loops;
            }
        }
        // every arc has two ends, so each class closes exactly once and the
        // closure count above already equals the number of loops
        Laurent term = A.pow(a_count) * Ainv.pow(long(n) - a_count);
        term *= delta.pow(loops);
        total += term;
    }
    total *= delta.pow(D.extra_unknots());
    return total;
}

/// Writhe normalization: multiply a bracket value by (i s^3)^{-w}.
inline Laurent jones_normalize(const Laurent& bracket, long writhe) {
    Laurent kink = Laurent::var_pow(VAR_S, 3, Int(1), 1);  // i*s^3
    return bracket * kink.pow(-writhe);
}

/// Oracle Jones polynomial, multiplicative convention (unknot -> [2]).
inline Laurent jones_statesum(const LinkDiagram& D) {
    return jones_normalize(kauffman_bracket_statesum(D), D.writhe());
}

}  // namespace skein
