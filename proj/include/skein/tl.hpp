#pragma once
/// The Temperley-Lieb diagram category: planar pair diagrams with any number
/// of bottom and top boundary points, formal linear combinations over a
/// choice of coefficient ring (generic rational functions in s, or cyclotomic
/// numbers at a root of unity), Jones-Wenzl projectors by the Wenzl
/// recursion, Markov and partial traces, trivalent vertices, and
/// quantum-factorial closed forms for simple closed networks.
///
/// Conventions: a diagram with b bottom and t top boundary points stores a
/// perfect crossingless matching of the b+t points (bottom 0..b-1 left to
/// right, then top b..b+t-1 left to right); a closed loop evaluates to
/// [2] = s^2 + s^{-2}.

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "skein/cyclotomic.hpp"
#include "skein/laurent.hpp"
#include "skein/qint.hpp"

namespace skein {

/// Crossingless perfect matching of bot+top boundary points.
struct TLDiag {
    int bot = 0, top = 0;
    std::vector<int> pair;  // pair[pair[i]] == i, pair[i] != i

    static TLDiag identity(int n) {
        TLDiag d;
        d.bot = d.top = n;
        d.pair.assign(size_t(2 * n), 0);
        for (int i = 0; i < n; ++i) {
            d.pair[size_t(i)] = n + i;
            d.pair[size_t(n + i)] = i;
        }
        return d;
    }
    /// Hook generator in width n: identity except a cap joining bottom points
    /// i-1, i and a cup joining the matching top points (1 <= i <= n-1).
    static TLDiag hook(int n, int i) {
        if (i < 1 || i >= n) throw std::invalid_argument("TL hook index out of range");
        TLDiag d = identity(n);
        d.link(i - 1, i);
        d.link(n + i - 1, n + i);
        return d;
    }
    /// x nested arcs from nothing: bot = 0, top = 2x, point i paired with
    /// 2x-1-i.
    static TLDiag cups(int x) {
        TLDiag d;
        d.bot = 0;
        d.top = 2 * x;
        d.pair.assign(size_t(2 * x), 0);
        for (int i = 0; i < 2 * x; ++i) d.pair[size_t(i)] = 2 * x - 1 - i;
        return d;
    }

    void link(int x, int y) {
        pair[size_t(x)] = y;
        pair[size_t(y)] = x;
    }
    /// Vertical reflection: bottom and top exchange.
    TLDiag flipped() const {
        TLDiag d;
        d.bot = top;
        d.top = bot;
        d.pair.assign(pair.size(), 0);
        auto re = [&](int p) { return p < bot ? top + p : p - bot; };
        for (int p = 0; p < bot + top; ++p) d.pair[size_t(re(p))] = re(pair[size_t(p)]);
        return d;
    }
    bool operator==(const TLDiag& o) const { return bot == o.bot && top == o.top && pair == o.pair; }
    bool operator<(const TLDiag& o) const {
        if (bot != o.bot) return bot < o.bot;
        if (top != o.top) return top < o.top;
        return pair < o.pair;
    }

    /// Number of bottom-to-top connections.
    int through_strands() const {
        int t = 0;
        for (int i = 0; i < bot; ++i)
            if (pair[size_t(i)] >= bot) ++t;
        return t;
    }
};

/// Stack `upper` on top of `lower` (upper.bot must equal lower.top); returns
/// the glued diagram and the number of closed loops formed in the middle.
inline std::pair<TLDiag, int> tl_stack(const TLDiag& upper, const TLDiag& lower) {
    if (upper.bot != lower.top) throw std::invalid_argument("TL stack: boundary mismatch");
    const int m = upper.bot;          // glued middle points
    const int ob = lower.bot;         // output bottom
    const int ot = upper.top;         // output top
    TLDiag out;
    out.bot = ob;
    out.top = ot;
    out.pair.assign(size_t(ob + ot), -1);
    std::vector<bool> mid_seen(size_t(m), false);
    // Encode a running position as (side, point): side 0 = inside lower,
    // side 1 = inside upper.  External points: lower bottom -> output bottom;
    // upper top -> output top.
    auto advance = [&](int side, int p) {
        // p is a point index within that diagram; returns its partner and
        // whether we stay external or cross the middle
        return side == 0 ? lower.pair[size_t(p)] : upper.pair[size_t(p)];
    };
    auto walk = [&](int side, int start) {
        int s = side, p = start;
        while (true) {
            int q = advance(s, p);
            if (s == 0) {
                if (q < ob) return q;  // lower bottom: external
                mid_seen[size_t(q - ob)] = true;
                s = 1;
                p = q - ob;  // enter upper at its bottom point
            } else {
                if (q >= m) return ob + (q - m);  // upper top: external
                mid_seen[size_t(q)] = true;
                s = 0;
                p = ob + q;  // enter lower at its top point
            }
        }
    };
    for (int i = 0; i < ob; ++i)
        if (out.pair[size_t(i)] == -1) {
            int j = walk(0, i);
            out.link(i, j);
        }
    for (int i = 0; i < ot; ++i)
        if (out.pair[size_t(ob + i)] == -1) {
            int j = walk(1, m + i);
            out.link(ob + i, j);
        }
    int loops = 0;
    for (int m0 = 0; m0 < m; ++m0) {
        if (mid_seen[size_t(m0)]) continue;
        ++loops;
        int p = m0;
        do {
            mid_seen[size_t(p)] = true;
            int q = upper.pair[size_t(p)];        // within upper (a cap): another mid
            mid_seen[size_t(q)] = true;
            p = lower.pair[size_t(ob + q)] - ob;  // within lower (a cup): next mid
        } while (p != m0);
    }
    return {out, loops};
}

/// Side-by-side placement.
inline TLDiag tl_tensor(const TLDiag& left, const TLDiag& right) {
    TLDiag out;
    out.bot = left.bot + right.bot;
    out.top = left.top + right.top;
    out.pair.assign(size_t(out.bot + out.top), -1);
    auto map_left = [&](int p) { return p < left.bot ? p : out.bot + (p - left.bot); };
    auto map_right = [&](int p) { return p < right.bot ? left.bot + p : out.bot + left.top + (p - right.bot); };
    for (int p = 0; p < left.bot + left.top; ++p) out.pair[size_t(map_left(p))] = map_left(left.pair[size_t(p)]);
    for (int p = 0; p < right.bot + right.top; ++p) out.pair[size_t(map_right(p))] = map_right(right.pair[size_t(p)]);
    return out;
}

// ---------------------------------------------------------------------------
// Coefficient-ring plumbing
// ---------------------------------------------------------------------------

/// The ring operations the algebra needs, bundled so the same code runs over
/// generic rational functions and over a cyclotomic field at a root of unity.
template <class R>
struct TLCoeffs {
    R zero, one, delta;              // delta = loop value [2]
    std::function<R(long)> qint;     // [n]
    std::function<R(const R&)> inv;  // multiplicative inverse
};

/// Generic ring: univariate rational functions in s (q = s^2).
inline TLCoeffs<RatFunc> tl_coeffs_generic() {
    TLCoeffs<RatFunc> c;
    c.zero = RatFunc();
    c.one = RatFunc::from_int(1);
    c.delta = qint_rf(2);
    c.qint = [](long n) { return qint_rf(n); };
    c.inv = [](const RatFunc& x) { return RatFunc::from_int(1) / x; };
    return c;
}

/// At a root of unity: s = zeta_M^{s_log} in the cyclotomic field of order M.
inline TLCoeffs<Cyclo> tl_coeffs_at_root(const FieldPtr& f, long s_log) {
    Cyclo q = Cyclo::zeta_pow(f, 2 * s_log);
    TLCoeffs<Cyclo> c;
    c.zero = Cyclo::zero(f);
    c.one = Cyclo::one(f);
    c.delta = qint_at(q, 2);
    c.qint = [q](long n) { return qint_at(q, n); };
    c.inv = [](const Cyclo& x) { return x.inverse(); };
    return c;
}

// ---------------------------------------------------------------------------
// Linear combinations
// ---------------------------------------------------------------------------

template <class R>
struct TLElemT {
    int bot = 0, top = 0;
    std::map<TLDiag, R> terms;

    static TLElemT zero_of(int bot, int top) {
        TLElemT x;
        x.bot = bot;
        x.top = top;
        return x;
    }
    static TLElemT diagram(const TLDiag& d, const R& coeff) {
        TLElemT x;
        x.bot = d.bot;
        x.top = d.top;
        if (!coeff.is_zero()) x.terms.emplace(d, coeff);
        return x;
    }
    static TLElemT identity(int n, const R& one) { return diagram(TLDiag::identity(n), one); }
    static TLElemT hook(int n, int i, const R& one) { return diagram(TLDiag::hook(n, i), one); }

    bool is_zero() const { return terms.empty(); }
    size_t term_count() const { return terms.size(); }

    void add_term(const TLDiag& d, const R& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = terms.emplace(d, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms.erase(it);
        }
    }
    TLElemT flipped() const {
        TLElemT out = zero_of(top, bot);
        for (const auto& [d, c] : terms) out.add_term(d.flipped(), c);
        return out;
    }
    TLElemT& operator+=(const TLElemT& o) {
        for (const auto& [d, c] : o.terms) add_term(d, c);
        return *this;
    }
    friend TLElemT operator+(TLElemT a, const TLElemT& b) { return a += b; }
    TLElemT operator-() const {
        TLElemT out = *this;
        for (auto& [d, c] : out.terms) c = -c;
        return out;
    }
    friend TLElemT operator-(TLElemT a, const TLElemT& b) { return a += -b; }
    TLElemT scaled(const R& k) const {
        TLElemT out = zero_of(bot, top);
        if (k.is_zero()) return out;
        for (const auto& [d, c] : terms) out.add_term(d, c * k);
        return out;
    }
    bool operator==(const TLElemT& o) const { return bot == o.bot && top == o.top && terms == o.terms; }
};

/// Categorical composition: stack `a` on top of `b`, resolving closed loops
/// to factors of delta.
template <class R>
TLElemT<R> tl_mul(const TLElemT<R>& a, const TLElemT<R>& b, const TLCoeffs<R>& ring) {
    TLElemT<R> out = TLElemT<R>::zero_of(b.bot, a.top);
    std::vector<R> delta_pow{ring.one};
    for (const auto& [da, ca] : a.terms)
        for (const auto& [db, cb] : b.terms) {
            auto [d, loops] = tl_stack(da, db);
            while (int(delta_pow.size()) <= loops) delta_pow.push_back(delta_pow.back() * ring.delta);
            out.add_term(d, ca * cb * delta_pow[size_t(loops)]);
        }
    return out;
}

template <class R>
TLElemT<R> tl_tensor(const TLElemT<R>& a, const TLElemT<R>& b) {
    TLElemT<R> out = TLElemT<R>::zero_of(a.bot + b.bot, a.top + b.top);
    for (const auto& [da, ca] : a.terms)
        for (const auto& [db, cb] : b.terms) out.add_term(tl_tensor(da, db), ca * cb);
    return out;
}

/// Markov trace of an endomorphism (bot == top): close every strand around
/// (top point n+i to bottom point i); each diagram contributes
/// delta^{#loops}.
template <class R>
R tl_trace(const TLElemT<R>& x, const TLCoeffs<R>& ring) {
    if (x.bot != x.top) throw std::invalid_argument("trace needs equal boundaries");
    R acc = ring.zero;
    const int n = x.bot;
    for (const auto& [d, c] : x.terms) {
        std::vector<bool> seen(size_t(2 * n), false);
        int loops = 0;
        for (int p0 = 0; p0 < 2 * n; ++p0) {
            if (seen[size_t(p0)]) continue;
            ++loops;
            int p = p0;
            do {
                seen[size_t(p)] = true;
                p = d.pair[size_t(p)];
                seen[size_t(p)] = true;
                p = p < n ? p + n : p - n;  // closure arc
            } while (p != p0);
        }
        R term = c;
        for (int j = 0; j < loops; ++j) term = term * ring.delta;
        acc += term;
    }
    return acc;
}

/// Close only the rightmost strand of an endomorphism, landing in width n-1.
template <class R>
TLElemT<R> tl_partial_trace(const TLElemT<R>& x, const TLCoeffs<R>& ring) {
    if (x.bot != x.top) throw std::invalid_argument("partial trace needs equal boundaries");
    const int n = x.bot;
    if (n == 0) throw std::invalid_argument("partial trace needs a strand");
    TLElemT<R> out = TLElemT<R>::zero_of(n - 1, n - 1);
    for (const auto& [d, c] : x.terms) {
        // join bottom point n-1 to top point 2n-1
        int a = d.pair[size_t(n - 1)], b = d.pair[size_t(2 * n - 1)];
        TLDiag nd;
        nd.bot = nd.top = n - 1;
        nd.pair.assign(size_t(2 * (n - 1)), -1);
        auto relabel = [&](int p) { return p < n ? p : p - 1; };  // drop the closed strand
        R coeff = c;
        if (a == 2 * n - 1) {
            // the strand closes onto itself: a loop
            coeff = coeff * ring.delta;
            for (int p = 0; p < 2 * n; ++p) {
                if (p == n - 1 || p == 2 * n - 1) continue;
                nd.pair[size_t(relabel(p))] = relabel(d.pair[size_t(p)]);
            }
        } else {
            for (int p = 0; p < 2 * n; ++p) {
                if (p == n - 1 || p == 2 * n - 1 || p == a || p == b) continue;
                nd.pair[size_t(relabel(p))] = relabel(d.pair[size_t(p)]);
            }
            nd.pair[size_t(relabel(a))] = relabel(b);
            nd.pair[size_t(relabel(b))] = relabel(a);
        }
        out.add_term(nd, coeff);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Jones-Wenzl projectors
// ---------------------------------------------------------------------------

/// The projector of width n by the Wenzl recursion
///   f_n = f_{n-1} - ([n-1]/[n]) f_{n-1} h_{n-1} f_{n-1}
/// (f_{n-1} extended by a strand, h = hook).  Requires [k] invertible for
/// k <= n.
template <class R>
TLElemT<R> jones_wenzl_elem(int n, const TLCoeffs<R>& ring) {
    if (n < 0) throw std::invalid_argument("Jones-Wenzl index must be nonnegative");
    TLElemT<R> f = TLElemT<R>::identity(0, ring.one);
    for (int m = 1; m <= n; ++m) {
        TLElemT<R> fx = tl_tensor(f, TLElemT<R>::identity(1, ring.one));
        if (m == 1) {
            f = fx;
            continue;
        }
        R num = ring.qint(m - 1), den = ring.qint(m);
        if (den.is_zero()) throw std::domain_error("Jones-Wenzl projector undefined: [" + std::to_string(m) + "] = 0");
        TLElemT<R> correction = tl_mul(fx, tl_mul(TLElemT<R>::hook(m, m - 1, ring.one), fx, ring), ring);
        f = fx - correction.scaled(num * ring.inv(den));
    }
    return f;
}

using TLElem = TLElemT<RatFunc>;
using TLElemC = TLElemT<Cyclo>;

/// Memoized generic projector.
inline const TLElem& jones_wenzl(int n) {
    static std::map<int, TLElem> memo;
    auto it = memo.find(n);
    if (it == memo.end()) it = memo.emplace(n, jones_wenzl_elem(n, tl_coeffs_generic())).first;
    return it->second;
}

// ---------------------------------------------------------------------------
// Trivalent vertices and closed networks
// ---------------------------------------------------------------------------

inline bool theta_admissible(long a, long b, long c) {
    return (a + b + c) % 2 == 0 && a + b >= c && b + c >= a && c + a >= b && a >= 0 && b >= 0 && c >= 0;
}

/// The map from c strands up to a+b strands through a trivalent vertex:
/// project onto f_c below, split x = (a+b-c)/2 turn-back arcs in the middle,
/// and project onto f_a (x) f_b above.
template <class R>
TLElemT<R> tl_vertex(int a, int b, int c, const TLCoeffs<R>& ring) {
    if (!theta_admissible(a, b, c)) throw std::invalid_argument("inadmissible vertex colors");
    int x = int((a + b - c) / 2);
    TLElemT<R> spread = TLElemT<R>::diagram(
        tl_tensor(TLDiag::identity(a - x), tl_tensor(TLDiag::cups(x), TLDiag::identity(b - x))), ring.one);
    TLElemT<R> top = tl_tensor(jones_wenzl_elem<R>(a, ring), jones_wenzl_elem<R>(b, ring));
    return tl_mul(top, tl_mul(spread, jones_wenzl_elem<R>(c, ring), ring), ring);
}

/// A closed loop colored n evaluates to [n+1].
inline RatFunc delta_net_rf(long n) { return qint_rf(n + 1); }
inline Cyclo delta_net_at(const Cyclo& q, long n) { return qint_at(q, n + 1); }

/// Theta network: two trivalent vertices joined by edges colored a, b, c.
/// With x = (a+b-c)/2, y = (b+c-a)/2, z = (c+a-b)/2:
///   theta = [x+y+z+1]! [x]! [y]! [z]! / ([y+z]! [z+x]! [x+y]!)
/// Returns 0 on inadmissible colors.
inline RatFunc theta_net_rf(long a, long b, long c) {
    if (!theta_admissible(a, b, c)) return RatFunc();
    long x = (a + b - c) / 2, y = (b + c - a) / 2, z = (c + a - b) / 2;
    RatFunc num = qfact_rf(x + y + z + 1) * qfact_rf(x) * qfact_rf(y) * qfact_rf(z);
    RatFunc den = qfact_rf(y + z) * qfact_rf(z + x) * qfact_rf(x + y);
    return num / den;
}

/// Theta network at a root of unity; errors if the evaluation hits a
/// vanishing factorial denominator.
inline Cyclo theta_net_at(const Cyclo& q, long a, long b, long c) {
    if (!theta_admissible(a, b, c)) return Cyclo::zero(q.field());
    long x = (a + b - c) / 2, y = (b + c - a) / 2, z = (c + a - b) / 2;
    Cyclo den = qfact_at(q, y + z) * qfact_at(q, z + x) * qfact_at(q, x + y);
    if (den.is_zero()) throw std::domain_error("theta network: vanishing factorial at this root of unity");
    return qfact_at(q, x + y + z + 1) * qfact_at(q, x) * qfact_at(q, y) * qfact_at(q, z) / den;
}

/// Tetrahedral network: four vertices (A,B,E), (C,D,E), (A,D,F), (B,C,F).
/// Single-sum quantum-factorial closed form, with the per-term parity
/// adjustment eps(n) = n(n-1)/2 mod 2 that carries the classical bracket
/// formula into the positive loop convention used here (cross-checked
/// against tet_net_diagrammatic in the tests); every vertex must be
/// admissible, else 0.
inline RatFunc tet_net_rf(long A, long B, long C, long D, long E, long F) {
    if (!theta_admissible(A, B, E) || !theta_admissible(C, D, E) || !theta_admissible(A, D, F) ||
        !theta_admissible(B, C, F))
        return RatFunc();
    std::array<long, 4> av = {(A + B + E) / 2, (C + D + E) / 2, (A + D + F) / 2, (B + C + F) / 2};
    std::array<long, 3> bv = {(A + B + C + D) / 2, (A + C + E + F) / 2, (B + D + E + F) / 2};
    long lo = *std::max_element(av.begin(), av.end());
    long hi = *std::min_element(bv.begin(), bv.end());
    auto eps = [](long n) { return int((n * (n - 1) / 2) & 1); };
    int fixed_parity = 0;
    for (long v : av)
        for (long w : bv) fixed_parity ^= eps(w - v);
    for (long e : {A, B, C, D, E, F}) fixed_parity ^= eps(e);
    RatFunc pref = RatFunc::from_int(1);
    for (long v : av)
        for (long w : bv) pref = pref * qfact_rf(w - v);
    for (long e : {A, B, C, D, E, F}) pref = pref / qfact_rf(e);
    RatFunc sum;
    for (long t = lo; t <= hi; ++t) {
        RatFunc term = qfact_rf(t + 1);
        int parity = int(t & 1) ^ eps(t + 1) ^ fixed_parity;
        for (long v : av) {
            term = term / qfact_rf(t - v);
            parity ^= eps(t - v);
        }
        for (long w : bv) {
            term = term / qfact_rf(w - t);
            parity ^= eps(w - t);
        }
        if (parity) term = -term;
        sum += term;
    }
    return pref * sum;
}

/// Brute-force diagrammatic tetrahedron (ground truth for the closed form):
/// close the E edge of the composite E -> A(x)B -> A(x)F(x)C -> D(x)C -> E.
template <class R>
R tet_net_diagrammatic(int A, int B, int C, int D, int E, int F, const TLCoeffs<R>& ring) {
    if (!theta_admissible(A, B, E) || !theta_admissible(C, D, E) || !theta_admissible(A, D, F) ||
        !theta_admissible(B, C, F))
        return ring.zero;
    TLElemT<R> v1 = tl_vertex(A, B, E, ring);                                              // E -> A+B
    TLElemT<R> v2 = tl_tensor(TLElemT<R>::identity(A, ring.one), tl_vertex(F, C, B, ring));  // A+B -> A+F+C
    TLElemT<R> v3 = tl_tensor(tl_vertex(A, F, D, ring).flipped(), TLElemT<R>::identity(C, ring.one));  // -> D+C
    TLElemT<R> v4 = tl_vertex(D, C, E, ring).flipped();                                    // D+C -> E
    return tl_trace(tl_mul(v4, tl_mul(v3, tl_mul(v2, v1, ring), ring), ring), ring);
}

}  // namespace skein
