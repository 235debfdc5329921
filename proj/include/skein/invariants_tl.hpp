#pragma once
/// Kauffman bracket, Jones, and colored Jones invariants.
///
/// Two exact evaluation engines share the conventions of bracket_oracle.hpp:
///
///  * kauffman_bracket(LinkDiagram): a sweepline over the crossings of a PD
///    diagram.  The frontier is the set of arcs with exactly one endpoint in
///    the processed region, and a state is a pairing of those arcs (how the
///    processed region connects them) with a scalar weight; states are merged
///    by pairing, so the cost is governed by the frontier width rather than
///    2^crossings.  If the best-found contraction order would exceed the
///    configured frontier width, evaluation falls back to a crossing
///    recursion memoized on canonicalized sub-diagrams.
///
///  * plat_cable_bracket(PlatWord): sweeps a plat presentation bottom to top
///    as a Temperley-Lieb element.  This is the cabling engine: each strand
///    widens to a bundle of k parallel strands and a Jones-Wenzl projector is
///    inserted on one bundle per link component, which is what the colored
///    Jones polynomial needs.
///
/// Every crossing factor is i * (integer power of s), so both engines track
/// the power of i as a separate integer and work in rings free of sqrt(-1);
/// the public entry points fold the accumulated power back in at the end.

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "skein/bracket_oracle.hpp"
#include "skein/cyclotomic.hpp"
#include "skein/laurent.hpp"
#include "skein/linkdiag.hpp"
#include "skein/qint.hpp"
#include "skein/tl.hpp"

namespace skein {

// ---------------------------------------------------------------------------
// Scalar plumbing
// ---------------------------------------------------------------------------

/// Coefficient ring of a bracket computation: Temperley-Lieb coefficients
/// plus the value of the variable s (q = s^2).  i is not an element of the
/// ring; see IScalar.
template <class R>
struct BracketRing {
    TLCoeffs<R> tl;
    R s, s_inv;
};

inline BracketRing<RatFunc> bracket_ring_generic() {
    BracketRing<RatFunc> r;
    r.tl = tl_coeffs_generic();
    r.s = RatFunc::x_pow(1);
    r.s_inv = RatFunc::x_pow(-1);
    return r;
}

/// s = zeta_M^{s_log} in the cyclotomic field of order M.
inline BracketRing<Cyclo> bracket_ring_at_root(const FieldPtr& f, long s_log) {
    BracketRing<Cyclo> r;
    r.tl = tl_coeffs_at_root(f, s_log);
    r.s = Cyclo::zeta_pow(f, s_log);
    r.s_inv = Cyclo::zeta_pow(f, -s_log);
    return r;
}

/// A ring element together with a power of i tracked outside the ring, so
/// the represented scalar is i^{i_exp} * value.
template <class R>
struct IScalar {
    R value;
    long i_exp = 0;
};

// ---------------------------------------------------------------------------
// PD sweepline
// ---------------------------------------------------------------------------

namespace detail {

/// Frontier state key: the open arcs paired off by the processed region,
/// flattened as sorted (low, high) pairs, pairs sorted ascending.
using MatchKey = std::vector<int32_t>;

inline MatchKey sorted_key(std::vector<std::pair<int32_t, int32_t>>& pairs) {
    for (auto& pq : pairs)
        if (pq.first > pq.second) std::swap(pq.first, pq.second);
    std::sort(pairs.begin(), pairs.end());
    MatchKey k;
    k.reserve(2 * pairs.size());
    for (const auto& pq : pairs) {
        k.push_back(pq.first);
        k.push_back(pq.second);
    }
    return k;
}

/// Glue one crossing (with the chosen smoothing) onto a frontier state.
/// `arcs` are the four arc ids at the crossing's slots a,b,c,d; the
/// A-smoothing joins slots (0,1),(2,3), the other joins (0,3),(1,2).
/// Emits the new pairing and the number of loops closed.
inline void glue_crossing(const MatchKey& key, const std::array<int, 4>& arcs, bool a_smoothing,
                          MatchKey* out_key, int* out_loops) {
    // Nodes 0..3 are the crossing's slots; ports (one per involved open or
    // fresh arc) are allocated on demand.  Every slot ends with degree 2
    // (one smoothing edge, one arc edge), so chain endpoints are ports.
    std::vector<std::array<int, 2>> adj(4, {-1, -1});
    std::map<int32_t, int> port;
    std::vector<int32_t> port_arc;
    auto port_node = [&](int32_t arc) {
        auto it = port.find(arc);
        if (it != port.end()) return it->second;
        int id = int(adj.size());
        adj.push_back({-1, -1});
        port.emplace(arc, id);
        port_arc.push_back(arc);
        return id;
    };
    auto add_edge = [&](int u, int v) {
        adj[size_t(u)][adj[size_t(u)][0] < 0 ? 0 : 1] = v;
        adj[size_t(v)][adj[size_t(v)][0] < 0 ? 0 : 1] = u;
    };

    if (a_smoothing) {
        add_edge(0, 1);
        add_edge(2, 3);
    } else {
        add_edge(0, 3);
        add_edge(1, 2);
    }
    // Arc edges at the crossing: a self-arc links its two slots (once), any
    // other arc links its slot to its port.
    for (int i = 0; i < 4; ++i) {
        int prev = -1;
        bool later = false;
        for (int j = 0; j < i; ++j)
            if (arcs[size_t(j)] == arcs[size_t(i)]) prev = j;
        for (int j = i + 1; j < 4; ++j)
            if (arcs[size_t(j)] == arcs[size_t(i)]) later = true;
        if (prev >= 0)
            add_edge(prev, i);
        else if (!later)
            add_edge(i, port_node(int32_t(arcs[size_t(i)])));
    }
    // Processed-region edges: pairs of the old frontier matching.  Pairs not
    // touching this crossing pass through unchanged.
    std::vector<std::pair<int32_t, int32_t>> out_pairs;
    auto at_crossing = [&](int32_t arc) {
        return std::find(arcs.begin(), arcs.end(), int(arc)) != arcs.end();
    };
    for (size_t t = 0; t + 1 < key.size(); t += 2) {
        int32_t x = key[t], y = key[t + 1];
        if (at_crossing(x) || at_crossing(y))
            add_edge(port_node(x), port_node(y));
        else
            out_pairs.emplace_back(x, y);
    }

    // Walk chains from degree-1 nodes (always ports); leftover cycles are
    // closed loops.
    std::vector<char> seen(adj.size(), 0);
    for (size_t u = 0; u < adj.size(); ++u) {
        if (seen[u] || adj[u][1] >= 0 || adj[u][0] < 0) continue;
        seen[u] = 1;
        int prev = int(u), cur = adj[u][0];
        while (adj[size_t(cur)][1] >= 0) {
            seen[size_t(cur)] = 1;
            int nxt = adj[size_t(cur)][0] == prev ? adj[size_t(cur)][1] : adj[size_t(cur)][0];
            prev = cur;
            cur = nxt;
        }
        seen[size_t(cur)] = 1;
        out_pairs.emplace_back(port_arc[u - 4], port_arc[size_t(cur) - 4]);
    }
    int loops = 0;
    for (size_t u = 0; u < adj.size(); ++u) {
        if (seen[u] || adj[u][0] < 0) continue;
        ++loops;
        int prev = int(u), cur = adj[u][0];
        seen[u] = 1;
        while (!seen[size_t(cur)]) {
            seen[size_t(cur)] = 1;
            int nxt = adj[size_t(cur)][0] == prev ? adj[size_t(cur)][1] : adj[size_t(cur)][0];
            prev = cur;
            cur = nxt;
        }
    }
    *out_key = sorted_key(out_pairs);
    *out_loops = loops;
}

/// Greedy contraction order: repeatedly take the crossing sharing the most
/// arcs with the current frontier.  Returns the order and the peak frontier
/// width (number of open arcs).
inline std::pair<std::vector<int>, int> contraction_order(const std::vector<Crossing>& xs) {
    const int n = int(xs.size());
    std::vector<int> order;
    order.reserve(size_t(n));
    std::vector<char> used(size_t(n), 0);
    std::set<int> open;
    int peak = 0;
    for (int step = 0; step < n; ++step) {
        int best = -1, best_shared = -1;
        for (int c = 0; c < n; ++c) {
            if (used[size_t(c)]) continue;
            int shared = 0;
            for (int a : xs[size_t(c)].end) shared += open.count(a) ? 1 : 0;
            if (shared > best_shared) {
                best_shared = shared;
                best = c;
            }
        }
        used[size_t(best)] = 1;
        order.push_back(best);
        const auto& e = xs[size_t(best)].end;
        for (int i = 0; i < 4; ++i) {
            int a = e[size_t(i)];
            if (std::count(e.begin(), e.begin() + i, a)) continue;  // self-arc
            if (std::count(e.begin() + i + 1, e.end(), a)) continue;
            if (open.count(a))
                open.erase(a);
            else
                open.insert(a);
        }
        peak = std::max(peak, int(open.size()));
    }
    return {order, peak};
}

/// Memoized crossing recursion on bare crossing lists (fallback engine).
/// Returns the i-stripped bracket: each A-smoothing weighs s, each other
/// smoothing weighs -s^{-1}, loops weigh [2].
inline std::string rec_key(const std::vector<std::array<int, 4>>& xs) {
    // Rotating a record by two names the same crossing with the same
    // smoothing labels, so normalize each; then relabel arcs by first use.
    std::vector<std::array<int, 4>> norm = xs;
    for (auto& e : norm) {
        std::array<int, 4> rot{e[2], e[3], e[0], e[1]};
        if (rot < e) e = rot;
    }
    std::map<int, int> remap;
    std::ostringstream os;
    for (const auto& e : norm)
        for (int a : e) {
            auto [it, fresh] = remap.emplace(a, int(remap.size()));
            os << it->second << ',';
        }
    return os.str();
}

inline Laurent bracket_recursive(const std::vector<std::array<int, 4>>& xs,
                                 std::map<std::string, Laurent>& memo) {
    if (xs.empty()) return Laurent::from_int(1);
    std::string key = rec_key(xs);
    auto hit = memo.find(key);
    if (hit != memo.end()) return hit->second;

    const std::array<int, 4> e = xs[0];
    Laurent total;
    for (int sm = 0; sm < 2; ++sm) {
        std::vector<std::array<int, 4>> ys(xs.begin() + 1, xs.end());
        std::array<int, 4> lbl = e;
        int loops = 0;
        auto join = [&](int si, int sj) {
            int x = lbl[size_t(si)], y = lbl[size_t(sj)];
            if (x == y) {
                ++loops;
                return;
            }
            for (auto& f : ys)
                for (int& a : f)
                    if (a == y) a = x;
            for (int& a : lbl)
                if (a == y) a = x;
        };
        if (sm == 0) {
            join(0, 1);
            join(2, 3);
        } else {
            join(0, 3);
            join(1, 2);
        }
        Laurent w = sm == 0 ? Laurent::var_pow(VAR_S, 1) : Laurent::var_pow(VAR_S, -1, Int(-1));
        Laurent term = w * bracket_recursive(ys, memo);
        for (int l = 0; l < loops; ++l) term = term * qint_laurent(2);
        total += term;
    }
    memo.emplace(std::move(key), total);
    return total;
}

}  // namespace detail

/// Framed bracket of a closed diagram, exact, as a Laurent polynomial in s
/// (and the unit i).  Sweepline with state merging; falls back to memoized
/// crossing recursion when the contraction frontier would exceed
/// max_frontier open arcs.
inline Laurent kauffman_bracket(const LinkDiagram& L, int max_frontier = 16) {
    const auto& xs = L.crossings();
    const Laurent delta = qint_laurent(2);
    Laurent result;
    auto [order, peak] = detail::contraction_order(xs);
    if (peak <= max_frontier) {
        std::map<detail::MatchKey, Laurent> states;
        states.emplace(detail::MatchKey{}, Laurent::from_int(1));
        const Laurent ws = Laurent::var_pow(VAR_S, 1);
        const Laurent wb = Laurent::var_pow(VAR_S, -1, Int(-1));
        for (int ci : order) {
            std::map<detail::MatchKey, Laurent> next;
            for (const auto& [key, coeff] : states) {
                for (int sm = 0; sm < 2; ++sm) {
                    detail::MatchKey nk;
                    int loops = 0;
                    detail::glue_crossing(key, xs[size_t(ci)].end, sm == 0, &nk, &loops);
                    Laurent t = coeff * (sm == 0 ? ws : wb);
                    for (int l = 0; l < loops; ++l) t = t * delta;
                    auto [it, fresh] = next.emplace(std::move(nk), t);
                    if (!fresh) it->second += t;
                }
            }
            states = std::move(next);
        }
        for (const auto& [key, coeff] : states) {
            if (!key.empty()) throw std::logic_error("bracket sweep left open arcs");
            result += coeff;
        }
    } else {
        std::vector<std::array<int, 4>> tuples;
        tuples.reserve(xs.size());
        for (const auto& c : xs) tuples.push_back(c.end);
        std::map<std::string, Laurent> memo;
        result = detail::bracket_recursive(tuples, memo);
    }
    for (int u = 0; u < L.extra_unknots(); ++u) result = result * delta;
    return result * Laurent::i_unit(int(xs.size() % 4));
}

/// Unframed Jones polynomial: bracket times (is^3)^{-writhe}; the unknot
/// evaluates to [2].
inline Laurent jones(const LinkDiagram& L, int max_frontier = 16) {
    return jones_normalize(kauffman_bracket(L, max_frontier), L.writhe());
}

// ---------------------------------------------------------------------------
// Plat-presentation cabling engine
// ---------------------------------------------------------------------------

/// Component structure of a plat closure: returns (component id of each
/// bottom cup, number of components).  Ids are assigned in order of the
/// leftmost cup of each component.
inline std::pair<std::vector<int>, int> plat_components(int strands, const std::vector<int>& word) {
    const int m = strands / 2;
    std::vector<int> parent(static_cast<size_t>(m));
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        return parent[size_t(x)] == x ? x : parent[size_t(x)] = find(parent[size_t(x)]);
    };
    std::vector<int> wire(static_cast<size_t>(strands));
    for (int p = 0; p < strands; ++p) wire[size_t(p)] = p / 2;
    for (int letter : word) {
        int j = letter > 0 ? letter : -letter;
        if (j < 1 || j >= strands) throw std::invalid_argument("plat letter out of range");
        std::swap(wire[size_t(j - 1)], wire[size_t(j)]);
    }
    for (int c = 0; c < m; ++c) parent[size_t(find(wire[size_t(2 * c)]))] = find(wire[size_t(2 * c + 1)]);
    std::vector<int> comp(size_t(m), -1);
    int count = 0;
    for (int c = 0; c < m; ++c) {
        int r = find(c);
        if (comp[size_t(r)] < 0) comp[size_t(r)] = count++;
    }
    for (int c = 0; c < m; ++c) comp[size_t(c)] = comp[size_t(find(c))];
    return {comp, count};
}

/// Framed bracket of the blackboard k-cable of a plat presentation, with a
/// Jones-Wenzl projector f^(k) inserted on one cable bundle of each link
/// component (skipped when insert_projectors is false, giving the bare
/// cable).  The sweep carries a Temperley-Lieb element from the bottom cups
/// through the cabled crossings to the top caps.
template <class R>
IScalar<R> plat_cable_bracket(const PlatWord& p, int k, const BracketRing<R>& ring,
                              bool insert_projectors = true) {
    if (k < 1) throw std::invalid_argument("cable width must be at least 1");
    const int n = p.strands;
    const int m = n * k;

    TLDiag cupd;
    cupd.bot = 0;
    cupd.top = m;
    cupd.pair.assign(size_t(m), 0);
    for (int c = 0; c < n / 2; ++c)
        for (int t = 0; t < k; ++t) cupd.link(2 * c * k + t, 2 * c * k + 2 * k - 1 - t);
    TLElemT<R> state = TLElemT<R>::diagram(cupd, ring.tl.one);

    if (insert_projectors && k > 1) {
        auto [cup_comp, ncomp] = plat_components(n, p.word);
        std::vector<char> has(size_t(ncomp), 0);
        TLElemT<R> ins = TLElemT<R>::identity(0, ring.tl.one);
        const TLElemT<R> jw = jones_wenzl_elem(k, ring.tl);
        const TLElemT<R> idk = TLElemT<R>::identity(k, ring.tl.one);
        for (int pos = 0; pos < n; ++pos) {
            int c = cup_comp[size_t(pos / 2)];
            bool put = !has[size_t(c)];
            has[size_t(c)] = 1;
            ins = tl_tensor(ins, put ? jw : idk);
        }
        state = tl_mul(ins, state, ring.tl);
    }

    IScalar<R> out;
    for (int letter : cable_word(p.word, k)) {
        int j = letter > 0 ? letter : -letter;
        TLElemT<R> el = TLElemT<R>::zero_of(m, m);
        if (letter > 0) {
            el.add_term(TLDiag::identity(m), ring.s);
            el.add_term(TLDiag::hook(m, j), ring.tl.zero - ring.s_inv);
        } else {
            el.add_term(TLDiag::hook(m, j), ring.s);
            el.add_term(TLDiag::identity(m), ring.tl.zero - ring.s_inv);
        }
        state = tl_mul(el, state, ring.tl);
        ++out.i_exp;
    }

    TLElemT<R> closed = tl_mul(TLElemT<R>::diagram(cupd.flipped(), ring.tl.one), state, ring.tl);
    out.value = ring.tl.zero;
    for (const auto& [d, c] : closed.terms) out.value = out.value + c;
    return out;
}

namespace detail {

/// Twist correction turning the framed cabled bracket into the unframed
/// colored Jones value: divide by (i^{k^2} s^{k^2+2k})^{writhe}.
template <class R>
void unframe(IScalar<R>* v, int k, long writhe, const R& s_pow_correction) {
    v->value = v->value * s_pow_correction;
    v->i_exp -= writhe * long(k) * long(k);
}

}  // namespace detail

/// Colored Jones polynomial of a plat presentation, color k (k-cable with
/// f^(k) on each component), as an exact Laurent polynomial in s.  The
/// framed variant keeps the presentation's blackboard framing; the unframed
/// variant divides by the twist factor (i^{k^2} s^{k^2+2k})^writhe.
/// colored_jones(p, 1) is the Jones polynomial times no correction (f^(1)
/// is a single strand).
inline Laurent colored_jones(const PlatWord& p, int k, bool framed = false) {
    const BracketRing<RatFunc> ring = bracket_ring_generic();
    IScalar<RatFunc> v = plat_cable_bracket(p, k, ring);
    if (!framed) {
        long w = p.diagram().writhe();
        detail::unframe(&v, k, w, RatFunc::x_pow(-w * (long(k) * k + 2 * k)));
    }
    std::optional<Laurent> lau = v.value.as_laurent(VAR_S);
    if (!lau) throw std::logic_error("colored Jones denominator failed to clear");
    long e = ((v.i_exp % 4) + 4) % 4;
    return *lau * Laurent::i_unit(int(e));
}

/// Colored Jones evaluated at a root of unity: s = zeta_M^{s_log} in the
/// cyclotomic field of order M (M divisible by 4 so that i is available).
inline Cyclo colored_jones_at(const PlatWord& p, int k, const FieldPtr& f, long s_log,
                              bool framed = false) {
    if (f->order() % 4 != 0) throw std::invalid_argument("colored_jones_at: need 4 | field order for i");
    const BracketRing<Cyclo> ring = bracket_ring_at_root(f, s_log);
    IScalar<Cyclo> v = plat_cable_bracket(p, k, ring);
    if (!framed) {
        long w = p.diagram().writhe();
        detail::unframe(&v, k, w, Cyclo::zeta_pow(f, -w * (long(k) * k + 2 * k) * s_log));
    }
    long e = ((v.i_exp % 4) + 4) % 4;
    return v.value * Cyclo::zeta_pow(f, e * (f->order() / 4));
}

}  // namespace skein
