#pragma once
/// Trivalent-web evaluator for the rank-two exceptional quantum invariant:
/// crossing expansion into formal sums of planar trivalent graphs, face-by-
/// face reduction of closed webs to exact scalars, the framed/unframed link
/// invariant built from them, and the vertex-data (loop, bigon, triangle
/// coefficients) utilities with the tree-independence criteria.
///
/// Webs are stored as combinatorial maps: each trivalent vertex holds its
/// three incident edge ids in (counter)clockwise cyclic order, plus a count
/// of crossingless circles.  Faces are orbits of the usual dart successor
/// (cross the edge, rotate one step), so a closed web on the sphere always
/// has a face with at most five sides, and each relation strictly lowers
/// the vertex count — reduction terminates in every order.

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "skein/cyclotomic.hpp"
#include "skein/laurent.hpp"
#include "skein/linkdiag.hpp"
#include "skein/qint.hpp"
#include "skein/tl.hpp"

namespace skein {

// ---------------------------------------------------------------------------
// webs
// ---------------------------------------------------------------------------

struct Web {
    std::vector<std::array<int, 3>> vert;  // per vertex: incident edge ids, cyclic
    int loops = 0;                         // crossingless circles

    bool closed_valid() const {
        std::map<int, int> occ;
        for (const auto& v : vert)
            for (int a : v) ++occ[a];
        for (const auto& [a, n] : occ)
            if (n != 2) return false;
        return true;
    }

    std::string serialize() const {
        std::ostringstream os;
        os << "Web[";
        bool first = true;
        for (const auto& v : vert) {
            if (!first) os << ", ";
            first = false;
            os << "V[" << v[0] + 1 << "," << v[1] + 1 << "," << v[2] + 1 << "]";
        }
        for (int u = 0; u < loops; ++u) {
            if (!first) os << ", ";
            first = false;
            os << "U";
        }
        os << "]";
        return os.str();
    }

    /// Accepts "Web[V[1,2,3], V[1,3,2], U]" (and bare lists without Web[]).
    static Web parse(const std::string& text) {
        Web w;
        size_t pos = 0;
        auto skip = [&]() {
            while (pos < text.size() && (std::isspace((unsigned char)text[pos]) || text[pos] == ','))
                ++pos;
        };
        skip();
        if (text.compare(pos, 4, "Web[") == 0) pos += 4;
        while (pos < text.size()) {
            skip();
            if (pos >= text.size()) break;
            char ch = text[pos];
            if (ch == ']') {
                ++pos;
                continue;
            }
            if (ch == 'U' || ch == 'u') {
                ++pos;
                ++w.loops;
                continue;
            }
            if (ch != 'V' && ch != 'v') throw std::invalid_argument("web parse: expected V[...] or U");
            ++pos;
            skip();
            if (pos >= text.size() || text[pos] != '[') throw std::invalid_argument("web parse: expected [");
            ++pos;
            std::array<int, 3> vv{};
            for (int i = 0; i < 3; ++i) {
                skip();
                bool neg = false;
                if (pos < text.size() && text[pos] == '-') neg = true, ++pos;
                int val = 0;
                bool any = false;
                while (pos < text.size() && std::isdigit((unsigned char)text[pos])) {
                    val = val * 10 + (text[pos] - '0');
                    ++pos;
                    any = true;
                }
                if (!any) throw std::invalid_argument("web parse: expected edge id");
                vv[i] = (neg ? -val : val) - 1;
            }
            skip();
            if (pos >= text.size() || text[pos] != ']') throw std::invalid_argument("web parse: expected ]");
            ++pos;
            w.vert.push_back(vv);
        }
        if (!w.closed_valid()) throw std::invalid_argument("web parse: not a closed web (edge used != 2 times)");
        return w;
    }
};

namespace g2_detail {

/// Darts are 3*vertex + slot; the dart's edge is vert[v][slot].
struct FaceCensus {
    // per face: the darts in traversal order
    std::vector<std::vector<int>> faces;
};

inline FaceCensus trace_faces(const Web& w) {
    std::map<int, std::array<int, 2>> occ;  // edge -> its two darts
    std::map<int, int> cnt;
    for (int v = 0; v < int(w.vert.size()); ++v)
        for (int i = 0; i < 3; ++i) {
            int a = w.vert[size_t(v)][size_t(i)];
            int d = 3 * v + i;
            auto& o = occ[a];
            int& c = cnt[a];
            if (c >= 2) throw std::logic_error("web: edge used more than twice");
            o[size_t(c++)] = d;
        }
    for (const auto& [a, c] : cnt)
        if (c != 2) throw std::logic_error("web: dangling edge");
    auto next = [&](int d) {
        int v = d / 3, i = d % 3;
        const auto& o = occ.at(w.vert[size_t(v)][size_t(i)]);
        int e = (o[0] == d) ? o[1] : o[0];
        return 3 * (e / 3) + (e % 3 + 1) % 3;
    };
    FaceCensus fc;
    std::vector<char> seen(w.vert.size() * 3, 0);
    for (int d0 = 0; d0 < int(w.vert.size()) * 3; ++d0) {
        if (seen[size_t(d0)]) continue;
        std::vector<int> orbit;
        int d = d0;
        do {
            seen[size_t(d)] = 1;
            orbit.push_back(d);
            d = next(d);
        } while (d != d0);
        fc.faces.push_back(std::move(orbit));
    }
    return fc;
}

/// Number of connected components of the dart structure (circles excluded).
inline int component_count(const Web& w) {
    int n = int(w.vert.size());
    if (n == 0) return 0;
    std::vector<int> parent(size_t(n), 0);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[size_t(x)] == x ? x : parent[size_t(x)] = find(parent[size_t(x)]); };
    std::map<int, int> first_at;
    for (int v = 0; v < n; ++v)
        for (int a : w.vert[size_t(v)]) {
            auto [it, fresh] = first_at.emplace(a, v);
            if (!fresh) parent[size_t(find(v))] = find(it->second);
        }
    int c = 0;
    for (int v = 0; v < n; ++v)
        if (find(v) == v) ++c;
    return c;
}

/// Sphere Euler check: V - E + F == 2 * (#components).
inline bool euler_ok(const Web& w) {
    if (w.vert.empty()) return true;
    long V = long(w.vert.size());
    long E = (3 * V) / 2;
    long F = long(trace_faces(w).faces.size());
    return V - E + F == 2 * component_count(w);
}

/// Canonical serialization: per connected component, minimize a discovery-
/// relabeled encoding over all starting darts, then sort the component
/// codes.  Equal codes imply isomorphic webs, so memo hits are sound.
inline std::string canonical_code(const Web& w) {
    int n = int(w.vert.size());
    std::map<int, std::array<int, 2>> occ;
    std::map<int, int> cnt;
    for (int v = 0; v < n; ++v)
        for (int i = 0; i < 3; ++i) {
            int a = w.vert[size_t(v)][size_t(i)];
            occ[a][size_t(cnt[a]++)] = 3 * v + i;
        }
    // component ids
    std::vector<int> comp(size_t(n), -1);
    int ncomp = 0;
    for (int v0 = 0; v0 < n; ++v0) {
        if (comp[size_t(v0)] >= 0) continue;
        std::vector<int> stack{v0};
        comp[size_t(v0)] = ncomp;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int i = 0; i < 3; ++i) {
                const auto& o = occ.at(w.vert[size_t(v)][size_t(i)]);
                for (int d : o) {
                    int u = d / 3;
                    if (comp[size_t(u)] < 0) {
                        comp[size_t(u)] = ncomp;
                        stack.push_back(u);
                    }
                }
            }
        }
        ++ncomp;
    }
    auto encode_from = [&](int d0) {
        std::map<int, int> arc_label;
        std::map<int, int> vert_order;
        std::vector<std::pair<int, int>> queue;  // (vertex, first slot)
        std::ostringstream os;
        queue.push_back({d0 / 3, d0 % 3});
        vert_order[d0 / 3] = 0;
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            auto [v, s0] = queue[qi];
            for (int k = 0; k < 3; ++k) {
                int i = (s0 + k) % 3;
                int a = w.vert[size_t(v)][size_t(i)];
                auto [it, fresh] = arc_label.emplace(a, int(arc_label.size()));
                os << it->second << (k < 2 ? "," : ";");
                if (fresh) {
                    const auto& o = occ.at(a);
                    int other = (o[0] / 3 == v && o[0] % 3 == i) ? o[1] : o[0];
                    int u = other / 3;
                    if (!vert_order.count(u)) {
                        vert_order[u] = int(vert_order.size());
                        queue.push_back({u, other % 3});
                    }
                }
            }
        }
        return os.str();
    };
    std::vector<std::string> comp_codes(static_cast<size_t>(ncomp));
    for (int v = 0; v < n; ++v)
        for (int i = 0; i < 3; ++i) {
            std::string c = encode_from(3 * v + i);
            std::string& best = comp_codes[size_t(comp[size_t(v)])];
            if (best.empty() || c < best) best = c;
        }
    std::sort(comp_codes.begin(), comp_codes.end());
    std::ostringstream os;
    for (const std::string& c : comp_codes) os << c << "|";
    os << "L" << w.loops;
    return os.str();
}

}  // namespace g2_detail

// ---------------------------------------------------------------------------
// scalar context
// ---------------------------------------------------------------------------

/// The scalars of the spider at a fixed (possibly generic) q: the loop,
/// bigon, and triangle coefficients, the square-relation coefficients, the
/// crossing-expansion coefficients, and the twist factor q^{12}.
template <typename R>
struct G2Scalars {
    R zero, one;
    R d, b, t;
    R sq_tree, sq_arc;                    // -(q^2+q^{-2}) and q^2+1+q^{-2}
    R c_vert_over, c_vert_under;          // 1/(1+q^{-2}) on vertices {ab}{cd}, 1/(1+q^2) on {bc}{da}
    R c_arc_over, c_arc_under;            // 1/(q^{-2}+q^{-4}) on arcs {ab}{cd}, 1/(q^2+q^4) on {bc}{da}
    R twist, twist_inv;                   // q^{12}, q^{-12}
};

namespace g2_detail {

template <typename R>
R rpow(const R& x, long e, const R& one) {
    R acc = one, base = x;
    for (long u = e; u > 0; u >>= 1) {
        if (u & 1) acc = acc * base;
        base = base * base;
    }
    return acc;
}

}  // namespace g2_detail

/// Generic-q scalars over univariate rational functions (x = q).
inline G2Scalars<RatFunc> g2_scalars_generic() {
    auto xp = [](long e) { return RatFunc::x_pow(e); };
    G2Scalars<RatFunc> c;
    c.zero = RatFunc();
    c.one = RatFunc::from_int(1);
    c.d = xp(10) + xp(8) + xp(2) + c.one + xp(-2) + xp(-8) + xp(-10);
    c.b = -(xp(6) + xp(4) + xp(2) + xp(-2) + xp(-4) + xp(-6));
    c.t = xp(4) + c.one + xp(-4);
    c.sq_tree = -(xp(2) + xp(-2));
    c.sq_arc = xp(2) + c.one + xp(-2);
    c.c_vert_over = c.one / (c.one + xp(-2));
    c.c_vert_under = c.one / (c.one + xp(2));
    c.c_arc_over = c.one / (xp(-2) + xp(-4));
    c.c_arc_under = c.one / (xp(2) + xp(4));
    c.twist = xp(12);
    c.twist_inv = xp(-12);
    return c;
}

/// Exact scalars at a cyclotomic q; throws naming the offending denominator
/// if the crossing expansion is undefined there.
inline G2Scalars<Cyclo> g2_scalars_at(const Cyclo& q) {
    const FieldPtr& f = q.field();
    Cyclo one = Cyclo::one(f);
    auto qp = [&](long e) { return q.pow(e); };
    auto check = [&](const Cyclo& den, const char* name) {
        if (den.is_zero())
            throw std::domain_error(std::string("crossing expansion denominator ") + name +
                                    " vanishes at this q");
        return den;
    };
    G2Scalars<Cyclo> c;
    c.zero = Cyclo::zero(f);
    c.one = one;
    c.d = qp(10) + qp(8) + qp(2) + one + qp(-2) + qp(-8) + qp(-10);
    c.b = -(qp(6) + qp(4) + qp(2) + qp(-2) + qp(-4) + qp(-6));
    c.t = qp(4) + one + qp(-4);
    c.sq_tree = -(qp(2) + qp(-2));
    c.sq_arc = qp(2) + one + qp(-2);
    c.c_vert_over = one / check(one + qp(-2), "1+q^-2");
    c.c_vert_under = one / check(one + qp(2), "1+q^2");
    c.c_arc_over = one / check(qp(-2) + qp(-4), "q^-2+q^-4");
    c.c_arc_under = one / check(qp(2) + qp(4), "q^2+q^4");
    c.twist = qp(12);
    c.twist_inv = qp(-12);
    return c;
}

// ---------------------------------------------------------------------------
// reduction
// ---------------------------------------------------------------------------

enum class FaceOrder { SmallestFirst, Random };

struct ReduceOptions {
    FaceOrder order = FaceOrder::SmallestFirst;
    std::mt19937* rng = nullptr;  // required for FaceOrder::Random
    bool memoize = true;
};

struct ReduceStats {
    long steps = 0;      // total relation applications
    long max_depth = 0;  // longest chain of applications along one branch
};

namespace g2_detail {

/// One face-removal surgery.  Corner visits use slots i (outgoing face
/// edge) and i-1 (incoming); the external leg sits at slot i+1.  The
/// replacement attaches new vertices to leg indices (encoded as ~idx) or
/// fresh edges (encoded as small non-negative ints), and joins pairs of
/// legs directly; a join of a leg with itself closes a circle.
struct Surgery {
    std::vector<std::array<int, 3>> nv;
    std::vector<std::pair<int, int>> joins;
};

inline Web apply_surgery(const Web& w, const std::vector<int>& face_darts, const Surgery& s) {
    Web out;
    out.loops = w.loops;
    std::vector<char> dead(w.vert.size(), 0);
    std::vector<int> legs;
    for (int d : face_darts) {
        int v = d / 3, i = d % 3;
        dead[size_t(v)] = 1;
        legs.push_back(w.vert[size_t(v)][size_t((i + 1) % 3)]);
    }
    // face orbits keep the face on the right (clockwise boundary), so the
    // collected legs are in clockwise order; the replacement tables below
    // expect counterclockwise legs
    std::reverse(legs.begin(), legs.end());
    int fresh_base = 0;
    for (const auto& vv : w.vert)
        for (int a : vv) fresh_base = std::max(fresh_base, a + 1);
    for (int v = 0; v < int(w.vert.size()); ++v)
        if (!dead[size_t(v)]) out.vert.push_back(w.vert[size_t(v)]);
    auto relabel = [&](int from, int to) {
        for (auto& vv : out.vert)
            for (int& a : vv)
                if (a == from) a = to;
        for (int& a : legs)
            if (a == from) a = to;
    };
    for (auto [p, q] : s.joins) {
        int a = legs[size_t(p)], b = legs[size_t(q)];
        if (a == b)
            ++out.loops;
        else
            relabel(b, a);
    }
    for (const auto& spec : s.nv) {
        std::array<int, 3> vv{};
        for (int i = 0; i < 3; ++i) vv[size_t(i)] = spec[size_t(i)] < 0 ? legs[size_t(~spec[size_t(i)])] : fresh_base + spec[size_t(i)];
        out.vert.push_back(vv);
    }
    return out;
}

inline bool corners_distinct(const std::vector<int>& face_darts) {
    std::vector<int> vs;
    for (int d : face_darts) vs.push_back(d / 3);
    std::sort(vs.begin(), vs.end());
    return std::adjacent_find(vs.begin(), vs.end()) == vs.end();
}

template <typename R>
struct Reducer {
    const G2Scalars<R>& c;
    ReduceOptions opt;
    std::map<std::string, R>* memo;
    ReduceStats* stats;

    R reduce(const Web& w, long depth) {
        if (stats) stats->max_depth = std::max(stats->max_depth, depth);
        if (depth > 100000) throw std::logic_error("web reduction: depth bound exceeded");
        Web core = w;
        core.loops = 0;
        R loop_factor = rpow(c.d, w.loops, c.one);
        if (core.vert.empty()) return loop_factor;
        std::string key;
        if (memo) {
            key = canonical_code(core);
            auto it = memo->find(key);
            if (it != memo->end()) return loop_factor * it->second;
        }
        FaceCensus fc = trace_faces(core);
        // candidate faces: size <= 5, with distinct corner vertices for 4/5
        std::vector<int> candidates;
        for (int i = 0; i < int(fc.faces.size()); ++i) {
            size_t sz = fc.faces[size_t(i)].size();
            if (sz > 5) continue;
            if (sz >= 4 && !corners_distinct(fc.faces[size_t(i)])) continue;
            candidates.push_back(i);
        }
        if (candidates.empty())
            throw std::logic_error("web reduction: no applicable face in " + core.serialize());
        int chosen;
        if (opt.order == FaceOrder::Random && opt.rng) {
            chosen = candidates[size_t((*opt.rng)() % candidates.size())];
        } else {
            chosen = candidates[0];
            for (int i : candidates)
                if (fc.faces[size_t(i)].size() < fc.faces[size_t(chosen)].size()) chosen = i;
        }
        const std::vector<int>& face = fc.faces[size_t(chosen)];
        if (stats) ++stats->steps;
        R val = c.zero;
        switch (face.size()) {
            case 1:
                // lollipop: the whole web vanishes
                val = c.zero;
                break;
            case 2: {
                Surgery s;
                s.joins = {{0, 1}};
                val = c.b * reduce(apply_surgery(core, face, s), depth + 1);
                break;
            }
            case 3: {
                Surgery s;
                s.nv = {{~0, ~1, ~2}};
                val = c.t * reduce(apply_surgery(core, face, s), depth + 1);
                break;
            }
            case 4: {
                Surgery tA, tB, aA, aB;
                tA.nv = {{0, ~0, ~1}, {0, ~2, ~3}};
                tB.nv = {{0, ~1, ~2}, {0, ~3, ~0}};
                aA.joins = {{0, 1}, {2, 3}};
                aB.joins = {{1, 2}, {3, 0}};
                val = c.sq_tree * (reduce(apply_surgery(core, face, tA), depth + 1) +
                                   reduce(apply_surgery(core, face, tB), depth + 1)) +
                      c.sq_arc * (reduce(apply_surgery(core, face, aA), depth + 1) +
                                  reduce(apply_surgery(core, face, aB), depth + 1));
                break;
            }
            case 5: {
                for (int m = 0; m < 5; ++m) {
                    auto L = [&](int k) { return ~((m + k) % 5); };
                    Surgery tree;
                    // center vertex (leg m, eA, eB); side vertices pick up the
                    // two following and two preceding legs in face order
                    tree.nv = {{L(0), 0, 1}, {0, L(1), L(2)}, {1, L(3), L(4)}};
                    val = val + reduce(apply_surgery(core, face, tree), depth + 1);
                    Surgery forest;
                    forest.joins = {{(m + 0) % 5, (m + 1) % 5}};
                    forest.nv = {{L(2), L(3), L(4)}};
                    val = val - reduce(apply_surgery(core, face, forest), depth + 1);
                }
                break;
            }
            default:
                throw std::logic_error("web reduction: unexpected face size");
        }
        if (memo) (*memo)[key] = val;
        return loop_factor * val;
    }
};

}  // namespace g2_detail

/// Reduce a closed web to its exact scalar value.
template <typename R>
R reduce_web(const Web& w, const G2Scalars<R>& c, const ReduceOptions& opt = {}, ReduceStats* stats = nullptr,
             std::map<std::string, R>* shared_memo = nullptr) {
    if (!w.closed_valid()) throw std::invalid_argument("reduce_web: web is not closed");
    std::map<std::string, R> local;
    g2_detail::Reducer<R> r{c, opt, nullptr, stats};
    if (opt.memoize) r.memo = shared_memo ? shared_memo : &local;
    return r.reduce(w, 0);
}

// ---------------------------------------------------------------------------
// crossing expansion and the link invariant
// ---------------------------------------------------------------------------

/// Expand every crossing of the diagram into the four-term local sum and
/// return the resulting formal sum of closed webs with coefficients.  The
/// under-strand runs end[0] -> end[2], so the over diagonal is (end[1],
/// end[3]); the vertex pairings {01}{23} / {12}{30} carry the same leg
/// groupings as the arc pairings they accompany.
template <typename R>
std::vector<std::pair<Web, R>> expand_crossings(const LinkDiagram& L, const G2Scalars<R>& c) {
    int n = int(L.crossing_count());
    if (n > 14) throw std::invalid_argument("expand_crossings: too many crossings for 4^n expansion");
    std::vector<std::pair<Web, R>> out;
    long total = 1;
    for (int i = 0; i < n; ++i) total *= 4;
    for (long mask = 0; mask < total; ++mask) {
        // union-find over edge ids, with circle detection on closing joins
        std::map<int, int> parent;
        std::function<int(int)> find = [&](int x) {
            auto it = parent.emplace(x, x).first;
            return it->second == x ? x : it->second = find(it->second);
        };
        Web w;
        w.loops = L.extra_unknots();
        R coeff = c.one;
        int fresh = L.arc_count();
        auto join = [&](int x, int y) {
            int rx = find(x), ry = find(y);
            if (rx == ry)
                ++w.loops;
            else
                parent[ry] = rx;
        };
        long m = mask;
        for (const Crossing& cr : L.crossings()) {
            int choice = int(m % 4);
            m /= 4;
            int a = cr.end[0], b = cr.end[1], cc = cr.end[2], d = cr.end[3];
            switch (choice) {
                case 0:  // vertex pairing {ab}{cd}
                    w.vert.push_back({fresh, a, b});
                    w.vert.push_back({fresh, cc, d});
                    ++fresh;
                    coeff = coeff * c.c_vert_over;
                    break;
                case 1:  // vertex pairing {bc}{da}
                    w.vert.push_back({fresh, b, cc});
                    w.vert.push_back({fresh, d, a});
                    ++fresh;
                    coeff = coeff * c.c_vert_under;
                    break;
                case 2:  // arc pairing {ab}{cd}
                    join(a, b);
                    join(cc, d);
                    coeff = coeff * c.c_arc_over;
                    break;
                case 3:  // arc pairing {bc}{da}
                    join(b, cc);
                    join(d, a);
                    coeff = coeff * c.c_arc_under;
                    break;
            }
        }
        for (auto& vv : w.vert)
            for (int& a : vv) a = find(a);
        out.push_back({std::move(w), std::move(coeff)});
    }
    return out;
}

namespace g2_detail {

template <typename R>
R invariant_impl(const LinkDiagram& L, const G2Scalars<R>& c, bool framed) {
    auto terms = expand_crossings(L, c);
    std::map<std::string, R> memo;
    R acc = c.zero;
    ReduceOptions opt;
    for (auto& [w, coeff] : terms) acc = acc + coeff * reduce_web(w, c, opt, nullptr, &memo);
    if (!framed) {
        long wr = L.writhe();
        R corr = wr >= 0 ? rpow(c.twist_inv, wr, c.one) : rpow(c.twist, -wr, c.one);
        acc = acc * corr;
    }
    return acc;
}

}  // namespace g2_detail

/// The link invariant at generic q (framing-corrected by q^{-12 writhe}
/// unless framed = true).
inline RatFunc g2_invariant(const LinkDiagram& L, bool framed = false) {
    return g2_detail::invariant_impl(L, g2_scalars_generic(), framed);
}

/// The link invariant at an exact cyclotomic q.
inline Cyclo g2_invariant(const LinkDiagram& L, const Cyclo& q, bool framed = false) {
    return g2_detail::invariant_impl(L, g2_scalars_at(q), framed);
}

// ---------------------------------------------------------------------------
// vertex data and tree independence
// ---------------------------------------------------------------------------

template <typename R>
struct VertexData {
    R d, b, t;
};

namespace g2_detail {

template <typename R>
R from_int_like(long n, const R& model) {
    if constexpr (std::is_same_v<R, Cyclo>) {
        return Cyclo::from_int(model.field(), Int(n));
    } else {
        (void)model;
        return R::from_int(n);
    }
}

}  // namespace g2_detail

/// The two explicit tree-independence criteria: trees with four boundary
/// points are linearly independent iff the first polynomial in (b, d, t)
/// is nonzero, five boundary points iff the second is.
template <typename R>
std::pair<bool, bool> tree_independence(const VertexData<R>& v) {
    using g2_detail::rpow;
    const R &b = v.b, &d = v.d, &t = v.t;
    R one = g2_detail::from_int_like(1, d);
    auto I = [&](long n) { return g2_detail::from_int_like(n, d); };
    auto P = [&](const R& x, long e) { return rpow(x, e, one); };
    R p4 = I(-2) * P(b, 4) * P(d, 5) + P(b, 4) * P(d, 6) + I(-2) * P(b, 3) * P(d, 4) * t +
           (P(b, 2) * P(d, 4) - P(b, 2) * P(d, 6)) * P(t, 2);
    auto row = [&](long bexp, long texp, std::initializer_list<std::pair<long, long>> terms) {
        R acc = I(0) * one;
        for (auto [coef, dexp] : terms) acc = acc + I(coef) * P(d, dexp);
        return P(b, bexp) * P(t, texp) * acc;
    };
    R p5 = row(20, 0, {{1, 15}, {-10, 13}, {-5, 12}, {65, 11}, {-62, 10}}) +
           row(19, 1, {{5, 14}, {5, 13}, {-35, 12}, {-5, 11}, {50, 10}}) +
           row(18, 2, {{-5, 15}, {50, 13}, {15, 12}, {-275, 11}, {305, 10}}) +
           row(17, 3, {{-30, 14}, {-35, 13}, {200, 12}, {205, 11}, {-415, 10}}) +
           row(16, 4, {{10, 15}, {15, 14}, {-75, 13}, {-85, 12}, {360, 11}, {-340, 10}}) +
           row(15, 5, {{2, 15}, {60, 14}, {60, 13}, {-405, 12}, {-485, 11}, {930, 10}}) +
           row(14, 6, {{-15, 15}, {-60, 14}, {40, 13}, {320, 12}, {-15, 11}, {-355, 10}}) +
           row(13, 7, {{-25, 14}, {-25, 13}, {220, 12}, {250, 11}, {-480, 10}}) +
           row(12, 8, {{15, 15}, {60, 14}, {-30, 13}, {-350, 12}, {-85, 11}, {560, 10}}) +
           row(11, 9, {{-10, 15}, {-30, 14}, {25, 13}, {145, 12}, {-20, 11}, {-225, 10}}) +
           row(10, 10, {{2, 15}, {5, 14}, {-5, 13}, {-20, 12}, {10, 11}, {33, 10}});
    return {!p4.is_zero(), !p5.is_zero()};
}

/// The generic vertex data: the loop, bigon, and triangle coefficients as
/// rational functions of q.
inline VertexData<RatFunc> g2_vertex_data_generic() {
    G2Scalars<RatFunc> c = g2_scalars_generic();
    return {c.d, c.b, c.t};
}

/// Evaluate an integer-coefficient polynomial (ascending powers) at an
/// exact scalar and test for zero.
inline bool poly_check(const Cyclo& v, const std::vector<long>& ascending_coeffs) {
    Cyclo acc = Cyclo::zero(v.field());
    Cyclo p = Cyclo::one(v.field());
    for (long co : ascending_coeffs) {
        acc += Cyclo::from_int(v.field(), Int(co)) * p;
        p *= v;
    }
    return acc.is_zero();
}

/// Vertex data for the even half of the level-24 Temperley-Lieb quotient:
/// d is half the dimension of the 12-strand Jones-Wenzl idempotent at
/// q = zeta_52, and b, t are the bigon and triangle coefficients of the
/// projected trivalent vertex, computed by theta/tetrahedral network
/// closed forms.
inline VertexData<Cyclo> d14_vertex_data() {
    FieldPtr f = CycloField::get(104);
    Cyclo s = Cyclo::zeta_pow(f, 1);  // s^2 = zeta_52
    Cyclo q = s * s;
    Cyclo delta12 = qint_at(q, 13);
    Cyclo d = delta12 * Cyclo::from_rat(f, Rat(1, 2));
    Cyclo theta = theta_net_at(q, 12, 12, 12);
    Cyclo b = theta / delta12;
    Cyclo tet = tet_net_rf(12, 12, 12, 12, 12, 12).eval(s);
    Cyclo t = tet / theta;
    return {d, b, t};
}

}  // namespace skein
