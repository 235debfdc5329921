#pragma once
/// Link diagrams: planar diagram (PD) codes, braid and plat presentations,
/// orientation tracing, crossing signs, writhe, and linking numbers.
///
/// PD conventions.  A crossing is written X[a,b,c,d]: the four arc labels in
/// counterclockwise order around the crossing starting at the *incoming
/// understrand* a (so the understrand runs a -> c).  The overstrand occupies
/// ends b and d; its direction is recovered from a consistent orientation of
/// each component.  With the understrand entering at the bottom and the ends
/// b, c, d proceeding counterclockwise, the crossing is positive exactly when
/// the overstrand runs d -> b:
///
///      c   b                 c   b
///       \ /                   \ /
///        /     positive        \      negative
///       / \   (over d->b)     / \    (over b->d)
///      a   d                 a   d
///
/// Crossingless unknot components are written as the token U.

#include <array>
#include <cctype>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace skein {

struct Crossing {
    std::array<int, 4> end{};  // arc ids at slots 0..3 = a,b,c,d
    int sign = 0;              // +1 / -1 once oriented
    bool over_from_d = false;  // overstrand runs d -> b
};

class LinkDiagram {
  public:
    LinkDiagram() = default;

    const std::vector<Crossing>& crossings() const { return cross_; }
    size_t crossing_count() const { return cross_.size(); }
    int arc_count() const { return arc_count_; }
    int extra_unknots() const { return extra_unknots_; }
    int component_count() const { return comp_count_ + extra_unknots_; }
    /// Component id of an arc (0-based; crossingless components come last).
    int component_of_arc(int arc) const { return arc_comp_.at(size_t(arc)); }

    long writhe() const {
        long w = 0;
        for (const Crossing& c : cross_) w += c.sign;
        return w;
    }
    /// Sum of signs of crossings where both strands belong to component comp.
    long self_writhe(int comp) const {
        long w = 0;
        for (const Crossing& c : cross_)
            if (arc_comp_[size_t(c.end[0])] == comp && arc_comp_[size_t(c.end[1])] == comp) w += c.sign;
        return w;
    }
    /// Symmetric matrix: off-diagonal entries are linking numbers, diagonal
    /// entries are self-writhes.
    std::vector<std::vector<long>> linking_matrix() const {
        int n = component_count();
        std::vector<std::vector<long>> lk(size_t(n), std::vector<long>(size_t(n), 0));
        for (const Crossing& c : cross_) {
            int cu = arc_comp_[size_t(c.end[0])], co = arc_comp_[size_t(c.end[1])];
            if (cu == co)
                lk[size_t(cu)][size_t(cu)] += c.sign;
            else {
                lk[size_t(cu)][size_t(co)] += c.sign;
                lk[size_t(co)][size_t(cu)] += c.sign;
            }
        }
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j) {
                    if (lk[size_t(i)][size_t(j)] % 2 != 0) throw std::logic_error("odd inter-component crossing sum");
                    lk[size_t(i)][size_t(j)] /= 2;
                }
        return lk;
    }
    long linking_number(int c1, int c2) const { return linking_matrix()[size_t(c1)][size_t(c2)]; }

    /// Swap every over/understrand.  X[a,b,c,d] becomes X[d,a,b,c] at positive
    /// crossings (the old overstrand entered at d) and X[b,c,d,a] at negative.
    LinkDiagram mirror() const {
        std::vector<std::array<int, 4>> xs;
        for (const Crossing& c : cross_) {
            if (c.over_from_d)
                xs.push_back({c.end[3], c.end[0], c.end[1], c.end[2]});
            else
                xs.push_back({c.end[1], c.end[2], c.end[3], c.end[0]});
        }
        return LinkDiagram(xs, extra_unknots_);
    }

    std::string pd_string() const {
        std::ostringstream os;
        os << "PD[";
        bool first = true;
        for (const Crossing& c : cross_) {
            if (!first) os << ", ";
            first = false;
            os << "X[" << c.end[0] + 1 << "," << c.end[1] + 1 << "," << c.end[2] + 1 << "," << c.end[3] + 1 << "]";
        }
        for (int u = 0; u < extra_unknots_; ++u) {
            if (!first) os << ", ";
            first = false;
            os << "U";
        }
        os << "]";
        return os.str();
    }

    /// Accepts "PD[X[1,4,2,5], ...]", bare "X[1,4,2,5] X[...]", parentheses
    /// instead of brackets, and U tokens for crossingless unknots.
    static LinkDiagram parse_pd(const std::string& text) {
        std::vector<std::array<int, 4>> xs;
        int unknots = 0;
        size_t pos = 0;
        auto skip_ws = [&]() {
            while (pos < text.size() && (std::isspace((unsigned char)text[pos]) || text[pos] == ',')) ++pos;
        };
        skip_ws();
        if (text.compare(pos, 3, "PD[") == 0 || text.compare(pos, 3, "PD(") == 0) pos += 3;
        while (pos < text.size()) {
            skip_ws();
            if (pos >= text.size()) break;
            char ch = text[pos];
            if (ch == ']' || ch == ')') {
                ++pos;
                continue;
            }
            if (ch == 'U' || ch == 'u') {
                ++unknots;
                ++pos;
                continue;
            }
            if (ch == 'X' || ch == 'x') {
                ++pos;
                if (pos >= text.size() || (text[pos] != '[' && text[pos] != '(')) throw std::invalid_argument("PD parse: expected [ after X");
                ++pos;
                std::array<int, 4> ends{};
                for (int k = 0; k < 4; ++k) {
                    skip_ws();
                    size_t start = pos;
                    while (pos < text.size() && (std::isdigit((unsigned char)text[pos]) || text[pos] == '-')) ++pos;
                    if (start == pos) throw std::invalid_argument("PD parse: expected arc label");
                    ends[size_t(k)] = std::stoi(text.substr(start, pos - start));
                }
                skip_ws();
                if (pos < text.size() && (text[pos] == ']' || text[pos] == ')')) ++pos;
                xs.push_back(ends);
                continue;
            }
            throw std::invalid_argument(std::string("PD parse: unexpected character '") + ch + "'");
        }
        return LinkDiagram(xs, unknots);
    }

    /// Trace closure of a braid word on `strands` strands; letters are
    /// +-1..+-(strands-1), positive sigma_j passing strand j over strand j+1.
    static LinkDiagram from_braid(int strands, const std::vector<int>& word) {
        if (strands < 1) throw std::invalid_argument("braid needs at least one strand");
        std::vector<std::array<int, 4>> xs;
        int next_arc = 0;
        std::vector<int> cur(static_cast<size_t>(strands));
        std::vector<int> first(static_cast<size_t>(strands));
        for (int p = 0; p < strands; ++p) cur[size_t(p)] = first[size_t(p)] = next_arc++;
        std::vector<bool> touched(static_cast<size_t>(strands), false);
        for (int letter : word) {
            int j = letter > 0 ? letter : -letter;
            if (j < 1 || j >= strands) throw std::invalid_argument("braid letter out of range");
            touched[size_t(j - 1)] = touched[size_t(j)] = true;
            int L = cur[size_t(j - 1)], R = cur[size_t(j)];
            int Lp = next_arc++, Rp = next_arc++;
            if (letter > 0)
                xs.push_back({R, Rp, Lp, L});  // under R->Lp, over L->Rp (positive)
            else
                xs.push_back({L, R, Rp, Lp});  // under L->Rp, over R->Lp (negative)
            cur[size_t(j - 1)] = Lp;
            cur[size_t(j)] = Rp;
        }
        // close up: identify cur[p] with first[p]
        std::vector<int> roots(static_cast<size_t>(next_arc));
        std::iota(roots.begin(), roots.end(), 0);
        std::function<int(int)> find = [&](int x) { return roots[size_t(x)] == x ? x : roots[size_t(x)] = find(roots[size_t(x)]); };
        int extra = 0;
        for (int p = 0; p < strands; ++p) {
            if (!touched[size_t(p)]) {
                ++extra;
                continue;
            }
            roots[size_t(find(cur[size_t(p)]))] = find(first[size_t(p)]);
        }
        for (auto& e : xs)
            for (int& a : e) a = find(a);
        return LinkDiagram(xs, extra);
    }

    /// Plat closure: `strands` must be even; cups join positions (1,2),(3,4),...
    /// at the bottom, the word acts upward, caps close the same pairs on top.
    static LinkDiagram from_plat(int strands, const std::vector<int>& word) {
        if (strands < 2 || strands % 2 != 0) throw std::invalid_argument("plat needs an even strand count");
        std::vector<std::array<int, 4>> xs;
        int next_arc = 0;
        std::vector<int> cur(static_cast<size_t>(strands));
        std::vector<bool> touched(static_cast<size_t>(strands), false);
        for (int p = 0; p < strands; p += 2) {
            cur[size_t(p)] = cur[size_t(p + 1)] = next_arc++;
        }
        for (int letter : word) {
            int j = letter > 0 ? letter : -letter;
            if (j < 1 || j >= strands) throw std::invalid_argument("plat letter out of range");
            touched[size_t(j - 1)] = touched[size_t(j)] = true;
            int L = cur[size_t(j - 1)], R = cur[size_t(j)];
            int Lp = next_arc++, Rp = next_arc++;
            if (letter > 0)
                xs.push_back({R, Rp, Lp, L});
            else
                xs.push_back({L, R, Rp, Lp});
            cur[size_t(j - 1)] = Lp;
            cur[size_t(j)] = Rp;
        }
        std::vector<int> roots(static_cast<size_t>(next_arc));
        std::iota(roots.begin(), roots.end(), 0);
        std::function<int(int)> find = [&](int x) { return roots[size_t(x)] == x ? x : roots[size_t(x)] = find(roots[size_t(x)]); };
        int extra = 0;
        for (int p = 0; p < strands; p += 2) {
            if (!touched[size_t(p)] && !touched[size_t(p + 1)] && cur[size_t(p)] == cur[size_t(p + 1)]) {
                ++extra;  // cup capped off with no crossings: free loop
                continue;
            }
            roots[size_t(find(cur[size_t(p)]))] = find(cur[size_t(p + 1)]);
        }
        for (auto& e : xs)
            for (int& a : e) a = find(a);
        return LinkDiagram(xs, extra);
    }

  private:
    LinkDiagram(const std::vector<std::array<int, 4>>& ends, int extra_unknots) : extra_unknots_(extra_unknots) {
        // normalize arc labels to 0..m-1 preserving order of first appearance
        std::map<int, int> remap;
        for (const auto& e : ends)
            for (int a : e) remap.emplace(a, 0);
        int next = 0;
        for (auto& [label, id] : remap) id = next++;
        arc_count_ = next;
        for (const auto& e : ends) {
            Crossing c;
            for (int k = 0; k < 4; ++k) c.end[size_t(k)] = remap[e[size_t(k)]];
            cross_.push_back(c);
        }
        validate();
        orient();
    }

    void validate() const {
        std::map<int, int> count;
        for (const Crossing& c : cross_)
            for (int a : c.end) ++count[a];
        for (const auto& [arc, n] : count)
            if (n != 2) throw std::invalid_argument("PD invalid: arc " + std::to_string(arc) + " has " + std::to_string(n) + " ends");
    }

    /// Trace components, orient each one, rewrite crossings so every
    /// under-passage enters at slot 0 (a record may list the understrand
    /// against the component's direction; rotating the listing by two slots,
    /// X[a,b,c,d] -> X[c,d,a,b], names the same planar crossing with the
    /// other under end first), then determine signs.
    void orient() {
        const int n = int(cross_.size());
        arc_comp_.assign(size_t(arc_count_), -1);
        comp_count_ = 0;
        if (n == 0) return;
        // endpoint = (crossing, slot) encoded as 4*ci + slot; arcs pair endpoints
        std::vector<std::vector<int>> arc_ends(static_cast<size_t>(arc_count_));
        for (int ci = 0; ci < n; ++ci)
            for (int s = 0; s < 4; ++s) arc_ends[size_t(cross_[size_t(ci)].end[size_t(s)])].push_back(4 * ci + s);
        auto other_end = [&](int ep, int arc) {
            const auto& v = arc_ends[size_t(arc)];
            return v[0] == ep ? v[1] : v[0];
        };
        std::vector<int> ep_dir(size_t(4 * n), 0);  // +1 = strand leaves the crossing *into* this end's arc
        std::vector<bool> ep_seen(size_t(4 * n), false);
        for (int start = 0; start < 4 * n; ++start) {
            if (ep_seen[size_t(start)]) continue;
            // walk the component: leave crossing through `ep`, cross the arc,
            // pass through the next crossing (slot -> slot+2 mod 4), repeat.
            std::vector<int> exits;  // endpoints used as exits, in travel order
            int ep = start;
            do {
                exits.push_back(ep);
                int ci = ep / 4, s = ep % 4;
                ep_seen[size_t(ep)] = true;
                int arc = cross_[size_t(ci)].end[size_t(s)];
                int entry = other_end(ep, arc);
                ep_seen[size_t(entry)] = true;
                ep = (entry / 4) * 4 + ((entry % 4) + 2) % 4;  // continue through
            } while (ep != start);
            // direction: make the first under-passage met in the walk run a -> c
            int dir = 1;  // -1: reverse the traversal
            for (int ex : exits) {
                int s = ex % 4;
                if (s == 2) break;         // exited at c => entered at a: keep
                if (s == 0) { dir = -1; break; }  // exited at a: reverse
            }
            for (int ex : exits) {
                ep_dir[size_t(ex)] = dir;
                int ci = ex / 4, s = ex % 4;
                int arc = cross_[size_t(ci)].end[size_t(s)];
                int entry = other_end(ex, arc);
                ep_dir[size_t(entry)] = -dir;
                if (arc_comp_[size_t(arc)] == -1) arc_comp_[size_t(arc)] = comp_count_;
            }
            ++comp_count_;
        }
        // rewrite records whose understrand runs against its component
        for (int ci = 0; ci < n; ++ci) {
            if (ep_dir[size_t(4 * ci)] != 1) continue;  // already enters at a
            Crossing& c = cross_[size_t(ci)];
            c.end = {c.end[2], c.end[3], c.end[0], c.end[1]};
            std::swap(ep_dir[size_t(4 * ci)], ep_dir[size_t(4 * ci + 2)]);
            std::swap(ep_dir[size_t(4 * ci + 1)], ep_dir[size_t(4 * ci + 3)]);
        }
        // signs: overstrand direction from ep_dir at slots 1 (b) and 3 (d)
        for (int ci = 0; ci < n; ++ci) {
            Crossing& c = cross_[size_t(ci)];
            int d_exit = ep_dir[size_t(4 * ci + 3)];  // +1 if strand leaves through d
            int b_exit = ep_dir[size_t(4 * ci + 1)];
            if (d_exit == b_exit) throw std::logic_error("overstrand direction unresolved");
            c.over_from_d = (b_exit == 1);  // leaves through b => travels d -> b
            c.sign = c.over_from_d ? 1 : -1;
        }
    }

    std::vector<Crossing> cross_;
    int arc_count_ = 0;
    int comp_count_ = 0;
    int extra_unknots_ = 0;
    std::vector<int> arc_comp_;
};

// ---------------------------------------------------------------------------
// Word presentations
// ---------------------------------------------------------------------------

/// Braid word (trace closure).  Text form: "BR[n; 1, -2, 1, -2]".
struct BraidWord {
    int strands = 1;
    std::vector<int> word;

    LinkDiagram diagram() const { return LinkDiagram::from_braid(strands, word); }
    std::string text() const {
        std::ostringstream os;
        os << "BR[" << strands << ";";
        for (size_t j = 0; j < word.size(); ++j) os << (j ? "," : " ") << word[j];
        os << "]";
        return os.str();
    }
    static BraidWord parse(const std::string& s) { return parse_generic(s, "BR"); }

    static BraidWord parse_generic(const std::string& s, const std::string& tag) {
        size_t open = s.find('[');
        if (s.rfind(tag, 0) != 0 || open == std::string::npos || s.back() != ']')
            throw std::invalid_argument("bad " + tag + " word: " + s);
        std::string body = s.substr(open + 1, s.size() - open - 2);
        size_t semi = body.find(';');
        if (semi == std::string::npos) throw std::invalid_argument("bad " + tag + " word: " + s);
        BraidWord b;
        b.strands = std::stoi(body.substr(0, semi));
        std::istringstream is(body.substr(semi + 1));
        std::string tok;
        while (std::getline(is, tok, ',')) {
            size_t p = tok.find_first_not_of(" \t");
            if (p == std::string::npos) continue;
            b.word.push_back(std::stoi(tok.substr(p)));
        }
        return b;
    }
};

/// Plat word (cup/cap closure on an even number of strands).
/// Text form: "PL[4; 2, 2, 2]".
struct PlatWord {
    int strands = 2;
    std::vector<int> word;

    LinkDiagram diagram() const { return LinkDiagram::from_plat(strands, word); }
    std::string text() const {
        std::ostringstream os;
        os << "PL[" << strands << ";";
        for (size_t j = 0; j < word.size(); ++j) os << (j ? "," : " ") << word[j];
        os << "]";
        return os.str();
    }
    static PlatWord parse(const std::string& s) {
        BraidWord b = BraidWord::parse_generic(s, "PL");
        return PlatWord{b.strands, b.word};
    }
};

/// Blackboard-framed k-cable of a braid-like word: each strand becomes a
/// bundle of k parallel strands; a crossing of bundles expands to k^2 letters
/// (each bundle strand of the right bundle walks across the left bundle).
inline std::vector<int> cable_word(const std::vector<int>& word, int k) {
    std::vector<int> out;
    for (int letter : word) {
        int j = letter > 0 ? letter : -letter;
        int sgn = letter > 0 ? 1 : -1;
        for (int t = 1; t <= k; ++t)
            for (int m = j * k + t - 1; m >= (j - 1) * k + t; --m) out.push_back(sgn * m);
    }
    return out;
}
inline BraidWord cable(const BraidWord& b, int k) { return BraidWord{b.strands * k, cable_word(b.word, k)}; }

}  // namespace skein
