// Relations data for the D_2n planar algebra.
//
// The D_2n planar algebra (n >= 2) is generated by a single box S with
// 4n-4 legs, one of which is marked, over the scalar ring Q(zeta_{8n-4})
// extended by a fourth root of unity.  Writing q = exp(2 pi i / (8n-4))
// and m = 2n-2, the defining relations are:
//
//   (1) circle:    a closed loop equals [2]_q = q + q^{-1} = 2 cos(2pi/(8n-4)).
//   (2) rotation:  rotating the marked leg of S one click counterclockwise
//                  multiplies a closed diagram's value by i (a primitive
//                  fourth root of unity).  A full revolution gives
//                  i^{4n-4} = 1, so the relation is consistent.
//   (3) capping:   joining two cyclically adjacent legs of S by an arc
//                  gives zero (S is uncappable).
//   (4) two-S:     two S boxes stacked so that m = 2n-2 parallel strands
//                  join the back side of the lower box to the front side
//                  of the upper box, with both marked legs at the front-left
//                  corner, equal the Jones-Wenzl projector JW(2n-2) on the
//                  remaining m + m legs.
//
// A strand may be isotoped across an S box: passing it above the box is
// free, passing it below multiplies the value by -1 per strand passed.
//
// The relations are stored below in a small machine-readable text format
// (one relation per line, '#' starts a comment) and parsed at runtime, so
// the scalars used by the evaluator are exactly the ones written here.

#pragma once

#include <sstream>
#include <stdexcept>
#include <string>

namespace skein {

/// Machine-readable relations table.  Grammar (one entry per line):
///   circle        = qint(2)
///   rotate_ccw(S) = i^<integer>
///   cap(S)        = 0
///   two_S(join=2n-2, aligned_marks) = JW(2n-2)
///   pass_over(S)  = <+1|-1>
///   pass_under(S) = <+1|-1>
inline constexpr const char* kD2nRelationsText = R"(
# D_2n planar algebra relations (q = zeta_{8n-4}, i = zeta_4).
circle        = qint(2)
rotate_ccw(S) = i^1
cap(S)        = 0
two_S(join=2n-2, aligned_marks) = JW(2n-2)
pass_over(S)  = +1
pass_under(S) = -1
)";

/// Parsed relation scalars used by the evaluator.
struct D2nRelations {
    bool circle_is_quantum_two = false;  // circle = [2]_q
    long rotate_ccw_ipow = 0;            // one ccw click of the mark -> i^this
    bool cap_kills = false;              // adjacent-leg cap on S -> 0
    bool two_s_gives_jw = false;         // aligned m-strand join of two S -> JW(2n-2)
    int pass_over_sign = 0;              // strand isotoped above an S box
    int pass_under_sign = 0;             // strand isotoped below an S box
};

/// Parse kD2nRelationsText (or a substitute, for tests).  Throws
/// std::invalid_argument on any malformed or missing entry.
inline D2nRelations load_d2n_relations(const std::string& text = kD2nRelationsText) {
    D2nRelations rel;
    bool saw_circle = false, saw_rot = false, saw_cap = false, saw_two = false, saw_over = false,
         saw_under = false;
    std::istringstream in(text);
    std::string line;
    auto strip = [](std::string s) {
        size_t a = s.find_first_not_of(" \t");
        if (a == std::string::npos) return std::string();
        size_t b = s.find_last_not_of(" \t");
        return s.substr(a, b - a + 1);
    };
    auto parse_sign = [](const std::string& s) {
        if (s == "+1") return 1;
        if (s == "-1") return -1;
        throw std::invalid_argument("d2n relations: expected +1 or -1, got '" + s + "'");
    };
    while (std::getline(in, line)) {
        size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = strip(line);
        if (line.empty()) continue;
        size_t eq = line.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("d2n relations: missing '=': " + line);
        std::string lhs = strip(line.substr(0, eq));
        std::string rhs = strip(line.substr(eq + 1));
        if (lhs == "circle") {
            if (rhs != "qint(2)") throw std::invalid_argument("d2n relations: unsupported circle value");
            rel.circle_is_quantum_two = true;
            saw_circle = true;
        } else if (lhs == "rotate_ccw(S)") {
            if (rhs.rfind("i^", 0) != 0) throw std::invalid_argument("d2n relations: rotation must be i^<k>");
            rel.rotate_ccw_ipow = std::stol(rhs.substr(2));
            saw_rot = true;
        } else if (lhs == "cap(S)") {
            if (rhs != "0") throw std::invalid_argument("d2n relations: cap value must be 0");
            rel.cap_kills = true;
            saw_cap = true;
        } else if (lhs == "two_S(join=2n-2, aligned_marks)") {
            if (rhs != "JW(2n-2)") throw std::invalid_argument("d2n relations: two-S right-hand side must be JW(2n-2)");
            rel.two_s_gives_jw = true;
            saw_two = true;
        } else if (lhs == "pass_over(S)") {
            rel.pass_over_sign = parse_sign(rhs);
            saw_over = true;
        } else if (lhs == "pass_under(S)") {
            rel.pass_under_sign = parse_sign(rhs);
            saw_under = true;
        } else {
            throw std::invalid_argument("d2n relations: unknown relation '" + lhs + "'");
        }
    }
    if (!(saw_circle && saw_rot && saw_cap && saw_two && saw_over && saw_under))
        throw std::invalid_argument("d2n relations: incomplete table");
    return rel;
}

}  // namespace skein
