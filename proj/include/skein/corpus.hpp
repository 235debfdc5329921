#pragma once
/// Built-in links: frozen planar-diagram codes, with braid and plat
/// presentations of the same links, for the small knots and torus links used
/// throughout the tests and the command-line tool.
///
/// Every entry is validated by the test-suite: the PD code's Jones polynomial
/// is recomputed with the brute-force state-sum oracle and compared against
/// the braid and plat presentations, component counts, writhes, and (for the
/// knots) the published Jones tables.

#include <algorithm>
#include <cctype>
#include <string>
#include <vector>

#include "skein/linkdiag.hpp"

namespace skein {

struct CorpusEntry {
    const char* name;       // display name, e.g. "6_2" or "T(2,4)"
    const char* pd;         // frozen PD code (the primary stored form)
    const char* braid;      // braid word tracing to the same link
    const char* plat;       // 4-strand plat presentation (all entries are 2-bridge)
    int components;         // number of link components
    long writhe;            // writhe of the frozen PD diagram
    bool mirror_of_table;   // frozen diagram is the mirror of the commonly
                            // tabulated chirality (knots only)
};

inline const std::vector<CorpusEntry>& corpus() {
    static const std::vector<CorpusEntry> entries = {
        {"unknot", "PD[U]", "BR[1;]", "PL[2;]", 1, 0, false},
        {"3_1", "PD[X[2,4,3,1], X[4,6,5,3], X[6,2,1,5]]", "BR[2; 1,1,1]", "PL[4; 2,2,2]", 1, 3, true},
        {"4_1", "PD[X[2,5,4,1], X[5,3,7,6], X[6,8,1,4], X[8,7,3,2]]", "BR[3; 1,-2,1,-2]", "PL[4; 2,2,-1,2]", 1, 0,
         false},
        {"5_1", "PD[X[2,4,3,1], X[4,6,5,3], X[6,8,7,5], X[8,10,9,7], X[10,2,1,9]]", "BR[2; 1,1,1,1,1]",
         "PL[4; 2,2,2,2,2]", 1, 5, true},
        {"5_2", "PD[X[2,5,4,1], X[5,7,6,4], X[7,9,8,6], X[3,11,10,9], X[8,10,12,1], X[11,3,2,12]]",
         "BR[3; 1,1,1,2,-1,2]", "PL[4; 2,2,-1,-1,2]", 1, 4, true},
        {"6_1", "PD[X[2,6,5,1], X[6,8,7,5], X[3,10,9,8], X[7,9,11,1], X[10,4,13,12], X[12,14,2,11], X[14,13,4,3]]",
         "BR[4; 1,1,2,-1,-3,2,-3]", "PL[4; 2,2,-1,-1,-1,2]", 1, 1, true},
        {"6_2", "PD[X[2,5,4,1], X[5,7,6,4], X[7,9,8,6], X[9,3,11,10], X[10,12,1,8], X[12,11,3,2]]",
         "BR[3; 1,1,1,-2,1,-2]", "PL[4; 2,2,2,-1,2,2]", 1, 2, true},
        {"6_3", "PD[X[2,5,4,1], X[5,7,6,4], X[7,3,9,8], X[8,10,1,6], X[10,9,12,11], X[11,12,3,2]]",
         "BR[3; 1,1,-2,1,-2,-2]", "PL[4; 2,2,-1,2,-1,2]", 1, 0, false},
        {"hopf", "PD[X[2,4,3,1], X[4,2,1,3]]", "BR[2; 1,1]", "PL[4; 2,2]", 2, 2, false},
        {"T(2,4)", "PD[X[2,4,3,1], X[4,6,5,3], X[6,8,7,5], X[8,2,1,7]]", "BR[2; 1,1,1,1]", "PL[4; 2,2,2,2]", 2, 4,
         false},
        {"T(2,6)", "PD[X[2,4,3,1], X[4,6,5,3], X[6,8,7,5], X[8,10,9,7], X[10,12,11,9], X[12,2,1,11]]",
         "BR[2; 1,1,1,1,1,1]", "PL[4; 2,2,2,2,2,2]", 2, 6, false},
        {"T(2,8)",
         "PD[X[2,4,3,1], X[4,6,5,3], X[6,8,7,5], X[8,10,9,7], X[10,12,11,9], X[12,14,13,11], X[14,16,15,13], "
         "X[16,2,1,15]]",
         "BR[2; 1,1,1,1,1,1,1,1]", "PL[4; 2,2,2,2,2,2,2,2]", 2, 8, false},
    };
    return entries;
}

/// Case-insensitive lookup by display name; returns nullptr when absent.
inline const CorpusEntry* corpus_find(const std::string& name) {
    auto lower = [](std::string s) {
        std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return char(std::tolower(c)); });
        return s;
    };
    std::string want = lower(name);
    for (const CorpusEntry& e : corpus())
        if (lower(e.name) == want) return &e;
    return nullptr;
}

inline LinkDiagram corpus_diagram(const CorpusEntry& e) { return LinkDiagram::parse_pd(e.pd); }

/// Knot entries only (single component), in corpus order.
inline std::vector<const CorpusEntry*> corpus_knots() {
    std::vector<const CorpusEntry*> out;
    for (const CorpusEntry& e : corpus())
        if (e.components == 1) out.push_back(&e);
    return out;
}

}  // namespace skein
