#pragma once

// Shared test corpus: named fixtures, frozen expected values, and seeded
// random generators for diagrams, marked sites, and polynomials.

#include <random>
#include <vector>

#include "knotcert/knotcert.hpp"

namespace corpus {

using namespace knotcert;

inline Laurent t_poly(std::initializer_list<std::pair<std::int64_t, long>> terms) {
    Laurent p(Var::t);
    for (auto [e, c] : terms) p += Laurent::monomial(Var::t, c, e);
    return p;
}

inline Laurent a_poly(std::initializer_list<std::pair<std::int64_t, long>> terms) {
    Laurent p(Var::A);
    for (auto [e, c] : terms) p += Laurent::monomial(Var::A, c, e);
    return p;
}

inline Diagram trefoil() { return Diagram::parse_pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]"); }
inline Diagram hopf() { return Diagram::parse_pd("X[3,2,4,1] X[1,4,2,3]"); }

// marked 0-crossing unknot, realized as the two-crossing split unknot
inline MarkedDiagram x0() {
    return MarkedDiagram{Diagram::parse_pd("X[3,1,4,2] X[4,3,1,2]"), 1, 3, 'A'};
}

// the marked trivial-knot diagram whose saddle is the Hopf link and whose
// crossing move is the trefoil
inline MarkedDiagram y1() {
    return MarkedDiagram{Diagram::parse_pd("X[1,3,2,2] X[3,1,4,4]"), 2, 4, 'A'};
}

// exponents in quarter-units
inline Laurent jones_trefoil() { return t_poly({{4, 1}, {12, 1}, {16, -1}}); }      // t+t^3-t^4
inline Laurent jones_hopf() { return t_poly({{2, -1}, {10, -1}}); }                 // -t^1/2-t^5/2
inline Laurent jones_unlink2() { return t_poly({{-2, -1}, {2, -1}}); }              // -t^-1/2-t^1/2
inline Laurent bracket_trefoil() { return a_poly({{-28, 1}, {-12, -1}, {20, -1}}); }
inline Laurent bracket_hopf() { return a_poly({{-16, -1}, {16, -1}}); }

inline std::vector<Diagram> small_corpus() {
    std::vector<Diagram> c;
    c.push_back(Diagram::unknot());
    c.push_back(trefoil());
    c.push_back(hopf());
    c.push_back(x0().diagram);
    c.push_back(y1().diagram);
    for (int n = 1; n <= 8; ++n) c.push_back(torus_diagram(n));
    c.push_back(connected_sum(trefoil(), 1, trefoil(), 1));
    c.push_back(disjoint_union(Diagram::unknot(), trefoil()));
    return c;
}

inline std::vector<int> all_arcs(const Diagram& d) {
    std::vector<int> arcs;
    for (const auto& comp : d.components())
        for (int a : comp) arcs.push_back(a);
    return arcs;
}

// random small diagram grown from a seed diagram by r1/r2 moves
inline Diagram random_diagram(std::mt19937& rng, int max_crossings) {
    Diagram d = torus_diagram(1 + static_cast<int>(rng() % 3));
    while (static_cast<int>(d.crossing_count()) < max_crossings) {
        std::vector<int> arcs = all_arcs(d);
        if (arcs.empty()) break;
        int headroom = max_crossings - static_cast<int>(d.crossing_count());
        bool use_r2 = headroom >= 2 && arcs.size() >= 2 && rng() % 2 == 0;
        if (use_r2) {
            int a1 = arcs[rng() % arcs.size()];
            int a2 = arcs[rng() % arcs.size()];
            if (a1 == a2) continue;
            d = reidemeister_r2(d, a1, a2);
        } else {
            d = reidemeister_r1(d, arcs[rng() % arcs.size()], rng() % 2 == 0 ? +1 : -1);
        }
    }
    return d;
}

// random marked diagram with a same-component site
inline MarkedDiagram random_marked(std::mt19937& rng, int max_crossings) {
    for (;;) {
        Diagram d = random_diagram(rng, max_crossings);
        std::vector<const std::vector<int>*> multi;
        for (const auto& comp : d.components())
            if (comp.size() >= 2) multi.push_back(&comp);
        if (multi.empty()) continue;
        const auto& comp = *multi[rng() % multi.size()];
        int s1 = comp[rng() % comp.size()];
        int s2 = comp[rng() % comp.size()];
        if (s1 == s2) continue;
        return MarkedDiagram{d, s1, s2, 'A'};
    }
}

inline Laurent random_poly(std::mt19937& rng, Var v) {
    Laurent p(v);
    int terms = 1 + static_cast<int>(rng() % 5);
    for (int i = 0; i < terms; ++i) {
        std::int64_t e = static_cast<std::int64_t>(rng() % 41) - 20;
        long c = static_cast<long>(rng() % 19) - 9;
        p += Laurent::monomial(v, c, e);
    }
    return p;
}

}  // namespace corpus
