#pragma once

// Diagram-building operations layered on the surgery machinery: crossing
// smoothings, component reversal, connected sum, and the Reidemeister-move
// generators used to build invariance-test corpora.

#include <array>

#include "knotcert/diagram.hpp"
#include "knotcert/surgery.hpp"

namespace knotcert {

// Replace crossing i by its A- or B-smoothing. Orientations of strands
// through the smoothed crossing are re-derived (a smoothing need not respect
// the original orientation).
inline Diagram smooth_crossing(const Diagram& d, std::size_t i, bool a_smoothing) {
    Surgery s(d);
    s.smooth(i, a_smoothing);
    return s.build();
}

// Reverse the orientation of one crossing-traversing component; arcs are
// renumbered to restore sequential numbering.
inline Diagram reverse_component(const Diagram& d, int component) {
    if (component < 0 || component >= static_cast<int>(d.component_count()))
        throw DiagramError("reverse_component: unknown component");
    const auto& arcs = d.components()[component];
    if (arcs.empty()) return d;  // a free loop has no orientation data
    Surgery s(d);
    for (int a : arcs) s.require_reversed(s.piece_for_arc(a));
    for (const auto& comp : d.components())
        if (!comp.empty() && comp.front() != arcs.front())
            for (int a : comp) s.require_forward(s.piece_for_arc(a));
    return s.build();
}

// Cut arcs a1 (in d1) and a2 (in d2) and cross-join them respecting
// orientation; merges the two components into one.
inline Diagram connected_sum(const Diagram& d1, int a1, const Diagram& d2, int a2) {
    // a crossingless summand has no arcs to cut; it is the neutral element
    if (d1.crossing_count() == 0) return d2;
    if (d2.crossing_count() == 0) return d1;
    if (!d1.has_arc(a1)) throw DiagramError("connected_sum: arc not found in first diagram");
    if (!d2.has_arc(a2)) throw DiagramError("connected_sum: arc not found in second diagram");
    int shift = 0;
    for (const auto& x : d1.crossings())
        for (int v : x) shift = std::max(shift, v);
    Diagram u = disjoint_union(d1, d2);
    Surgery s(u);
    auto [f1, b1] = s.cut(a1);
    auto [f2, b2] = s.cut(a2 + shift);
    s.join(f1, b2);  // head of a1's first half to tail of a2's second half
    s.join(f2, b1);
    for (int p : {f1, b1, f2, b2}) s.require_forward(p);
    return s.build();
}

// Add a kink crossing of the requested sign on arc a. On a crossingless
// diagram (where no arcs exist) the kink is put on one free loop instead.
inline Diagram reidemeister_r1(const Diagram& d, int a, int chirality) {
    if (chirality != +1 && chirality != -1) throw DiagramError("r1: chirality must be +1/-1");
    if (d.crossing_count() == 0) {
        Diagram kink({chirality > 0 ? Diagram::Crossing{1, 2, 2, 1}
                                    : Diagram::Crossing{2, 2, 1, 1}},
                     d.free_loops() - 1);
        return kink;
    }
    if (!d.has_arc(a)) throw DiagramError("r1: arc not found");
    Surgery s(d);
    auto [f, b] = s.cut(a);
    int loop = s.new_piece();
    if (chirality > 0)
        s.add_crossing({f, loop, loop, b});
    else
        s.add_crossing({loop, loop, b, f});
    s.require_forward(f);
    s.require_forward(b);
    return s.build();
}

// Slide arc a1 over arc a2, adding two canceling crossings. The caller is
// responsible for the two arcs being co-facial if planarity matters.
inline Diagram reidemeister_r2(const Diagram& d, int a1, int a2) {
    if (a1 == a2) throw DiagramError("r2: arcs must differ");
    if (!d.has_arc(a1) || !d.has_arc(a2)) throw DiagramError("r2: arc not found");
    Surgery s(d);
    auto [x1, xm, x2] = s.cut_twice(a1);
    auto [y1, ym, y2] = s.cut_twice(a2);
    s.add_crossing({x1, y1, xm, ym});
    s.add_crossing({xm, y2, x2, ym});
    // middle pieces have no original attachments and follow the traversal
    for (int p : {x1, x2, y1, y2}) s.require_forward(p);
    return s.build();
}

}  // namespace knotcert
