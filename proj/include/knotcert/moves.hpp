#pragma once

// Marked bridge sites and the two diagram rewrites derived from them: the
// saddle move (reconnect the two strands) and the crossing move (insert one
// positive crossing joining them).
//
// A site cuts arcs s1 and s2 into front/back halves (f1,b1), (f2,b2). The
// side-"A" reconnection pairs the cut ends across the site: (f1,b2) and
// (b1,f2). When s1 and s2 lie on one component this splits it in two and the
// sub-strand from s1's cut forward to s2's cut runs against its old
// orientation, so that stretch is reversed (the site strands are
// anti-parallel as drawn). The side-"B" pairing would weld head to head and
// tail to tail; no orientation of the result extends the given one, which is
// the parallel-strands configuration, so such sites are rejected.
//
// The crossing move inserts X[b1, f1, b2, f2] with the same reversal. That
// tuple is forced by three requirements: the crossing's sign is +1, its
// A-smoothing is exactly the saddle reconnection, and its B-smoothing
// restores the input diagram. Those also force s1 and s2 to share a
// component, and give writhe(crossing) = writhe(saddle) + 1 structurally.

#include <string>
#include <vector>

#include "knotcert/diagram.hpp"
#include "knotcert/surgery.hpp"

namespace knotcert {

struct MarkedDiagram {
    Diagram diagram;
    int s1 = 0;
    int s2 = 0;
    char side = 'A';
};

struct SiteDescriptor {
    int s1, s2;
    bool same_component;
    // arcs strictly between s1 and s2 along the orientation (same-component
    // sites only); these reverse under either move
    std::vector<int> between;
};

inline SiteDescriptor validate_site(const MarkedDiagram& md) {
    if (md.s1 == md.s2) throw DiagramError("site: s1 = s2");
    if (!md.diagram.has_arc(md.s1))
        throw DiagramError("site: arc " + std::to_string(md.s1) + " not found");
    if (!md.diagram.has_arc(md.s2))
        throw DiagramError("site: arc " + std::to_string(md.s2) + " not found");
    if (md.side != 'A') {
        if (md.side == 'B')
            throw DiagramError(
                "site: parallel strands (side-B reconnection reverses a sub-arc "
                "against its component orientation)");
        throw DiagramError("site: side flag must be \"A\" or \"B\"");
    }
    SiteDescriptor sd;
    sd.s1 = md.s1;
    sd.s2 = md.s2;
    sd.same_component = md.diagram.component_of(md.s1) == md.diagram.component_of(md.s2);
    if (sd.same_component)
        for (int a = md.diagram.successor(md.s1); a != md.s2; a = md.diagram.successor(a))
            sd.between.push_back(a);
    return sd;
}

namespace detail {

struct SitePieces {
    Surgery surgery;
    int f1, b1, f2, b2;
};

inline SitePieces open_site(const MarkedDiagram& md, const SiteDescriptor& sd) {
    SitePieces sp{Surgery(md.diagram), 0, 0, 0, 0};
    auto [f1, b1] = sp.surgery.cut(sd.s1);
    auto [f2, b2] = sp.surgery.cut(sd.s2);
    sp.f1 = f1;
    sp.b1 = b1;
    sp.f2 = f2;
    sp.b2 = b2;
    if (sd.same_component) {
        // the stretch from s1's cut forward to s2's cut runs backwards
        sp.surgery.require_forward(f1);
        sp.surgery.require_reversed(b1);
        for (int a : sd.between) sp.surgery.require_reversed(sp.surgery.piece_for_arc(a));
        sp.surgery.require_reversed(f2);
        sp.surgery.require_forward(b2);
    } else {
        sp.surgery.require_forward(f1);
        sp.surgery.require_forward(b1);
        sp.surgery.require_forward(f2);
        sp.surgery.require_forward(b2);
    }
    return sp;
}

}  // namespace detail

inline Diagram saddle_move(const MarkedDiagram& md) {
    SiteDescriptor sd = validate_site(md);
    detail::SitePieces sp = detail::open_site(md, sd);
    sp.surgery.join(sp.f1, sp.b2);
    sp.surgery.join(sp.b1, sp.f2);
    return sp.surgery.build();
}

inline Diagram crossing_move(const MarkedDiagram& md) {
    SiteDescriptor sd = validate_site(md);
    if (!sd.same_component)
        throw DiagramError(
            "crossing move: site arcs lie on different components (no positive "
            "crossing has the saddle as its A-smoothing there)");
    detail::SitePieces sp = detail::open_site(md, sd);
    sp.surgery.add_crossing({sp.b1, sp.f1, sp.b2, sp.f2});
    return sp.surgery.build();
}

}  // namespace knotcert
