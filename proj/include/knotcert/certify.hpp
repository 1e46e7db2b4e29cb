#pragma once

// The non-equivalence decision procedure: the Jones identity relating a
// marked diagram to its saddle and crossing moves,
//
//   J(K') = -t^{1/2} J(L) + (-1)^dw t^{(3 dw + 1)/4} J(K),   dw = w(D_K') - w(D_K),
//
// and the two one-directional separation tests built on it. Equality of the
// two sides proves nothing; inequality certifies the inputs distinct.

#include <stdexcept>
#include <string>

#include "knotcert/bracket.hpp"
#include "knotcert/diagram.hpp"
#include "knotcert/laurent.hpp"
#include "knotcert/moves.hpp"
#include "knotcert/torus.hpp"

namespace knotcert {

struct Verdict {
    enum class Outcome { Distinguished, Inconclusive };
    Outcome outcome;
    Laurent lhs;
    Laurent rhs;
    int delta_w;
    // how the "K is trivial" hypothesis was checked, when applicable
    std::string triviality_check = "not_applicable";
};

inline Laurent rhs_jones1(const Laurent& j_l, const Laurent& j_k, int delta_w) {
    Laurent a = Laurent::monomial(Var::t, -1, 2) * j_l;
    Laurent b = Laurent::monomial(Var::t, (delta_w % 2 == 0) ? 1 : -1, 3 * delta_w + 1) * j_k;
    return a + b;
}

struct IdentityReport {
    bool holds;
    Laurent lhs;  // J of the crossing-move result
    Laurent rhs;
    int delta_w;
};

inline IdentityReport check_jones1_identity(const MarkedDiagram& md,
                                            const BracketOptions& opt = {}) {
    Diagram d_l = saddle_move(md);
    Diagram d_kp = crossing_move(md);
    int delta_w = d_kp.writhe() - md.diagram.writhe();
    Laurent lhs = jones(d_kp, opt);
    Laurent rhs = rhs_jones1(jones(d_l, opt), jones(md.diagram, opt), delta_w);
    return {lhs == rhs, std::move(lhs), std::move(rhs), delta_w};
}

inline Verdict certify_distinct(const MarkedDiagram& x, const MarkedDiagram& y,
                                const BracketOptions& opt = {}) {
    Diagram x_kp = crossing_move(x);
    int delta_w = x_kp.writhe() - x.diagram.writhe();
    Laurent lhs = jones(x_kp, opt);
    Laurent rhs = rhs_jones1(jones(saddle_move(y), opt), jones(x.diagram, opt), delta_w);
    Verdict v{lhs != rhs ? Verdict::Outcome::Distinguished : Verdict::Outcome::Inconclusive,
              std::move(lhs), std::move(rhs), delta_w};
    return v;
}

// Corollary form: the comparison link is the (2,2m) torus link, whose Jones
// polynomial is known in closed form. Requires J(x.diagram) = 1, a necessary
// proxy for "the link of x is a trivial knot".
inline Verdict certify_distinct_torus(const MarkedDiagram& x, int m,
                                      const BracketOptions& opt = {}) {
    if (m < 1) throw std::domain_error("certify_distinct_torus: m must be >= 1");
    Laurent j_k = jones(x.diagram, opt);
    if (j_k != Laurent::one(Var::t))
        throw DiagramError(
            "certify_distinct_torus: J(diagram) != 1, triviality proxy check failed");
    Diagram x_kp = crossing_move(x);
    int delta_w = x_kp.writhe() - x.diagram.writhe();
    Laurent lhs = jones(x_kp, opt);
    // t^m + t^{m+2} (1 + t^{2m-1})/(1 + t) + (-1)^dw t^{(3 dw + 1)/4}
    Laurent rhs = rhs_jones1(jones_torus_link_closed(m), j_k, delta_w);
    Verdict v{lhs != rhs ? Verdict::Outcome::Distinguished : Verdict::Outcome::Inconclusive,
              std::move(lhs), std::move(rhs), delta_w};
    v.triviality_check = "jones_only";
    return v;
}

}  // namespace knotcert
