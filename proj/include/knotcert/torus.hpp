#pragma once

// (2,n) torus knot/link diagrams (closure of the 2-strand positive braid
// with n crossings) and closed-form Jones polynomials for the family.

#include <vector>

#include "knotcert/diagram.hpp"
#include "knotcert/laurent.hpp"

namespace knotcert {

// Braid closure with n positive crossings: crossing j reads
// X[l_{j-1}, r_{j-1}, r_j, l_j] over the two strand levels l, r (indices mod
// n). Arcs are renumbered sequentially along each component; every crossing
// comes out positive, so the writhe is n. One component when n is odd, two
// when n is even.
inline Diagram torus_diagram(int n) {
    if (n < 1) throw DiagramError("torus_diagram: n must be >= 1");
    // abstract arc ids: l_j = 2j, r_j = 2j+1
    auto l = [n](int j) { return 2 * (((j % n) + n) % n); };
    auto r = [n](int j) { return 2 * (((j % n) + n) % n) + 1; };
    // successor along the strands: l_j -> r_{j+1} (under), r_j -> l_{j+1} (over)
    std::vector<int> label(2 * n, 0);
    int next = 1;
    std::vector<bool> seen(2 * n, false);
    // components start at l_0 and, when n is even, l_1
    for (int start : {0, 1}) {
        if (seen[l(start)]) continue;
        int j = start;
        bool on_l = true;
        while (!seen[on_l ? l(j) : r(j)]) {
            int id = on_l ? l(j) : r(j);
            seen[id] = true;
            label[id] = next++;
            on_l = !on_l;
            ++j;
        }
    }
    std::vector<Diagram::Crossing> cs;
    for (int j = 0; j < n; ++j)
        cs.push_back({label[l(j - 1)], label[r(j - 1)], label[r(j)], label[l(j)]});
    return Diagram(std::move(cs), 0);
}

// J(K(2,2k+1)) = t^k (1 - t^3 - t^{2k+2} + t^{2k+3}) / (1 - t^2), exactly.
inline Laurent jones_torus_knot_closed(int k) {
    if (k < 0) throw std::domain_error("jones_torus_knot_closed: k must be >= 0");
    auto t = [](BigInt c, std::int64_t quarters) {
        return Laurent::monomial(Var::t, std::move(c), quarters);
    };
    Laurent num = t(1, 0) + t(-1, 12) + t(-1, 4 * (2 * k + 2)) + t(1, 4 * (2 * k + 3));
    Laurent den = t(1, 0) + t(-1, 8);
    return t(1, 4 * k) * num.div_exact(den);
}

// J(L(2,2m)) = -t^{(2m-1)/2} - t^{(2m+3)/2} (1 + t^{2m-1}) / (1 + t), exactly.
inline Laurent jones_torus_link_closed(int m) {
    if (m < 1) throw std::domain_error("jones_torus_link_closed: m must be >= 1");
    auto t = [](BigInt c, std::int64_t quarters) {
        return Laurent::monomial(Var::t, std::move(c), quarters);
    };
    Laurent num = t(1, 0) + t(1, 4 * (2 * m - 1));
    Laurent den = t(1, 0) + t(1, 4);
    return t(-1, 2 * (2 * m - 1)) + t(-1, 2 * (2 * m + 3)) * num.div_exact(den);
}

}  // namespace knotcert
