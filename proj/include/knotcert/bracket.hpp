#pragma once

// Kauffman bracket and Jones polynomial.
//
// Two independent algorithms compute the bracket: an iterative state sum
// over all 2^n smoothing assignments (the production path, parallelizable
// over disjoint chunks of the state space), and a recursive skein resolution
// kept as a test oracle. At a crossing X[a,b,c,d] the A-smoothing joins the
// endpoint pairs (a,d),(b,c) and the B-smoothing joins (a,b),(c,d); each
// state contributes A^(#A - #B) * (-A^2 - A^-2)^(loops - 1).

#include <cstdint>
#include <map>
#include <stdexcept>
#include <thread>
#include <vector>

#include "knotcert/diagram.hpp"
#include "knotcert/laurent.hpp"

namespace knotcert {

class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct BracketOptions {
    int cap = 24;
    int threads = 1;
};

namespace detail {

// crossings as indices into a dense arc array
struct DenseDiagram {
    std::vector<std::array<int, 4>> crossings;
    int arc_count = 0;
    int free_loops = 0;
};

inline DenseDiagram densify(const Diagram& d) {
    DenseDiagram dd;
    dd.free_loops = d.free_loops();
    std::map<int, int> index;
    for (const auto& x : d.crossings()) {
        std::array<int, 4> c{};
        for (int s = 0; s < 4; ++s) {
            auto [it, fresh] = index.emplace(x[s], dd.arc_count);
            if (fresh) ++dd.arc_count;
            c[s] = it->second;
        }
        dd.crossings.push_back(c);
    }
    return dd;
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    // returns true when the union closes a loop
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return true;
        parent[a] = b;
        return false;
    }
};

// tally[#A-smoothings][#loops] over a range of states
using Tally = std::map<std::pair<int, int>, BigInt>;

inline void tally_states(const DenseDiagram& dd, std::uint64_t begin, std::uint64_t end,
                         Tally& tally) {
    const int n = static_cast<int>(dd.crossings.size());
    for (std::uint64_t state = begin; state < end; ++state) {
        UnionFind uf(dd.arc_count);
        int loops = 0;
        int a_count = 0;
        for (int i = 0; i < n; ++i) {
            const auto& x = dd.crossings[i];
            bool a_smoothing = ((state >> i) & 1) == 0;
            if (a_smoothing) {
                ++a_count;
                loops += uf.unite(x[0], x[3]);
                loops += uf.unite(x[1], x[2]);
            } else {
                loops += uf.unite(x[0], x[1]);
                loops += uf.unite(x[2], x[3]);
            }
        }
        ++tally[{a_count, loops}];
    }
}

inline Laurent delta_poly() {
    // -A^2 - A^-2, with exponents stored in quarter-units
    Laurent d = Laurent::monomial(Var::A, -1, 8);
    d += Laurent::monomial(Var::A, -1, -8);
    return d;
}

}  // namespace detail

inline Laurent kauffman_bracket(const Diagram& d, const BracketOptions& opt = {}) {
    const int n = static_cast<int>(d.crossing_count());
    if (n > opt.cap)
        throw CapExceeded("crossing count " + std::to_string(n) + " exceeds cap " +
                          std::to_string(opt.cap));
    detail::DenseDiagram dd = detail::densify(d);
    const std::uint64_t states = std::uint64_t{1} << n;

    detail::Tally tally;
    int threads = opt.threads;
    if (threads < 1) threads = 1;
    if (static_cast<std::uint64_t>(threads) > states) threads = static_cast<int>(states);
    if (threads == 1) {
        detail::tally_states(dd, 0, states, tally);
    } else {
        std::vector<detail::Tally> partial(threads);
        std::vector<std::thread> pool;
        const std::uint64_t chunk = (states + threads - 1) / threads;
        for (int t = 0; t < threads; ++t) {
            std::uint64_t b = chunk * t;
            std::uint64_t e = std::min(states, b + chunk);
            pool.emplace_back(detail::tally_states, std::cref(dd), b, e,
                              std::ref(partial[t]));
        }
        for (auto& th : pool) th.join();
        for (const auto& p : partial)
            for (const auto& [key, c] : p) tally[key] += c;
    }

    // assemble: sum tally * A^(2a - n) * delta^(loops + free_loops - 1)
    const Laurent delta = detail::delta_poly();
    std::vector<Laurent> delta_pow{Laurent::one(Var::A)};  // delta_pow[k] = delta^k
    Laurent result(Var::A);
    for (const auto& [key, count] : tally) {
        auto [a_count, loops] = key;
        int k = loops + dd.free_loops - 1;
        while (static_cast<int>(delta_pow.size()) <= k)
            delta_pow.push_back(delta_pow.back() * delta);
        // exponent of A is 4*(a - b) = 4*(2a - n) quarter-units
        result += Laurent::monomial(Var::A, count, 4 * (2 * a_count - n)) * delta_pow[k];
    }
    return result;
}

// Independent oracle: resolve the first crossing by the skein relation and
// recurse; base case counts loops among the joined arcs.
inline Laurent kauffman_bracket_oracle(const Diagram& d, int cap = 12) {
    const int n = static_cast<int>(d.crossing_count());
    if (n > cap)
        throw CapExceeded("crossing count " + std::to_string(n) + " exceeds oracle cap " +
                          std::to_string(cap));
    detail::DenseDiagram dd = detail::densify(d);

    struct Rec {
        const detail::DenseDiagram& dd;
        std::vector<std::pair<int, int>> joins;
        Laurent run(std::size_t i) {
            if (i == dd.crossings.size()) {
                detail::UnionFind uf(dd.arc_count);
                int loops = 0;
                for (auto [a, b] : joins) loops += uf.unite(a, b);
                Laurent delta = detail::delta_poly();
                Laurent r = Laurent::one(Var::A);
                for (int k = 0; k < loops + dd.free_loops - 1; ++k) r *= delta;
                return r;
            }
            const auto& x = dd.crossings[i];
            joins.push_back({x[0], x[3]});
            joins.push_back({x[1], x[2]});
            Laurent a_side = run(i + 1);
            joins.resize(joins.size() - 2);
            joins.push_back({x[0], x[1]});
            joins.push_back({x[2], x[3]});
            Laurent b_side = run(i + 1);
            joins.resize(joins.size() - 2);
            return Laurent::monomial(Var::A, 1, 4) * a_side +
                   Laurent::monomial(Var::A, 1, -4) * b_side;
        }
    };
    Rec rec{dd, {}};
    return rec.run(0);
}

// J(L) = (-A^3)^(-writhe) * <D>, then A = t^(-1/4).
inline Laurent jones(const Diagram& d, const BracketOptions& opt = {}) {
    Laurent b = kauffman_bracket(d, opt);
    return (neg_cube_A_pow(-d.writhe()) * b).substitute_A_to_t();
}

}  // namespace knotcert
