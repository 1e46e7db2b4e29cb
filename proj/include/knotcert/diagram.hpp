#pragma once

// Oriented planar link diagrams in PD-code form.
//
// A crossing X[a,b,c,d] lists four arc identifiers counterclockwise starting
// from the incoming under-strand: the under-strand enters at a and exits at
// c; the over-strand occupies b and d. Orientation is implicit in the arc
// numbering, which must be sequential along each oriented component. The
// over-strand runs b -> d exactly when d is the successor of b; a crossing
// has sign +1 exactly in that case.
//
// Planarity is not verified; PD codes admit virtual diagrams.

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace knotcert {

class DiagramError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class Diagram {
public:
    using Crossing = std::array<int, 4>;

    Diagram(std::vector<Crossing> crossings, int free_loops)
        : crossings_(std::move(crossings)), free_loops_(free_loops) {
        validate();
    }

    static Diagram unknot() { return Diagram({}, 1); }

    // PD text grammar: (X-token | O-token)+ separated by whitespace/commas.
    static Diagram parse_pd(const std::string& text);

    const std::vector<Crossing>& crossings() const { return crossings_; }
    int free_loops() const { return free_loops_; }
    std::size_t crossing_count() const { return crossings_.size(); }

    // Arcs of each crossing-traversing component in cycle order, followed by
    // one empty entry per free loop.
    const std::vector<std::vector<int>>& components() const { return comps_; }
    std::size_t component_count() const { return comps_.size(); }

    int successor(int arc) const {
        auto it = succ_.find(arc);
        if (it == succ_.end()) throw DiagramError("unknown arc " + std::to_string(arc));
        return it->second;
    }

    bool has_arc(int arc) const { return succ_.count(arc) != 0; }

    int component_of(int arc) const {
        auto it = comp_of_.find(arc);
        if (it == comp_of_.end()) throw DiagramError("unknown arc " + std::to_string(arc));
        return it->second;
    }

    // +1 when the over-strand runs b -> d.
    int crossing_sign(std::size_t i) const {
        if (i >= crossings_.size()) throw DiagramError("crossing index out of range");
        return over_forward_[i] ? +1 : -1;
    }

    bool over_forward(std::size_t i) const {
        if (i >= crossings_.size()) throw DiagramError("crossing index out of range");
        return over_forward_[i];
    }

    int writhe() const {
        int w = 0;
        for (std::size_t i = 0; i < crossings_.size(); ++i) w += crossing_sign(i);
        return w;
    }

    // Half the signed count of crossings between the two components.
    int linking_number(int c1, int c2) const {
        if (c1 == c2) throw DiagramError("linking_number: components must differ");
        if (c1 < 0 || c2 < 0 || c1 >= static_cast<int>(comps_.size()) ||
            c2 >= static_cast<int>(comps_.size()))
            throw DiagramError("linking_number: unknown component");
        int sum = 0;
        for (std::size_t i = 0; i < crossings_.size(); ++i) {
            int cu = comp_of_.at(crossings_[i][0]);
            int co = comp_of_.at(crossings_[i][1]);
            if ((cu == c1 && co == c2) || (cu == c2 && co == c1)) sum += crossing_sign(i);
        }
        if (sum % 2 != 0) throw DiagramError("linking_number: odd signed crossing count");
        return sum / 2;
    }

    // Swap over/under roles at every crossing (reflection of the diagram).
    Diagram mirror() const {
        std::vector<Crossing> cs;
        cs.reserve(crossings_.size());
        for (std::size_t i = 0; i < crossings_.size(); ++i) {
            const Crossing& x = crossings_[i];
            if (over_forward_[i])
                cs.push_back({x[1], x[2], x[3], x[0]});
            else
                cs.push_back({x[3], x[0], x[1], x[2]});
        }
        return Diagram(std::move(cs), free_loops_);
    }

    std::string to_pd_string() const {
        std::ostringstream out;
        bool first = true;
        for (const Crossing& x : crossings_) {
            if (!first) out << " ";
            out << "X[" << x[0] << "," << x[1] << "," << x[2] << "," << x[3] << "]";
            first = false;
        }
        for (int i = 0; i < free_loops_; ++i) {
            if (!first) out << " ";
            out << "O";
            first = false;
        }
        return out.str();
    }

    // Arcs of d2 are shifted past those of d1.
    friend Diagram disjoint_union(const Diagram& d1, const Diagram& d2) {
        int shift = 0;
        for (const auto& [arc, s] : d1.succ_) shift = std::max(shift, arc);
        std::vector<Crossing> cs = d1.crossings_;
        for (const Crossing& x : d2.crossings_)
            cs.push_back({x[0] + shift, x[1] + shift, x[2] + shift, x[3] + shift});
        return Diagram(std::move(cs), d1.free_loops_ + d2.free_loops_);
    }

private:
    void validate();

    std::vector<Crossing> crossings_;
    int free_loops_ = 0;

    // derived by validate()
    std::map<int, int> succ_;
    std::map<int, int> comp_of_;
    std::vector<std::vector<int>> comps_;
    std::vector<bool> over_forward_;
};

namespace detail {

struct Occurrence {
    std::size_t crossing;
    int slot;
};

}  // namespace detail

inline void Diagram::validate() {
    succ_.clear();
    comp_of_.clear();
    comps_.clear();
    over_forward_.assign(crossings_.size(), false);

    if (free_loops_ < 0) throw DiagramError("negative free loop count");
    if (crossings_.empty() && free_loops_ == 0)
        throw DiagramError("empty diagram (no crossings, no loops)");

    // Arc multiplicity: every identifier appears exactly twice.
    std::map<int, std::vector<detail::Occurrence>> occs;
    for (std::size_t i = 0; i < crossings_.size(); ++i)
        for (int s = 0; s < 4; ++s)
            occs[crossings_[i][s]].push_back({i, s});
    for (const auto& [arc, v] : occs)
        if (v.size() != 2)
            throw DiagramError("arc " + std::to_string(arc) + " appears " +
                               std::to_string(v.size()) + " times (expected 2)");

    // Each occurrence is a head (strand flows in) or a tail (flows out).
    // Slot 0 is a head and slot 2 a tail; the two occurrences of one arc are
    // opposite, as are the two over slots of one crossing. Propagate this
    // 2-coloring from the under-strand seeds.
    enum State : int { UNKNOWN = 0, HEAD = 1, TAIL = 2 };
    auto key = [&](std::size_t i, int s) { return i * 4 + static_cast<std::size_t>(s); };
    std::vector<int> state(crossings_.size() * 4, UNKNOWN);
    std::vector<std::vector<std::size_t>> opposite(crossings_.size() * 4);
    for (const auto& [arc, v] : occs) {
        std::size_t k0 = key(v[0].crossing, v[0].slot);
        std::size_t k1 = key(v[1].crossing, v[1].slot);
        opposite[k0].push_back(k1);
        opposite[k1].push_back(k0);
    }
    for (std::size_t i = 0; i < crossings_.size(); ++i) {
        opposite[key(i, 1)].push_back(key(i, 3));
        opposite[key(i, 3)].push_back(key(i, 1));
    }
    std::vector<std::size_t> work;
    auto assign = [&](std::size_t k, int st) {
        if (state[k] == UNKNOWN) {
            state[k] = st;
            work.push_back(k);
        } else if (state[k] != st) {
            throw DiagramError("arc cycle inconsistency (orientation conflict)");
        }
    };
    for (std::size_t i = 0; i < crossings_.size(); ++i) {
        assign(key(i, 0), HEAD);
        assign(key(i, 2), TAIL);
    }
    auto propagate = [&]() {
        while (!work.empty()) {
            std::size_t k = work.back();
            work.pop_back();
            for (std::size_t o : opposite[k]) assign(o, state[k] == HEAD ? TAIL : HEAD);
        }
    };
    propagate();
    // Components whose arcs sit only in over slots get no seed; break the tie
    // with the sequential numbering rule for the over pair (b,d).
    for (std::size_t i = 0; i < crossings_.size(); ++i) {
        if (state[key(i, 1)] != UNKNOWN) continue;
        int b = crossings_[i][1], d = crossings_[i][3];
        bool b_to_d = (d == b + 1) || (d < b && b != d + 1);
        assign(key(i, 1), b_to_d ? HEAD : TAIL);
        propagate();
    }

    // Successor map from the resolved flows.
    std::map<int, int> pred;
    auto set_succ = [&](int from, int to) {
        if (!succ_.emplace(from, to).second)
            throw DiagramError("arc cycle inconsistency (arc " + std::to_string(from) +
                               " has two successors)");
        if (!pred.emplace(to, from).second)
            throw DiagramError("arc cycle inconsistency (arc " + std::to_string(to) +
                               " has two predecessors)");
    };
    for (std::size_t i = 0; i < crossings_.size(); ++i) {
        const Crossing& x = crossings_[i];
        set_succ(x[0], x[2]);
        if (state[key(i, 1)] == HEAD) {
            over_forward_[i] = true;
            set_succ(x[1], x[3]);
        } else {
            over_forward_[i] = false;
            set_succ(x[3], x[1]);
        }
    }
    for (const auto& [arc, v] : occs)
        if (!succ_.count(arc) || !pred.count(arc))
            throw DiagramError("arc " + std::to_string(arc) + " does not close a cycle");

    // Decompose into cycles; check sequential numbering along each.
    std::set<int> seen;
    for (const auto& [arc, v] : occs) {
        if (seen.count(arc)) continue;
        std::vector<int> cycle;
        int lo = arc, cur = arc;
        do {
            cycle.push_back(cur);
            seen.insert(cur);
            lo = std::min(lo, cur);
            cur = succ_.at(cur);
            if (cycle.size() > occs.size()) throw DiagramError("arc cycle does not close");
        } while (cur != arc);
        // rotate so the cycle starts at its minimal arc
        auto it = std::find(cycle.begin(), cycle.end(), lo);
        std::rotate(cycle.begin(), it, cycle.end());
        for (std::size_t j = 0; j < cycle.size(); ++j)
            if (cycle[j] != lo + static_cast<int>(j))
                throw DiagramError("arc numbering not sequential along component starting at " +
                                   std::to_string(lo));
        int cid = static_cast<int>(comps_.size());
        for (int a : cycle) comp_of_[a] = cid;
        comps_.push_back(std::move(cycle));
    }
    std::sort(comps_.begin(), comps_.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    for (std::size_t c = 0; c < comps_.size(); ++c)
        for (int a : comps_[c]) comp_of_[a] = static_cast<int>(c);
    for (int i = 0; i < free_loops_; ++i) comps_.emplace_back();
}

inline Diagram Diagram::parse_pd(const std::string& text) {
    std::vector<Crossing> cs;
    int loops = 0;
    std::size_t i = 0;
    auto skip_sep = [&]() {
        while (i < text.size() &&
               (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ','))
            ++i;
    };
    auto parse_int = [&]() {
        skip_sep();
        std::size_t start = i;
        if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == start) throw DiagramError("PD syntax error: expected integer at offset " +
                                           std::to_string(start));
        return std::stoi(text.substr(start, i - start));
    };
    auto expect = [&](char c) {
        skip_sep();
        if (i >= text.size() || text[i] != c)
            throw DiagramError(std::string("PD syntax error: expected '") + c + "'");
        ++i;
    };
    skip_sep();
    while (i < text.size()) {
        if (text[i] == 'X') {
            ++i;
            expect('[');
            Crossing x{};
            for (int s = 0; s < 4; ++s) x[s] = parse_int();
            expect(']');
            cs.push_back(x);
        } else if (text[i] == 'O') {
            ++i;
            ++loops;
        } else {
            throw DiagramError(std::string("PD syntax error: unexpected character '") +
                               text[i] + "'");
        }
        skip_sep();
    }
    return Diagram(std::move(cs), loops);
}

}  // namespace knotcert
