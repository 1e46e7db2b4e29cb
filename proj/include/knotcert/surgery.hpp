#pragma once

// Local rewriting of PD diagrams: cut arcs into pieces, join cut ends, add
// or smooth crossings, prescribe orientation reversals, then rebuild a valid
// diagram with canonical sequential arc numbering.
//
// A piece is a directed arc segment with two ports (tail and head). Ports is
// either attached to a crossing slot, joined to another piece's port, or
// free (produced by a cut, awaiting a join/attachment). Rebuilding traces
// the unoriented strands, orients each component from the reversal
// prescriptions (defaulting to the original direction of its lowest
// original piece), and renumbers arcs so components stay ordered by their
// lowest surviving original arc.

#include <algorithm>
#include <array>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "knotcert/diagram.hpp"

namespace knotcert {

class Surgery {
public:
    static constexpr int kTail = 0;
    static constexpr int kHead = 1;

    explicit Surgery(const Diagram& d) : free_loops_(d.free_loops()) {
        for (std::size_t i = 0; i < d.crossings().size(); ++i) {
            crossings_.push_back({d.crossings()[i], false});
            // flows: which slots the strand enters the crossing through
            bool of = d.over_forward(i);
            slot_is_head_.push_back({true, of, false, !of});
        }
        // one piece per original arc, ports bound where the arc meets crossings
        std::map<int, int> piece_of_arc;
        for (std::size_t i = 0; i < crossings_.size(); ++i) {
            for (int s = 0; s < 4; ++s) {
                int arc = crossings_[i].slots[s];
                auto [it, fresh] = piece_of_arc.emplace(arc, -1);
                if (fresh) {
                    it->second = static_cast<int>(pieces_.size());
                    pieces_.push_back(Piece{{arc * 2, 0}});
                }
                int p = it->second;
                int port = slot_is_head_[i][s] ? kHead : kTail;
                if (pieces_[p].port[port].kind != Port::FREE)
                    throw std::logic_error("surgery: duplicate port binding");
                pieces_[p].port[port] = {Port::SLOT, static_cast<int>(i), s};
                slot_piece_[{static_cast<int>(i), s}] = {p, port};
            }
        }
        for (const auto& [arc, p] : piece_of_arc) piece_by_arc_[arc] = p;
    }

    bool has_arc(int arc) const { return piece_by_arc_.count(arc) != 0; }

    // piece holding an (uncut) arc; after a cut this is the arc's front half
    int piece_for_arc(int arc) const {
        auto it = piece_by_arc_.find(arc);
        if (it == piece_by_arc_.end())
            throw DiagramError("surgery: arc " + std::to_string(arc) + " not found");
        return it->second;
    }

    // Split an arc; returns {front, back} piece ids. The front keeps the
    // arc's tail attachment and gets a free head port; the back conversely.
    std::array<int, 2> cut(int arc) {
        auto it = piece_by_arc_.find(arc);
        if (it == piece_by_arc_.end())
            throw DiagramError("surgery: arc " + std::to_string(arc) + " not found");
        int front = it->second;
        if (cut_.count(front)) throw std::logic_error("surgery: arc already cut");
        cut_.insert(front);
        int back = static_cast<int>(pieces_.size());
        pieces_.push_back(Piece{{arc * 2 + 1, 2}});
        pieces_[back].port[kHead] = pieces_[front].port[kHead];
        redirect(pieces_[back].port[kHead], back, kHead);
        pieces_[front].port[kHead] = Port{};
        return {front, back};
    }

    // Split an arc twice; returns {front, middle, back}. The middle segment
    // has both ports free.
    std::array<int, 3> cut_twice(int arc) {
        auto [front, back] = cut(arc);
        int middle = static_cast<int>(pieces_.size());
        pieces_.push_back(Piece{{arc * 2 + 1, 1}});
        return {front, middle, back};
    }

    // A fresh loop segment with both ports free.
    int new_piece() {
        int p = static_cast<int>(pieces_.size());
        pieces_.push_back(Piece{{std::numeric_limits<int>::max(), next_fresh_++}});
        return p;
    }

    // Connect a free port of a to a free port of b, head-to-tail where the
    // pieces are directed, end-to-end otherwise.
    void join(int a, int b) {
        int pa = take_free_port(a), pb = take_free_port(b);
        pieces_[a].port[pa] = {Port::JOIN, b, pb};
        pieces_[b].port[pb] = {Port::JOIN, a, pa};
    }

    // Append a crossing X[slots]; each entry consumes one free port of that
    // piece.
    void add_crossing(std::array<int, 4> piece_slots) {
        int ci = static_cast<int>(crossings_.size());
        crossings_.push_back({{0, 0, 0, 0}, false});
        for (int s = 0; s < 4; ++s) {
            int p = piece_slots[s];
            int port = take_free_port(p);
            pieces_[p].port[port] = {Port::SLOT, ci, s};
            slot_piece_[{ci, s}] = {p, port};
        }
    }

    // Delete crossing i of the original diagram, reconnecting its strands:
    // an A-smoothing joins slot pairs (0,3) and (1,2), a B-smoothing pairs
    // (0,1) and (2,3).
    void smooth(std::size_t i, bool a_smoothing) {
        if (i >= crossings_.size() || crossings_[i].removed)
            throw DiagramError("surgery: bad crossing index");
        crossings_[i].removed = true;
        auto link = [&](int s1, int s2) {
            auto [p1, q1] = slot_piece_.at({static_cast<int>(i), s1});
            auto [p2, q2] = slot_piece_.at({static_cast<int>(i), s2});
            pieces_[p1].port[q1] = {Port::JOIN, p2, q2};
            pieces_[p2].port[q2] = {Port::JOIN, p1, q1};
        };
        if (a_smoothing) {
            link(0, 3);
            link(1, 2);
        } else {
            link(0, 1);
            link(2, 3);
        }
    }

    void require_forward(int piece) { constrain(piece, +1); }
    void require_reversed(int piece) { constrain(piece, -1); }

    void add_free_loops(int k) { free_loops_ += k; }

    Diagram build() const;

private:
    struct Port {
        enum Kind { FREE, SLOT, JOIN } kind = FREE;
        int a = -1;  // crossing index / peer piece
        int b = -1;  // slot / peer port
    };
    struct Piece {
        std::pair<int, int> key;  // ordering key: (2*arc(+1), sub-index)
        std::array<Port, 2> port;  // [tail, head]
    };
    struct CrossingRec {
        std::array<int, 4> slots;
        bool removed;
    };

    void redirect(const Port& p, int piece, int port) {
        if (p.kind == Port::SLOT)
            slot_piece_[{p.a, p.b}] = {piece, port};
        else if (p.kind == Port::JOIN)
            pieces_[p.a].port[p.b] = {Port::JOIN, piece, port};
    }

    int take_free_port(int piece) {
        if (piece < 0 || piece >= static_cast<int>(pieces_.size()))
            throw std::logic_error("surgery: bad piece id");
        // prefer the head port so joins run head-to-tail for directed pieces
        if (pieces_[piece].port[kHead].kind == Port::FREE) return kHead;
        if (pieces_[piece].port[kTail].kind == Port::FREE) return kTail;
        throw std::logic_error("surgery: piece has no free port");
    }

    void constrain(int piece, int dir) {
        auto [it, fresh] = constraint_.emplace(piece, dir);
        if (!fresh && it->second != dir)
            throw std::logic_error("surgery: conflicting orientation constraints");
    }

    std::vector<Piece> pieces_;
    std::vector<CrossingRec> crossings_;
    std::vector<std::array<bool, 4>> slot_is_head_;
    std::map<std::pair<int, int>, std::pair<int, int>> slot_piece_;
    std::map<int, int> piece_by_arc_;
    std::map<int, int> constraint_;  // piece -> +1 forward / -1 reversed
    std::set<int> cut_;
    int free_loops_ = 0;
    int next_fresh_ = 0;
};

inline Diagram Surgery::build() const {
    const int n = static_cast<int>(pieces_.size());
    for (int p = 0; p < n; ++p)
        for (int q : {kTail, kHead})
            if (pieces_[p].port[q].kind == Port::FREE)
                throw std::logic_error("surgery: unresolved free port on rebuild");

    // Trace unoriented strands: step through a piece, then through a join or
    // across a crossing (slot s connects to slot (s+2)%4).
    std::vector<bool> visited(n, false);
    struct Component {
        std::vector<std::pair<int, int>> piece_dirs;  // (piece, traversal dir)
        int arc_count = 0;
        std::pair<int, int> key;
        int flip = +1;  // -1: final orientation opposes traversal
    };
    std::vector<Component> comps;
    std::vector<std::array<std::pair<int, int>, 4>> slot_arc(
        crossings_.size(), {std::make_pair(-1, -1), {-1, -1}, {-1, -1}, {-1, -1}});
    std::vector<std::array<bool, 4>> slot_in(crossings_.size(), {false, false, false, false});

    for (int start = 0; start < n; ++start) {
        if (visited[start]) continue;
        Component comp;
        comp.key = {std::numeric_limits<int>::max(), std::numeric_limits<int>::max()};
        int piece = start, enter = kTail;  // traverse `start` tail -> head
        int arc_pos = 0;
        bool fresh_arc = true;
        do {
            visited[piece] = true;
            int dir = (enter == kTail) ? +1 : -1;
            comp.piece_dirs.push_back({piece, dir});
            comp.key = std::min(comp.key, pieces_[piece].key);
            if (fresh_arc) {
                ++arc_pos;
                fresh_arc = false;
            }
            int exit = 1 - enter;
            const Port& out = pieces_[piece].port[exit];
            if (out.kind == Port::JOIN) {
                piece = out.a;
                enter = out.b;
            } else {  // SLOT
                slot_arc[out.a][out.b] = {static_cast<int>(comps.size()), arc_pos - 1};
                slot_in[out.a][out.b] = true;  // strand flows into the crossing here
                int s2 = (out.b + 2) % 4;
                auto [p2, q2] = slot_piece_.at({out.a, s2});
                slot_arc[out.a][s2] = {static_cast<int>(comps.size()), arc_pos};
                piece = p2;
                enter = q2;
                fresh_arc = true;
            }
        } while (piece != start || enter != kTail);
        // When the loop closes through a join, the final run of pieces and
        // run 0 are the same arc, so one run fewer than counted; a strand
        // that touched no crossing at all is a free loop (arc_count 0).
        comp.arc_count =
            (pieces_[start].port[kTail].kind == Port::JOIN) ? arc_pos - 1 : arc_pos;
        comps.push_back(std::move(comp));
    }

    // Resolve each component's orientation.
    for (auto& comp : comps) {
        std::optional<int> forced;
        for (auto [p, dir] : comp.piece_dirs) {
            auto it = constraint_.find(p);
            if (it == constraint_.end()) continue;
            int want = it->second * dir;  // +1: traversal matches requirement
            if (forced && *forced != want)
                throw std::logic_error("surgery: orientation constraints conflict");
            forced = want;
        }
        if (forced) {
            comp.flip = *forced;
        } else {
            // default: lowest original piece keeps its direction
            std::pair<int, int> best = {std::numeric_limits<int>::max(), 0};
            int best_dir = +1;
            for (auto [p, dir] : comp.piece_dirs)
                if (pieces_[p].key < best) {
                    best = pieces_[p].key;
                    best_dir = dir;
                }
            comp.flip = best_dir;
        }
    }

    // Number arcs: components ordered by key; within one, arcs numbered from
    // the traversal start, walking in the final orientation. The last arc of
    // the traversal wraps around to position 0, so in reversed components the
    // numbering runs pos0, pos(k-1), ..., pos1 mapped to 0,1,...,k-1.
    std::vector<int> order(comps.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return comps[a].key < comps[b].key; });
    std::vector<int> arc_base(comps.size(), 0);
    int next_arc = 1;
    int extra_loops = 0;
    for (int ci : order) {
        if (comps[ci].arc_count == 0) {
            ++extra_loops;
            continue;
        }
        arc_base[ci] = next_arc;
        next_arc += comps[ci].arc_count;
    }
    auto arc_label = [&](std::pair<int, int> ca) {
        auto [ci, pos] = ca;
        int k = comps[ci].arc_count;
        int p = pos % k;  // traversal wraps its last arc to position 0
        if (comps[ci].flip < 0) p = (k - p) % k;
        return arc_base[ci] + p;
    };

    std::vector<Diagram::Crossing> out;
    for (std::size_t i = 0; i < crossings_.size(); ++i) {
        if (crossings_[i].removed) continue;
        std::array<int, 4> labels{};
        std::array<bool, 4> in{};
        for (int s = 0; s < 4; ++s) {
            labels[s] = arc_label(slot_arc[i][s]);
            bool flow_in = slot_in[i][s];
            if (comps[slot_arc[i][s].first].flip < 0) flow_in = !flow_in;
            in[s] = flow_in;
        }
        // slot 0 must carry the incoming under-strand; else rotate by two,
        // which preserves the counterclockwise reading
        if (!in[0]) {
            std::rotate(labels.begin(), labels.begin() + 2, labels.end());
            std::rotate(in.begin(), in.begin() + 2, in.end());
        }
        if (!in[0] || in[2])
            throw std::logic_error("surgery: inconsistent strand flow at crossing");
        out.push_back(labels);
    }
    return Diagram(std::move(out), free_loops_ + extra_loops);
}

}  // namespace knotcert
