#pragma once

// MOY polynomial evaluation for closed webs with edge labels 1..3.
//
// Production path: recover an annular ladder presentation from the graph and
// reduce the cyclic rung word by local moves (digons, the triple expansion
// e_a e_{a+1} e_a = e_a + f, leaf traces, absorptions), with memoization.
// Normalization: circles of label k evaluate to the balanced quantum binomial
// [N choose k]; graded Hom dimensions use the documented shift
//   dim_q Hom(u,v) = q^{m(N-1)} * MOY(closure(u,v)),
// so degree_zero_dim extracts the coefficient of q^{-m(N-1)}.

#include <algorithm>
#include <map>
#include <functional>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "sfc/laurent.hpp"

namespace sfc::moy {

struct Vertex {
    bool fuse = true;             // fuse: ins are below, one out; unfuse: one in, outs above
    std::vector<int> ins, outs;   // edge ids, left to right (the rotation data)
};

struct Edge {
    int label = 1;
    int tail = -1, head = -1;     // vertex ids; oriented tail -> head
};

// A closed web: trivalent vertices with labels conserved, plus free circles.
struct WebGraph {
    std::vector<Vertex> vertices;
    std::vector<Edge> edges;
    std::vector<int> circles;     // labels of free circle components

    void validate() const {
        for (const auto& v : vertices) {
            int in = 0, out = 0;
            for (int e : v.ins) in += edges.at(e).label;
            for (int e : v.outs) out += edges.at(e).label;
            if (in != out) throw std::domain_error("web vertex does not conserve labels");
            if (v.ins.size() + v.outs.size() != 3) throw std::domain_error("web vertex not trivalent");
        }
        for (size_t i = 0; i < edges.size(); ++i) {
            if (edges[i].label < 1 || edges[i].label > 3)
                throw std::domain_error("web edge label out of range");
            if (edges[i].tail < 0 || edges[i].head < 0)
                throw std::domain_error("web edge with loose end");
        }
    }
};

struct IrreducibleWeb : std::runtime_error {
    explicit IrreducibleWeb(const std::string& what) : std::runtime_error(what) {}
};

// Cyclic rung word of an annular ladder on m strands. Symbols: E(p) is the
// double rung at strands (p, p+1); F(p) the triple rung at (p, p+1, p+2).
struct RungSym {
    int pos;
    bool triple;
    friend auto operator<=>(const RungSym&, const RungSym&) = default;
};

struct LadderWord {
    int m = 0;
    std::vector<RungSym> word;  // cyclic
};

namespace detail {

inline bool touches(const RungSym& s, int strand) {
    return strand >= s.pos && strand <= s.pos + (s.triple ? 2 : 1);
}
inline bool overlap(const RungSym& a, const RungSym& b) {
    int alo = a.pos, ahi = a.pos + (a.triple ? 2 : 1);
    int blo = b.pos, bhi = b.pos + (b.triple ? 2 : 1);
    return std::max(alo, blo) <= std::min(ahi, bhi);
}

// canonical form of a cyclic word under rotation + distant commutation:
// bubble distant-commuting neighbours to a sorted fixpoint over all rotations
inline std::vector<RungSym> canonical(std::vector<RungSym> w) {
    auto sort_pass = [](std::vector<RungSym> v) {
        bool ch = true;
        while (ch) {
            ch = false;
            for (size_t i = 0; i + 1 < v.size(); ++i)
                if (!overlap(v[i], v[i + 1]) && v[i + 1] < v[i]) {
                    std::swap(v[i], v[i + 1]);
                    ch = true;
                }
        }
        return v;
    };
    std::vector<RungSym> best;
    for (size_t r = 0; r < std::max<size_t>(w.size(), 1); ++r) {
        std::vector<RungSym> rot(w.begin() + r, w.end());
        rot.insert(rot.end(), w.begin(), w.begin() + r);
        rot = sort_pass(rot);
        if (best.empty() || rot < best) best = rot;
    }
    return best;
}

}  // namespace detail

// Reduce a cyclic ladder word to its MOY value. Two strategies sharing the
// same move set are exposed for the order-independence test.
class LadderEvaluator {
public:
    LadderEvaluator(int N, bool reversed_scan = false) : N_(N), rev_(reversed_scan) {
        if (N < 1) throw std::domain_error("moy: N must be positive");
    }

    LaurentPoly eval(const LadderWord& lw) { return go(lw.m, lw.word); }

private:
    using Key = std::pair<int, std::vector<RungSym>>;

    LaurentPoly go(int m, std::vector<RungSym> w) {
        w = detail::canonical(w);
        Key key{m, w};
        if (auto it = memo_.find(key); it != memo_.end()) {
            if (!it->second) throw IrreducibleWeb("irreducible ladder word");
            return *it->second;
        }
        try {
            LaurentPoly r = reduce(m, w);
            memo_[key] = r;
            return r;
        } catch (const IrreducibleWeb&) {
            memo_[key] = std::nullopt;
            throw;
        }
    }

    // all cyclically adjacent index pairs in scan order
    std::vector<std::pair<size_t, size_t>> adj(size_t n) const {
        std::vector<std::pair<size_t, size_t>> out;
        for (size_t i = 0; i < n; ++i) out.push_back({i, (i + 1) % n});
        if (rev_) std::reverse(out.begin(), out.end());
        return out;
    }

    LaurentPoly reduce(int m, const std::vector<RungSym>& w) {
        if (w.empty()) {
            LaurentPoly r(Rational(1));
            for (int i = 0; i < m; ++i) r *= qint(N_);
            return r;
        }
        if (w.size() == 1) {  // terminal traces
            LaurentPoly rest(Rational(1));
            int used = w[0].triple ? 3 : 2;
            for (int i = 0; i < m - used; ++i) rest *= qint(N_);
            if (w[0].triple) return rest * qint(3) * qint(2) * qbinom(N_, 3);
            return rest * qint(2) * qbinom(N_, 2);
        }

        const size_t n = w.size();
        // slide(i -> j): everything cyclically strictly between i and j
        // (forward) commutes with w[i]
        auto slides_to = [&](size_t i, size_t j) {
            for (size_t t = (i + 1) % n; t != j; t = (t + 1) % n)
                if (detail::overlap(w[i], w[t])) return false;
            return true;
        };

        // collect every applicable move; all are valid identities, so any
        // branch that completes gives the value
        std::vector<std::function<LaurentPoly()>> moves;

        // digon / absorption between symbols adjacent modulo commutation
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) {
                if (i == j || !slides_to(i, j)) continue;
                const RungSym a = w[i], b = w[j];
                if (a.triple == b.triple && a.pos == b.pos) {
                    moves.push_back([=, this]() {
                        std::vector<RungSym> v;
                        for (size_t t = 0; t < n; ++t)
                            if (t != i) v.push_back(w[t]);
                        LaurentPoly c = a.triple ? qint(3) * qint(2) : qint(2);
                        return c * go(m, v);
                    });
                } else if (!a.triple && b.triple &&
                           (a.pos == b.pos || a.pos == b.pos + 1)) {
                    // double rung absorbed into the triple
                    moves.push_back([=, this]() {
                        std::vector<RungSym> v;
                        for (size_t t = 0; t < n; ++t)
                            if (t != i) v.push_back(w[t]);
                        return qint(2) * go(m, v);
                    });
                }
            }

        // leaf traces: a boundary strand touched by exactly one symbol
        for (int strand = 1; strand <= m; ++strand) {
            int cnt = 0;
            size_t at = 0;
            for (size_t i = 0; i < n; ++i)
                if (detail::touches(w[i], strand)) {
                    ++cnt;
                    at = i;
                }
            if (cnt != 1) continue;
            const RungSym s = w[at];
            if (!s.triple && (strand == s.pos || strand == s.pos + 1)) {
                moves.push_back([=, this]() {
                    std::vector<RungSym> v;
                    for (size_t i = 0; i < n; ++i)
                        if (i != at) v.push_back(w[i]);
                    for (auto& x : v)
                        if (x.pos > strand) --x.pos;
                    return qint(N_ - 1) * go(m - 1, v);
                });
            }
            if (s.triple && (strand == s.pos || strand == s.pos + 2)) {
                moves.push_back([=, this]() {
                    // partial trace of the triple: [N-2] times the double rung
                    std::vector<RungSym> v = w;
                    v[at] = RungSym{strand == s.pos ? s.pos + 1 : s.pos, false};
                    for (auto& x : v)
                        if (x.pos > strand) --x.pos;
                    return qint(N_ - 2) * go(m - 1, v);
                });
            }
        }

        // e_a e_b e_a with |a-b| = 1 -> e_a + f_{min(a,b)}, modulo commutation
        if (n >= 3)
            for (size_t i = 0; i < n; ++i)
                for (size_t j = 0; j < n; ++j) {
                    if (j == i || !slides_to(i, j)) continue;
                    for (size_t k = 0; k < n; ++k) {
                        if (k == i || k == j) continue;
                        // c must slide backward to just after b
                        bool ok = true;
                        for (size_t t = (j + 1) % n; t != k; t = (t + 1) % n)
                            if (detail::overlap(w[k], w[t])) {
                                ok = false;
                                break;
                            }
                        if (!ok) continue;
                        const RungSym a = w[i], b = w[j], c = w[k];
                        if (a.triple || b.triple || c.triple) continue;
                        if (a.pos != c.pos || std::abs(a.pos - b.pos) != 1) continue;
                        moves.push_back([=, this]() {
                            auto build = [&](RungSym rep) {
                                std::vector<RungSym> v;
                                for (size_t t = 0; t < n; ++t) {
                                    if (t == j)
                                        v.push_back(rep);
                                    else if (t != i && t != k)
                                        v.push_back(w[t]);
                                }
                                return v;
                            };
                            return go(m, build({a.pos, false})) +
                                   go(m, build({std::min(a.pos, b.pos), true}));
                        });
                    }
                }

        if (rev_) std::reverse(moves.begin(), moves.end());
        for (auto& mv : moves) {
            try {
                return mv();
            } catch (const IrreducibleWeb&) {
                // try the next applicable move
            }
        }
        throw IrreducibleWeb("irreducible ladder word (" + std::to_string(w.size()) +
                             " rungs on " + std::to_string(m) + " strands)");
    }

    int N_;
    bool rev_;
    std::map<Key, std::optional<LaurentPoly>> memo_;
};

// ---- annular-structure recovery from a generic closed web graph ----

namespace detail {

struct Recovered {
    std::vector<LadderWord> ladders;
    std::vector<int> circles;
};

// Recover the annular ladder structure of one connected component whose edges
// are given. Strands are the maximal label-1 cycles; rungs are the 2-edge
// (and composite 3-edge) events between them.
inline std::optional<LadderWord> recover_component(const WebGraph& g,
                                                   const std::vector<int>& comp_edges) {
    struct Event {
        bool triple = false;
        std::vector<int> bot, top;  // 1-edge ids, left to right
    };
    std::vector<Event> events;
    std::set<int> used;  // non-1-edges consumed into events

    auto is1 = [&](int e) { return g.edges[e].label == 1; };

    // towers around 3-edges
    for (int e : comp_edges) {
        if (g.edges[e].label != 3) continue;
        const Vertex& vf = g.vertices[g.edges[e].tail];
        const Vertex& vu = g.vertices[g.edges[e].head];
        if (vf.ins.size() != 2 || vu.outs.size() != 2) return std::nullopt;
        Event ev;
        ev.triple = true;
        auto expand = [&](const std::vector<int>& pair, bool bottom) -> std::optional<std::vector<int>> {
            // pair = (2-edge, 1-edge) in planar order; expand the 2-edge
            std::vector<int> res;
            for (int x : pair) {
                if (g.edges[x].label == 1) {
                    res.push_back(x);
                } else if (g.edges[x].label == 2) {
                    const Vertex& w = bottom ? g.vertices[g.edges[x].tail]
                                             : g.vertices[g.edges[x].head];
                    const auto& ports = bottom ? w.ins : w.outs;
                    if (ports.size() != 2 || !is1(ports[0]) || !is1(ports[1]))
                        return std::nullopt;
                    res.push_back(ports[0]);
                    res.push_back(ports[1]);
                    used.insert(x);
                } else {
                    return std::nullopt;
                }
            }
            return res;
        };
        auto b = expand(vf.ins, true), t = expand(vu.outs, false);
        if (!b || !t || b->size() != 3 || t->size() != 3) return std::nullopt;
        ev.bot = *b;
        ev.top = *t;
        used.insert(e);
        events.push_back(ev);
    }
    // plain rungs from the remaining 2-edges
    for (int e : comp_edges) {
        if (g.edges[e].label != 2 || used.count(e)) continue;
        const Vertex& vf = g.vertices[g.edges[e].tail];
        const Vertex& vu = g.vertices[g.edges[e].head];
        if (vf.ins.size() != 2 || vu.outs.size() != 2) return std::nullopt;
        if (!is1(vf.ins[0]) || !is1(vf.ins[1]) || !is1(vu.outs[0]) || !is1(vu.outs[1]))
            return std::nullopt;
        events.push_back(Event{false, vf.ins, vu.outs});
    }
    if (events.empty()) return std::nullopt;

    // port maps: a 1-edge runs from (event, top port) to (event, bottom port)
    std::map<int, std::pair<int, int>> edge_top, edge_bot;  // edge -> (event, port)
    for (size_t i = 0; i < events.size(); ++i) {
        for (size_t p = 0; p < events[i].bot.size(); ++p) {
            if (edge_bot.count(events[i].bot[p])) return std::nullopt;
            edge_bot[events[i].bot[p]] = {static_cast<int>(i), static_cast<int>(p)};
        }
        for (size_t p = 0; p < events[i].top.size(); ++p) {
            if (edge_top.count(events[i].top[p])) return std::nullopt;
            edge_top[events[i].top[p]] = {static_cast<int>(i), static_cast<int>(p)};
        }
    }
    for (auto& [e, _] : edge_bot)
        if (!edge_top.count(e)) return std::nullopt;

    // strands: follow bottom port p -> top port p -> next event
    std::map<std::pair<int, int>, int> strand_of;  // (event, port) -> strand id
    int nstrands = 0;
    std::vector<std::vector<int>> strand_events;   // cyclic event sequence per strand
    for (size_t i0 = 0; i0 < events.size(); ++i0)
        for (size_t p0 = 0; p0 < events[i0].bot.size(); ++p0) {
            if (strand_of.count({static_cast<int>(i0), static_cast<int>(p0)})) continue;
            int sid = nstrands++;
            strand_events.push_back({});
            int i = static_cast<int>(i0), p = static_cast<int>(p0);
            while (!strand_of.count({i, p})) {
                strand_of[{i, p}] = sid;
                strand_events[sid].push_back(i);
                int e = events[i].top[p];  // exits through the same port index
                auto [ni, np] = edge_bot.at(e);
                i = ni;
                p = np;
            }
        }

    // ladder positions from per-event adjacency; the order graph must be a
    // disjoint union of paths
    std::vector<int> right(nstrands, -1), left(nstrands, -1);
    for (size_t i = 0; i < events.size(); ++i)
        for (size_t p = 0; p + 1 < events[i].bot.size(); ++p) {
            int a = strand_of.at({static_cast<int>(i), static_cast<int>(p)});
            int b = strand_of.at({static_cast<int>(i), static_cast<int>(p + 1)});
            if (a == b) return std::nullopt;
            if (right[a] != -1 && right[a] != b) return std::nullopt;
            if (left[b] != -1 && left[b] != a) return std::nullopt;
            right[a] = b;
            left[b] = a;
        }
    std::vector<int> pos(nstrands, -1);
    int next = 1;
    for (int s = 0; s < nstrands; ++s) {
        if (left[s] != -1 || pos[s] != -1) continue;
        for (int c = s; c != -1; c = right[c]) {
            if (pos[c] != -1) return std::nullopt;
            pos[c] = next++;
        }
    }
    for (int s = 0; s < nstrands; ++s)
        if (pos[s] == -1) return std::nullopt;  // cyclic order: not a ladder

    // global cyclic time order: greedy merge of the strands' cyclic sequences
    std::vector<int> ptr(nstrands, -1);  // index into strand_events, -1 = phase unset
    LadderWord lw;
    lw.m = nstrands;
    std::vector<bool> done(events.size(), false);
    for (size_t step = 0; step < events.size(); ++step) {
        int pick = -1;
        for (size_t i = 0; i < events.size(); ++i) {
            if (done[i]) continue;
            bool ok = true;
            std::set<int> ss;
            for (size_t p = 0; p < events[i].bot.size(); ++p)
                ss.insert(strand_of.at({static_cast<int>(i), static_cast<int>(p)}));
            for (int s : ss)
                if (ptr[s] != -1 && strand_events[s][ptr[s]] != static_cast<int>(i)) ok = false;
            if (!ok) continue;
            pick = static_cast<int>(i);
            // emit: advance pointers
            for (int s : ss) {
                if (ptr[s] == -1) {
                    // rotate phase so this event is current
                    int k = 0;
                    while (strand_events[s][k] != pick) ++k;
                    ptr[s] = k;
                }
                // advance past every consecutive occurrence handled now
                ptr[s] = (ptr[s] + 1) % static_cast<int>(strand_events[s].size());
            }
            break;
        }
        if (pick == -1) return std::nullopt;
        done[pick] = true;
        int base = pos[strand_of.at({pick, 0})];
        lw.word.push_back({base, events[pick].triple});
    }
    return lw;
}

inline Recovered recover(const WebGraph& g) {
    Recovered out;
    out.circles = g.circles;
    // connected components over edges
    int E = static_cast<int>(g.edges.size());
    std::vector<int> par(E);
    for (int i = 0; i < E; ++i) par[i] = i;
    auto find = [&](auto&& self, int x) -> int { return par[x] == x ? x : par[x] = self(self, par[x]); };
    for (const auto& v : g.vertices) {
        std::vector<int> all = v.ins;
        all.insert(all.end(), v.outs.begin(), v.outs.end());
        for (size_t i = 1; i < all.size(); ++i) {
            int a = find(find, all[0]), b = find(find, all[i]);
            if (a != b) par[a] = b;
        }
    }
    std::map<int, std::vector<int>> comps;
    for (int i = 0; i < E; ++i) comps[find(find, i)].push_back(i);
    for (auto& [root, ce] : comps) {
        auto lw = recover_component(g, ce);
        if (!lw) throw IrreducibleWeb("web component is not an annular ladder");
        out.ladders.push_back(*lw);
    }
    return out;
}

}  // namespace detail

inline LaurentPoly moy_eval(const WebGraph& g, int N, bool reversed_scan = false) {
    g.validate();
    auto rec = detail::recover(g);
    LaurentPoly r(Rational(1));
    for (int lbl : rec.circles) r *= qbinom(N, lbl);
    LadderEvaluator ev(N, reversed_scan);
    for (const auto& lw : rec.ladders) r *= ev.eval(lw);
    return r;
}

// Build the annular closure of two ladder webs given by their rung position
// sequences (bottom-to-top) on m strands, as a cyclic ladder word.
inline LadderWord ladder_closure(int m, std::vector<int> bottom, const std::vector<int>& top) {
    LadderWord lw;
    lw.m = m;
    std::reverse(bottom.begin(), bottom.end());
    for (int p : bottom) lw.word.push_back({p, false});
    for (int p : top) lw.word.push_back({p, false});
    return lw;
}

inline LaurentPoly moy_eval(const LadderWord& lw, int N, bool reversed_scan = false) {
    LadderEvaluator ev(N, reversed_scan);
    return ev.eval(lw);
}

// Coefficient of q^{-m(N-1)} in the MOY polynomial of the closure: the
// dimension of the degree-zero part of Hom between the two ladder webs.
inline Rational degree_zero_dim(int m, const std::vector<int>& bottom,
                                const std::vector<int>& top, int N) {
    LaurentPoly p = moy_eval(ladder_closure(m, bottom, top), N);
    return p.coeff(-m * (N - 1));
}

// Materialize an annular ladder word as an explicit closed web graph
// (plain double rungs only; triples arise during reduction, not in inputs).
inline WebGraph ladder_word_to_graph(const LadderWord& lw) {
    WebGraph g;
    for (const auto& s : lw.word)
        if (s.triple) throw std::domain_error("ladder_word_to_graph: doubles only");
    if (lw.word.empty()) {
        g.circles.assign(lw.m, 1);
        return g;
    }
    // per strand, the list of (event index, side 0=left/1=right) in time order
    std::vector<std::vector<std::pair<int, int>>> visits(lw.m + 1);
    for (size_t i = 0; i < lw.word.size(); ++i) {
        visits[lw.word[i].pos].push_back({static_cast<int>(i), 0});
        visits[lw.word[i].pos + 1].push_back({static_cast<int>(i), 1});
    }
    // vertices 2i = fuse of event i, 2i+1 = unfuse of event i
    g.vertices.resize(2 * lw.word.size());
    for (size_t i = 0; i < lw.word.size(); ++i) {
        g.vertices[2 * i].fuse = true;
        g.vertices[2 * i].ins.assign(2, -1);
        g.vertices[2 * i].outs.assign(1, -1);
        g.vertices[2 * i + 1].fuse = false;
        g.vertices[2 * i + 1].ins.assign(1, -1);
        g.vertices[2 * i + 1].outs.assign(2, -1);
    }
    auto add_edge = [&](int label, int tail, int head) {
        g.edges.push_back({label, tail, head});
        return static_cast<int>(g.edges.size() - 1);
    };
    for (size_t i = 0; i < lw.word.size(); ++i) {
        int e2 = add_edge(2, 2 * i, 2 * i + 1);
        g.vertices[2 * i].outs[0] = e2;
        g.vertices[2 * i + 1].ins[0] = e2;
    }
    for (int s = 1; s <= lw.m; ++s) {
        if (visits[s].empty()) {
            g.circles.push_back(1);
            continue;
        }
        for (size_t k = 0; k < visits[s].size(); ++k) {
            auto [ev, side] = visits[s][k];
            auto [nev, nside] = visits[s][(k + 1) % visits[s].size()];
            int e = add_edge(1, 2 * ev + 1, 2 * nev);
            g.vertices[2 * ev + 1].outs[side] = e;
            g.vertices[2 * nev].ins[nside] = e;
        }
    }
    return g;
}

}  // namespace sfc::moy
