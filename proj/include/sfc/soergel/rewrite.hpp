#pragma once

// Pattern matching and rewriting for sliced Soergel diagrams, and the
// normalization of closed morphisms to barbell polynomials.
//
// Matching works on a wire interval: the pattern's generators are located
// inside an evolving window of the target modulo the interchange congruence
// (generators outside the window are untouched; identity wires inside it are
// transparent). Substitution splices the rule's right-hand side into the
// window and re-canonicalizes.

#include <algorithm>
#include <optional>
#include <random>
#include <sstream>

#include "sfc/soergel/diagram.hpp"
#include "sfc/soergel/rules.hpp"

namespace sfc::soergel {

struct RewriteStep {
    std::string rule;
    size_t slice = 0, offset = 0;
};

struct NormalizeStuck : std::runtime_error {
    Diagram residual;
    std::vector<RewriteStep> trace;
    NormalizeStuck(Diagram d, std::vector<RewriteStep> tr)
        : std::runtime_error("normalize_closed stuck on: " + d.str()),
          residual(std::move(d)),
          trace(std::move(tr)) {}
};

namespace match_detail {

// singleton-generator view of a diagram with wire structure
struct GenNode {
    ElemGen gen;
    std::vector<int> ins, outs;  // wire ids
};

struct WireView {
    std::vector<GenNode> gens;
    std::vector<int> dom_wires, cod_wires;
    std::vector<int> wire_color;
    // wire ids of each slice's domain positions; entry 0 is the diagram domain
    std::vector<std::vector<int>> heights;
    // producing (slice, gen index) per wire; (-1,-1) for domain wires
    std::vector<std::pair<int, int>> producer;

    static WireView of(const Diagram& d) {
        WireView v;
        int next = 0;
        std::vector<int> cur;  // wire id per position
        for (int c : d.domain()) {
            v.dom_wires.push_back(next);
            v.wire_color.push_back(c);
            v.producer.push_back({-1, -1});
            cur.push_back(next++);
        }
        v.heights.push_back(cur);
        for (size_t t = 0; t < d.slices().size(); ++t) {
            const auto& sl = d.slices()[t];
            std::vector<int> out;
            size_t pos = 0;
            for (size_t gi = 0; gi < sl.size(); ++gi) {
                const auto& g = sl[gi];
                size_t ar = g.domain().size();
                if (g.kind == GenKind::Id) {
                    out.push_back(cur[pos]);
                    ++pos;
                    continue;
                }
                GenNode nd;
                nd.gen = g;
                for (size_t i = 0; i < ar; ++i) nd.ins.push_back(cur[pos + i]);
                for (int c : g.codomain()) {
                    nd.outs.push_back(next);
                    v.wire_color.push_back(c);
                    v.producer.push_back({static_cast<int>(t), static_cast<int>(gi)});
                    out.push_back(next++);
                }
                pos += ar;
                v.gens.push_back(std::move(nd));
            }
            cur = std::move(out);
            v.heights.push_back(cur);
        }
        v.cod_wires = cur;
        return v;
    }
};

struct Match {
    size_t t0 = 0;                                  // first target slice of the window
    std::vector<std::pair<size_t, size_t>> region;  // per slice in [t0,t_end): interval [a,b)
    std::vector<std::pair<size_t, size_t>> used;    // matched (slice, gen index)
    std::vector<int> adopted;                       // target wire ids adopted at the window base
    // closure end-dots consuming a pattern-codomain wire before the window
    // finishes: (slice, gen index, index into the pattern codomain)
    std::vector<std::tuple<size_t, size_t, size_t>> deferred;
    size_t t_end = 0;
    size_t a_end = 0;
};

struct MatchState {
    std::vector<bool> matched;
    size_t remaining = 0;
    std::vector<int> ivl;
    Match m;
};

// the upward walk from slice t0, interval start a0, given a seeded state
inline std::optional<Match> walk_up(const Diagram& target, const WireView& pv, size_t t0,
                                    size_t a0, MatchState st) {
    size_t a = a0;
    std::vector<int> cod_left = pv.cod_wires;
    auto finished = [&]() { return st.remaining == 0 && st.ivl == cod_left; };

    for (size_t t = t0; t <= target.slices().size(); ++t) {
        if (finished()) {
            st.m.t_end = t;
            st.m.a_end = a;
            return st.m;
        }
        if (t == target.slices().size()) break;
        const Slice& sl = target.slices()[t];
        const size_t b = a + st.ivl.size();
        st.m.region.push_back({a, b});

        std::vector<int> new_ivl;
        size_t new_a = 0;
        size_t pos = 0;
        for (size_t gi = 0; gi < sl.size(); ++gi) {
            const ElemGen& g = sl[gi];
            size_t ar = g.domain().size(), coar = g.codomain().size();
            if (ar == 0) {
                if (pos >= a && pos <= b) {
                    bool ok = false;
                    for (size_t pi = 0; pi < pv.gens.size() && !ok; ++pi) {
                        if (st.matched[pi] || pv.gens[pi].gen != g) continue;
                        st.matched[pi] = true;
                        --st.remaining;
                        new_ivl.push_back(pv.gens[pi].outs[0]);
                        st.m.used.push_back({t, gi});
                        ok = true;
                    }
                    if (ok) continue;
                    if (pos > a && pos < b) return std::nullopt;
                }
                if (pos <= a) new_a += coar;
                continue;
            }
            if (pos + ar <= a) {
                new_a += coar;
                pos += ar;
                continue;
            }
            if (pos >= b) {
                pos += ar;
                continue;
            }
            if (pos < a || pos + ar > b) return std::nullopt;
            size_t off = pos - a;
            if (g.kind == GenKind::Id) {
                new_ivl.push_back(st.ivl[off]);
                pos += ar;
                continue;
            }
            bool ok = false;
            for (size_t pi = 0; pi < pv.gens.size() && !ok; ++pi) {
                if (st.matched[pi] || pv.gens[pi].gen != g) continue;
                if (pv.gens[pi].ins.size() != ar) continue;
                bool same = true;
                for (size_t i = 0; i < ar; ++i)
                    if (pv.gens[pi].ins[i] != st.ivl[off + i]) same = false;
                if (!same) continue;
                st.matched[pi] = true;
                --st.remaining;
                for (int o : pv.gens[pi].outs) new_ivl.push_back(o);
                st.m.used.push_back({t, gi});
                ok = true;
            }
            if (!ok && g.kind == GenKind::EndDot) {
                // an end dot of the surrounding diagram consuming a wire the
                // pattern exports: defer it past the window
                int w = st.ivl[off];
                for (size_t ci = 0; ci < pv.cod_wires.size(); ++ci)
                    if (pv.cod_wires[ci] == w &&
                        std::find(cod_left.begin(), cod_left.end(), w) != cod_left.end()) {
                        st.m.deferred.push_back({t, gi, ci});
                        cod_left.erase(std::find(cod_left.begin(), cod_left.end(), w));
                        ok = true;
                        break;
                    }
            }
            if (!ok) return std::nullopt;
            pos += ar;
        }
        a = new_a;
        st.ivl = std::move(new_ivl);
    }
    if (finished()) {
        st.m.t_end = target.slices().size();
        st.m.a_end = a;
        return st.m;
    }
    return std::nullopt;
}

// Try to match `pat` into `target` (one generator per slice) with a window
// starting at slice t0, interval beginning at position a0. Start dots pushed
// below t0 by the normal form may be adopted into the window base; the
// take-vs-adopt interleaving is resolved by backtracking.
inline std::optional<Match> try_match(const Diagram& target, const Diagram& pat, size_t t0,
                                      size_t a0) {
    WireView pv = WireView::of(pat);
    WireView tv = WireView::of(target);
    size_t need = pv.dom_wires.size();
    const std::vector<int>& cur = tv.heights[t0];

    std::optional<Match> result;
    MatchState st0;
    st0.matched.assign(pv.gens.size(), false);
    st0.remaining = pv.gens.size();
    st0.m.t0 = t0;

    auto adoptable = [&](size_t p) -> std::pair<int, int> {
        int tw = cur[p];
        auto [ps, pg] = tv.producer[tw];
        if (ps < 0 || ps >= static_cast<int>(t0)) return {-1, -1};
        if (target.slices()[ps][pg].kind != GenKind::StartDot) return {-1, -1};
        return {ps, pg};
    };

    std::function<bool(size_t, size_t, MatchState&)> build = [&](size_t p, size_t di,
                                                                 MatchState& st) -> bool {
        if (di == need) {
            // optional trailing adoptions, longest first
            std::vector<size_t> ext;
            size_t q = p;
            while (st.remaining > 0 && q < cur.size() && adoptable(q).first >= 0) ext.push_back(q++);
            for (size_t take = ext.size() + 1; take-- > 0;) {
                MatchState st2 = st;
                bool ok = true;
                for (size_t i = 0; i < take; ++i) {
                    auto [ps, pg] = adoptable(ext[i]);
                    const ElemGen& tg = target.slices()[ps][pg];
                    bool found = false;
                    for (size_t pi = 0; pi < pv.gens.size() && !found; ++pi) {
                        if (st2.matched[pi] || pv.gens[pi].gen != tg) continue;
                        st2.matched[pi] = true;
                        --st2.remaining;
                        st2.ivl.push_back(pv.gens[pi].outs[0]);
                        st2.m.used.push_back({static_cast<size_t>(ps), static_cast<size_t>(pg)});
                        st2.m.adopted.push_back(cur[ext[i]]);
                        found = true;
                    }
                    if (!found) ok = false;
                }
                if (!ok) continue;
                if (auto r = walk_up(target, pv, t0, a0, st2)) {
                    result = r;
                    return true;
                }
            }
            return false;
        }
        if (p >= cur.size()) return false;
        int tw = cur[p];
        int pw = pv.dom_wires[di];
        // choice 1: take the next pattern domain wire here
        if (tv.wire_color[tw] == pv.wire_color[pw]) {
            MatchState st2 = st;
            st2.ivl.push_back(pw);
            if (build(p + 1, di + 1, st2)) return true;
        }
        // choice 2: adopt a start wire here
        auto [ps, pg] = adoptable(p);
        if (ps >= 0) {
            const ElemGen& tg = target.slices()[ps][pg];
            for (size_t pi = 0; pi < pv.gens.size(); ++pi) {
                if (st.matched[pi] || pv.gens[pi].gen != tg) continue;
                MatchState st2 = st;
                st2.matched[pi] = true;
                --st2.remaining;
                st2.ivl.push_back(pv.gens[pi].outs[0]);
                st2.m.used.push_back({static_cast<size_t>(ps), static_cast<size_t>(pg)});
                st2.m.adopted.push_back(tw);
                if (build(p + 1, di, st2)) return true;
                break;
            }
        }
        return false;
    };

    build(a0, 0, st0);
    return result;
}

}  // namespace match_detail

// Substitute one rhs diagram into the matched window of the target.
inline Diagram substitute(const Diagram& target, const match_detail::Match& m,
                          const Diagram& rhs_term) {
    auto tv = match_detail::WireView::of(target);
    auto is_used = [&](size_t t, size_t gi) {
        return std::find(m.used.begin(), m.used.end(), std::pair{t, gi}) != m.used.end();
    };
    auto is_adopted = [&](int w) {
        return std::find(m.adopted.begin(), m.adopted.end(), w) != m.adopted.end();
    };

    Diagram out(target.n(), target.domain());
    // below the window: drop adopted starts and the identities carrying their
    // wires up to the window base
    for (size_t t = 0; t < m.t0; ++t) {
        const Slice& sl = target.slices()[t];
        Slice s;
        size_t pos = 0;
        for (size_t gi = 0; gi < sl.size(); ++gi) {
            const ElemGen& g = sl[gi];
            size_t ar = g.domain().size();
            if (is_used(t, gi)) {
                pos += ar;
                continue;
            }
            if (g.kind == GenKind::Id && is_adopted(tv.heights[t][pos])) {
                ++pos;
                continue;
            }
            s.push_back(g);
            pos += ar;
        }
        if (!s.empty()) out.then(std::move(s));
    }

    // cross-section at the window start, with adopted wires removed
    std::vector<int> cur;
    size_t a0_orig = m.region.empty() ? m.a_end : m.region.front().first;
    size_t a0 = 0;
    for (size_t p = 0; p < tv.heights[m.t0].size(); ++p) {
        int w = tv.heights[m.t0][p];
        if (is_adopted(w)) continue;
        if (p < a0_orig) ++a0;
        cur.push_back(tv.wire_color[w]);
    }
    size_t ndom = rhs_term.domain().size();

    // splice the rhs block, padded by identities outside the interval
    {
        std::vector<int> left(cur.begin(), cur.begin() + a0);
        std::vector<int> right(cur.begin() + a0 + ndom, cur.end());
        for (const auto& sl : rhs_term.slices()) {
            Slice s;
            for (int c : left) s.push_back(ElemGen::id(c));
            for (const auto& g : sl) s.push_back(g);
            for (int c : right) s.push_back(ElemGen::id(c));
            out.then(std::move(s));
        }
    }
    // the window's interface wires: alive rhs-codomain positions; deferred
    // closure ends fire inside the replay and retire their position
    std::vector<std::pair<int, bool>> midstate;
    for (int c : rhs_term.codomain()) midstate.push_back({c, true});

    // replay the window slices with matched generators dropped
    for (size_t t = m.t0; t < m.t_end; ++t) {
        const Slice& sl = target.slices()[t];
        auto [ra, rb] = m.region[t - m.t0];
        Slice s;
        size_t pos = 0;
        bool emitted_mid = false;
        auto emit_mid = [&]() {
            if (emitted_mid) return;
            emitted_mid = true;
            for (size_t ci = 0; ci < midstate.size(); ++ci) {
                if (!midstate[ci].second) continue;
                bool fire = false;
                for (const auto& [dt, dgi, dci] : m.deferred)
                    if (dt == t && dci == ci) fire = true;
                if (fire) {
                    s.push_back(ElemGen::end(midstate[ci].first));
                    midstate[ci].second = false;
                } else {
                    s.push_back(ElemGen::id(midstate[ci].first));
                }
            }
        };
        auto is_deferred = [&](size_t gi) {
            for (const auto& [dt, dgi, dci] : m.deferred)
                if (dt == t && dgi == gi) return true;
            return false;
        };
        for (size_t gi = 0; gi < sl.size(); ++gi) {
            const ElemGen& g = sl[gi];
            size_t ar = g.domain().size();
            if (is_used(t, gi) || is_deferred(gi)) {
                pos += ar;
                continue;
            }
            bool inside = (ar == 0) ? (pos > ra && pos < rb) : (pos >= ra && pos + ar <= rb);
            if (inside && (g.kind == GenKind::Id || ar == 0)) {
                // pass-through inside the window: absorbed into mid
                pos += ar;
                continue;
            }
            // left/right classification must agree with the matching walk:
            // an unmatched gap generator at the left edge stays left
            bool right = (ar == 0) ? (pos > ra) : (pos >= rb);
            if (right) emit_mid();
            s.push_back(g);
            pos += ar;
        }
        emit_mid();
        out.then(std::move(s));
    }
    for (size_t t = m.t_end; t < target.slices().size(); ++t) out.then(target.slices()[t]);
    out.canonicalize();
    return out;
}

// All matches of a rule's lhs in a diagram, scanned by (slice, offset).
inline std::vector<match_detail::Match> find_matches(const Diagram& target,
                                                     const RuleInstance& rule) {
    std::vector<match_detail::Match> out;
    size_t height = target.slices().size();
    for (size_t t0 = 0; t0 <= height; ++t0) {
        std::vector<int> cur = t0 == 0 ? target.domain()
                                       : slice_codomain(target.slices()[t0 - 1]);
        for (size_t a0 = 0; a0 <= cur.size(); ++a0) {
            auto m = match_detail::try_match(target, rule.lhs, t0, a0);
            if (m && !m->used.empty()) out.push_back(*m);
        }
    }
    return out;
}

// Apply `rule` to term `term_idx` of `m` at the given window position.
inline Morphism apply_rule(const Morphism& m, const RuleInstance& rule, size_t term_idx,
                           size_t slice, size_t offset) {
    if (term_idx >= m.terms().size()) throw std::domain_error("apply_rule: no such term");
    const auto& [coeff, dia] = m.terms()[term_idx];
    Diagram ex = dia.exploded();
    auto mt = match_detail::try_match(ex, rule.lhs, slice, offset);
    if (!mt || mt->used.empty()) throw std::domain_error("pattern mismatch");
    Morphism out = m;
    out.add(dia, -coeff);
    for (const auto& [rc, rd] : rule.rhs.terms()) out.add(substitute(ex, *mt, rd), coeff * rc);
    return out;
}

// ---- normalization of closed morphisms ----

class Rewriter {
public:
    explicit Rewriter(int n) : n_(n), rules_(rules_for(n)) {}

    const std::vector<RuleInstance>& rules() const { return rules_; }

    const RuleInstance* rule(const std::string& id, const std::string& variant_prefix = "") const {
        for (const auto& r : rules_)
            if (r.id == id && r.variant.starts_with(variant_prefix)) return &r;
        return nullptr;
    }

    // Extract floating barbell components (a StartDot whose wire feeds an
    // EndDot directly). Returns the product of extracted barbells.
    static BarbellPoly extract_barbells(Diagram& d, int n) {
        BarbellPoly acc = BarbellPoly::unit(n);
        bool again = true;
        while (again) {
            again = false;
            auto wv = match_detail::WireView::of(d);
            for (const auto& g : wv.gens) {
                if (g.gen.kind != GenKind::StartDot) continue;
                // find consumer of the start's wire
                for (const auto& h : wv.gens) {
                    if (h.gen.kind == GenKind::EndDot && h.ins == g.outs) {
                        acc = acc * BarbellPoly::barbell(n, g.gen.j);
                        d = remove_pair(d, g.gen.j, g.outs[0]);
                        again = true;
                        break;
                    }
                }
                if (again) break;
            }
        }
        return acc;
    }

    // Normalize a closed morphism to a barbell polynomial. strategy 0 is
    // leftmost-innermost; any other value seeds a randomized rule order.
    BarbellPoly normalize_closed(const Morphism& m, unsigned strategy = 0) const {
        if (!m.domain().empty() || !m.codomain().empty())
            throw std::domain_error("normalize_closed: morphism is not closed");
        BarbellPoly total(n_);
        std::mt19937 rng(strategy);
        for (const auto& [coeff, dia] : m.terms()) {
            std::vector<RewriteStep> trace;
            total = total + coeff * reduce_term(dia, strategy ? &rng : nullptr, trace);
        }
        return total;
    }

    // Reduce one closed diagram to a barbell polynomial.
    BarbellPoly reduce_term(Diagram dia, std::mt19937* rng,
                            std::vector<RewriteStep>& trace) const {
        dia.canonicalize();
        BarbellPoly acc = extract_barbells(dia, n_);
        if (dia.gen_count() == 0) return acc;

        std::vector<size_t> order(rules_.size());
        for (size_t i = 0; i < rules_.size(); ++i) order[i] = i;
        if (rng) std::shuffle(order.begin(), order.end(), *rng);

        Diagram ex = dia.exploded();
        for (size_t ri : order) {
            const RuleInstance& r = rules_[ri];
            if (!r.reduces) continue;
            auto ms = find_matches(ex, r);
            if (ms.empty()) continue;
            size_t pick = rng ? (*rng)() % ms.size() : 0;
            const auto& mt = ms[pick];
            trace.push_back({r.id + "/" + r.variant, mt.t0,
                             mt.region.empty() ? mt.a_end : mt.region.front().first});
            BarbellPoly out(n_);
            bool first = true;
            BarbellPoly sub(n_);
            for (const auto& [rc, rd] : r.rhs.terms()) {
                BarbellPoly part = reduce_term(substitute(ex, mt, rd), rng, trace);
                sub = first ? rc * part : sub + rc * part;
                first = false;
            }
            if (first) sub = BarbellPoly(n_);  // empty rhs: zero
            return acc * sub;
        }
        throw NormalizeStuck(dia, trace);
    }

    // Close a morphism by putting a dot on each open end, bottom and top.
    static Morphism dot_closure(const Morphism& m) {
        Morphism bot(m.n(), {}, m.domain());
        {
            Diagram d(m.n(), {});
            Slice s;
            for (int c : m.domain()) s.push_back(ElemGen::start(c));
            if (!s.empty()) d.then(std::move(s));
            bot = Morphism(d);
        }
        Morphism top(m.n(), m.codomain(), {});
        {
            Diagram d(m.n(), m.codomain());
            Slice s;
            for (int c : m.codomain()) s.push_back(ElemGen::end(c));
            if (!s.empty()) d.then(std::move(s));
            top = Morphism(d);
        }
        return compose(compose(bot, m), top);
    }

    // Coordinate of m in the rank-one basis of Hom(empty, b): close the top
    // with dots and divide by the product of barbells of b's colors.
    BarbellPoly hom_empty_to(const std::vector<int>& b, const Morphism& m,
                             unsigned strategy = 0) const {
        if (!m.domain().empty() || m.codomain() != b)
            throw std::domain_error("hom_empty_to: boundary mismatch");
        Morphism top(m.n(), b, {});
        Diagram d(m.n(), b);
        Slice s;
        for (int c : b) s.push_back(ElemGen::end(c));
        if (!s.empty()) d.then(std::move(s));
        BarbellPoly closed = normalize_closed(compose(m, Morphism(d)), strategy);
        BarbellPoly denom = BarbellPoly::unit(n_);
        for (int c : b) denom = denom * BarbellPoly::barbell(n_, c);
        return div_exact(closed, denom);
    }

private:
    static Diagram remove_pair(const Diagram& d, int color, int wire) {
        // rebuild without the start producing `wire`, the end consuming it,
        // and the identities carrying it in between; wire ids follow the
        // WireView allocation order
        Diagram out(d.n(), d.domain());
        int next = static_cast<int>(d.domain().size());
        // original wire ids at the current height (the removed wire included,
        // so positional lookups stay consistent); emitted slices exclude the
        // removed pieces
        std::vector<int> ocur;
        for (size_t i = 0; i < d.domain().size(); ++i) ocur.push_back(static_cast<int>(i));
        for (const auto& sl : d.slices()) {
            Slice s;
            std::vector<int> nocur;
            size_t pos = 0;
            for (const auto& g : sl) {
                if (g.kind == GenKind::StartDot) {
                    int myout = next++;
                    nocur.push_back(myout);
                    if (!(myout == wire && g.j == color)) s.push_back(g);
                } else if (g.kind == GenKind::Id) {
                    int w = ocur.at(pos);
                    ++pos;
                    nocur.push_back(w);
                    if (w != wire) s.push_back(g);
                } else if (g.kind == GenKind::EndDot && ocur.at(pos) == wire) {
                    ++pos;
                } else {
                    s.push_back(g);
                    pos += g.domain().size();
                    for (size_t c = 0; c < g.codomain().size(); ++c) nocur.push_back(next++);
                }
            }
            ocur = std::move(nocur);
            if (!s.empty()) out.then(std::move(s));
        }
        out.canonicalize();
        return out;
    }

    int n_;
    std::vector<RuleInstance> rules_;
};

}  // namespace sfc::soergel
