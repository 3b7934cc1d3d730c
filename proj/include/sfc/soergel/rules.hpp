#pragma once

// The defining relations of the one-row Soergel calculus as rewrite rules.
// Relations are stored per concrete color instantiation; each registered
// variant also contributes its vertical flip and left-right mirror (the
// relation set is closed under both). The `reduces` flag marks the
// orientation used by the normalization strategies.

#include <functional>
#include <string>
#include <vector>

#include "sfc/soergel/diagram.hpp"

namespace sfc::soergel {

struct RuleInstance {
    std::string id;       // R1..R18, Rd
    std::string variant;  // human-readable variant tag
    Diagram lhs;
    Morphism rhs;
    bool reduces = false;

    RuleInstance(std::string id_, std::string var, Diagram l, Morphism r, bool red)
        : id(std::move(id_)), variant(std::move(var)), lhs(l.canonical()), rhs(std::move(r)),
          reduces(red) {}

    RuleInstance flipped(const std::string& tag) const {
        Morphism fr(rhs.n(), rhs.codomain(), rhs.domain());
        for (const auto& [c, d] : rhs.terms()) fr.add(d.flipped(), c);
        return RuleInstance(id, variant + tag, lhs.flipped(), fr, reduces);
    }
    RuleInstance mirrored(const std::string& tag) const {
        std::vector<int> rd(rhs.domain().rbegin(), rhs.domain().rend());
        std::vector<int> rc(rhs.codomain().rbegin(), rhs.codomain().rend());
        Morphism mr(rhs.n(), rd, rc);
        for (const auto& [c, d] : rhs.terms()) mr.add(d.mirrored(), c);
        return RuleInstance(id, variant + tag, lhs.mirrored(), mr, reduces);
    }
};

namespace detail {

using G = ElemGen;

inline Diagram mk(int n, std::vector<int> dom, std::vector<Slice> slices) {
    Diagram d(n, std::move(dom));
    for (auto& s : slices) d.then(std::move(s));
    return d;
}

}  // namespace detail

// All rule instances for the calculus on colors 1..n. Variants already
// include flips and mirrors (deduplicated structurally).
inline std::vector<RuleInstance> rules_for(int n) {
    using detail::mk;
    using G = ElemGen;
    std::vector<RuleInstance> base;

    auto add = [&](const char* id, std::string var, Diagram lhs, Morphism rhs, bool red) {
        base.emplace_back(id, std::move(var), std::move(lhs), std::move(rhs), red);
    };

    for (int j = 1; j <= n; ++j) {
        std::string cj = std::to_string(j);
        // R1: zigzag straightening
        add("R1", "zz." + cj,
            mk(n, {j},
               {{G::id(j), G::start(j)}, {G::id(j), G::split(j)}, {G::merge(j), G::id(j)},
                {G::end(j), G::id(j)}}),
            Morphism(Diagram::identity(n, {j})), true);

        // R2: dotted curl straightens to a dot
        add("R2", "curl." + cj,
            mk(n, {j}, {{G::start(j), G::id(j)}, {G::merge(j)}, {G::end(j)}}),
            Morphism(mk(n, {j}, {{G::end(j)}})), true);
        add("R2", "curl2." + cj,
            mk(n, {j}, {{G::id(j), G::start(j)}, {G::merge(j)}, {G::end(j)}}),
            Morphism(mk(n, {j}, {{G::end(j)}})), true);

        // R3: trivalent vertex rotations
        add("R3", "rot." + cj,
            mk(n, {j, j}, {{G::split(j), G::id(j)}, {G::id(j), G::merge(j)}, {G::id(j), G::end(j)}}),
            Morphism(mk(n, {j, j}, {{G::merge(j)}})), true);
        add("R3", "rot2." + cj,
            mk(n, {j, j}, {{G::id(j), G::split(j)}, {G::merge(j), G::id(j)}, {G::end(j), G::id(j)}}),
            Morphism(mk(n, {j, j}, {{G::merge(j)}})), true);
        // unit/counit laws (consequences of R1+R3, registered as variants)
        add("R3", "unit." + cj, mk(n, {j}, {{G::start(j), G::id(j)}, {G::merge(j)}}),
            Morphism(Diagram::identity(n, {j})), true);
        add("R3", "unit2." + cj, mk(n, {j}, {{G::id(j), G::start(j)}, {G::merge(j)}}),
            Morphism(Diagram::identity(n, {j})), true);

        // R6: Frobenius associativity (horizontal bar = vertical bar)
        add("R6", "frob." + cj,
            mk(n, {j, j}, {{G::split(j), G::id(j)}, {G::id(j), G::merge(j)}}),
            Morphism(mk(n, {j, j}, {{G::merge(j)}, {G::split(j)}})), true);
        add("R6", "frob2." + cj,
            mk(n, {j, j}, {{G::id(j), G::split(j)}, {G::merge(j), G::id(j)}}),
            Morphism(mk(n, {j, j}, {{G::merge(j)}, {G::split(j)}})), true);

        // R7: lollipop (and its bigon core) vanish
        add("R7", "lolli." + cj,
            mk(n, {j}, {{G::split(j)}, {G::merge(j)}, {G::end(j)}}),
            Morphism(n, {j}, {}), true);
        add("R7", "bigon." + cj, mk(n, {j}, {{G::split(j)}, {G::merge(j)}}),
            Morphism(n, {j}, {j}), true);

        // R8: broken strand = half the two barbell placements
        {
            Morphism rhs(n, {j}, {j});
            rhs.add(mk(n, {j}, {{G::start(j), G::id(j)}, {G::end(j), G::id(j)}}), Rational(1, 2));
            rhs.add(mk(n, {j}, {{G::id(j), G::start(j)}, {G::id(j), G::end(j)}}), Rational(1, 2));
            add("R8", "break." + cj, mk(n, {j}, {{G::end(j)}, {G::start(j)}}), rhs, true);
        }

        // Rd (derived from R8): identity of (j,j) via barbells beside the bar
        {
            auto zed = [&](int gap) {
                return mk(n, {j, j},
                          {{G::split(j), G::id(j)},
                           gap == 1 ? Slice{G::id(j), G::start(j), G::id(j), G::id(j)}
                                    : Slice{G::id(j), G::id(j), G::start(j), G::id(j)},
                           gap == 1 ? Slice{G::id(j), G::end(j), G::id(j), G::id(j)}
                                    : Slice{G::id(j), G::id(j), G::end(j), G::id(j)},
                           {G::id(j), G::merge(j)}});
            };
            Morphism rhs(n, {j, j}, {j, j});
            rhs.add(Diagram::identity(n, {j, j}), Rational(2));
            rhs.add(zed(2), Rational(-1));
            add("Rd", "idsplit." + cj, zed(1), rhs, false);
        }
    }

    // two distant colors
    for (int j = 1; j <= n; ++j)
        for (int k = 1; k <= n; ++k) {
            if (std::abs(j - k) <= 1) continue;
            std::string cjk = std::to_string(j) + "." + std::to_string(k);

            // R9: crossings cancel
            add("R9", "rr." + cjk,
                mk(n, {j, k}, {{G::cross(j, k)}, {G::cross(k, j)}}),
                Morphism(Diagram::identity(n, {j, k})), true);

            // R10: dots slide through the 4-vertex
            add("R10", "enddot." + cjk,
                mk(n, {j, k}, {{G::cross(j, k)}, {G::id(k), G::end(j)}}),
                Morphism(mk(n, {j, k}, {{G::end(j), G::id(k)}})), true);
            add("R10", "startdot." + cjk,
                mk(n, {k}, {{G::start(j), G::id(k)}, {G::cross(j, k)}}),
                Morphism(mk(n, {k}, {{G::id(k), G::start(j)}})), true);

            // R11: trivalent vertices slide through the 4-vertex
            add("R11", "split." + cjk,
                mk(n, {j, k},
                   {{G::split(j), G::id(k)}, {G::id(j), G::cross(j, k)}, {G::cross(j, k), G::id(j)}}),
                Morphism(mk(n, {j, k}, {{G::cross(j, k)}, {G::id(k), G::split(j)}})), true);
            add("R11", "merge." + cjk,
                mk(n, {j, j, k},
                   {{G::id(j), G::cross(j, k)}, {G::cross(j, k), G::id(j)}, {G::id(k), G::merge(j)}}),
                Morphism(mk(n, {j, j, k}, {{G::merge(j), G::id(k)}, {G::cross(j, k)}})), true);

            // R4: crossing with a zigzagged strand straightens
            add("R4", "bent." + cjk,
                mk(n, {k, j},
                   {{G::id(k), G::id(j), G::start(k)},
                    {G::id(k), G::id(j), G::split(k)},
                    {G::id(k), G::cross(j, k), G::id(k)},
                    {G::merge(k), G::id(j), G::id(k)},
                    {G::end(k), G::id(j), G::id(k)}}),
                Morphism(mk(n, {k, j}, {{G::cross(k, j)}})), true);
        }

    // two adjacent colors
    for (int i = 1; i <= n; ++i)
        for (int jj : {i - 1, i + 1}) {
            if (jj < 1 || jj > n) continue;
            int j = jj;
            std::string cij = std::to_string(i) + "." + std::to_string(j);

            // R5: rotation coherence of the 6-vertex (links the chiralities)
            add("R5", "rot." + cij,
                mk(n, {j, i},
                   {{G::start(i), G::id(j), G::id(i)},
                    {G::split(i), G::id(j), G::id(i)},
                    {G::id(i), G::six(i, j)}}),
                Morphism(mk(n, {j, i},
                            {{G::id(j), G::id(i), G::start(j)},
                             {G::id(j), G::id(i), G::split(j)},
                             {G::six(j, i), G::id(j)}})),
                false);

            // R12: a dot on the middle leg of the 6-vertex resolves
            {
                Diagram lhs = mk(n, {i, i},
                                 {{G::id(i), G::start(j), G::id(i)}, {G::six(i, j)}});
                Morphism rhs(n, {i, i}, {j, i, j});
                rhs.add(mk(n, {i, i}, {{G::merge(i)}, {G::start(j), G::id(i), G::start(j)}}),
                        Rational(1));
                rhs.add(mk(n, {i, i},
                           {{G::merge(i)},
                            {G::end(i)},
                            {G::start(j)},
                            {G::split(j)},
                            {G::id(j), G::start(i), G::id(j)}}),
                        Rational(1));
                add("R12", "middot." + cij, lhs, rhs, true);
            }

            // R13: the double 6-vertex resolves to identity plus correction
            {
                Diagram lhs = mk(n, {i, j, i}, {{G::six(i, j)}, {G::six(j, i)}});
                Morphism rhs(n, {i, j, i}, {i, j, i});
                rhs.add(Diagram::identity(n, {i, j, i}), Rational(1));
                rhs.add(mk(n, {i, j, i},
                           {{G::id(i), G::end(j), G::id(i)},
                            {G::merge(i)},
                            {G::split(i)},
                            {G::id(i), G::start(j), G::id(i)}}),
                        Rational(1));
                add("R13", "rr." + cij, lhs, rhs, true);
            }

            // R14: two-color associativity
            {
                Diagram lhs = mk(n, {i, i, j, i},
                                 {{G::id(i), G::six(i, j)},
                                  {G::six(i, j), G::id(j)},
                                  {G::id(j), G::id(i), G::merge(j)}});
                Morphism rhs(n, {i, i, j, i}, {j, i, j});
                rhs.add(mk(n, {i, i, j, i}, {{G::merge(i), G::id(j), G::id(i)}, {G::six(i, j)}}),
                        Rational(1));
                add("R14", "assoc." + cij, lhs, rhs, true);
            }

            // R15: barbell past an adjacent line, with the half correction
            {
                Diagram lhs = mk(n, {j}, {{G::start(i), G::id(j)}, {G::end(i), G::id(j)}});
                Morphism rhs(n, {j}, {j});
                rhs.add(mk(n, {j}, {{G::id(j), G::start(i)}, {G::id(j), G::end(i)}}), Rational(1));
                rhs.add(mk(n, {j}, {{G::id(j), G::start(j)}, {G::id(j), G::end(j)}}),
                        Rational(1, 2));
                rhs.add(mk(n, {j}, {{G::start(j), G::id(j)}, {G::end(j), G::id(j)}}),
                        Rational(-1, 2));
                add("R15", "slide." + cij, lhs, rhs, false);
            }
        }

    // relations involving three colors
    for (int i = 1; i <= n; ++i)
        for (int j : {i - 1, i + 1}) {
            if (j < 1 || j > n) continue;
            for (int k = 1; k <= n; ++k) {
                if (std::abs(k - i) <= 1 || std::abs(k - j) <= 1) continue;
                std::string c = std::to_string(i) + "." + std::to_string(j) + "." + std::to_string(k);
                // R16: the 6-vertex slides past a distant strand
                Diagram lhs = mk(n, {k, i, j, i},
                                 {{G::cross(k, i), G::id(j), G::id(i)},
                                  {G::id(i), G::cross(k, j), G::id(i)},
                                  {G::id(i), G::id(j), G::cross(k, i)},
                                  {G::six(i, j), G::id(k)}});
                Morphism rhs(n, {k, i, j, i}, {j, i, j, k});
                rhs.add(mk(n, {k, i, j, i},
                           {{G::id(k), G::six(i, j)},
                            {G::cross(k, j), G::id(i), G::id(j)},
                            {G::id(j), G::cross(k, i), G::id(j)},
                            {G::id(j), G::id(i), G::cross(k, j)}}),
                        Rational(1));
                add("R16", "slide." + c, lhs, rhs, false);
            }
        }

    for (int l = 1; l <= n; ++l)
        for (int j = 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k) {
                if (std::abs(l - j) <= 1 || std::abs(l - k) <= 1 || std::abs(j - k) <= 1) continue;
                std::string c = std::to_string(l) + "." + std::to_string(j) + "." + std::to_string(k);
                // R17: crossings slide past a distant strand
                Diagram lhs = mk(n, {l, j, k},
                                 {{G::cross(l, j), G::id(k)},
                                  {G::id(j), G::cross(l, k)},
                                  {G::cross(j, k), G::id(l)}});
                Morphism rhs(n, {l, j, k}, {k, j, l});
                rhs.add(mk(n, {l, j, k},
                           {{G::id(l), G::cross(j, k)},
                            {G::cross(l, k), G::id(j)},
                            {G::id(k), G::cross(l, j)}}),
                        Rational(1));
                add("R17", "slide." + c, lhs, rhs, false);
            }

    // R18: the three-color square, two mirror-arranged routes
    for (int i = 1; i + 2 <= n; ++i) {
        int j = i + 1, k = i + 2;
        std::string c = std::to_string(i);
        Diagram lhs = mk(n, {i, j, k, j, i},
                         {{G::id(i), G::six(j, k), G::id(i)},
                          {G::cross(i, k), G::id(j), G::id(k), G::id(i)},
                          {G::id(k), G::id(i), G::id(j), G::cross(k, i)},
                          {G::id(k), G::six(i, j), G::id(k)}});
        Morphism rhs(n, {i, j, k, j, i}, {k, j, i, j, k});
        rhs.add(mk(n, {i, j, k, j, i},
                   {{G::id(i), G::six(j, k), G::id(i)},
                    {G::id(i), G::id(k), G::id(j), G::cross(k, i)},
                    {G::cross(i, k), G::id(j), G::id(i), G::id(k)},
                    {G::id(k), G::six(i, j), G::id(k)}}),
                Rational(1));
        add("R18", "square." + c, lhs, rhs, false);
    }

    // close under vertical flip and left-right mirror, deduplicated
    std::vector<RuleInstance> out;
    auto push_unique = [&](RuleInstance r) {
        for (const auto& x : out)
            if (x.lhs == r.lhs && x.rhs == r.rhs) return;
        out.push_back(std::move(r));
    };
    for (const auto& r : base) {
        push_unique(r);
        push_unique(r.flipped(".f"));
        push_unique(r.mirrored(".m"));
        push_unique(r.flipped("").mirrored(".fm"));
    }
    return out;
}

}  // namespace sfc::soergel
