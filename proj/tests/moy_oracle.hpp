#pragma once

// Test-only brute-force state sum for annular ladder webs: edges labeled k
// carry k-subsets of {1..N}; fuse/unfuse vertices carry inversion-count
// weights and the closure is the quantum trace. Independent of the reduction
// evaluator it checks.

#include <map>
#include <vector>

#include "sfc/laurent.hpp"
#include "sfc/moy.hpp"

namespace sfctest {

using sfc::LaurentPoly;
using sfc::Rational;

inline LaurentPoly moy_state_sum(const sfc::moy::LadderWord& lw, int N) {
    using State = std::vector<int>;
    const int m = lw.m;

    // enumerate start states and push each through the word
    std::vector<State> states;
    {
        State cur(m, 1);
        while (true) {
            states.push_back(cur);
            int i = 0;
            while (i < m && cur[i] == N) cur[i++] = 1;
            if (i == m) break;
            cur[i]++;
        }
    }

    auto qp = [](int e) { return LaurentPoly::monomial(e); };
    LaurentPoly total;
    for (const State& start : states) {
        // sparse propagation
        std::map<State, LaurentPoly> vec{{start, LaurentPoly(Rational(1))}};
        for (const auto& sym : lw.word) {
            std::map<State, LaurentPoly> next;
            int p = sym.pos - 1;  // 0-based slot
            for (const auto& [st, c] : vec) {
                if (!sym.triple) {
                    int s = st[p], t = st[p + 1];
                    if (s == t) continue;
                    LaurentPoly w0 = qp(-(s > t ? 1 : 0));
                    for (auto [a, b] : {std::pair{s, t}, std::pair{t, s}}) {
                        State ns = st;
                        ns[p] = a;
                        ns[p + 1] = b;
                        LaurentPoly w = w0 * qp(b > a ? 1 : 0) * c;
                        auto it = next.find(ns);
                        if (it == next.end())
                            next[ns] = w;
                        else
                            it->second += w;
                    }
                } else {
                    int s = st[p], t = st[p + 1], u = st[p + 2];
                    if (s == t || s == u || t == u) continue;
                    int in_w = -((s > t ? 1 : 0) + (u < s ? 1 : 0) + (u < t ? 1 : 0));
                    int vals[3] = {s, t, u};
                    int perm[3] = {0, 1, 2};
                    do {
                        int a = vals[perm[0]], b = vals[perm[1]], cc = vals[perm[2]];
                        int out_w = (b > a ? 1 : 0) + (cc > a ? 1 : 0) + (cc > b ? 1 : 0);
                        State ns = st;
                        ns[p] = a;
                        ns[p + 1] = b;
                        ns[p + 2] = cc;
                        LaurentPoly w = qp(in_w + out_w) * c;
                        auto it = next.find(ns);
                        if (it == next.end())
                            next[ns] = w;
                        else
                            it->second += w;
                    } while (std::next_permutation(perm, perm + 3));
                }
            }
            vec = std::move(next);
        }
        auto it = vec.find(start);
        if (it == vec.end()) continue;
        int rho = 0;
        for (int i = 0; i < m; ++i) rho += N + 1 - 2 * start[i];
        total += LaurentPoly::monomial(rho) * it->second;
    }
    return total;
}

}  // namespace sfctest
