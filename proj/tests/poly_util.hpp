#pragma once

// Test-only multivariate polynomial helpers: a sparse polynomial over a fixed
// small variable count, plus a semistandard-tableau Schur oracle. These stay
// independent of the expansion algorithms they check.

#include <map>
#include <vector>

#include "sfc/rational.hpp"

namespace sfctest {

struct MPoly {
    int nvars;
    std::map<std::vector<int>, sfc::Rational> terms;

    explicit MPoly(int n) : nvars(n) {}
    static MPoly one(int n) {
        MPoly p(n);
        p.terms[std::vector<int>(n, 0)] = sfc::Rational(1);
        return p;
    }
    static MPoly var(int n, int i) {
        MPoly p(n);
        std::vector<int> e(n, 0);
        e[i] = 1;
        p.terms[e] = sfc::Rational(1);
        return p;
    }
    void add(const std::vector<int>& e, sfc::Rational c) {
        auto it = terms.find(e);
        if (it == terms.end()) {
            if (!c.is_zero()) terms[e] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) terms.erase(it);
        }
    }
    friend MPoly operator+(const MPoly& a, const MPoly& b) {
        MPoly r = a;
        for (auto& [e, c] : b.terms) r.add(e, c);
        return r;
    }
    friend MPoly operator*(const MPoly& a, const MPoly& b) {
        MPoly r(a.nvars);
        for (auto& [ea, ca] : a.terms)
            for (auto& [eb, cb] : b.terms) {
                std::vector<int> e(a.nvars);
                for (int i = 0; i < a.nvars; ++i) e[i] = ea[i] + eb[i];
                r.add(e, ca * cb);
            }
        return r;
    }
    friend MPoly operator*(const sfc::Rational& c, const MPoly& a) {
        MPoly r(a.nvars);
        for (auto& [e, v] : a.terms) r.add(e, c * v);
        return r;
    }
    friend bool operator==(const MPoly& a, const MPoly& b) { return a.terms == b.terms; }
};

// Elementary symmetric polynomial e_k(x_0..x_{n-1}).
inline MPoly elem_sym(int n, int k) {
    MPoly r(n);
    std::vector<int> idx(k);
    // enumerate k-subsets
    std::vector<int> pick;
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(pick.size()) == k) {
            std::vector<int> e(n, 0);
            for (int i : pick) e[i] = 1;
            r.add(e, sfc::Rational(1));
            return;
        }
        for (int i = start; i < n; ++i) {
            pick.push_back(i);
            self(self, i + 1);
            pick.pop_back();
        }
    };
    if (k == 0) return MPoly::one(n);
    rec(rec, 0);
    return r;
}

// Schur polynomial by brute-force enumeration of semistandard Young tableaux:
// rows weakly increase, columns strictly increase, entries in 1..n.
inline MPoly schur_ssyt(std::vector<int> lambda, int n) {
    while (!lambda.empty() && lambda.back() == 0) lambda.pop_back();
    MPoly result(n);
    std::vector<std::vector<int>> tab(lambda.size());
    for (size_t r = 0; r < lambda.size(); ++r) tab[r].assign(lambda[r], 0);

    auto rec = [&](auto&& self, size_t row, int col) -> void {
        if (row == tab.size()) {
            std::vector<int> e(n, 0);
            for (auto& r : tab)
                for (int v : r) e[v - 1]++;
            result.add(e, sfc::Rational(1));
            return;
        }
        size_t nrow = row;
        int ncol = col + 1;
        if (ncol >= static_cast<int>(tab[row].size())) {
            nrow = row + 1;
            ncol = 0;
        }
        for (int v = 1; v <= n; ++v) {
            if (col > 0 && v < tab[row][col - 1]) continue;
            if (row > 0 && static_cast<int>(tab[row - 1].size()) > col && v <= tab[row - 1][col])
                continue;
            tab[row][col] = v;
            self(self, nrow, ncol);
        }
        tab[row][col] = 0;
    };
    if (lambda.empty() || lambda[0] == 0) return MPoly::one(n);
    rec(rec, 0, 0);
    return result;
}

}  // namespace sfctest
