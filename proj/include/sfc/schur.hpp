#pragma once

#include <array>
#include <map>
#include <sstream>
#include <stdexcept>

#include "sfc/rational.hpp"

namespace sfc {

// Weakly decreasing two-row / three-row Schur indices.
struct SchurIndex2 {
    int k = 0, m = 0;
    SchurIndex2() = default;
    SchurIndex2(int k_, int m_) : k(k_), m(m_) {
        if (k < m || m < 0) throw std::domain_error("SchurIndex2 not weakly decreasing");
    }
    friend bool operator==(const SchurIndex2&, const SchurIndex2&) = default;
    friend auto operator<=>(const SchurIndex2&, const SchurIndex2&) = default;
    int degree() const { return k + m; }
};

struct SchurIndex3 {
    int p = 0, q = 0, r = 0;
    SchurIndex3() = default;
    SchurIndex3(int p_, int q_, int r_) : p(p_), q(q_), r(r_) {
        if (p < q || q < r || r < 0) throw std::domain_error("SchurIndex3 not weakly decreasing");
    }
    friend bool operator==(const SchurIndex3&, const SchurIndex3&) = default;
    friend auto operator<=>(const SchurIndex3&, const SchurIndex3&) = default;
    int degree() const { return p + q + r; }
};

// Polynomial with rational coefficients in the formal elementary symmetric
// generators e1, e2, e3 (deg e_i = i). The two-variable case never uses e3.
class ElemSymExpr {
public:
    using Key = std::array<int, 3>;

    ElemSymExpr() = default;
    static ElemSymExpr constant(Rational c) {
        ElemSymExpr p;
        if (!c.is_zero()) p.terms_[{0, 0, 0}] = c;
        return p;
    }
    static ElemSymExpr e(int i) {
        ElemSymExpr p;
        Key k{0, 0, 0};
        k.at(i - 1) = 1;
        p.terms_[k] = Rational(1);
        return p;
    }

    const std::map<Key, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    friend ElemSymExpr operator+(const ElemSymExpr& a, const ElemSymExpr& b) {
        ElemSymExpr r = a;
        for (const auto& [k, c] : b.terms_) r.add(k, c);
        return r;
    }
    friend ElemSymExpr operator-(const ElemSymExpr& a, const ElemSymExpr& b) {
        ElemSymExpr r = a;
        for (const auto& [k, c] : b.terms_) r.add(k, -c);
        return r;
    }
    friend ElemSymExpr operator*(const ElemSymExpr& a, const ElemSymExpr& b) {
        ElemSymExpr r;
        for (const auto& [ka, ca] : a.terms_)
            for (const auto& [kb, cb] : b.terms_)
                r.add({ka[0] + kb[0], ka[1] + kb[1], ka[2] + kb[2]}, ca * cb);
        return r;
    }
    friend ElemSymExpr operator*(const Rational& c, const ElemSymExpr& a) {
        ElemSymExpr r;
        for (const auto& [k, v] : a.terms_) r.add(k, c * v);
        return r;
    }
    ElemSymExpr& operator+=(const ElemSymExpr& o) { return *this = *this + o; }

    friend bool operator==(const ElemSymExpr& a, const ElemSymExpr& b) {
        return a.terms_ == b.terms_;
    }

    // Total degree with deg(e_i) = i; -1 for zero.
    int degree() const {
        int d = -1;
        for (const auto& [k, c] : terms_) d = std::max(d, k[0] + 2 * k[1] + 3 * k[2]);
        return d;
    }
    bool homogeneous() const {
        int d = -2;
        for (const auto& [k, c] : terms_) {
            int kd = k[0] + 2 * k[1] + 3 * k[2];
            if (d == -2) d = kd;
            if (kd != d) return false;
        }
        return true;
    }

    // Substitute concrete ring values for the generators.
    template <typename R>
    R substitute(const R& one, const R& e1, const R& e2, const R& e3) const {
        R total = Rational(0) * one;
        for (const auto& [k, c] : terms_) {
            R t = c * one;
            for (int i = 0; i < k[0]; ++i) t = t * e1;
            for (int i = 0; i < k[1]; ++i) t = t * e2;
            for (int i = 0; i < k[2]; ++i) t = t * e3;
            total = total + t;
        }
        return total;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [k, c] : terms_) {
            if (!first) os << " + ";
            first = false;
            os << c;
            for (int i = 0; i < 3; ++i)
                if (k[i]) {
                    os << "*e" << i + 1;
                    if (k[i] > 1) os << "^" << k[i];
                }
        }
        return os.str();
    }

private:
    void add(const Key& k, const Rational& c) {
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            if (!c.is_zero()) terms_[k] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    std::map<Key, Rational> terms_;
};

namespace detail {
// Complete homogeneous h_d in nvars variables, expressed in e1..e_nvars via
// the Newton-type recursion h_d = sum_i (-1)^{i-1} e_i h_{d-i}.
inline ElemSymExpr complete_h(int d, int nvars) {
    if (d < 0) return ElemSymExpr();
    if (d == 0) return ElemSymExpr::constant(Rational(1));
    ElemSymExpr r;
    for (int i = 1; i <= nvars; ++i) {
        ElemSymExpr t = ElemSymExpr::e(i) * complete_h(d - i, nvars);
        r = (i % 2 == 1) ? r + t : r - t;
    }
    return r;
}
}  // namespace detail

// s_{(k,m)}(x,y) as a polynomial in e1 = x+y, e2 = xy.
inline ElemSymExpr schur2_to_elem(const SchurIndex2& idx) {
    ElemSymExpr r = detail::complete_h(idx.k - idx.m, 2);
    for (int i = 0; i < idx.m; ++i) r = r * ElemSymExpr::e(2);
    return r;
}

// s_{(p,q,r)}(x,y,z) as a polynomial in e1, e2, e3 (Jacobi-Trudi on two rows
// after peeling e3^r).
inline ElemSymExpr schur3_to_elem(const SchurIndex3& idx) {
    int a = idx.p - idx.r, b = idx.q - idx.r;
    ElemSymExpr r = detail::complete_h(a, 3) * detail::complete_h(b, 3) -
                    detail::complete_h(a + 1, 3) * detail::complete_h(b - 1, 3);
    for (int i = 0; i < idx.r; ++i) r = r * ElemSymExpr::e(3);
    return r;
}

}  // namespace sfc
