#pragma once

#include <map>
#include <sstream>
#include <stdexcept>

#include "sfc/rational.hpp"

namespace sfc {

// Laurent polynomial in q with exact rational coefficients, sparse.
class LaurentPoly {
public:
    LaurentPoly() = default;
    explicit LaurentPoly(Rational c) {
        if (!c.is_zero()) coeffs_[0] = c;
    }
    static LaurentPoly monomial(int exp, Rational c = Rational(1)) {
        LaurentPoly p;
        if (!c.is_zero()) p.coeffs_[exp] = c;
        return p;
    }

    const std::map<int, Rational>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    Rational coeff(int exp) const {
        auto it = coeffs_.find(exp);
        return it == coeffs_.end() ? Rational(0) : it->second;
    }

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r = a;
        for (const auto& [e, c] : b.coeffs_) r.add(e, c);
        return r;
    }
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r = a;
        for (const auto& [e, c] : b.coeffs_) r.add(e, -c);
        return r;
    }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r;
        for (const auto& [ea, ca] : a.coeffs_)
            for (const auto& [eb, cb] : b.coeffs_) r.add(ea + eb, ca * cb);
        return r;
    }
    LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.coeffs_ == b.coeffs_;
    }

    // Exact division; throws if the divisor does not divide evenly.
    friend LaurentPoly div_exact(LaurentPoly a, const LaurentPoly& b) {
        if (b.is_zero()) throw std::domain_error("laurent division by zero");
        LaurentPoly q;
        auto lead = *b.coeffs_.rbegin();
        while (!a.is_zero()) {
            auto la = *a.coeffs_.rbegin();
            LaurentPoly t = monomial(la.first - lead.first, la.second / lead.second);
            q += t;
            a = a - t * b;
            if (!a.is_zero() && a.coeffs_.rbegin()->first >= la.first)
                throw std::domain_error("laurent division does not terminate");
        }
        return q;
    }

    Rational eval_at_one() const {
        Rational s(0);
        for (const auto& [e, c] : coeffs_) s += c;
        return s;
    }
    bool palindromic() const {
        for (const auto& [e, c] : coeffs_)
            if (coeff(-e) != c) return false;
        return true;
    }

    std::string str() const {
        if (coeffs_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : coeffs_) {
            if (!first) os << " + ";
            first = false;
            if (e == 0)
                os << c;
            else if (c == Rational(1))
                os << "q^" << e;
            else
                os << c << "*q^" << e;
        }
        return os.str();
    }

private:
    void add(int e, const Rational& c) {
        auto it = coeffs_.find(e);
        if (it == coeffs_.end()) {
            if (!c.is_zero()) coeffs_[e] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) coeffs_.erase(it);
        }
    }
    std::map<int, Rational> coeffs_;
};

// Balanced quantum integer [n] = q^{-(n-1)} + q^{-(n-3)} + ... + q^{n-1}.
inline LaurentPoly qint(int n) {
    LaurentPoly p;
    for (int e = -(n - 1); e <= n - 1; e += 2) p += LaurentPoly::monomial(e);
    return p;
}

// Balanced quantum binomial [N choose k]; throws on out-of-range k.
inline LaurentPoly qbinom(int N, int k) {
    if (k < 0 || k > N) throw std::domain_error("invalid binomial");
    LaurentPoly num(Rational(1)), den(Rational(1));
    for (int i = 1; i <= k; ++i) {
        num *= qint(N - k + i);
        den *= qint(i);
    }
    return div_exact(num, den);
}

}  // namespace sfc
