#pragma once

#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "sfc/rational.hpp"

namespace sfc {

// Element of the truncated dotted-sheet ring End(1_m) = (x)_{i=1..m} Q[x_i]/(x_i^N).
// Exponent vectors are kept in a canonical ordered map, so equality is structural.
class DotRingElem {
public:
    using Expo = std::vector<std::uint8_t>;

    DotRingElem(int m, int N) : m_(m), N_(N) {
        if (m < 0 || N < 1) throw std::domain_error("bad dot ring parameters");
    }
    static DotRingElem one(int m, int N) {
        DotRingElem e(m, N);
        e.terms_[Expo(m, 0)] = Rational(1);
        return e;
    }
    static DotRingElem zero(int m, int N) { return DotRingElem(m, N); }
    // x_i (1-based sheet index)
    static DotRingElem var(int m, int N, int i) {
        DotRingElem e(m, N);
        Expo ex(m, 0);
        ex.at(i - 1) = 1;
        if (N > 1) e.terms_[ex] = Rational(1);
        return e;
    }

    int sheets() const { return m_; }
    int level() const { return N_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Expo, Rational>& terms() const { return terms_; }

    Rational coeff(const Expo& ex) const {
        auto it = terms_.find(ex);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add_term(const Expo& ex, const Rational& c) {
        if (static_cast<int>(ex.size()) != m_) throw std::domain_error("exponent arity");
        for (auto a : ex)
            if (a >= N_) return;  // truncated away
        auto it = terms_.find(ex);
        if (it == terms_.end()) {
            if (!c.is_zero()) terms_[ex] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    friend DotRingElem operator+(const DotRingElem& a, const DotRingElem& b) {
        a.check(b);
        DotRingElem r = a;
        for (const auto& [ex, c] : b.terms_) r.add_term(ex, c);
        return r;
    }
    friend DotRingElem operator-(const DotRingElem& a, const DotRingElem& b) {
        a.check(b);
        DotRingElem r = a;
        for (const auto& [ex, c] : b.terms_) r.add_term(ex, -c);
        return r;
    }
    friend DotRingElem operator*(const DotRingElem& a, const DotRingElem& b) {
        a.check(b);
        DotRingElem r(a.m_, a.N_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                Expo ex(a.m_);
                bool dead = false;
                for (int i = 0; i < a.m_; ++i) {
                    int s = ea[i] + eb[i];
                    if (s >= a.N_) {
                        dead = true;
                        break;
                    }
                    ex[i] = static_cast<std::uint8_t>(s);
                }
                if (!dead) r.add_term(ex, ca * cb);
            }
        return r;
    }
    friend DotRingElem operator*(const Rational& c, const DotRingElem& a) {
        DotRingElem r(a.m_, a.N_);
        for (const auto& [ex, v] : a.terms_) r.add_term(ex, c * v);
        return r;
    }
    DotRingElem& operator+=(const DotRingElem& o) { return *this = *this + o; }
    DotRingElem& operator*=(const DotRingElem& o) { return *this = *this * o; }

    DotRingElem pow(int e) const {
        DotRingElem r = one(m_, N_), b = *this;
        for (; e; e >>= 1, b = b * b)
            if (e & 1) r = r * b;
        return r;
    }

    friend bool operator==(const DotRingElem& a, const DotRingElem& b) {
        return a.m_ == b.m_ && a.N_ == b.N_ && a.terms_ == b.terms_;
    }

    // Degree in q-units (each dot has q-degree 2); -1 for the zero element.
    int max_qdegree() const {
        int d = -1;
        for (const auto& [ex, c] : terms_) {
            int s = 0;
            for (auto a : ex) s += a;
            d = std::max(d, 2 * s);
        }
        return d;
    }
    bool homogeneous() const {
        int d = -2;
        for (const auto& [ex, c] : terms_) {
            int s = 0;
            for (auto a : ex) s += a;
            if (d == -2) d = s;
            if (s != d) return false;
        }
        return true;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [ex, c] : terms_) {
            if (!first) os << " + ";
            first = false;
            os << c;
            for (int i = 0; i < m_; ++i)
                if (ex[i]) {
                    os << "*x" << i + 1;
                    if (ex[i] > 1) os << "^" << int(ex[i]);
                }
        }
        return os.str();
    }

private:
    void check(const DotRingElem& o) const {
        if (m_ != o.m_ || N_ != o.N_) throw std::domain_error("dot ring parameter mismatch");
    }
    int m_, N_;
    std::map<Expo, Rational> terms_;
};

// Close every sheet to a sphere after adding `extra` dots: the coefficient of
// prod x_i^{N-1} in e * prod x_i^{extra_i}. Each sphere with exactly N-1 dots
// evaluates to 1 and all other dotted spheres vanish.
inline Rational closure_pairing(const DotRingElem& e, const std::vector<int>& extra) {
    if (static_cast<int>(extra.size()) != e.sheets())
        throw std::domain_error("closure_pairing: extra arity");
    Rational total(0);
    int N = e.level();
    for (const auto& [ex, c] : e.terms()) {
        bool hit = true;
        for (int i = 0; i < e.sheets(); ++i)
            if (ex[i] + extra[i] != N - 1) {
                hit = false;
                break;
            }
        if (hit) total += c;
    }
    return total;
}

}  // namespace sfc
