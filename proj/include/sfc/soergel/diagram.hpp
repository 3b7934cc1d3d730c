#pragma once

// Sliced diagrams for the one-row Soergel calculus: objects are sequences of
// colors 1..n, morphisms are vertical stacks of horizontal generator words.
// Planarity lives in the sliced representation together with the interchange
// congruence; diagrams are kept in a "greedy fall" normal form so structural
// equality decides equality modulo interchange.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "sfc/rational.hpp"

namespace sfc::soergel {

enum class GenKind : std::uint8_t { Id, StartDot, EndDot, Merge, Split, Cross, SixUp };

struct ElemGen {
    GenKind kind = GenKind::Id;
    int j = 0, k = 0;  // colors; k used by Cross/SixUp

    static ElemGen id(int j) { return {GenKind::Id, j, 0}; }
    static ElemGen start(int j) { return {GenKind::StartDot, j, 0}; }
    static ElemGen end(int j) { return {GenKind::EndDot, j, 0}; }
    static ElemGen merge(int j) { return {GenKind::Merge, j, 0}; }
    static ElemGen split(int j) { return {GenKind::Split, j, 0}; }
    static ElemGen cross(int j, int k) {
        if (std::abs(j - k) <= 1) throw std::domain_error("color constraint: cross needs distant colors");
        return {GenKind::Cross, j, k};
    }
    static ElemGen six(int j, int k) {
        if (std::abs(j - k) != 1) throw std::domain_error("color constraint: six needs adjacent colors");
        return {GenKind::SixUp, j, k};
    }

    std::vector<int> domain() const {
        switch (kind) {
            case GenKind::Id: return {j};
            case GenKind::StartDot: return {};
            case GenKind::EndDot: return {j};
            case GenKind::Merge: return {j, j};
            case GenKind::Split: return {j};
            case GenKind::Cross: return {j, k};
            case GenKind::SixUp: return {j, k, j};
        }
        return {};
    }
    std::vector<int> codomain() const {
        switch (kind) {
            case GenKind::Id: return {j};
            case GenKind::StartDot: return {j};
            case GenKind::EndDot: return {};
            case GenKind::Merge: return {j};
            case GenKind::Split: return {j, j};
            case GenKind::Cross: return {k, j};
            case GenKind::SixUp: return {k, j, k};
        }
        return {};
    }
    int degree() const {
        switch (kind) {
            case GenKind::StartDot:
            case GenKind::EndDot: return 1;
            case GenKind::Merge:
            case GenKind::Split: return -1;
            default: return 0;
        }
    }
    // vertical reflection; the flipped 6-vertex is identified with the
    // opposite chirality (the rotation relations make them equal)
    ElemGen flipped() const {
        switch (kind) {
            case GenKind::StartDot: return end(j);
            case GenKind::EndDot: return start(j);
            case GenKind::Merge: return split(j);
            case GenKind::Split: return merge(j);
            case GenKind::Cross: return {GenKind::Cross, k, j};
            case GenKind::SixUp: return {GenKind::SixUp, k, j};
            default: return *this;
        }
    }
    // left-right mirror
    ElemGen mirrored() const {
        switch (kind) {
            case GenKind::Cross: return {GenKind::Cross, k, j};
            default: return *this;
        }
    }

    friend auto operator<=>(const ElemGen&, const ElemGen&) = default;
};

using Slice = std::vector<ElemGen>;

inline std::vector<int> slice_domain(const Slice& s) {
    std::vector<int> out;
    for (const auto& g : s) {
        auto d = g.domain();
        out.insert(out.end(), d.begin(), d.end());
    }
    return out;
}
inline std::vector<int> slice_codomain(const Slice& s) {
    std::vector<int> out;
    for (const auto& g : s) {
        auto d = g.codomain();
        out.insert(out.end(), d.begin(), d.end());
    }
    return out;
}

class Diagram {
public:
    Diagram(int n, std::vector<int> domain) : n_(n), dom_(std::move(domain)) {
        for (int c : dom_)
            if (c < 1 || c > n_) throw std::domain_error("color out of range");
    }

    int n() const { return n_; }
    const std::vector<int>& domain() const { return dom_; }
    std::vector<int> codomain() const {
        return slices_.empty() ? dom_ : slice_codomain(slices_.back());
    }
    const std::vector<Slice>& slices() const { return slices_; }

    // append a slice (must compose with the current codomain)
    Diagram& then(Slice s) {
        if (slice_domain(s) != codomain()) {
            std::ostringstream os;
            os << "composition error: slice domain [";
            for (int c : slice_domain(s)) os << c << " ";
            os << "] does not match codomain [";
            for (int c : codomain()) os << c << " ";
            os << "]";
            throw std::domain_error(os.str());
        }
        for (const auto& g : s) check_colors(g);
        slices_.push_back(std::move(s));
        return *this;
    }

    int degree() const {
        int d = 0;
        for (const auto& s : slices_)
            for (const auto& g : s) d += g.degree();
        return d;
    }

    size_t gen_count() const {
        size_t c = 0;
        for (const auto& s : slices_)
            for (const auto& g : s)
                if (g.kind != GenKind::Id) ++c;
        return c;
    }
    size_t count_kind(GenKind k) const {
        size_t c = 0;
        for (const auto& s : slices_)
            for (const auto& g : s)
                if (g.kind == k) ++c;
        return c;
    }

    static Diagram identity(int n, std::vector<int> domain) { return Diagram(n, std::move(domain)); }

    friend Diagram compose(const Diagram& f, const Diagram& g) {
        if (f.n_ != g.n_) throw std::domain_error("color count mismatch");
        if (f.codomain() != g.domain()) {
            std::ostringstream os;
            os << "composition error: codomain [";
            for (int c : f.codomain()) os << c << " ";
            os << "] vs domain [";
            for (int c : g.domain()) os << c << " ";
            os << "]";
            throw std::domain_error(os.str());
        }
        Diagram r = f;
        for (const auto& s : g.slices_) r.slices_.push_back(s);
        return r;
    }

    friend Diagram tensor(const Diagram& f, const Diagram& g) {
        if (f.n_ != g.n_) throw std::domain_error("color count mismatch");
        std::vector<int> dom = f.dom_;
        dom.insert(dom.end(), g.dom_.begin(), g.dom_.end());
        Diagram r(f.n_, dom);
        size_t h = std::max(f.slices_.size(), g.slices_.size());
        std::vector<int> fcur = f.dom_, gcur = g.dom_;
        for (size_t i = 0; i < h; ++i) {
            Slice s;
            if (i < f.slices_.size()) {
                s = f.slices_[i];
                fcur = slice_codomain(f.slices_[i]);
            } else {
                for (int c : fcur) s.push_back(ElemGen::id(c));
            }
            if (i < g.slices_.size()) {
                for (const auto& x : g.slices_[i]) s.push_back(x);
                gcur = slice_codomain(g.slices_[i]);
            } else {
                for (int c : gcur) s.push_back(ElemGen::id(c));
            }
            r.slices_.push_back(std::move(s));
        }
        return r;
    }

    Diagram flipped() const {
        Diagram r(n_, codomain());
        for (auto it = slices_.rbegin(); it != slices_.rend(); ++it) {
            Slice s;
            for (const auto& g : *it) s.push_back(g.flipped());
            r.then(std::move(s));
        }
        return r;
    }

    Diagram mirrored() const {
        std::vector<int> dom(dom_.rbegin(), dom_.rend());
        Diagram r(n_, dom);
        for (const auto& sl : slices_) {
            Slice s;
            for (auto it = sl.rbegin(); it != sl.rend(); ++it) s.push_back(it->mirrored());
            r.then(std::move(s));
        }
        return r;
    }

    // translate all colors by delta
    Diagram shifted(int delta, int new_n) const {
        std::vector<int> dom;
        for (int c : dom_) dom.push_back(c + delta);
        Diagram r(new_n, dom);
        for (const auto& sl : slices_) {
            Slice s;
            for (auto g : sl) {
                g.j += delta;
                if (g.kind == GenKind::Cross || g.kind == GenKind::SixUp) g.k += delta;
                s.push_back(g);
            }
            r.slices_.push_back(std::move(s));
        }
        return r;
    }

    // Greedy-fall interchange normal form: every generator is moved as early
    // as possible (a generator falls when the previous slice is the identity
    // on its whole input span and, for generators without inputs, the landing
    // gap does not split a generator's outputs). Identity slices are dropped.
    void canonicalize() {
        // drop identity slices
        auto all_id = [](const Slice& s) {
            return std::all_of(s.begin(), s.end(),
                               [](const ElemGen& g) { return g.kind == GenKind::Id; });
        };
        std::erase_if(slices_, all_id);
        bool changed = true;
        while (changed) {
            changed = false;
            for (size_t t = 1; t < slices_.size(); ++t) {
                // attempt to move each non-Id generator of slice t down
                Slice& above = slices_[t];
                Slice& below = slices_[t - 1];
                // positions of slice t's domain wires within below's codomain
                // = identity since they're equal sequences
                size_t in_pos = 0;  // wire offset within slices_[t]'s domain
                for (size_t gi = 0; gi < above.size(); ++gi) {
                    ElemGen g = above[gi];
                    size_t arity = g.domain().size();
                    if (g.kind == GenKind::Id) {
                        ++in_pos;
                        continue;
                    }
                    if (try_fall(t, gi, in_pos)) {
                        changed = true;
                        break;
                    }
                    in_pos += arity;
                }
                if (changed) break;
            }
            if (changed) std::erase_if(slices_, all_id);
        }
    }

    Diagram canonical() const {
        Diagram d = *this;
        d.canonicalize();
        return d;
    }

    // one non-identity generator per slice, left to right
    Diagram exploded() const {
        Diagram r(n_, dom_);
        for (const auto& sl : slices_) {
            std::vector<int> before;  // colors already passed within this slice
            std::vector<int> after = slice_domain(sl);
            for (const auto& g : sl) {
                size_t ar = g.domain().size();
                if (g.kind == GenKind::Id) {
                    before.push_back(g.j);
                    after.erase(after.begin());
                    continue;
                }
                Slice s;
                for (int c : before) s.push_back(ElemGen::id(c));
                s.push_back(g);
                for (size_t i = ar; i < after.size(); ++i) s.push_back(ElemGen::id(after[i]));
                r.then(std::move(s));
                for (int c : g.codomain()) before.push_back(c);
                after.erase(after.begin(), after.begin() + ar);
            }
        }
        return r;
    }

    friend bool operator==(const Diagram& a, const Diagram& b) {
        return a.n_ == b.n_ && a.dom_ == b.dom_ && a.slices_ == b.slices_;
    }
    friend auto operator<=>(const Diagram& a, const Diagram& b) {
        if (auto c = a.n_ <=> b.n_; c != 0) return c;
        if (auto c = a.dom_ <=> b.dom_; c != 0) return c;
        return a.slices_ <=> b.slices_;
    }

    std::string str() const;

private:
    void check_colors(const ElemGen& g) const {
        if (g.kind == GenKind::Id && g.j == 0) return;
        auto chk = [&](int c) {
            if (c < 1 || c > n_) throw std::domain_error("color out of range");
        };
        chk(g.j);
        if (g.kind == GenKind::Cross || g.kind == GenKind::SixUp) chk(g.k);
    }

    // Move generator gi of slice t (whose input span starts at wire in_pos)
    // into slice t-1 if legal. Returns true on success.
    bool try_fall(size_t t, size_t gi, size_t in_pos) {
        Slice& above = slices_[t];
        Slice& below = slices_[t - 1];
        ElemGen g = above[gi];
        size_t arity = g.domain().size();

        // locate which generators of `below` produce wires [in_pos, in_pos+arity)
        size_t wire = 0;
        std::vector<size_t> producers;  // indices into below
        std::vector<size_t> out_base(below.size());
        for (size_t bi = 0; bi < below.size(); ++bi) {
            out_base[bi] = wire;
            wire += below[bi].codomain().size();
        }
        auto producer_of = [&](size_t w) -> std::optional<size_t> {
            for (size_t bi = below.size(); bi-- > 0;) {
                size_t base = out_base[bi], cnt = below[bi].codomain().size();
                if (w >= base && w < base + cnt) return bi;
            }
            return std::nullopt;
        };

        if (arity == 0) {
            // a StartDot falls into the gap at in_pos when the gap does not
            // split a generator's outputs
            std::optional<size_t> leftp, rightp;
            if (in_pos > 0) leftp = producer_of(in_pos - 1);
            if (in_pos < wire) rightp = producer_of(in_pos);
            if (leftp && rightp && *leftp == *rightp) return false;
            // insertion index in `below`: after leftp (or at front)
            size_t at = leftp ? *leftp + 1 : 0;
            below.insert(below.begin() + at, g);
            above[gi] = ElemGen::id(g.j);
            return true;
        }

        for (size_t w = in_pos; w < in_pos + arity; ++w) {
            auto p = producer_of(w);
            if (!p || below[*p].kind != GenKind::Id) return false;
            producers.push_back(*p);
        }
        // contiguous identity run in `below`
        for (size_t i = 1; i < producers.size(); ++i)
            if (producers[i] != producers[i - 1] + 1) return false;

        // replace those identities by g, and g's slot above by identities on
        // its outputs
        size_t first = producers.front();
        below.erase(below.begin() + first, below.begin() + first + arity);
        below.insert(below.begin() + first, g);
        Slice repl;
        for (int c : g.codomain()) repl.push_back(ElemGen::id(c));
        above.erase(above.begin() + gi);
        above.insert(above.begin() + gi, repl.begin(), repl.end());
        return true;
    }

    int n_;
    std::vector<int> dom_;
    std::vector<Slice> slices_;
};

inline std::string Diagram::str() const {
    std::ostringstream os;
    auto gen_str = [](const ElemGen& g) {
        switch (g.kind) {
            case GenKind::Id: return "id(" + std::to_string(g.j) + ")";
            case GenKind::StartDot: return "start(" + std::to_string(g.j) + ")";
            case GenKind::EndDot: return "end(" + std::to_string(g.j) + ")";
            case GenKind::Merge: return "merge(" + std::to_string(g.j) + ")";
            case GenKind::Split: return "split(" + std::to_string(g.j) + ")";
            case GenKind::Cross:
                return "cross(" + std::to_string(g.j) + "," + std::to_string(g.k) + ")";
            case GenKind::SixUp:
                return "six(" + std::to_string(g.j) + "," + std::to_string(g.k) + ")";
        }
        return std::string("?");
    };
    if (slices_.empty()) {
        os << "id[";
        for (size_t i = 0; i < dom_.size(); ++i) os << (i ? "," : "") << dom_[i];
        os << "]";
        return os.str();
    }
    for (size_t t = 0; t < slices_.size(); ++t) {
        if (t) os << " ; ";
        bool first = true;
        if (slices_[t].empty()) os << "empty";
        for (const auto& g : slices_[t]) {
            if (!first) os << " * ";
            first = false;
            os << gen_str(g);
        }
    }
    return os.str();
}

// Formal linear combination of diagrams with a common boundary.
class Morphism {
public:
    Morphism(int n, std::vector<int> dom, std::vector<int> cod)
        : n_(n), dom_(std::move(dom)), cod_(std::move(cod)) {}

    explicit Morphism(Diagram d, Rational c = Rational(1))
        : n_(d.n()), dom_(d.domain()), cod_(d.codomain()) {
        add(std::move(d), c);
    }

    int n() const { return n_; }
    const std::vector<int>& domain() const { return dom_; }
    const std::vector<int>& codomain() const { return cod_; }
    const std::vector<std::pair<Rational, Diagram>>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add(Diagram d, const Rational& c) {
        if (d.n() != n_ || d.domain() != dom_ || d.codomain() != cod_)
            throw std::domain_error("morphism term boundary mismatch");
        d.canonicalize();
        auto it = std::lower_bound(terms_.begin(), terms_.end(), d,
                                   [](const auto& p, const Diagram& x) { return p.second < x; });
        if (it != terms_.end() && it->second == d) {
            it->first += c;
            if (it->first.is_zero()) terms_.erase(it);
        } else if (!c.is_zero()) {
            terms_.insert(it, {c, std::move(d)});
        }
    }

    friend Morphism operator+(const Morphism& a, const Morphism& b) {
        Morphism r = a;
        for (const auto& [c, d] : b.terms_) r.add(d, c);
        return r;
    }
    friend Morphism operator-(const Morphism& a, const Morphism& b) {
        Morphism r = a;
        for (const auto& [c, d] : b.terms_) r.add(d, -c);
        return r;
    }
    friend Morphism operator*(const Rational& c, const Morphism& a) {
        Morphism r(a.n_, a.dom_, a.cod_);
        for (const auto& [x, d] : a.terms_) r.add(d, c * x);
        return r;
    }
    friend Morphism compose(const Morphism& f, const Morphism& g) {
        Morphism r(f.n_, f.dom_, g.cod_);
        if (f.cod_ != g.dom_) throw std::domain_error("composition error (morphism boundaries)");
        for (const auto& [cf, df] : f.terms_)
            for (const auto& [cg, dg] : g.terms_) r.add(compose(df, dg), cf * cg);
        return r;
    }
    friend Morphism tensor(const Morphism& f, const Morphism& g) {
        std::vector<int> dom = f.dom_, cod = f.cod_;
        dom.insert(dom.end(), g.dom_.begin(), g.dom_.end());
        cod.insert(cod.end(), g.cod_.begin(), g.cod_.end());
        Morphism r(f.n_, dom, cod);
        for (const auto& [cf, df] : f.terms_)
            for (const auto& [cg, dg] : g.terms_) r.add(tensor(df, dg), cf * cg);
        return r;
    }
    friend bool operator==(const Morphism& a, const Morphism& b) {
        return a.n_ == b.n_ && a.dom_ == b.dom_ && a.cod_ == b.cod_ && a.terms_ == b.terms_;
    }

    // defined when every term has the same degree
    std::optional<int> degree() const {
        std::optional<int> d;
        for (const auto& [c, t] : terms_) {
            int td = t.degree();
            if (!d)
                d = td;
            else if (*d != td)
                return std::nullopt;
        }
        return d;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [c, d] : terms_) {
            if (!first) os << "  +  ";
            first = false;
            os << c << " { " << d.str() << " }";
        }
        return os.str();
    }

private:
    int n_;
    std::vector<int> dom_, cod_;
    std::vector<std::pair<Rational, Diagram>> terms_;
};

// Commutative polynomial in the color barbells b_1..b_n: the normal form of
// closed morphisms.
class BarbellPoly {
public:
    explicit BarbellPoly(int n) : n_(n) {}
    static BarbellPoly unit(int n) {
        BarbellPoly p(n);
        p.terms_[std::vector<int>(n, 0)] = Rational(1);
        return p;
    }
    static BarbellPoly barbell(int n, int j) {
        BarbellPoly p(n);
        std::vector<int> e(n, 0);
        e.at(j - 1) = 1;
        p.terms_[e] = Rational(1);
        return p;
    }

    int n() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<std::vector<int>, Rational>& terms() const { return terms_; }

    void add(const std::vector<int>& e, const Rational& c) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            if (!c.is_zero()) terms_[e] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    friend BarbellPoly operator+(const BarbellPoly& a, const BarbellPoly& b) {
        BarbellPoly r = a;
        for (const auto& [e, c] : b.terms_) r.add(e, c);
        return r;
    }
    friend BarbellPoly operator-(const BarbellPoly& a, const BarbellPoly& b) {
        BarbellPoly r = a;
        for (const auto& [e, c] : b.terms_) r.add(e, -c);
        return r;
    }
    friend BarbellPoly operator*(const BarbellPoly& a, const BarbellPoly& b) {
        BarbellPoly r(a.n_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                std::vector<int> e(a.n_);
                for (int i = 0; i < a.n_; ++i) e[i] = ea[i] + eb[i];
                r.add(e, ca * cb);
            }
        return r;
    }
    friend BarbellPoly operator*(const Rational& c, const BarbellPoly& a) {
        BarbellPoly r(a.n_);
        for (const auto& [e, v] : a.terms_) r.add(e, c * v);
        return r;
    }
    friend bool operator==(const BarbellPoly& a, const BarbellPoly& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }

    // exact division; throws when not divisible
    friend BarbellPoly div_exact(BarbellPoly a, const BarbellPoly& b) {
        if (b.is_zero()) throw std::domain_error("barbell poly division by zero");
        BarbellPoly q(a.n_);
        auto lead = *b.terms_.rbegin();
        while (!a.is_zero()) {
            auto la = *a.terms_.rbegin();
            std::vector<int> e(a.n_);
            for (int i = 0; i < a.n_; ++i) {
                e[i] = la.first[i] - lead.first[i];
                if (e[i] < 0) throw std::domain_error("barbell poly division fails");
            }
            BarbellPoly t(a.n_);
            t.add(e, la.second / lead.second);
            q = q + t;
            a = a - t * b;
        }
        return q;
    }

    // degree 2 per barbell; -1 for zero
    int degree() const {
        int d = -1;
        for (const auto& [e, c] : terms_) {
            int s = 0;
            for (int x : e) s += x;
            d = std::max(d, 2 * s);
        }
        return d;
    }
    bool homogeneous() const {
        int d = -2;
        for (const auto& [e, c] : terms_) {
            int s = 0;
            for (int x : e) s += x;
            if (d == -2) d = s;
            if (s != d) return false;
        }
        return true;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            if (!first) os << " + ";
            first = false;
            os << c;
            for (int i = 0; i < n_; ++i)
                if (e[i]) {
                    os << "*b" << i + 1;
                    if (e[i] > 1) os << "^" << e[i];
                }
        }
        return os.str();
    }

private:
    int n_;
    std::map<std::vector<int>, Rational> terms_;
};

}  // namespace sfc::soergel
