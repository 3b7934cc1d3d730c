#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "poly_util.hpp"
#include "sfc/dotring.hpp"
#include "sfc/laurent.hpp"
#include "sfc/rational.hpp"
#include "sfc/schur.hpp"

using namespace sfc;
using sfctest::MPoly;

TEST_CASE("rational arithmetic is exact and reduced") {
    Rational a(2, 4);
    CHECK(a == Rational(1, 2));
    CHECK((a + Rational(1, 3)) == Rational(5, 6));
    CHECK((Rational(3, 7) * Rational(7, 3)) == Rational(1));
    CHECK((Rational(1) / Rational(-2)) == Rational(-1, 2));
    CHECK(Rational(-4, -6) == Rational(2, 3));
    CHECK(Rational::from_string("-3/9") == Rational(-1, 3));
    CHECK_THROWS(Rational(1, 0));
}

TEST_CASE("quantum binomials") {
    // (N=4, k=1) -> q^-3 + q^-1 + q + q^3
    LaurentPoly b41 = qbinom(4, 1);
    CHECK(b41 == qint(4));
    CHECK(b41.coeff(-3) == Rational(1));
    CHECK(b41.coeff(1) == Rational(1));

    // (N, 0) -> 1
    CHECK(qbinom(7, 0) == LaurentPoly(Rational(1)));

    // (N=4, k=2) -> q^-4 + q^-2 + 2 + q^2 + q^4
    LaurentPoly b42 = qbinom(4, 2);
    CHECK(b42.coeff(0) == Rational(2));
    CHECK(b42.coeff(-4) == Rational(1));
    CHECK(b42.coeff(2) == Rational(1));

    CHECK_THROWS(qbinom(4, 5));
    CHECK_THROWS(qbinom(4, -1));
}

TEST_CASE("qbinom symmetry and q=1 specialization") {
    for (int N = 1; N <= 8; ++N)
        for (int k = 0; k <= N; ++k) {
            LaurentPoly b = qbinom(N, k);
            CHECK(b == qbinom(N, N - k));
            CHECK(b.palindromic());
            long binom = 1;
            for (int i = 1; i <= k; ++i) binom = binom * (N - k + i) / i;
            CHECK(b.eval_at_one() == Rational(binom));
        }
}

TEST_CASE("dot ring truncation and ring laws") {
    const int m = 3, N = 4;
    auto x1 = DotRingElem::var(m, N, 1);
    auto x2 = DotRingElem::var(m, N, 2);

    SECTION("x_i^{N-1} * x_i = 0") {
        for (int i = 1; i <= m; ++i) {
            auto x = DotRingElem::var(m, N, i);
            CHECK(x.pow(N - 1) * x == DotRingElem::zero(m, N));
            CHECK_FALSE(x.pow(N - 1).is_zero());
        }
    }
    SECTION("commutative, associative, distributive (random sample)") {
        std::mt19937 rng(7);
        auto rand_elt = [&]() {
            DotRingElem e(m, N);
            for (int t = 0; t < 4; ++t) {
                DotRingElem::Expo ex(m);
                for (int i = 0; i < m; ++i) ex[i] = rng() % N;
                e.add_term(ex, Rational(static_cast<int>(rng() % 7) - 3));
            }
            return e;
        };
        for (int t = 0; t < 25; ++t) {
            auto a = rand_elt(), b = rand_elt(), c = rand_elt();
            CHECK(a * b == b * a);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
        }
    }
}

TEST_CASE("closure pairing basics") {
    const int m = 2, N = 4;
    auto x1 = DotRingElem::var(m, N, 1);
    auto x2 = DotRingElem::var(m, N, 2);

    // e = x1^{N-1} x2^{N-1}, extra = 0 -> 1
    CHECK(closure_pairing(x1.pow(3) * x2.pow(3), {0, 0}) == Rational(1));
    // e = 1, extra = all N-1 -> 1
    CHECK(closure_pairing(DotRingElem::one(m, N), {3, 3}) == Rational(1));
    // e = x1 - x2 (N=4), extra = (2,3) -> 1  (x2^4 term dies by truncation)
    CHECK(closure_pairing(x1 - x2, {2, 3}) == Rational(1));
    CHECK(closure_pairing(x1 - x2, {3, 2}) == Rational(-1));
}

namespace {
// substitute e_i by the concrete elementary symmetric polynomials and compare
// against the independent tableau oracle
void check_schur2(int k, int m) {
    auto expr = schur2_to_elem(SchurIndex2(k, m));
    MPoly value =
        expr.substitute(MPoly::one(2), sfctest::elem_sym(2, 1), sfctest::elem_sym(2, 2),
                        MPoly(2));
    CHECK(value == sfctest::schur_ssyt({k, m}, 2));
}
void check_schur3(int p, int q, int r) {
    auto expr = schur3_to_elem(SchurIndex3(p, q, r));
    MPoly value = expr.substitute(MPoly::one(3), sfctest::elem_sym(3, 1),
                                  sfctest::elem_sym(3, 2), sfctest::elem_sym(3, 3));
    CHECK(value == sfctest::schur_ssyt({p, q, r}, 3));
}
}  // namespace

TEST_CASE("schur expansions: pinned examples") {
    CHECK(schur2_to_elem(SchurIndex2(1, 0)) == ElemSymExpr::e(1));
    CHECK(schur2_to_elem(SchurIndex2(1, 1)) == ElemSymExpr::e(2));
    // (2,0) -> e1^2 - e2
    CHECK(schur2_to_elem(SchurIndex2(2, 0)) ==
          ElemSymExpr::e(1) * ElemSymExpr::e(1) - ElemSymExpr::e(2));
    CHECK(schur3_to_elem(SchurIndex3(1, 0, 0)) == ElemSymExpr::e(1));
    CHECK(schur3_to_elem(SchurIndex3(1, 1, 1)) == ElemSymExpr::e(3));
    // (2,1,0) -> e1 e2 - e3
    CHECK(schur3_to_elem(SchurIndex3(2, 1, 0)) ==
          ElemSymExpr::e(1) * ElemSymExpr::e(2) - ElemSymExpr::e(3));
}

TEST_CASE("schur expansions match the tableau oracle up to entries <= 6") {
    for (int k = 0; k <= 6; ++k)
        for (int m = 0; m <= k; ++m) check_schur2(k, m);
    for (int p = 0; p <= 6; ++p)
        for (int q = 0; q <= p; ++q)
            for (int r = 0; r <= q; ++r) check_schur3(p, q, r);
}

TEST_CASE("schur expansion degrees") {
    CHECK(schur2_to_elem(SchurIndex2(4, 2)).degree() == 6);
    CHECK(schur2_to_elem(SchurIndex2(4, 2)).homogeneous());
    CHECK(schur3_to_elem(SchurIndex3(3, 2, 1)).degree() == 6);
    CHECK(schur3_to_elem(SchurIndex3(3, 2, 1)).homogeneous());
}
