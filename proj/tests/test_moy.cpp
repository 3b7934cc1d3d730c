#include <catch2/catch_amalgamated.hpp>

#include "moy_oracle.hpp"
#include "sfc/moy.hpp"

using namespace sfc;
using namespace sfc::moy;

namespace {
LadderWord word(int m, std::initializer_list<int> pos) {
    LadderWord lw;
    lw.m = m;
    for (int p : pos) lw.word.push_back({p, false});
    return lw;
}

// all rung-position words of given length on m strands
std::vector<LadderWord> all_words(int m, int len) {
    std::vector<LadderWord> out;
    std::vector<int> cur(len, 1);
    while (true) {
        LadderWord lw;
        lw.m = m;
        for (int p : cur) lw.word.push_back({p, false});
        out.push_back(lw);
        int i = 0;
        while (i < len && cur[i] == m - 1) cur[i++] = 1;
        if (i == len) break;
        cur[i]++;
    }
    return out;
}
}  // namespace

TEST_CASE("circles evaluate to balanced quantum binomials") {
    WebGraph g;
    g.circles = {1};
    CHECK(moy_eval(g, 4) == qbinom(4, 1));
    g.circles = {2};
    CHECK(moy_eval(g, 4) == qbinom(4, 2));
    g.circles = {3, 1};
    CHECK(moy_eval(g, 5) == qbinom(5, 3) * qbinom(5, 1));
}

TEST_CASE("single rung closure: digon times circle") {
    // theta-like web: [2][N,2]
    auto lw = word(2, {1});
    CHECK(moy_eval(lw, 4) == qint(2) * qbinom(4, 2));
    CHECK(moy_eval(lw, 4) == sfctest::moy_state_sum(lw, 4));
}

TEST_CASE("reduction matches the state-sum oracle on small webs (N=4)") {
    // every rung word with <= 4 rungs on 2..4 strands (covers all corpus webs
    // with <= 8 edges, with room to spare)
    for (int m = 2; m <= 4; ++m)
        for (int len = 0; len <= (m == 4 ? 3 : 4); ++len)
            for (const auto& lw : all_words(m, len)) {
                INFO("m=" << m << " len=" << len);
                LaurentPoly a = moy_eval(lw, 4);
                LaurentPoly b = sfctest::moy_state_sum(lw, 4);
                REQUIRE(a == b);
            }
}

TEST_CASE("reduction is independent of scan order") {
    for (int m = 2; m <= 4; ++m)
        for (const auto& lw : all_words(m, 3)) {
            CHECK(moy_eval(lw, 4, false) == moy_eval(lw, 4, true));
        }
    // and on the relation-18 closure web
    LadderWord r18 = ladder_closure(4, {1, 2, 3, 2, 1}, {3, 2, 1, 2, 3});
    CHECK(moy_eval(r18, 4, false) == moy_eval(r18, 4, true));
}

TEST_CASE("corpus webs are palindromic in q") {
    for (int m = 2; m <= 4; ++m)
        for (const auto& lw : all_words(m, 3)) CHECK(moy_eval(lw, 4).palindromic());
}

TEST_CASE("graph recovery round-trip") {
    for (int m = 2; m <= 4; ++m)
        for (const auto& lw : all_words(m, 3)) {
            WebGraph g = ladder_word_to_graph(lw);
            g.validate();
            CHECK(moy_eval(g, 4) == moy_eval(lw, 4));
        }
}

TEST_CASE("degree-zero dimensions under the documented shift") {
    // End(1_m): constants only
    for (int m = 1; m <= 4; ++m)
        CHECK(degree_zero_dim(m, {}, {}, 4) == Rational(1));
    // End(w_j): one-dimensional degree-zero part
    CHECK(degree_zero_dim(2, {1}, {1}, 4) == Rational(1));
    CHECK(degree_zero_dim(4, {2}, {2}, 5) == Rational(1));
    // Hom(w_1 w_2 w_1, w_2 w_1 w_2): the 6-vertex is the unique degree-0 map
    CHECK(degree_zero_dim(3, {1, 2, 1}, {2, 1, 2}, 4) == Rational(1));
    // End(w_1 w_2 w_1) is two-dimensional in degree zero
    CHECK(degree_zero_dim(3, {1, 2, 1}, {1, 2, 1}, 4) == Rational(2));
}

TEST_CASE("relation-18 closure web has dimension one in degree zero") {
    for (int N : {4, 5}) {
        CHECK(degree_zero_dim(4, {1, 2, 3, 2, 1}, {3, 2, 1, 2, 3}, N) == Rational(1));
    }
}

TEST_CASE("label-1 circle components factor out") {
    auto lw = word(3, {1});  // strand 3 untouched -> circle factor [N]
    CHECK(moy_eval(lw, 4) == qint(4) * qint(2) * qbinom(4, 2));
}

TEST_CASE("irreducible input reports an error") {
    WebGraph g;  // a malformed web: single 2-edge between mismatched vertices
    g.vertices.resize(2);
    g.vertices[0] = {true, {1, 2}, {0}};
    g.vertices[1] = {false, {0}, {1, 2}};
    g.edges = {{2, 0, 1}, {1, 1, 0}, {2, 1, 0}};
    CHECK_THROWS(moy_eval(g, 4));
}
