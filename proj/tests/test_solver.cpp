#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "llv/solver.hpp"

using namespace llv;

namespace {

Weight w_of(const Algebra& a, std::vector<int> coords) {
    std::vector<int> doubled;
    for (int c : coords) doubled.push_back(2 * c);
    doubled.resize(a.rank, 0);
    return Weight::from_doubled(doubled);
}

Decomposition dec_of(const Algebra& a,
                     std::vector<std::pair<std::vector<int>, int64_t>> parts) {
    Decomposition d(a);
    for (auto& [c, m] : parts) d.add(w_of(a, c), m);
    d.sort_canonical();
    return d;
}

// brute-force dominant-weight enumeration by bounded coordinates
std::vector<Weight> brute_enumerate(const Algebra& a, int64_t bound, int max_entry) {
    std::vector<Weight> out;
    std::vector<int> cur(a.rank);
    std::function<void(int)> rec = [&](int pos) {
        if (pos == a.rank) {
            Weight w = Weight::from_doubled(cur);
            if (!is_dominant_integral(a, w) || !w.is_integral()) return;
            if (weyl_dim(a, w) <= bound) out.push_back(w);
            return;
        }
        int hi = pos == 0 ? 2 * max_entry : cur[pos - 1];
        int lo = (a.family == Family::D && pos == a.rank - 1) ? -hi : 0;
        for (int v = hi; v >= lo; v -= 2) {
            cur[pos] = v;
            rec(pos + 1);
        }
    };
    rec(0);
    std::sort(out.begin(), out.end(),
              [&](const Weight& x, const Weight& y) { return weight_before(a, x, y); });
    return out;
}

}  // namespace

TEST_CASE("enumerate_weights reproduces the OG10 candidate pool") {
    Algebra d13 = Algebra::D(13);
    auto pool = enumerate_weights(d13, 37674, true);
    std::set<std::vector<int>> got;
    for (auto& w : pool) got.insert(w.doubled());
    auto dw = [&](std::vector<int> coords) {
        std::vector<int> d;
        for (int c : coords) d.push_back(2 * c);
        d.resize(13, 0);
        return d;
    };
    std::set<std::vector<int>> expect = {
        dw({4}), dw({3}), dw({2, 2}), dw({2, 1}), dw({2}),
        dw({1, 1, 1, 1}), dw({1, 1, 1}), dw({1, 1}), dw({1}), dw({})};
    CHECK(got == expect);
}

TEST_CASE("enumerate_weights basics") {
    auto only_zero = enumerate_weights(Algebra::B(3), 1, true);
    REQUIRE(only_zero.size() == 1);
    CHECK(only_zero[0] == Weight(3));

    Algebra d5 = Algebra::D(5);
    auto pool = enumerate_weights(d5, 350, true);
    CHECK(weyl_dim(d5, w_of(d5, {3})) == 210);
    CHECK(weyl_dim(d5, w_of(d5, {1, 1, 1})) == 120);
    bool has3 = false, has111 = false;
    for (auto& w : pool) {
        if (w == w_of(d5, {3})) has3 = true;
        if (w == w_of(d5, {1, 1, 1})) has111 = true;
    }
    CHECK(has3);
    CHECK(has111);

    // half-integer weights appear when allowed
    auto with_spin = enumerate_weights(Algebra::B(2), 16, false);
    bool has_spin = false;
    for (auto& w : with_spin)
        if (w == parse_weight("1/2,1/2", 2)) has_spin = true;
    CHECK(has_spin);
}

TEST_CASE("enumerate_weights agrees with brute force on small ranks") {
    struct Case {
        Algebra a;
        int64_t bound;
    };
    for (auto& cs : std::vector<Case>{{Algebra::B(2), 200},
                                      {Algebra::B(3), 400},
                                      {Algebra::D(3), 300},
                                      {Algebra::D(4), 600},
                                      {Algebra::B(5), 2000},
                                      {Algebra::D(5), 2000}}) {
        auto fast = enumerate_weights(cs.a, cs.bound, true);
        auto slow = brute_enumerate(cs.a, cs.bound, 4);
        // no false exclusions: everything the brute force finds is found
        std::set<std::vector<int>> fastset;
        for (auto& w : fast) fastset.insert(w.doubled());
        for (auto& w : slow) CHECK(fastset.count(w.doubled()) == 1);
        // and within the entries <= 4 box the two agree exactly
        std::set<std::vector<int>> slowset;
        for (auto& w : slow) slowset.insert(w.doubled());
        for (auto& w : fast) {
            bool boxed = true;
            for (int i = 0; i < w.rank; ++i)
                if (std::abs(static_cast<int>(w.d[i])) > 8) boxed = false;
            if (boxed) CHECK(slowset.count(w.doubled()) == 1);
        }
    }
}

TEST_CASE("solve og10: a unique candidate") {
    CandidateSet cs = solve_og10();
    REQUIRE(cs.candidates.size() == 1);
    const Candidate& c = cs.candidates[0];
    Algebra d13 = Algebra::D(13);
    CHECK(c.dec == dec_of(d13, {{{5}, 1}, {{2, 2}, 1}}));
    CHECK(c.betti.b[0] == 1);
    CHECK(c.betti.b[2] == 24);
    CHECK(c.betti.b[4] == 300);
    CHECK(c.betti.b[6] == 2899);
    CHECK(c.betti.b[8] == 22150);
    CHECK(c.betti.b[10] == 126156);
    CHECK(c.salamon_ok);
    CHECK(c.nagai_ok);
    CHECK(c.conjecture_ok);
}

TEST_CASE("og10 coefficient domination, the scaled-Euler argument") {
    // rescaling the Euler equation by 2/13 dominates the Salamon equation
    // coefficient-by-coefficient away from (2,2), with equality exactly there;
    // hence no solution has m_{(2,2)} = 0
    Algebra d13 = Algebra::D(13);
    auto pool = enumerate_weights(d13, 37674, true);
    Weight w22 = w_of(d13, {2, 2});
    Weight w4 = w_of(d13, {4});  // already eliminated by the b_2 constraint
    for (auto& w : pool) {
        if (w == w4) continue;
        Character ch = irreducible_character(d13, w);
        BettiVector bv = betti(ch, 5);
        int64_t dim = ch.dimension();
        int64_t sal = 0;
        for (int k = 0; k <= 5; ++k) sal += static_cast<int64_t>(5 - k) * (5 - k) * bv.b[2 * k];
        if (w == w22)
            CHECK(2 * dim == 13 * sal);
        else
            CHECK(2 * dim > 13 * sal);
    }
}

TEST_CASE("solve og6: exactly two candidates") {
    CandidateSet cs = solve_og6();
    REQUIRE(cs.candidates.size() == 2);
    Algebra d5 = Algebra::D(5);
    Decomposition first = dec_of(d5, {{{3}, 1}, {{1, 1, 1}, 1}, {{1}, 135}, {{}, 240}});
    Decomposition second = dec_of(d5, {{{3}, 1}, {{1, 1}, 6}, {{1}, 115}, {{}, 290}});
    bool found_first = cs.candidates[0].dec == first || cs.candidates[1].dec == first;
    bool found_second = cs.candidates[0].dec == second || cs.candidates[1].dec == second;
    CHECK(found_first);
    CHECK(found_second);
    for (auto& c : cs.candidates) {
        CHECK(c.betti.b[2] == 8);
        CHECK(c.betti.b[4] == 199);
        CHECK(c.betti.b[6] == 1504);
        CHECK(c.salamon_ok);
    }
}

TEST_CASE("og6 disambiguation through the restriction chain") {
    CandidateSet cs = solve_og6();
    REQUIRE(cs.candidates.size() == 2);
    Algebra d5 = Algebra::D(5);
    Decomposition winner = dec_of(d5, {{{3}, 1}, {{1, 1, 1}, 1}, {{1}, 135}, {{}, 240}});
    CHECK(og6_disambiguate(cs) == winner);

    // intermediate so(8)-level pieces
    Algebra d4 = Algebra::D(4);
    for (auto& c : cs.candidates) {
        Character h4 = og6_h4_reduced(c.dec);
        CHECK(h4.dimension() == 199);  // = b_4(OG6)
        Decomposition dd = decompose(h4);
        if (c.dec == winner) {
            CHECK(dd == dec_of(d4, {{{2}, 1}, {{1, 1}, 1}, {{}, 136}}));
        } else {
            CHECK(dd == dec_of(d4, {{{2}, 1}, {{1}, 6}, {{}, 116}}));
            // the loser restricts to W_(2) + 9 W + 140 R over so(5)
            Decomposition mt = decompose(restrict_with_trivials(h4, 3));
            CHECK(mt == dec_of(Algebra::B(2), {{{2}, 1}, {{1}, 9}, {{}, 140}}));
        }
    }

    // the geometric fixture itself: W_(2) + W_(1,1) + 6W + 145R, dim 199
    Decomposition fixture = og6_mt_fixture();
    int64_t fixture_dim = 0;
    for (auto& [w, m] : fixture.parts)
        fixture_dim += m * weyl_dim(Algebra::B(2), w);
    CHECK(fixture_dim == 199);

    // dropping a candidate makes disambiguation fail loudly
    CandidateSet broken;
    for (auto& c : cs.candidates)
        if (!(c.dec == winner)) broken.candidates.push_back(c);
    CHECK_THROWS_AS(og6_disambiguate(broken), disambiguation_error);
}

TEST_CASE("the K3 surface profile forces the Mukai lattice") {
    HKProfile p;
    p.n = 1;
    p.b2 = 22;
    p.euler = 24;
    p.odd_vanishes = true;
    Algebra g = p.llv_algebra();
    CHECK(g == Algebra::D(12));
    Weight verb(g.rank);
    verb.d[0] = 2;
    int64_t residual = p.euler - weyl_dim(g, verb);
    CHECK(residual == 0);
    CandidateSet cs = solve_constraints(p, enumerate_weights(g, 1, true));
    REQUIRE(cs.candidates.size() == 1);
    CHECK(cs.candidates[0].dec == dec_of(g, {{{1}, 1}}));
}

TEST_CASE("infeasible profiles return an empty candidate set") {
    HKProfile p;
    p.n = 2;
    p.b2 = 7;
    p.euler = 100;  // no decomposition fits this Euler number
    CandidateSet cs = solve_constraints(p, enumerate_weights(p.llv_algebra(), 60, true));
    CHECK(cs.candidates.empty());
}
