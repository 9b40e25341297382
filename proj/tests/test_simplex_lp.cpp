#include <doctest.h>

#include "latcount/simplex_lp.hpp"
#include "oracles.hpp"

using namespace latcount;

namespace {

LpResult lp1(std::vector<std::vector<long>> rows, std::vector<long> rhs,
             std::vector<long> obj) {
    RatMat g(int(rows.size()), int(obj.size()));
    RatVec h(rows.size()), c(obj.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < obj.size(); ++j) g(int(i), int(j)) = Rat(rows[i][j]);
        h[i] = Rat(rhs[i]);
    }
    for (std::size_t j = 0; j < obj.size(); ++j) c[j] = Rat(obj[j]);
    return solve_lp(g, h, c);
}

}  // namespace

TEST_CASE("lp: one variable") {
    auto r = lp1({{1}}, {5}, {1});
    CHECK(r.status == LpStatus::Optimal);
    CHECK(r.objective == Rat(5));
    CHECK(r.x[0] == Rat(5));

    r = lp1({{1}, {-1}}, {0, -1}, {1});  // x <= 0 and x >= 1
    CHECK(r.status == LpStatus::Infeasible);

    r = lp1({{-1}}, {0}, {1});  // x >= 0, max x
    CHECK(r.status == LpStatus::Unbounded);
}

TEST_CASE("lp: unit square") {
    auto r = lp1({{1, 0}, {0, 1}, {-1, 0}, {0, -1}}, {1, 1, 0, 0}, {1, 1});
    CHECK(r.status == LpStatus::Optimal);
    CHECK(r.objective == Rat(2));
    CHECK(r.x[0] == Rat(1));
    CHECK(r.x[1] == Rat(1));
}

TEST_CASE("lp: negative rhs needs phase one") {
    // x >= 3, x <= 7, max -x  -> optimum -3 at x = 3
    auto r = lp1({{-1}, {1}}, {-3, 7}, {-1});
    CHECK(r.status == LpStatus::Optimal);
    CHECK(r.objective == Rat(-3));
    CHECK(r.x[0] == Rat(3));
}

TEST_CASE("lp: rational optimum") {
    // max x + y s.t. 2x + y <= 3, x + 2y <= 3, x,y >= 0 -> (1,1)
    auto r = lp1({{2, 1}, {1, 2}, {-1, 0}, {0, -1}}, {3, 3, 0, 0}, {1, 1});
    CHECK(r.status == LpStatus::Optimal);
    CHECK(r.objective == Rat(2));

    // max y s.t. y <= x/3 + 1/2 encoded as 3y - x <= 1 ... with x <= 0, -x <= 0
    auto r2 = lp1({{-1, 3}, {1, 0}, {-1, 0}}, {1, 0, 0}, {0, 1});
    CHECK(r2.status == LpStatus::Optimal);
    CHECK(r2.objective == Rat(1, 3));
}

TEST_CASE("lp: free variables both signs") {
    // max -x s.t. -x <= 5 -> x = -5
    auto r = lp1({{-1}}, {5}, {-1});
    CHECK(r.status == LpStatus::Optimal);
    CHECK(r.x[0] == Rat(-5));
}

TEST_CASE("lp: randomized boundedness cross-check") {
    // Max over random boxes with shifted centers; optimum must match the box
    // corner value.
    oracles::Rng rng(21);
    for (int t = 0; t < 25; ++t) {
        int d = int(rng.uniform(1, 3));
        std::vector<long> lo(d), hi(d);
        for (int k = 0; k < d; ++k) {
            lo[k] = rng.uniform(-9, 0);
            hi[k] = rng.uniform(1, 9);
        }
        RatMat g(2 * d, d);
        RatVec h(2 * d), c(d);
        Rat expect;
        for (int k = 0; k < d; ++k) {
            g(k, k) = 1;
            h[k] = Rat(hi[k]);
            g(d + k, k) = -1;
            h[d + k] = Rat(-lo[k]);
            long ck = rng.uniform(-5, 5);
            c[k] = Rat(ck);
            expect += Rat(ck) * Rat(ck >= 0 ? hi[k] : lo[k]);
        }
        auto r = solve_lp(g, h, c);
        REQUIRE(r.status == LpStatus::Optimal);
        CHECK(r.objective == expect);
    }
}
