#include <doctest.h>

#include "latcount/decompose.hpp"
#include "latcount/irrational.hpp"
#include "latcount/linalg.hpp"
#include "oracles.hpp"

using namespace latcount;

namespace {

IntMat cols(std::vector<std::vector<long>> cs) {
    IntMat m(int(cs[0].size()), int(cs.size()));
    for (std::size_t j = 0; j < cs.size(); ++j)
        for (std::size_t i = 0; i < cs[j].size(); ++i) m(int(i), int(j)) = cs[j][i];
    return m;
}

SimplicialCone irrationalized(const IntMat& b, const RatVec& v) {
    StabilityCube cube = stability_cube_simplicial(v, b);
    Int c_bound(1);
    for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) c_bound = std::max(c_bound, abs_int(b(i, j)));
    ShiftParams p = make_shift(cube, abs_int(det(b)), c_bound, b.rows());
    return SimplicialCone{p.v_tilde, b, +1};
}

long signed_box_count(const std::vector<SimplicialCone>& cones, long n) {
    long total = 0;
    for (const auto& k : cones) total += k.sign * oracles::cone_points_in_box(k, n);
    return total;
}

}  // namespace

TEST_CASE("short_vector: index-5 cone from the figures") {
    ShortVector sv = short_vector(cols({{1, 0}, {1, 5}}));
    CHECK(sv.w == IntVec{Int(0), Int(1)});
    CHECK(sv.alpha == RatVec{Rat(-1, 5), Rat(1, 5)});
}

TEST_CASE("short_vector: diagonal case prefers the in-cone candidate") {
    ShortVector sv = short_vector(cols({{1, 0}, {0, 2}}));
    CHECK(sv.alpha == RatVec{Rat(0), Rat(1, 2)});
    CHECK(sv.w == IntVec{Int(0), Int(1)});
    // Minkowski bound 2^{-1/2}: |alpha|^2 * det <= 1
    CHECK(Rat(1, 2) * Rat(1, 2) * Rat(2) <= 1);

    CHECK_THROWS_AS(short_vector(IntMat::identity(2)), Error);
}

TEST_CASE("short_vector: random cones satisfy the contract") {
    oracles::Rng rng(61);
    int done = 0;
    while (done < 100) {
        int d = int(rng.uniform(2, 4));
        IntMat b = oracles::random_cone_basis(rng, d, 7, 1000);
        if (abs_int(det(b)) < 2) continue;
        ++done;
        ShortVector sv = short_vector(b);
        CHECK(is_primitive(sv.w));
        CHECK(linf_norm(sv.alpha) < 1);
        // w = B alpha exactly
        RatVec prod = mul(b, sv.alpha);
        for (int i = 0; i < d; ++i) CHECK(prod[i] == Rat(sv.w[i]));
    }
}

TEST_CASE("decompose_step: triangulation case of Fig 1") {
    SimplicialCone k{RatVec(2), cols({{1, 0}, {1, 5}}), +1};
    ShortVector sv;
    sv.w = IntVec{Int(1), Int(2)};
    sv.alpha = RatVec{Rat(3, 5), Rat(2, 5)};
    auto ch = decompose_step(k, sv);
    REQUIRE(ch.size() == 2);
    CHECK(ch[0].basis == cols({{1, 2}, {1, 5}}));
    CHECK(ch[0].sign == +1);
    CHECK(cone_index(ch[0]) == 3);
    CHECK(ch[1].basis == cols({{1, 0}, {1, 2}}));
    CHECK(ch[1].sign == +1);
    CHECK(cone_index(ch[1]) == 2);
}

TEST_CASE("decompose_step: signed case of Fig 2") {
    SimplicialCone k{RatVec(2), cols({{1, 0}, {1, 5}}), +1};
    ShortVector sv;
    sv.w = IntVec{Int(0), Int(1)};
    sv.alpha = RatVec{Rat(-1, 5), Rat(1, 5)};
    auto ch = decompose_step(k, sv);
    REQUIRE(ch.size() == 2);
    CHECK(ch[0].basis == cols({{0, 1}, {1, 5}}));
    CHECK(ch[0].sign == -1);
    CHECK(ch[1].basis == cols({{1, 0}, {0, 1}}));
    CHECK(ch[1].sign == +1);
}

TEST_CASE("decompose_step: zero coefficient drops the child") {
    SimplicialCone k{RatVec(2), cols({{2, 0}, {0, 1}}), +1};
    ShortVector sv;
    sv.w = IntVec{Int(1), Int(0)};
    sv.alpha = RatVec{Rat(1, 2), Rat(0)};
    auto ch = decompose_step(k, sv);
    REQUIRE(ch.size() == 1);
    CHECK(ch[0].basis == cols({{1, 0}, {0, 1}}));
}

TEST_CASE("decompose_to_index: stops at the root when already low") {
    DecompStats stats;
    SimplicialCone k{RatVec(2), cols({{1, 0}, {1, 5}}), +1};
    auto leaves = decompose_to_index(k, {Int(5), StopMetric::OwnIndex, false}, stats);
    REQUIRE(leaves.size() == 1);
    CHECK(leaves[0].basis == k.basis);
    CHECK(stats.max_depth == 0);

    SimplicialCone uni{RatVec(2), IntMat::identity(2), +1};
    DecompStats s2;
    auto l2 = decompose_to_index(uni, {Int(1), StopMetric::OwnIndex, false}, s2);
    REQUIRE(l2.size() == 1);
    CHECK(l2[0].basis == uni.basis);
}

TEST_CASE("decompose_to_index: irrational cone to unimodular leaves") {
    SimplicialCone k = irrationalized(cols({{1, 0}, {1, 5}}), RatVec(2));
    DecompStats stats;
    auto leaves = decompose_to_index(k, {Int(1), StopMetric::OwnIndex, true}, stats);
    for (const auto& leaf : leaves) {
        CHECK(cone_index(leaf) == 1);
        CHECK(verify_irrational(leaf));
    }
    std::vector<SimplicialCone> root{k};
    CHECK(signed_box_count(leaves, 10) == signed_box_count(root, 10));
    CHECK(stats.minkowski_violations == 0);
    CHECK(stats.depth_bound_violations == 0);
}

TEST_CASE("decompose_to_index: signed counting identity on random cones") {
    oracles::Rng rng(62);
    int done = 0;
    while (done < 50) {
        int d = int(rng.uniform(2, 3));
        IntMat b = oracles::random_cone_basis(rng, d, 5, 60);
        if (abs_int(det(b)) < 2) continue;
        ++done;
        RatVec v = oracles::random_rat_vec(rng, d, 5, 6);
        SimplicialCone k = irrationalized(b, v);
        DecompStats stats;
        auto leaves = decompose_to_index(k, {Int(1), StopMetric::OwnIndex, true}, stats);
        std::vector<SimplicialCone> root{k};
        CHECK(signed_box_count(leaves, 10) == signed_box_count(root, 10));
    }
}

TEST_CASE("decompose_to_index: leaf count non-increasing in the stop index") {
    oracles::Rng rng(63);
    for (int metric = 0; metric < 2; ++metric) {
        int done = 0;
        while (done < 10) {
            int d = int(rng.uniform(2, 3));
            IntMat b = oracles::random_cone_basis(rng, d, 6, 400);
            if (abs_int(det(b)) < 2) continue;
            ++done;
            SimplicialCone k = irrationalized(b, RatVec(d));
            StopMetric sm = metric == 0 ? StopMetric::OwnIndex : StopMetric::PolarIndex;
            long prev = -1;
            for (long ell : {1L, 10L, 100L, 1000L}) {
                DecompStats stats;
                auto leaves = decompose_to_index(k, {Int(ell), sm, false}, stats);
                if (prev >= 0) CHECK(long(leaves.size()) <= prev);
                prev = long(leaves.size());
            }
        }
    }
}

TEST_CASE("decompose_to_index: polar-index stop bounds the polarized-back index") {
    oracles::Rng rng(64);
    int done = 0;
    while (done < 10) {
        IntMat b = oracles::random_cone_basis(rng, 3, 5, 300);
        if (abs_int(det(b)) < 2) continue;
        ++done;
        SimplicialCone k{RatVec(3), b, +1};
        DecompStats stats;
        auto leaves = decompose_to_index(k, {Int(4), StopMetric::PolarIndex, false}, stats);
        for (const auto& leaf : leaves) CHECK(cone_index(polarize(leaf)) <= 4);
    }
}
