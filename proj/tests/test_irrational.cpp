#include <doctest.h>

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

// Same lattice points for all of Z^d: both apexes give identical rounded
// thresholds at the 1/D granularity of the dual basis.
bool same_lattice_points(const IntMat& b, const RatVec& v, const RatVec& vt) {
    RatMat bstar = dual_basis(b);
    Int d_abs = abs_int(det(b));
    for (int i = 0; i < b.cols(); ++i) {
        RatVec col(b.rows());
        for (int r = 0; r < b.rows(); ++r) col[r] = bstar(r, i);
        if (floor_rat(Rat(d_abs) * dot(col, v)) != floor_rat(Rat(d_abs) * dot(col, vt)))
            return false;
    }
    return true;
}

}  // namespace

TEST_CASE("stability_cube_simplicial: identity basis") {
    RatVec v{Rat(1, 2), Rat(1, 2)};
    StabilityCube c = stability_cube_simplicial(v, IntMat::identity(2));
    CHECK(c.center == v);
    CHECK(c.radius == Rat(1, 2));

    // At an integral apex the center sits half a step inside: hv = v - 1/2.
    RatVec origin(2);
    StabilityCube c0 = stability_cube_simplicial(origin, IntMat::identity(2));
    CHECK(c0.center == RatVec{Rat(-1, 2), Rat(-1, 2)});
    CHECK(c0.radius == Rat(1, 2));
    // box check: the center preserves the cone's integer points
    CHECK(same_lattice_points(IntMat::identity(2), origin, c0.center));
    SimplicialCone orig{origin, IntMat::identity(2), +1};
    SimplicialCone moved{c0.center, IntMat::identity(2), +1};
    CHECK(oracles::cone_points_in_box(orig, 10) ==
          oracles::cone_points_in_box(moved, 10));
}

TEST_CASE("stability_cube_simplicial: index-5 cone radius") {
    RatVec v(2);
    StabilityCube c = stability_cube_simplicial(v, cols({{1, 0}, {1, 5}}));
    CHECK(c.radius == Rat(1, 12));
}

TEST_CASE("stability_cube_lp: orthant examples") {
    IntMat normals(2, 2);
    normals(0, 0) = -1;
    normals(1, 1) = -1;

    RatVec v{Rat(1, 2), Rat(1, 2)};
    StabilityCube c = stability_cube_lp(v, normals);
    CHECK(c.radius == Rat(1, 2));
    CHECK(c.center == v);

    // integral apex: rho = 1/2 around v - (1/2, 1/2)
    RatVec w{Rat(3), Rat(-2)};
    StabilityCube cw = stability_cube_lp(w, normals);
    CHECK(cw.radius == Rat(1, 2));
    CHECK(cw.center == RatVec{Rat(5, 2), Rat(-5, 2)});
    SimplicialCone orig{w, IntMat::identity(2), +1};
    SimplicialCone moved{cw.center, IntMat::identity(2), +1};
    CHECK(oracles::cone_points_in_box(orig, 10) ==
          oracles::cone_points_in_box(moved, 10));
}

TEST_CASE("stability_cube_lp: non-simplicial cone with four facets") {
    // x >= 0, y >= 0, x <= z, y <= z (cone over the unit square)
    IntMat normals(4, 3);
    normals(0, 0) = -1;
    normals(1, 1) = -1;
    normals(2, 0) = 1;
    normals(2, 2) = -1;
    normals(3, 1) = 1;
    normals(3, 2) = -1;

    oracles::Rng rng(53);
    for (int t = 0; t < 10; ++t) {
        RatVec v = oracles::random_rat_vec(rng, 3, 9, 7);
        StabilityCube cube = stability_cube_lp(v, normals);
        REQUIRE(cube.radius > 0);
        for (int s = 0; s < 10; ++s) {
            RatVec vt(3);
            for (int r = 0; r < 3; ++r)
                vt[r] = cube.center[r] + Rat(rng.uniform(-99, 99), 100) * cube.radius;
            // identical integer thresholds certify identical lattice sets
            for (int i = 0; i < 4; ++i) {
                IntVec n = normals.row(i);
                CHECK(floor_rat(dot(n, v)) == floor_rat(dot(n, vt)));
            }
        }
    }
}

TEST_CASE("stability_cube_lp: sampled apexes preserve boxed points, 3d") {
    oracles::Rng rng(51);
    int done = 0;
    while (done < 20) {
        IntMat b = oracles::random_cone_basis(rng, 3, 4, 60);
        RatVec v = oracles::random_rat_vec(rng, 3, 9, 7);
        // facet normals: integer-scaled dual basis columns
        RatMat bstar = dual_basis(b);
        IntMat normals(3, 3);
        for (int i = 0; i < 3; ++i) {
            RatVec col(3);
            for (int r = 0; r < 3; ++r) col[r] = bstar(r, i);
            IntVec n = scale_to_integer(col);
            for (int r = 0; r < 3; ++r) normals(i, r) = n[r];
        }
        ++done;
        StabilityCube cube = stability_cube_lp(v, normals);
        CHECK(cube.radius > 0);
        for (int s = 0; s < 10; ++s) {
            RatVec vt(3);
            for (int r = 0; r < 3; ++r) {
                // random offset strictly inside the cube
                Rat off = Rat(rng.uniform(-99, 99), 100) * cube.radius;
                vt[r] = cube.center[r] + off;
            }
            SimplicialCone orig{v, b, +1};
            SimplicialCone moved{vt, b, +1};
            bool certified = same_lattice_points(b, v, vt);
            if (!certified) {
                CHECK(oracles::cone_points_in_box(orig, 10) ==
                      oracles::cone_points_in_box(moved, 10));
            } else {
                CHECK(certified);
            }
        }
    }
}

TEST_CASE("make_shift: worked examples") {
    StabilityCube cube{{Rat(1, 2), Rat(1, 2)}, Rat(1, 2)};
    ShiftParams p = make_shift(cube, Int(1), Int(1), 2);
    CHECK(p.depth == 0);
    CHECK(p.l == 1);
    CHECK(p.m == 2);
    CHECK(p.r == 3);
    CHECK(p.s == RatVec{Rat(1, 12), Rat(1, 48)});
    CHECK(p.v_tilde == RatVec{Rat(7, 12), Rat(25, 48)});
    CHECK(linf_norm(p.s) < cube.radius);

    StabilityCube cube2{{Rat(0), Rat(0)}, Rat(1, 12)};
    ShiftParams p2 = make_shift(cube2, Int(5), Int(5), 2);
    CHECK(p2.depth == 2);
    CHECK(p2.l == 20);
    CHECK(p2.m == 40);
    CHECK(p2.r == 13);

    ShiftParams p3 = make_shift(cube, Int(2), Int(1), 2);
    CHECK(p3.depth == 1);
}

TEST_CASE("depth_bound_k: exactness and monotonicity") {
    CHECK(depth_bound_k(Int(1), 2) == 0);
    CHECK(depth_bound_k(Int(2), 2) == 1);
    CHECK(depth_bound_k(Int(4), 2) == 2);  // log2 log2 4 = 1
    CHECK(depth_bound_k(Int(5), 2) == 2);
    CHECK(depth_bound_k(Int(16), 2) == 3);
    CHECK(depth_bound_k(Int(65536), 2) == 5);
    // d = 3: k = floor(1 + log2 log2 D / log2(3/2))
    CHECK(depth_bound_k(Int(2), 3) == 1);
    CHECK(depth_bound_k(Int(4), 3) == 2);   // floor(1 + 1/0.585) = 2
    CHECK(depth_bound_k(Int(16), 3) == 4);  // floor(1 + 2/0.585) = 4

    int prev = 0;
    for (long dd = 2; dd <= 1000000; dd = dd * 7 / 5 + 1) {
        int k = depth_bound_k(Int(dd), 4);
        CHECK(k >= prev);
        prev = k;
    }
}

TEST_CASE("index_bound_for_triangulation: examples") {
    CHECK(index_bound_for_triangulation(IntMat::identity(4)) == 1);
    CHECK(index_bound_for_triangulation(cols({{1, 0}, {1, 5}})) == 26);

    IntMat g(3, 4);
    long data[4][3] = {{1, 0, 1}, {0, 1, 1}, {-1, 0, 1}, {0, -1, 1}};
    for (int j = 0; j < 4; ++j)
        for (int i = 0; i < 3; ++i) g(i, j) = data[j][i];
    CHECK(index_bound_for_triangulation(g) == 4);
}

TEST_CASE("verify_irrational: examples") {
    SimplicialCone good{{Rat(7, 12), Rat(25, 48)}, IntMat::identity(2), +1};
    CHECK(verify_irrational(good));

    SimplicialCone bad{{Rat(0), Rat(1, 2)}, IntMat::identity(2), +1};
    CHECK_FALSE(verify_irrational(bad));
}

TEST_CASE("theorem-style stability: shifted apex keeps all lattice points") {
    oracles::Rng rng(52);
    int done = 0;
    while (done < 100) {
        int d = int(rng.uniform(1, 4));
        IntMat b = oracles::random_cone_basis(rng, d, 5, 50);
        RatVec v = oracles::random_rat_vec(rng, d, 9, 10);
        ++done;
        StabilityCube cube = stability_cube_simplicial(v, b);
        Int c_bound(1);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) c_bound = std::max(c_bound, abs_int(b(i, j)));
        ShiftParams p = make_shift(cube, abs_int(det(b)), c_bound, d);
        CHECK(linf_norm(p.v_tilde - cube.center) < cube.radius);
        CHECK(same_lattice_points(b, v, p.v_tilde));
        CHECK(verify_irrational(SimplicialCone{p.v_tilde, b, +1}));
        if (done % 20 == 0 && d <= 2) {
            SimplicialCone orig{v, b, +1};
            SimplicialCone moved{p.v_tilde, b, +1};
            CHECK(oracles::cone_points_in_box(orig, 10) ==
                  oracles::cone_points_in_box(moved, 10));
        }
    }
}
